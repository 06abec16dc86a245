#include "boxikit/tcc_construction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace boxikit {

namespace {

BoxRepresentation zeroDimensional(const std::vector<std::string>& vertices) {
    std::unordered_map<std::string, std::vector<Interval>> boxes;
    for (const std::string& v : vertices) boxes.emplace(v, std::vector<Interval>{});
    return BoxRepresentation(0, vertices, std::move(boxes), std::vector<Rational>{});
}

} // namespace

TccRepresentation tccCubeRepresentation(const std::vector<int>& m) {
    if (m.empty()) throw InputError("tccCubeRepresentation: empty exponent list");
    for (int mi : m)
        if (mi <= 0) throw InputError("tccCubeRepresentation: exponents must be positive");

    const int d = static_cast<int>(m.size());
    const std::vector<std::vector<int>> tuples = tupleRange(m);
    std::vector<std::string> labels;
    labels.reserve(tuples.size());
    for (const auto& t : tuples) labels.push_back(tupleLabel(t));

    if (d < 2) {
        TccRepresentation out{zeroDimensional(labels), {}};
        out.trace.completeGraphFallback = true;
        return out;
    }

    // Coordinate positions in processing order: largest bound first (stable),
    // so the base case absorbs the largest exponent.
    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&m](int a, int b) { return m[static_cast<std::size_t>(a)] > m[static_cast<std::size_t>(b)]; });

    int dimension = 0;
    for (int j = 1; j < d; ++j) dimension += m[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];

    std::unordered_map<std::string, std::vector<Interval>> boxes;
    boxes.reserve(tuples.size());
    for (const std::string& label : labels) boxes.emplace(label, std::vector<Interval>{});

    ConstructionTrace trace;
    std::vector<Rational> unit_lengths;
    unit_lengths.reserve(static_cast<std::size_t>(dimension));

    std::int64_t S = m[static_cast<std::size_t>(order[0])];
    int dims_so_far = 0;
    for (int j = 1; j < d; ++j) {
        const int pos = order[static_cast<std::size_t>(j)];
        const int a_s = m[static_cast<std::size_t>(pos)];
        trace.perLevel.push_back(TraceLevel{j + 1, S, dims_so_far, a_s});
        for (int a = 1; a <= a_s; ++a) {
            for (std::size_t v = 0; v < tuples.size(); ++v) {
                const std::vector<int>& x = tuples[v];
                std::int64_t depth_sum = 0; // |x| over the deeper coordinates
                for (int t = 0; t < j; ++t)
                    depth_sum += x[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
                const int level_coord = x[static_cast<std::size_t>(pos)];
                Interval iv = level_coord <= a - 1
                                  ? Interval(Rational(depth_sum), Rational(depth_sum + S))
                                  : Interval(Rational(depth_sum - S), Rational(depth_sum));
                boxes[labels[v]].push_back(iv);
            }
            unit_lengths.push_back(Rational(S));
        }
        dims_so_far += a_s;
        S += a_s;
    }

    TccRepresentation out{
        BoxRepresentation(dimension, labels, std::move(boxes), std::move(unit_lengths)), trace};

    VerifyResult check = verifyRepresentation(buildTCC(m), out.rep);
    if (!check.ok)
        throw std::logic_error("tccCubeRepresentation: construction failed self-verification");
    return out;
}

VerifyResult verifyRepresentation(const LabeledGraph& g, const BoxRepresentation& rep) {
    if (!rep.coversExactly(g.labels()))
        throw InputError("verifyRepresentation: representation does not cover exactly the graph's vertices");
    LabeledGraph derived = representationToGraph(rep, g.labels());
    for (int i = 0; i < g.vertexCount(); ++i)
        for (int j = i + 1; j < g.vertexCount(); ++j) {
            bool want = g.adjacent(i, j);
            bool have = derived.adjacent(i, j);
            if (want == have) continue;
            VerifyResult out;
            out.ok = false;
            out.pair = {g.label(i), g.label(j)};
            out.kind = want ? MismatchKind::MissingEdge : MismatchKind::SpuriousEdge;
            return out;
        }
    VerifyResult ok;
    ok.ok = true;
    return ok;
}

BoxRepresentation normalizeToUnit(const BoxRepresentation& rep) {
    if (!rep.unitLengths())
        throw InputError("normalizeToUnit: representation has no recorded unit lengths");
    const std::vector<Rational>& lengths = *rep.unitLengths();

    std::vector<int> kept;
    for (int i = 0; i < rep.dimension(); ++i)
        if (!lengths[static_cast<std::size_t>(i)].isZero()) kept.push_back(i);

    std::unordered_map<std::string, std::vector<Interval>> boxes;
    for (const std::string& v : rep.vertexOrder()) {
        const std::vector<Interval>& box = rep.box(v);
        std::vector<Interval> scaled;
        scaled.reserve(kept.size());
        for (int i : kept) {
            const Rational& len = lengths[static_cast<std::size_t>(i)];
            const Interval& iv = box[static_cast<std::size_t>(i)];
            scaled.emplace_back(iv.lo / len, iv.hi / len);
        }
        boxes.emplace(v, std::move(scaled));
    }
    BoxRepresentation out(static_cast<int>(kept.size()), rep.vertexOrder(), std::move(boxes),
                          std::vector<Rational>(kept.size(), Rational(1)));
    if (!representationToGraph(out).sameEdges(representationToGraph(rep)))
        throw InputError("normalizeToUnit: dropping degenerate dimensions changed the intersection graph");
    return out;
}

BoxRepresentation translateToOrigin(const BoxRepresentation& rep) {
    if (rep.dimension() == 0 || rep.vertexOrder().empty()) return rep;
    std::vector<Rational> shift(static_cast<std::size_t>(rep.dimension()));
    bool first = true;
    for (const std::string& v : rep.vertexOrder()) {
        const std::vector<Interval>& box = rep.box(v);
        for (int i = 0; i < rep.dimension(); ++i) {
            if (first || box[static_cast<std::size_t>(i)].lo < shift[static_cast<std::size_t>(i)])
                shift[static_cast<std::size_t>(i)] = box[static_cast<std::size_t>(i)].lo;
        }
        first = false;
    }
    std::unordered_map<std::string, std::vector<Interval>> boxes;
    for (const std::string& v : rep.vertexOrder()) {
        const std::vector<Interval>& box = rep.box(v);
        std::vector<Interval> moved;
        moved.reserve(box.size());
        for (int i = 0; i < rep.dimension(); ++i)
            moved.emplace_back(box[static_cast<std::size_t>(i)].lo - shift[static_cast<std::size_t>(i)],
                               box[static_cast<std::size_t>(i)].hi - shift[static_cast<std::size_t>(i)]);
        boxes.emplace(v, std::move(moved));
    }
    return BoxRepresentation(rep.dimension(), rep.vertexOrder(), std::move(boxes), rep.unitLengths());
}

BoxRepresentation liftToPowerGraph(std::int64_t n, const BoxRepresentation& repReduced) {
    ReducedPowerGraph reduced = buildReducedPowerGraphCyclic(n);
    VerifyResult check = verifyRepresentation(reduced.graph, repReduced);
    if (!check.ok)
        throw InputError("liftToPowerGraph: input does not verify against the reduced power graph of " +
                         std::to_string(n));
    std::vector<std::string> order;
    std::unordered_map<std::string, std::vector<Interval>> boxes;
    order.reserve(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x) {
        std::string label = std::to_string(x);
        boxes.emplace(label, repReduced.box(reduced.classOf[static_cast<std::size_t>(x)]));
        order.push_back(std::move(label));
    }
    BoxRepresentation lifted(repReduced.dimension(), std::move(order), std::move(boxes),
                             repReduced.unitLengths());
    if (!verifyRepresentation(buildPowerGraphCyclic(n), lifted).ok)
        throw std::logic_error("liftToPowerGraph: lifted representation failed verification");
    return lifted;
}

TccRepresentation representationForDivisorGraph(std::int64_t n) {
    if (n < 1) throw InputError("representationForDivisorGraph: n must be positive");
    LabeledGraph divisor_graph = buildDivisorGraph(n);
    Factorization f = exponentsOf(n);
    const int s = static_cast<int>(f.primes.size());

    if (s < 2) {
        // n = 1 or a prime power: the divisor graph is a chain, hence complete.
        TccRepresentation out{zeroDimensional(divisor_graph.labels()), {}};
        out.trace.completeGraphFallback = true;
        return out;
    }

    TccRepresentation tcc = tccCubeRepresentation(f.sortedExponents);

    // Stable sort permutation: sortedExponents[j] == exponents[sigma[j]].
    std::vector<int> sigma(static_cast<std::size_t>(s));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::stable_sort(sigma.begin(), sigma.end(), [&f](int a, int b) {
        return f.exponents[static_cast<std::size_t>(a)] < f.exponents[static_cast<std::size_t>(b)];
    });

    std::vector<std::pair<std::string, std::string>> mapping; // tuple label -> divisor label
    mapping.reserve(divisor_graph.labels().size());
    for (const std::string& divisor_label : divisor_graph.labels()) {
        std::int64_t v = std::stoll(divisor_label);
        std::vector<int> natural(static_cast<std::size_t>(s), 0);
        for (int i = 0; i < s; ++i)
            while (v % f.primes[static_cast<std::size_t>(i)] == 0) {
                v /= f.primes[static_cast<std::size_t>(i)];
                ++natural[static_cast<std::size_t>(i)];
            }
        std::vector<int> sorted_coords(static_cast<std::size_t>(s));
        for (int j = 0; j < s; ++j)
            sorted_coords[static_cast<std::size_t>(j)] =
                natural[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])];
        mapping.emplace_back(tupleLabel(sorted_coords), divisor_label);
    }

    TccRepresentation out{tcc.rep.relabeled(mapping), tcc.trace};
    if (!verifyRepresentation(divisor_graph, out.rep).ok)
        throw std::logic_error("representationForDivisorGraph: transported representation failed verification");
    return out;
}

TccRepresentation representationForPowerGraphCyclic(std::int64_t n) {
    TccRepresentation divisor_rep = representationForDivisorGraph(n);
    // Reduced power graph vertices carry the same divisor labels.
    return TccRepresentation{liftToPowerGraph(n, divisor_rep.rep), divisor_rep.trace};
}

} // namespace boxikit
