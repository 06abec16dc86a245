#include "boxikit/families.hpp"

#include <algorithm>
#include <numeric>

namespace boxikit {

std::string tupleLabel(const std::vector<int>& coords) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords[i]);
    }
    out += ')';
    return out;
}

std::vector<std::vector<int>> tupleRange(const std::vector<int>& m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m.size(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = m.size();
        while (i > 0) {
            --i;
            if (cur[i] < m[i]) {
                ++cur[i];
                std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
        if (m.empty()) return out;
    }
}

bool tuplesComparable(const std::vector<int>& x, const std::vector<int>& y) {
    bool le = true, ge = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) le = false;
        if (x[i] < y[i]) ge = false;
    }
    return le || ge;
}

namespace {

LabeledGraph graphOnTuples(const std::vector<std::vector<int>>& tuples) {
    std::vector<std::string> labels;
    labels.reserve(tuples.size());
    for (const auto& t : tuples) labels.push_back(tupleLabel(t));
    std::vector<VertexPair> edges;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = i + 1; j < tuples.size(); ++j)
            if (tuplesComparable(tuples[i], tuples[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return LabeledGraph(std::move(labels), edges);
}

std::vector<std::int64_t> divisorsOf(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

LabeledGraph buildTCC(const std::vector<int>& m) {
    if (m.empty()) throw InputError("buildTCC: empty exponent list");
    for (int mi : m)
        if (mi <= 0) throw InputError("buildTCC: exponents must be positive");
    return graphOnTuples(tupleRange(m));
}

LabeledGraph buildDivisorGraph(std::int64_t n) {
    if (n < 1) throw InputError("buildDivisorGraph: n must be positive");
    std::vector<std::int64_t> divisors = divisorsOf(n);
    std::vector<std::string> labels;
    labels.reserve(divisors.size());
    for (std::int64_t d : divisors) labels.push_back(std::to_string(d));
    std::vector<VertexPair> edges;
    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j)
            if (divisors[j] % divisors[i] == 0)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return LabeledGraph(std::move(labels), edges);
}

LabeledGraph buildPowerGraphCyclic(std::int64_t n) {
    if (n < 1) throw InputError("buildPowerGraphCyclic: n must be positive");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x) labels.push_back(std::to_string(x));
    std::vector<std::int64_t> gen(static_cast<std::size_t>(n)); // gcd(x, n) = generator of <x>
    for (std::int64_t x = 0; x < n; ++x) gen[static_cast<std::size_t>(x)] = std::gcd(x, n);
    std::vector<VertexPair> edges;
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = x + 1; y < n; ++y)
            if (x % gen[static_cast<std::size_t>(y)] == 0 || y % gen[static_cast<std::size_t>(x)] == 0)
                edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
    return LabeledGraph(std::move(labels), edges);
}

ReducedPowerGraph buildReducedPowerGraphCyclic(std::int64_t n) {
    if (n < 1) throw InputError("buildReducedPowerGraphCyclic: n must be positive");
    std::vector<std::int64_t> divisors = divisorsOf(n);
    std::vector<std::string> labels;
    for (std::int64_t d : divisors) labels.push_back(std::to_string(d));
    std::vector<VertexPair> edges;
    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j)
            if (divisors[j] % divisors[i] == 0)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    ReducedPowerGraph out{LabeledGraph(std::move(labels), edges), {}};
    out.classOf.reserve(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x)
        out.classOf.push_back(std::to_string(n / std::gcd(x, n)));
    return out;
}

LabeledGraph buildTCHypercube(int s, bool truncated) {
    if (s < 1) throw InputError("buildTCHypercube: s must be >= 1");
    if (truncated && s < 2) throw InputError("buildTCHypercube: truncation requires s >= 2");
    std::vector<std::vector<int>> tuples = tupleRange(std::vector<int>(static_cast<std::size_t>(s), 1));
    if (truncated) {
        std::erase_if(tuples, [](const std::vector<int>& t) {
            return std::all_of(t.begin(), t.end(), [&t](int v) { return v == t.front(); });
        });
    }
    return graphOnTuples(tuples);
}

LabeledGraph buildLifted(int s, int k) {
    if (s < 2) throw InputError("buildLifted: s must be >= 2");
    if (k < 1) throw InputError("buildLifted: k must be >= 1");
    std::vector<std::vector<int>> tuples;
    for (std::vector<int>& t : tupleRange(std::vector<int>(static_cast<std::size_t>(s), 1))) {
        bool uniform = std::all_of(t.begin(), t.end(), [&t](int v) { return v == t.front(); });
        if (uniform) continue;
        for (int& v : t) v += k - 1;
        tuples.push_back(std::move(t));
    }
    return graphOnTuples(tuples);
}

LabeledGraph buildCrown(int s) {
    if (s < 2) throw InputError("buildCrown: s must be >= 2");
    std::vector<std::string> labels;
    for (int i = 1; i <= s; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 1; i <= s; ++i) labels.push_back("b" + std::to_string(i));
    std::vector<VertexPair> edges;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (i != j) edges.emplace_back(i, s + j);
    return LabeledGraph(std::move(labels), edges);
}

Factorization exponentsOf(std::int64_t n) {
    if (n < 1) throw InputError("exponentsOf: n must be positive");
    if (n > (std::int64_t{1} << 31))
        throw InputError("exponentsOf: n exceeds the 2^31 input cap");
    Factorization out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.primes.push_back(p);
        out.exponents.push_back(e);
    }
    if (n > 1) {
        out.primes.push_back(n);
        out.exponents.push_back(1);
    }
    out.sortedExponents = out.exponents;
    std::sort(out.sortedExponents.begin(), out.sortedExponents.end());
    return out;
}

std::string familyKindName(FamilySpec::Kind kind) {
    switch (kind) {
        case FamilySpec::Kind::Tcc: return "tcc";
        case FamilySpec::Kind::Divisor: return "divisor";
        case FamilySpec::Kind::PowerCyclic: return "power-cyclic";
        case FamilySpec::Kind::ReducedPowerCyclic: return "reduced-power-cyclic";
        case FamilySpec::Kind::HypercubeTc: return "hypercube-tc";
        case FamilySpec::Kind::HypercubeTcTruncated: return "hypercube-tc-truncated";
        case FamilySpec::Kind::Lifted: return "lifted";
        case FamilySpec::Kind::Crown: return "crown";
    }
    throw InputError("familyKindName: unknown kind");
}

FamilySpec::Kind familyKindFromName(const std::string& name) {
    if (name == "tcc") return FamilySpec::Kind::Tcc;
    if (name == "divisor") return FamilySpec::Kind::Divisor;
    if (name == "power-cyclic") return FamilySpec::Kind::PowerCyclic;
    if (name == "reduced-power-cyclic" || name == "reduced-power")
        return FamilySpec::Kind::ReducedPowerCyclic;
    if (name == "hypercube-tc") return FamilySpec::Kind::HypercubeTc;
    if (name == "hypercube-tc-truncated") return FamilySpec::Kind::HypercubeTcTruncated;
    if (name == "lifted") return FamilySpec::Kind::Lifted;
    if (name == "crown") return FamilySpec::Kind::Crown;
    throw InputError("unknown family kind '" + name + "'");
}

namespace {

void expectParams(const FamilySpec& spec, std::size_t count) {
    if (spec.params.size() != count)
        throw InputError("family '" + familyKindName(spec.kind) + "' expects " +
                         std::to_string(count) + " parameter(s), got " +
                         std::to_string(spec.params.size()));
}

} // namespace

LabeledGraph buildFamily(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Tcc: {
            if (spec.params.empty()) throw InputError("family 'tcc' expects at least one exponent");
            std::vector<int> m;
            for (std::int64_t p : spec.params) m.push_back(static_cast<int>(p));
            return buildTCC(m);
        }
        case FamilySpec::Kind::Divisor:
            expectParams(spec, 1);
            return buildDivisorGraph(spec.params[0]);
        case FamilySpec::Kind::PowerCyclic:
            expectParams(spec, 1);
            return buildPowerGraphCyclic(spec.params[0]);
        case FamilySpec::Kind::ReducedPowerCyclic:
            expectParams(spec, 1);
            return buildReducedPowerGraphCyclic(spec.params[0]).graph;
        case FamilySpec::Kind::HypercubeTc:
            expectParams(spec, 1);
            return buildTCHypercube(static_cast<int>(spec.params[0]), false);
        case FamilySpec::Kind::HypercubeTcTruncated:
            expectParams(spec, 1);
            return buildTCHypercube(static_cast<int>(spec.params[0]), true);
        case FamilySpec::Kind::Lifted:
            expectParams(spec, 2);
            return buildLifted(static_cast<int>(spec.params[0]), static_cast<int>(spec.params[1]));
        case FamilySpec::Kind::Crown:
            expectParams(spec, 1);
            return buildCrown(static_cast<int>(spec.params[0]));
    }
    throw InputError("buildFamily: unknown kind");
}

} // namespace boxikit
