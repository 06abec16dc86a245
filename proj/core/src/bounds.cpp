#include "boxikit/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "boxikit/families.hpp"
#include "boxikit/graph.hpp"
#include "boxikit/isomorphism.hpp"

namespace boxikit {

namespace {

void requireSorted(const std::vector<int>& m, const char* who) {
    if (m.empty()) throw InputError(std::string(who) + ": empty exponent list");
    for (int mi : m)
        if (mi <= 0) throw InputError(std::string(who) + ": exponents must be positive");
    if (!std::is_sorted(m.begin(), m.end()))
        throw InputError(std::string(who) + ": exponents must be non-decreasing");
}

long long ceilLog2(long long x) {
    long long bits = 0;
    while ((1LL << bits) < x) ++bits;
    return bits;
}

} // namespace

long long upperBound(const std::vector<int>& m) {
    requireSorted(m, "upperBound");
    long long sum = 0;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) sum += m[i];
    return sum;
}

long long lowerBound(const std::vector<int>& m) {
    requireSorted(m, "lowerBound");
    const int d = static_cast<int>(m.size());
    if (d < 2) throw InputError("lowerBound: requires d >= 2");
    if (d == 2) return m[0];
    long long sum = m[static_cast<std::size_t>(d - 2)]; // the trailing m_{d-1} term
    for (int i = d % 2 == 1 ? 1 : 2; i <= d - 2; i += 2)
        sum += m[static_cast<std::size_t>(i - 1)];
    return sum;
}

long long generalLowerBound(const std::vector<int>& m,
                            const std::function<long long(int)>& f) {
    requireSorted(m, "generalLowerBound");
    const int d = static_cast<int>(m.size());
    if (d < 2) throw InputError("generalLowerBound: requires d >= 2");
    long long sum = m[0] * f(d);
    for (int l = 1; l <= d - 2; ++l)
        sum += static_cast<long long>(m[static_cast<std::size_t>(l)] -
                                      m[static_cast<std::size_t>(l - 1)]) *
               f(d - l);
    return sum;
}

ComparisonQuantities comparisonQuantities(const std::vector<int>& exponents) {
    if (exponents.empty())
        throw InputError("comparisonQuantities: empty exponent list");
    const long long s = static_cast<long long>(exponents.size());
    long long total = 0, vertices = 1;
    for (int a : exponents) {
        if (a <= 0) throw InputError("comparisonQuantities: exponents must be positive");
        total += a;
        vertices *= a + 1;
    }
    ComparisonQuantities out;
    out.eq1 = s * total;
    out.eq2 = out.eq1 * ceilLog2(vertices);
    out.eq3 = Rational(s, 2);
    return out;
}

BoundReport boundReport(const std::vector<int>& m) {
    requireSorted(m, "boundReport");
    BoundReport report;
    report.m = m;
    report.upper = upperBound(m);
    if (m.size() >= 2) {
        report.lower = lowerBound(m);
        report.generalLower = generalLowerBound(m, [](int s) { return (s + 1) / 2; });
    }
    ComparisonQuantities cmp = comparisonQuantities(m);
    report.eq1 = cmp.eq1;
    report.eq2 = cmp.eq2;
    report.eq3 = cmp.eq3;
    report.chain = 1;
    for (int mi : m) report.chain += mi;
    return report;
}

namespace {

// All tuples with the fixed prefix, suffix entries in {k-1, k}, suffix
// non-uniform.
std::vector<std::vector<int>> liftedTuples(const std::vector<int>& prefix, int suffixLen, int k) {
    std::vector<std::vector<int>> out;
    for (int bits = 1; bits < (1 << suffixLen) - 1; ++bits) {
        std::vector<int> t(prefix);
        for (int i = 0; i < suffixLen; ++i)
            t.push_back(k - 1 + (bits >> (suffixLen - 1 - i) & 1));
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

WitnessDecomposition extractWitness(const std::vector<int>& m) {
    requireSorted(m, "extractWitness");
    const int d = static_cast<int>(m.size());
    if (d < 2) throw InputError("extractWitness: requires d >= 2");

    WitnessDecomposition out;
    auto addComponents = [&out](const std::vector<int>& prefix, int order, int level) {
        WitnessComponent comp;
        comp.hypercubeOrder = order;
        comp.level = level;
        for (const auto& t : liftedTuples(prefix, order, level))
            comp.vertices.push_back(tupleLabel(t));
        out.components.push_back(std::move(comp));
    };

    for (int j = 1; j <= m[0]; ++j) addComponents({}, d, j);
    for (int l = 1; l <= d - 2; ++l) {
        if (m[static_cast<std::size_t>(l - 1)] >= m[static_cast<std::size_t>(l)]) continue;
        std::vector<int> prefix(m.begin(), m.begin() + l);
        for (int j = 1; j <= m[static_cast<std::size_t>(l)] - m[static_cast<std::size_t>(l - 1)]; ++j)
            addComponents(prefix, d - l, m[static_cast<std::size_t>(l - 1)] + j);
    }

    LabeledGraph ambient = buildTCC(m);

    // Each component must match its truncated hypercube closure through the
    // explicit k-1 -> 0, k -> 1 coordinate map.
    out.componentsVerified = true;
    for (const WitnessComponent& comp : out.components) {
        LabeledGraph induced = inducedSubgraph(ambient, comp.vertices);
        LabeledGraph target = buildTCHypercube(comp.hypercubeOrder, true);
        std::vector<int> map;
        map.reserve(comp.vertices.size());
        bool usable = true;
        for (const std::string& label : comp.vertices) {
            // Strip the fixed prefix and rescale the suffix to {0,1}.
            std::vector<int> coords;
            int value = 0;
            bool in_number = false;
            for (char c : label) {
                if (c >= '0' && c <= '9') { value = value * 10 + (c - '0'); in_number = true; }
                else if (in_number) { coords.push_back(value); value = 0; in_number = false; }
            }
            std::vector<int> suffix(coords.end() - comp.hypercubeOrder, coords.end());
            for (int& v : suffix) v -= comp.level - 1;
            int t = target.indexOf(tupleLabel(suffix));
            if (t < 0) { usable = false; break; }
            map.push_back(t);
        }
        if (!usable || !isIsomorphismMap(induced, target, map)) out.componentsVerified = false;
    }

    // Disjointness and the join property over the ambient graph.
    out.joinVerified = true;
    for (std::size_t a = 0; a < out.components.size() && out.joinVerified; ++a)
        for (std::size_t b = a + 1; b < out.components.size() && out.joinVerified; ++b)
            for (const std::string& u : out.components[a].vertices) {
                for (const std::string& v : out.components[b].vertices)
                    if (u == v || !ambient.adjacentLabels(u, v)) {
                        out.joinVerified = false;
                        break;
                    }
                if (!out.joinVerified) break;
            }
    return out;
}

CrownWitness extractCrown(int s) {
    if (s < 3) throw InputError("extractCrown: requires s >= 3");
    CrownWitness out;
    for (int i = 0; i < s; ++i) {
        std::vector<int> unit(static_cast<std::size_t>(s), 0);
        unit[static_cast<std::size_t>(i)] = 1;
        std::vector<int> complement(static_cast<std::size_t>(s), 1);
        complement[static_cast<std::size_t>(i)] = 0;
        out.a.push_back(tupleLabel(unit));
        out.b.push_back(tupleLabel(complement));
        out.matching.emplace_back(out.a.back(), out.b.back());
    }

    LabeledGraph hypercube = buildTCHypercube(s, false);
    std::vector<std::string> both(out.a);
    both.insert(both.end(), out.b.begin(), out.b.end());
    LabeledGraph induced = inducedSubgraph(hypercube, both);
    LabeledGraph crown = buildCrown(s);
    // a_i -> index i, b_i -> index s + i in buildCrown's ordering.
    std::vector<int> map;
    for (int i = 0; i < 2 * s; ++i) map.push_back(i);
    if (!isIsomorphismMap(induced, crown, map))
        throw std::logic_error("extractCrown: induced subgraph is not the crown graph");
    return out;
}

} // namespace boxikit
