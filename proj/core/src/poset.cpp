#include "boxikit/poset.hpp"

#include <algorithm>
#include <cstdint>

#include "boxikit/families.hpp"

namespace boxikit {

Poset::Poset(std::vector<std::string> ground, std::vector<std::vector<bool>> strictLess)
    : ground_(std::move(ground)), less_(std::move(strictLess)) {
    const std::size_t n = ground_.size();
    if (less_.size() != n)
        throw InputError("Poset: relation size does not match ground set");
    for (const auto& row : less_)
        if (row.size() != n) throw InputError("Poset: relation is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (less_[i][i]) throw InputError("Poset: relation is not irreflexive");
        for (std::size_t j = 0; j < n; ++j) {
            if (less_[i][j] && less_[j][i])
                throw InputError("Poset: relation is not antisymmetric");
            if (!less_[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (less_[j][k] && !less_[i][k])
                    throw InputError("Poset: relation is not transitively closed");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (ground_[i] == ground_[j])
                throw InputError("Poset: duplicate ground element '" + ground_[i] + "'");
}

int Poset::indexOf(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (ground_[static_cast<std::size_t>(i)] == label) return i;
    return -1;
}

std::vector<VertexPair> Poset::incomparablePairs() const {
    std::vector<VertexPair> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (!comparable(i, j)) out.emplace_back(i, j);
    return out;
}

Poset divisibilityPoset(std::vector<std::int64_t> ground) {
    if (ground.empty()) throw InputError("divisibilityPoset: empty ground set");
    std::sort(ground.begin(), ground.end());
    for (std::size_t i = 0; i + 1 < ground.size(); ++i)
        if (ground[i] == ground[i + 1])
            throw InputError("divisibilityPoset: duplicate element " + std::to_string(ground[i]));
    if (ground.front() < 1) throw InputError("divisibilityPoset: elements must be positive");
    const std::size_t n = ground.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::int64_t v : ground) labels.push_back(std::to_string(v));
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && ground[j] % ground[i] == 0) less[i][j] = true;
    return Poset(std::move(labels), std::move(less));
}

LabeledGraph comparabilityGraph(const Poset& p) {
    std::vector<VertexPair> edges;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (p.comparable(i, j)) edges.emplace_back(i, j);
    return LabeledGraph(p.ground(), edges);
}

Realizer buildDivisibilityRealizer(std::int64_t n) {
    if (n < 1) throw InputError("buildDivisibilityRealizer: n must be positive");
    if (n == 1) return Realizer{};
    Factorization f = exponentsOf(n);
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);

    Realizer out;
    for (std::size_t i = 0; i < f.primes.size(); ++i) {
        const std::int64_t p = f.primes[i];
        LinearExtension ext;
        for (int j = 0; j <= f.exponents[i]; ++j) {
            // Block S_{i,j}: divisors whose p-exponent is exactly j, ascending.
            for (std::int64_t d : divisors) {
                std::int64_t v = d;
                int e = 0;
                while (v % p == 0) { v /= p; ++e; }
                if (e == j) ext.order.push_back(std::to_string(d));
            }
        }
        out.extensions.push_back(std::move(ext));
    }
    return out;
}

RealizerVerdict verifyRealizer(const Poset& p, const Realizer& r) {
    const int n = p.size();
    // Positions per extension; also validates exact coverage.
    std::vector<std::vector<int>> pos;
    for (std::size_t e = 0; e < r.extensions.size(); ++e) {
        const auto& order = r.extensions[e].order;
        if (static_cast<int>(order.size()) != n)
            throw InputError("verifyRealizer: extension " + std::to_string(e) +
                             " does not cover the ground set");
        std::vector<int> where(static_cast<std::size_t>(n), -1);
        for (std::size_t k = 0; k < order.size(); ++k) {
            int v = p.indexOf(order[k]);
            if (v < 0)
                throw InputError("verifyRealizer: extension " + std::to_string(e) +
                                 " contains unknown element '" + order[k] + "'");
            if (where[static_cast<std::size_t>(v)] >= 0)
                throw InputError("verifyRealizer: extension " + std::to_string(e) +
                                 " repeats element '" + order[k] + "'");
            where[static_cast<std::size_t>(v)] = static_cast<int>(k);
        }
        pos.push_back(std::move(where));
    }

    RealizerVerdict verdict;
    for (std::size_t e = 0; e < pos.size(); ++e)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (p.less(a, b) && pos[e][static_cast<std::size_t>(a)] > pos[e][static_cast<std::size_t>(b)]) {
                    verdict.failure = "extension-violation";
                    verdict.pair = {p.label(a), p.label(b)};
                    verdict.extensionIndex = static_cast<int>(e);
                    return verdict;
                }

    for (auto [a, b] : p.incomparablePairs()) {
        bool ab = false, ba = false;
        for (const auto& where : pos) {
            if (where[static_cast<std::size_t>(a)] < where[static_cast<std::size_t>(b)]) ab = true;
            else ba = true;
        }
        if (!ab || !ba) {
            verdict.failure = "pair";
            verdict.pair = {p.label(a), p.label(b)};
            return verdict;
        }
    }
    verdict.ok = true;
    return verdict;
}

std::vector<std::vector<int>> allLinearExtensions(const Poset& p, int cap) {
    const int n = p.size();
    std::vector<std::uint64_t> below(static_cast<std::size_t>(n), 0);
    if (n > 63) throw CapacityError("allLinearExtensions: poset too large (> 63 elements)");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.less(a, b)) below[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;

    std::vector<std::vector<int>> out;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, std::uint64_t placed) -> void {
        if (static_cast<int>(order.size()) == n) {
            if (static_cast<int>(out.size()) >= cap)
                throw CapacityError("allLinearExtensions: more than " + std::to_string(cap) +
                                    " linear extensions");
            out.push_back(order);
            return;
        }
        for (int v = 0; v < n; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if ((placed & bit) || (below[static_cast<std::size_t>(v)] & ~placed)) continue;
            order.push_back(v);
            self(self, placed | bit);
            order.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

// Fixed-width bitset over the incomparable ordered pairs.
struct CoverBits {
    std::vector<std::uint64_t> w;
    explicit CoverBits(std::size_t bits) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool subsetOf(const CoverBits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    friend bool operator==(const CoverBits& a, const CoverBits& b) { return a.w == b.w; }
};

} // namespace

int exactPosetDimension(const Poset& p, int capExtensions, int capK) {
    std::vector<std::vector<int>> extensions = allLinearExtensions(p, capExtensions);

    // Incomparable ordered pairs form the cover universe.
    std::vector<std::pair<int, int>> universe;
    for (auto [a, b] : p.incomparablePairs()) {
        universe.emplace_back(a, b);
        universe.emplace_back(b, a);
    }
    if (universe.empty()) return 1; // a chain (or a single element)

    const std::size_t u = universe.size();
    std::vector<CoverBits> covers;
    covers.reserve(extensions.size());
    for (const auto& ext : extensions) {
        std::vector<int> pos(static_cast<std::size_t>(p.size()), 0);
        for (std::size_t k = 0; k < ext.size(); ++k)
            pos[static_cast<std::size_t>(ext[k])] = static_cast<int>(k);
        CoverBits c(u);
        for (std::size_t i = 0; i < u; ++i)
            if (pos[static_cast<std::size_t>(universe[i].first)] <
                pos[static_cast<std::size_t>(universe[i].second)])
                c.set(i);
        covers.push_back(std::move(c));
    }

    // Keep only maximal distinct coverage sets.
    std::vector<CoverBits> maximal;
    for (const CoverBits& c : covers) {
        bool dominated = false;
        for (const CoverBits& m : maximal)
            if (c.subsetOf(m)) { dominated = true; break; }
        if (dominated) continue;
        std::erase_if(maximal, [&c](const CoverBits& m) { return m.subsetOf(c); });
        maximal.push_back(c);
    }

    // Which maximal sets cover each universe element.
    std::vector<std::vector<int>> covered_by(u);
    for (std::size_t s = 0; s < maximal.size(); ++s)
        for (std::size_t i = 0; i < u; ++i)
            if (maximal[s].w[i / 64] >> (i % 64) & 1) covered_by[i].push_back(static_cast<int>(s));

    std::vector<std::uint64_t> all((u + 63) / 64, ~std::uint64_t{0});
    if (u % 64) all.back() = (std::uint64_t{1} << (u % 64)) - 1;

    auto search = [&](auto&& self, std::vector<std::uint64_t>& covered, int remaining) -> bool {
        if (covered == all) return true;
        if (remaining == 0) return false;
        // Branch on the uncovered element with the fewest covering sets.
        std::size_t pick = u;
        std::size_t best = static_cast<std::size_t>(-1);
        for (std::size_t i = 0; i < u; ++i) {
            if (covered[i / 64] >> (i % 64) & 1) continue;
            if (covered_by[i].size() < best) {
                best = covered_by[i].size();
                pick = i;
            }
        }
        if (pick == u) return true;
        if (best == 0) return false;
        for (int s : covered_by[pick]) {
            std::vector<std::uint64_t> next(covered);
            for (std::size_t i = 0; i < next.size(); ++i) next[i] |= maximal[static_cast<std::size_t>(s)].w[i];
            if (self(self, next, remaining - 1)) return true;
        }
        return false;
    };

    for (int k = 1; k <= capK; ++k) {
        std::vector<std::uint64_t> none(all.size(), 0);
        if (search(search, none, k)) return k;
    }
    throw CapacityError("exactPosetDimension: no realizer of size <= " + std::to_string(capK) +
                        " found within the cap (" + std::to_string(extensions.size()) +
                        " extensions enumerated)");
}

int longestChain(const Poset& p) {
    const int n = p.size();
    if (n == 0) return 0;
    std::vector<int> best(static_cast<std::size_t>(n), 0);
    auto height = [&](auto&& self, int v) -> int {
        int& memo = best[static_cast<std::size_t>(v)];
        if (memo) return memo;
        int h = 1;
        for (int u = 0; u < n; ++u)
            if (p.less(u, v)) h = std::max(h, 1 + self(self, u));
        return memo = h;
    };
    int out = 0;
    for (int v = 0; v < n; ++v) out = std::max(out, height(height, v));
    return out;
}

} // namespace boxikit
