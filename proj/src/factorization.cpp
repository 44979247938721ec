#include "catpoly/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "catpoly/polynomial.hpp"

namespace catpoly {

namespace {

bool all_ones(const Composition& c) {
    return std::all_of(c.parts().begin(), c.parts().end(), [](int p) { return p == 1; });
}

// Parse b as d ∘ g for the given right factor g, or fail. The product
// g^{⊙d_1} · g^{⊙d_2} · ... flattens into runs of copies of g: a run of j
// copies reads g_1..g_{m-1}, then j-1 times the merged part (g_m + g_1)
// followed by the interior g_2..g_{m-1}, and closes with g_m. Since
// g_m != g_m + g_1, every step is forced, so d is recovered or g rejected
// with no backtracking. Single-part g = (x) degenerates to d_i = b_i / x.
std::optional<Composition> parse_as_product(const Composition& b, const Composition& g) {
    const auto& bp = b.parts();
    const auto& gp = g.parts();
    int m = g.length();
    std::vector<int> d;

    if (m == 1) {
        int x = gp[0];
        for (int p : bp) {
            if (p % x != 0) return std::nullopt;
            d.push_back(p / x);
        }
        return Composition(std::move(d));
    }

    size_t i = 0;
    const size_t nb = bp.size();
    auto expect = [&](size_t from, size_t count) {
        if (i + count > nb) return false;
        for (size_t t = 0; t < count; ++t)
            if (bp[i + t] != gp[from + t]) return false;
        i += count;
        return true;
    };
    const int closing = gp[static_cast<size_t>(m - 1)];
    const int merged = closing + gp[0];
    while (i < nb) {
        if (!expect(0, static_cast<size_t>(m - 1))) return std::nullopt;  // g_1..g_{m-1}
        int copies = 1;
        for (;;) {
            if (i >= nb) return std::nullopt;  // run never closed with g_m
            if (bp[i] == closing) {
                ++i;
                break;
            }
            if (bp[i] != merged) return std::nullopt;
            ++i;
            if (!expect(1, static_cast<size_t>(m - 2))) return std::nullopt;  // g_2..g_{m-1}
            ++copies;
        }
        d.push_back(copies);
    }
    if (d.empty()) return std::nullopt;
    return Composition(std::move(d));
}

}  // namespace

bool is_trivial_factorization(const Composition& d, const Composition& g) {
    if (g == Composition{1} || d == Composition{1}) return true;
    if (d.length() == 1 && g.length() == 1) return true;
    if (all_ones(d) && all_ones(g)) return true;
    return false;
}

std::optional<std::pair<Composition, Composition>> find_nontrivial_split(const Composition& b) {
    const auto& bp = b.parts();
    long long size = b.size();

    // Single-part right factors g = (x): every part must be a multiple of x,
    // so x ranges over divisors >= 2 of gcd(parts). Not expressible as a
    // prefix of b once several copies merge into b_1, hence handled apart.
    if (b.length() >= 2) {
        long long gcd = 0;
        for (int p : bp) gcd = std::gcd(gcd, static_cast<long long>(p));
        for (long long x = 2; x <= gcd; ++x) {
            if (gcd % x != 0) continue;
            Composition g{static_cast<int>(x)};
            if (auto d = parse_as_product(b, g); d && !is_trivial_factorization(*d, g))
                return std::make_pair(std::move(*d), std::move(g));
        }
    }

    // Longer right factors start as a prefix of b. Either the first copy of
    // g is unmerged (g = b_1..b_m) or its last part absorbed the following
    // copy's first part (g = b_1..b_{m-1}, b_m - b_1).
    for (int m = 2; m <= b.length(); ++m) {
        Composition g1 = prefix(b, m);
        if (g1.size() <= size && size % g1.size() == 0 && g1 != b) {
            if (auto d = parse_as_product(b, g1); d && !is_trivial_factorization(*d, g1))
                return std::make_pair(std::move(*d), std::move(g1));
        }
        if (bp[static_cast<size_t>(m - 1)] > bp[0]) {
            std::vector<int> parts(bp.begin(), bp.begin() + m);
            parts.back() -= bp[0];
            Composition g2(std::move(parts));
            if (size % g2.size() == 0) {
                if (auto d = parse_as_product(b, g2); d && !is_trivial_factorization(*d, g2))
                    return std::make_pair(std::move(*d), std::move(g2));
            }
        }
    }
    return std::nullopt;
}

bool is_irreducible(const Composition& b) { return !find_nontrivial_split(b).has_value(); }

std::vector<Composition> irreducible_factorization(const Composition& b) {
    auto split = find_nontrivial_split(b);
    if (!split) return {b};

    std::vector<Composition> chain = irreducible_factorization(split->first);
    std::vector<Composition> right = irreducible_factorization(split->second);
    chain.insert(chain.end(), right.begin(), right.end());

    // Recursing on both sides can abut factors that form a trivial pair
    // (two single-part factors, two all-ones factors); their product is
    // again irreducible, so merge until the chain is clean.
    for (size_t i = 0; i + 1 < chain.size();) {
        if (is_trivial_factorization(chain[i], chain[i + 1])) {
            chain[i] = circ(chain[i], chain[i + 1]);
            chain.erase(chain.begin() + static_cast<long>(i) + 1);
            if (i > 0) --i;
        } else {
            ++i;
        }
    }
    return chain;
}

Composition recompose(const std::vector<Composition>& factors) {
    if (factors.empty()) throw std::invalid_argument("recompose: empty factor chain");
    Composition out = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) out = circ(out, factors[i]);
    return out;
}

std::set<Composition, CompositionLexLess> sym_class(const Composition& b) {
    std::vector<Composition> factors = irreducible_factorization(b);
    int k = static_cast<int>(factors.size());
    std::set<Composition, CompositionLexLess> out;
    for (unsigned long long mask = 0; mask < (1ULL << k); ++mask) {
        std::vector<Composition> flipped;
        flipped.reserve(factors.size());
        for (int i = 0; i < k; ++i)
            flipped.push_back(mask >> i & 1 ? reverse(factors[static_cast<size_t>(i)])
                                            : factors[static_cast<size_t>(i)]);
        out.insert(recompose(flipped));
    }
    return out;
}

std::set<Composition, CompositionLexLess> l_class_bruteforce(const Composition& b) {
    PartitionPolynomial key = l_polynomial(b);
    std::set<Composition, CompositionLexLess> out;
    enumerate_compositions(b.size(), 1, [&](const Composition& a) {
        if (l_polynomial(a) == key) out.insert(a);
    });
    return out;
}

bool is_l_unique(const Composition& b) {
    auto cls = l_class_bruteforce(b);
    for (const Composition& a : cls)
        if (a != b && a != reverse(b)) return false;
    return true;
}

}  // namespace catpoly
