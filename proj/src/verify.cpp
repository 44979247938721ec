#include "catpoly/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "catpoly/caterpillar.hpp"
#include "catpoly/factorization.hpp"
#include "catpoly/free_trees.hpp"
#include "catpoly/tree.hpp"
#include "env_caps.hpp"
#include "parallel.hpp"

namespace catpoly {

namespace {

using Clock = std::chrono::steady_clock;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_within_cap(const char* check, const char* env, int dflt, int n,
                        const RunOptions& opt) {
    if (n < 1) fail(std::string(check) + ": n must be >= 1");
    int cap = detail::env_cap(env, dflt);
    if (n > cap && !opt.force)
        fail(std::string(check) + ": n = " + std::to_string(n) + " exceeds cap " +
             std::to_string(cap) + "; raise " + env + " or pass force to accept the cost");
}

VerificationReport make_report(const char* name, long long n) {
    VerificationReport r;
    r.check_name = name;
    r.parameter_n = n;
    return r;
}

void collect_failures(VerificationReport& report, const std::vector<std::string>& slots) {
    for (const auto& s : slots)
        if (!s.empty()) report.failures.push_back(s);
}

std::string render_class(const std::set<Composition, CompositionLexLess>& cls) {
    std::string out = "{";
    bool first = true;
    for (const auto& c : cls) {
        if (!first) out += " | ";
        out += to_text(c);
        first = false;
    }
    return out + "}";
}

// All compositions of n with their L-polynomials, grouped by canonical text.
// Two compositions land in one bucket exactly when their L-polynomials are
// equal, so a bucket is the brute-force L-class of each of its members.
struct LGrouping {
    std::vector<Composition> comps;
    std::vector<PartitionPolynomial> polys;
    std::vector<std::string> keys;
    std::map<std::string, std::vector<size_t>> buckets;
};

LGrouping l_grouping(int n, int jobs) {
    LGrouping g;
    g.comps = enumerate_compositions(n, 1);
    g.polys = detail::parallel_map<PartitionPolynomial>(
        g.comps.size(), jobs, [&](size_t i) { return l_polynomial(g.comps[i]); });
    g.keys.reserve(g.comps.size());
    for (size_t i = 0; i < g.comps.size(); ++i) {
        g.keys.push_back(g.polys[i].to_text());
        g.buckets[g.keys.back()].push_back(i);
    }
    // A text key must stand for exactly one polynomial.
    for (const auto& [key, idxs] : g.buckets)
        for (size_t j = 1; j < idxs.size(); ++j)
            if (!(g.polys[idxs[0]] == g.polys[idxs[j]]))
                throw std::logic_error("canonical text key collides across unequal polynomials");
    return g;
}

std::vector<Composition> proper_caterpillar_reps(int n) {
    std::vector<Composition> reps;
    if (n < 4) return reps;
    enumerate_compositions(n, 2, [&](const Composition& c) {
        if (c.length() >= 2 && reverse_class_rep(c) == c) reps.push_back(c);
    });
    return reps;
}

int witness_size_cap() { return detail::env_cap("CATPOLY_CAP_WITNESS", 36); }

}  // namespace

std::string VerificationReport::to_text() const {
    std::string out;
    out += "check: " + check_name + "\n";
    out += "n: " + std::to_string(parameter_n) + "\n";
    if (seed) out += "seed: " + std::to_string(*seed) + "\n";
    out += "instances: " + std::to_string(instances_checked) + "\n";
    out += "failures: " + std::to_string(failures.size()) + "\n";
    for (const auto& f : failures) out += "failure: " + f + "\n";
    return out;
}

WitnessTriple normalize_witness_triple(const Composition& alpha, const Composition& beta,
                                       const Composition& gamma) {
    if (is_palindrome(gamma)) fail("witness: gamma must not be a palindrome");
    if (alpha.size() != beta.size()) fail("witness: alpha and beta must have equal size");
    if (alpha == beta) fail("witness: alpha and beta must differ");
    Composition a = alpha, b = beta, g = gamma;
    if (lex_compare(reverse(g), g) < 0) {
        a = reverse(a);
        b = reverse(b);
        g = reverse(g);
    }
    if (lex_compare(b, a) < 0) std::swap(a, b);
    return WitnessTriple{std::move(a), std::move(b), std::move(g)};
}

WitnessData witness_theorem(const Composition& alpha, const Composition& beta,
                            const Composition& gamma) {
    if (is_palindrome(gamma)) fail("witness: gamma must not be a palindrome");
    if (lex_compare(gamma, reverse(gamma)) >= 0)
        fail("witness: gamma must be lexicographically smaller than its reverse"
             " (normalization replaces gamma by the smaller of the two)");
    if (alpha.size() != beta.size()) fail("witness: alpha and beta must have equal size");
    if (alpha == beta) fail("witness: alpha and beta must differ");
    if (lex_compare(alpha, beta) >= 0)
        fail("witness: alpha must be lexicographically smaller than beta (swap the arguments)");

    Composition sigma = circ(alpha, gamma);
    Composition tau = circ(beta, gamma);
    for (const Composition* c : {&sigma, &tau})
        for (int p : c->parts())
            if (p < 2)
                fail("witness: alpha∘gamma and beta∘gamma must have all parts >= 2 to "
                     "describe proper caterpillars");
    int cap = witness_size_cap();
    if (sigma.size() > cap)
        fail("witness: |alpha∘gamma| = " + std::to_string(sigma.size()) + " exceeds cap " +
             std::to_string(cap) + " (raise CATPOLY_CAP_WITNESS to override)");

    int k_ab = first_difference_index(alpha, beta);
    int k_g = first_difference_index(gamma, reverse(gamma));
    long long a = prefix(alpha, k_ab).size();
    long long b = prefix(gamma, k_g).size();
    long long delta1 = a * gamma.size() + b;
    long long delta2 = alpha.size() * gamma.size() - delta1;
    Partition lambda = partition_from_unsorted(
        {1, static_cast<int>(delta1 - 1), static_cast<int>(delta2)});

    Composition base = circ(prefix(alpha, k_ab), gamma);
    Composition rho1 = concat(base, prefix(gamma, k_g));
    Composition rho2 = near_concat(base, prefix(gamma, k_g));

    long long coeff_S = u_polynomial_tree(psi(sigma)).coefficient(lambda);
    long long coeff_T = u_polynomial_tree(psi(tau)).coefficient(lambda);

    // Built-in cross-checks of the construction; a violation is a bug, not
    // a property of the inputs.
    if (coeff_S != leaf_count(psi(rho1)))
        throw std::logic_error("witness: coeff_S != leaf count of psi(rho1)");
    if (coeff_T != leaf_count(psi(rho2)))
        throw std::logic_error("witness: coeff_T != leaf count of psi(rho2)");
    if (coeff_S == coeff_T) throw std::logic_error("witness: coefficients failed to separate");

    return WitnessData{alpha,  beta,  gamma, k_ab,    k_g,     a,       b,
                       delta1, delta2, lambda, rho1,   rho2,    coeff_S, coeff_T};
}

VerificationReport check_sym_equals_lclass(int n, const RunOptions& opt) {
    require_within_cap("sym-lclass", "CATPOLY_CAP_SYM_LCLASS", 14, n, opt);
    auto t0 = Clock::now();
    VerificationReport report = make_report("sym-lclass", n);

    LGrouping g = l_grouping(n, opt.jobs);
    auto slots = detail::parallel_map<std::string>(g.comps.size(), opt.jobs, [&](size_t i) {
        const Composition& beta = g.comps[i];
        auto sym = sym_class(beta);
        std::set<Composition, CompositionLexLess> lclass;
        for (size_t j : g.buckets.at(g.keys[i])) lclass.insert(g.comps[j]);
        if (sym == lclass) return std::string();
        return "beta=" + to_text(beta) + ": sym_class " + render_class(sym) +
               " != L-class " + render_class(lclass);
    });
    collect_failures(report, slots);
    report.instances_checked = static_cast<long long>(g.comps.size());
    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport check_palindromes_unique(int n, const RunOptions& opt) {
    require_within_cap("palindromes", "CATPOLY_CAP_PALINDROMES", 14, n, opt);
    auto t0 = Clock::now();
    VerificationReport report = make_report("palindromes", n);

    LGrouping g = l_grouping(n, opt.jobs);
    std::vector<size_t> palindromes;
    for (size_t i = 0; i < g.comps.size(); ++i)
        if (is_palindrome(g.comps[i])) palindromes.push_back(i);
    auto slots = detail::parallel_map<std::string>(palindromes.size(), opt.jobs, [&](size_t p) {
        size_t i = palindromes[p];
        const auto& bucket = g.buckets.at(g.keys[i]);
        if (bucket.size() == 1) return std::string();
        std::set<Composition, CompositionLexLess> cls;
        for (size_t j : bucket) cls.insert(g.comps[j]);
        return "palindrome " + to_text(g.comps[i]) + " shares its L-polynomial with " +
               render_class(cls);
    });
    collect_failures(report, slots);
    report.instances_checked = static_cast<long long>(palindromes.size());
    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport check_ul_equals_l(int n, const RunOptions& opt) {
    require_within_cap("ul-equals-l", "CATPOLY_CAP_UL_EQUALS_L", 16, n, opt);
    auto t0 = Clock::now();
    VerificationReport report = make_report("ul-equals-l", n);

    auto reps = proper_caterpillar_reps(n);
    auto slots = detail::parallel_map<std::string>(reps.size(), opt.jobs, [&](size_t i) {
        Tree t = psi(reps[i]);
        PartitionPolynomial graph_side = u_restricted(t);
        PartitionPolynomial comp_side = l_polynomial(phi(t));
        if (graph_side == comp_side) return std::string();
        return "caterpillar of " + to_text(reps[i]) + ": restricted polynomial " +
               graph_side.to_text() + " != L-polynomial " + comp_side.to_text();
    });
    collect_failures(report, slots);
    report.instances_checked = static_cast<long long>(reps.size());
    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport check_x1_proposition(int n, const RunOptions& opt) {
    require_within_cap("x1", "CATPOLY_CAP_X1", 12, n, opt);
    auto t0 = Clock::now();
    VerificationReport report = make_report("x1", n);

    std::vector<Tree> caterpillars;
    enumerate_free_trees(n, [&](const Tree& t) {
        if (caterpillar_view(t)) caterpillars.push_back(t);
    });
    auto slots = detail::parallel_map<std::string>(caterpillars.size(), opt.jobs, [&](size_t i) {
        const Tree& t = caterpillars[i];
        auto view = caterpillar_view(t);
        PartitionPolynomial full = u_polynomial_tree(t);
        PartitionPolynomial restricted = u_restricted(t);
        if (full.without_part(1) != restricted.without_part(1))
            return "tree " + canonical_code(t) +
                   ": full and restricted polynomials disagree away from part 1";
        if (view->proper && restricted.has_part(1))
            return "proper caterpillar " + canonical_code(t) +
                   ": restricted polynomial contains a part-1 term";
        return std::string();
    });
    collect_failures(report, slots);
    report.instances_checked = static_cast<long long>(caterpillars.size());
    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport check_main_result(int n, const RunOptions& opt) {
    require_within_cap("main-result", "CATPOLY_CAP_MAIN_RESULT", 20, n, opt);
    auto t0 = Clock::now();
    VerificationReport report = make_report("main-result", n);

    auto reps = proper_caterpillar_reps(n);
    auto polys = detail::parallel_map<PartitionPolynomial>(
        reps.size(), opt.jobs, [&](size_t i) { return u_polynomial_tree(psi(reps[i])); });
    std::map<std::string, std::vector<size_t>> buckets;
    for (size_t i = 0; i < reps.size(); ++i) buckets[polys[i].to_text()].push_back(i);
    for (const auto& [key, idxs] : buckets) {
        if (idxs.size() == 1) continue;
        for (size_t j = 1; j < idxs.size(); ++j)
            if (!(polys[idxs[0]] == polys[idxs[j]]))
                throw std::logic_error("canonical text key collides across unequal polynomials");
        std::string msg = "polynomial collision between proper caterpillars of";
        for (size_t j : idxs) msg += " " + to_text(reps[j]);
        report.failures.push_back(msg);
    }
    report.instances_checked = static_cast<long long>(reps.size());
    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport check_stanley_trees(int n, const RunOptions& opt) {
    require_within_cap("stanley-trees", "CATPOLY_CAP_STANLEY_TREES", 14, n, opt);
    auto t0 = Clock::now();
    VerificationReport report = make_report("stanley-trees", n);

    // Classes of free trees on 1..18 vertices.
    static constexpr long long kFreeTreeCounts[] = {1,   1,   1,    2,    3,    6,
                                                    11,  23,  47,   106,  235,  551,
                                                    1301, 3159, 7741, 19320, 48629, 123867};
    std::vector<Tree> trees = enumerate_free_trees(n);
    auto polys = detail::parallel_map<PartitionPolynomial>(
        trees.size(), opt.jobs, [&](size_t i) { return u_polynomial_tree(trees[i]); });
    std::map<std::string, std::vector<size_t>> buckets;
    for (size_t i = 0; i < trees.size(); ++i) buckets[polys[i].to_text()].push_back(i);
    for (const auto& [key, idxs] : buckets) {
        if (idxs.size() == 1) continue;
        for (size_t j = 1; j < idxs.size(); ++j)
            if (!(polys[idxs[0]] == polys[idxs[j]]))
                throw std::logic_error("canonical text key collides across unequal polynomials");
        std::string msg = "polynomial collision between trees";
        for (size_t j : idxs) msg += " " + canonical_code(trees[j]);
        report.failures.push_back(msg);
    }
    if (n <= 18 && static_cast<long long>(trees.size()) != kFreeTreeCounts[n - 1])
        report.failures.push_back("free tree count " + std::to_string(trees.size()) +
                                  " does not match the reference count " +
                                  std::to_string(kFreeTreeCounts[n - 1]));
    report.instances_checked = static_cast<long long>(trees.size());
    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport check_corollary_l_implies_u(int n, const RunOptions& opt) {
    require_within_cap("corollary-l-u", "CATPOLY_CAP_COROLLARY_L_U", 14, n, opt);
    auto t0 = Clock::now();
    VerificationReport report = make_report("corollary-l-u", n);

    LGrouping g = l_grouping(n, opt.jobs);
    std::map<std::string, size_t> comp_index;
    for (size_t i = 0; i < g.comps.size(); ++i) comp_index[to_text(g.comps[i])] = i;

    std::vector<Composition> candidates;
    enumerate_compositions(n, 2, [&](const Composition& c) {
        if (c.length() < 2) return;  // a single part has no two-vertex spine
        const auto& bucket = g.buckets.at(g.keys[comp_index.at(to_text(c))]);
        Composition rev = reverse(c);
        for (size_t j : bucket)
            if (g.comps[j] != c && g.comps[j] != rev) return;  // not L-unique
        candidates.push_back(c);
    });

    std::vector<Tree> trees = enumerate_free_trees(n);
    auto tree_keys = detail::parallel_map<std::string>(trees.size(), opt.jobs, [&](size_t i) {
        return u_polynomial_tree(trees[i]).to_text();
    });
    std::map<std::string, std::set<std::string>> tree_buckets;
    for (size_t i = 0; i < trees.size(); ++i)
        tree_buckets[tree_keys[i]].insert(canonical_code(trees[i]));

    auto slots = detail::parallel_map<std::string>(candidates.size(), opt.jobs, [&](size_t i) {
        Tree t = psi(candidates[i]);
        std::string key = u_polynomial_tree(t).to_text();
        std::string code = canonical_code(t);
        auto it = tree_buckets.find(key);
        if (it == tree_buckets.end())
            return "caterpillar of " + to_text(candidates[i]) +
                   " missing from the tree enumeration";
        if (it->second.size() != 1 || *it->second.begin() != code)
            return "L-unique composition " + to_text(candidates[i]) +
                   " shares its polynomial with a non-isomorphic tree";
        return std::string();
    });
    collect_failures(report, slots);
    report.instances_checked = static_cast<long long>(candidates.size());
    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport check_witness_random(int count, long long max_size,
                                        unsigned long long seed, const RunOptions& opt) {
    if (count < 1) fail("witness-random: count must be >= 1");
    if (max_size < 10) fail("witness-random: max_size must be >= 10");
    if (max_size > witness_size_cap())
        fail("witness-random: max_size exceeds the witness cap " +
             std::to_string(witness_size_cap()) + " (raise CATPOLY_CAP_WITNESS)");
    auto t0 = Clock::now();
    VerificationReport report = make_report("witness-random", max_size);
    report.seed = seed;

    std::mt19937_64 rng(seed);
    auto rand_int = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    auto rand_comp = [&](long long total, int min_part) {
        std::vector<int> parts;
        long long rem = total;
        while (rem > 0) {
            long long p;
            do {
                p = rand_int(min_part, rem);
            } while (rem - p != 0 && rem - p < min_part);
            parts.push_back(static_cast<int>(p));
            rem -= p;
        }
        return Composition(std::move(parts));
    };

    // Sampling is sequential so a seed pins the exact triples; evaluation
    // is the parallel part.
    std::vector<WitnessTriple> triples;
    triples.reserve(static_cast<size_t>(count));
    while (static_cast<int>(triples.size()) < count) {
        long long g = rand_int(5, std::min<long long>(15, max_size / 2));
        Composition gamma = rand_comp(g, 2);
        if (is_palindrome(gamma)) continue;
        long long n = rand_int(2, max_size / g);
        Composition alpha = rand_comp(n, 1);
        Composition beta = rand_comp(n, 1);
        if (alpha == beta) continue;
        triples.push_back(normalize_witness_triple(alpha, beta, gamma));
    }

    auto slots = detail::parallel_map<std::string>(triples.size(), opt.jobs, [&](size_t i) {
        const auto& t = triples[i];
        std::string label = "alpha=" + to_text(t.alpha) + " beta=" + to_text(t.beta) +
                            " gamma=" + to_text(t.gamma);
        try {
            WitnessData w = witness_theorem(t.alpha, t.beta, t.gamma);
            if (w.coeff_T != w.coeff_S + 1)
                return label + ": expected coeff_T = coeff_S + 1, got " +
                       std::to_string(w.coeff_S) + " and " + std::to_string(w.coeff_T);
            if (leaf_functional(w.rho2) != leaf_functional(w.rho1) + 1)
                return label + ": size-minus-length ladder broken";
        } catch (const std::exception& e) {
            return label + ": " + e.what();
        }
        return std::string();
    });
    collect_failures(report, slots);
    report.instances_checked = count;
    report.elapsed = Clock::now() - t0;
    return report;
}

}  // namespace catpoly
