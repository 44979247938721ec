#pragma once

// Exhaustive desk-scale checks of the structural results the library is
// built on, plus the two-caterpillar witness construction that separates
// the polynomials of psi(alpha∘gamma) and psi(beta∘gamma).
//
// Every check is deterministic: items are enumerated in a fixed order,
// workers only fill positional slots, and reports serialize identically
// for identical inputs and seeds regardless of the worker count. Elapsed
// time is carried separately from the serialized body. Each check refuses
// n above its documented cap unless RunOptions::force is set or the named
// environment variable raises it.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "catpoly/composition.hpp"
#include "catpoly/polynomial.hpp"

namespace catpoly {

struct RunOptions {
    int jobs = 1;
    bool force = false;  // bypass the per-check cap
};

struct VerificationReport {
    std::string check_name;
    long long parameter_n = 0;
    long long instances_checked = 0;
    std::vector<std::string> failures;
    std::optional<unsigned long long> seed;
    std::chrono::duration<double> elapsed{};

    bool passed() const { return failures.empty(); }
    // Stable body; elapsed time is deliberately excluded.
    std::string to_text() const;
};

// Everything the witness construction derives from a normalized triple.
struct WitnessData {
    Composition alpha, beta, gamma;
    int k_ab;       // first difference of alpha vs beta
    int k_g;        // first difference of gamma vs reverse(gamma)
    long long a;    // |alpha_{1..k_ab}|
    long long b;    // |gamma_{1..k_g}|
    long long delta1, delta2;
    Partition lambda_witness;  // type of (1, delta1 - 1, delta2)
    Composition rho1, rho2;
    long long coeff_S, coeff_T;  // [x_lambda] of the two caterpillar polynomials
};

// Requires |alpha| = |beta|, alpha <_L beta, gamma <_L reverse(gamma), and
// alpha∘gamma, beta∘gamma with all parts >= 2 (so the caterpillars exist).
// Errors name the violated hypothesis; inputs are never silently replaced.
// The returned data always satisfies coeff_T = coeff_S + 1.
WitnessData witness_theorem(const Composition& alpha, const Composition& beta,
                            const Composition& gamma);

// The reductions the construction's w.l.o.g. allows: reverse all three
// compositions (the caterpillars are unchanged) and swap alpha with beta
// (the caterpillars swap). Returns a triple accepted by witness_theorem
// whenever one exists for the input.
struct WitnessTriple {
    Composition alpha, beta, gamma;
};
WitnessTriple normalize_witness_triple(const Composition& alpha, const Composition& beta,
                                       const Composition& gamma);

// sym_class(b) equals the set of compositions of n sharing b's L-polynomial,
// for every composition b of n. Cap 14 (CATPOLY_CAP_SYM_LCLASS).
VerificationReport check_sym_equals_lclass(int n, const RunOptions& opt = {});

// Every palindromic composition of n is alone in its L-class. Cap 14
// (CATPOLY_CAP_PALINDROMES).
VerificationReport check_palindromes_unique(int n, const RunOptions& opt = {});

// u_restricted(T) = l_polynomial(phi(T)) for every proper caterpillar class
// on n vertices. Cap 16 (CATPOLY_CAP_UL_EQUALS_L).
VerificationReport check_ul_equals_l(int n, const RunOptions& opt = {});

// For every caterpillar (proper or not) on n vertices the full polynomial
// and the leaf-edge-restricted one agree after dropping terms with a part 1;
// proper caterpillars have no part-1 term to drop. Cap 12 (CATPOLY_CAP_X1).
VerificationReport check_x1_proposition(int n, const RunOptions& opt = {});

// Distinct proper caterpillar classes on n vertices have distinct tree
// polynomials. Cap 20 (CATPOLY_CAP_MAIN_RESULT).
VerificationReport check_main_result(int n, const RunOptions& opt = {});

// All free-tree classes on n vertices have pairwise distinct polynomials,
// and their number matches the classical count table. Cap 14
// (CATPOLY_CAP_STANLEY_TREES).
VerificationReport check_stanley_trees(int n, const RunOptions& opt = {});

// Every composition of n with parts >= 2, length >= 2, alone in its L-class
// up to reversal, yields a caterpillar no other tree class on n vertices can
// match in polynomial. Cap 14 (CATPOLY_CAP_COROLLARY_L_U).
VerificationReport check_corollary_l_implies_u(int n, const RunOptions& opt = {});

// Runs witness_theorem on `count` pseudorandom normalized triples with
// |alpha∘gamma| <= max_size, checking the coefficient gap and the
// size-minus-length ladder N(rho2) = N(rho1) + 1. The seed is recorded in
// the report and reproduces it byte for byte.
VerificationReport check_witness_random(int count, long long max_size,
                                        unsigned long long seed, const RunOptions& opt = {});

}  // namespace catpoly
