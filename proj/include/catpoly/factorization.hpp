#pragma once

// Factorization of compositions under the composition product, the symmetry
// class it generates (independent reversal of irreducible factors), and the
// brute-force class of compositions sharing an L-polynomial.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "catpoly/composition.hpp"

namespace catpoly {

// A factorization b = d ∘ g is trivial when g = (1), or both factors have a
// single part, or every part of both factors equals 1.
bool is_trivial_factorization(const Composition& d, const Composition& g);

// One non-trivial split b = d ∘ g if any exists (first candidate in the
// deterministic search order), otherwise nothing.
std::optional<std::pair<Composition, Composition>> find_nontrivial_split(const Composition& b);

bool is_irreducible(const Composition& b);

// The unique maximal chain f_1 ∘ f_2 ∘ ... ∘ f_k = b with every factor
// irreducible and no adjacent pair trivial. A composition with no
// non-trivial split yields the singleton chain {b}.
std::vector<Composition> irreducible_factorization(const Composition& b);

// Left-to-right product of a factor chain.
Composition recompose(const std::vector<Composition>& factors);

// All compositions obtained by independently reversing the irreducible
// factors of b; contains b, closed under full reversal.
std::set<Composition, CompositionLexLess> sym_class(const Composition& b);

// All compositions of |b| with the same L-polynomial as b, found by scanning
// the full 2^{|b|-1} enumeration. Cost grows like 3^{|b|-1}.
std::set<Composition, CompositionLexLess> l_class_bruteforce(const Composition& b);

// True iff the L-polynomial of b determines b up to reversal.
bool is_l_unique(const Composition& b);

}  // namespace catpoly
