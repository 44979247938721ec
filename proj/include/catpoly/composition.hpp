#pragma once

// Integer compositions and the operations of their concatenation algebra:
// reversal, concatenation, near-concatenation, the composition product, and
// the coarsening (merge-adjacent-parts) order.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace catpoly {

// A composition of n: a non-empty sequence of positive integers summing to n.
class Composition {
public:
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const;  // sum of parts
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return parts_ != o.parts_; }

private:
    std::vector<int> parts_;
};

// Total lexicographic comparison; a proper prefix precedes its extensions.
// Returns <0, 0, >0.
int lex_compare(const Composition& a, const Composition& b);

// Strict lexicographic order as used for class representatives and the
// witness construction. Comparing a composition with itself is a caller bug.
bool lex_less(const Composition& a, const Composition& b);

// Container comparator built on lex_compare.
struct CompositionLexLess {
    bool operator()(const Composition& a, const Composition& b) const {
        return lex_compare(a, b) < 0;
    }
};

Composition reverse(const Composition& c);
bool is_palindrome(const Composition& c);

// Lexicographically smaller of {c, reverse(c)}; c itself for palindromes.
Composition reverse_class_rep(const Composition& c);

Composition concat(const Composition& a, const Composition& b);

// Near-concatenation: concatenate and merge the boundary parts into one.
Composition near_concat(const Composition& a, const Composition& b);

// i-fold near-concatenation power, i >= 1.
Composition odot_power(const Composition& a, int i);

// Composition product: circ(b, a) = a^{⊙b_1} · a^{⊙b_2} · ... · a^{⊙b_k}.
// Associative; size multiplies, |circ(b,a)| = |b|·|a|.
Composition circ(const Composition& b, const Composition& a);

// 1-based index of the first position where a and b differ; if one is a
// proper prefix of the other, length(shorter) + 1. Equal inputs are an error.
int first_difference_index(const Composition& a, const Composition& b);

// Prefix a_1..a_k as a composition, 1 <= k <= length.
Composition prefix(const Composition& a, int k);

// True iff a arises from b by merging runs of adjacent parts (a coarsens b).
bool is_coarsening(const Composition& a, const Composition& b);

// All 2^{l-1} coarsenings of c, enumerated by gap subsets in increasing
// binary order: bit i of the mask set <=> the gap between parts i and i+1
// (0-based) is merged. Mask 0 is c itself, the full mask is (|c|).
void coarsenings(const Composition& c, const std::function<void(const Composition&)>& visit);
std::vector<Composition> coarsenings(const Composition& c);

// Size minus length: the number of "extra units" |c| - l(c).
long long leaf_functional(const Composition& c);

// Every composition of n with all parts >= min_part, in increasing cut-mask
// order (bit i set <=> a part boundary after the (i+1)-th unit; mask 0 is
// (n)). Empty when no such composition exists. The masked variant restricts
// to masks in [mask_lo, mask_hi) so scans can be chunked.
void enumerate_compositions(long long n, int min_part,
                            const std::function<void(const Composition&)>& visit);
std::vector<Composition> enumerate_compositions(long long n, int min_part);
void enumerate_compositions_range(long long n, int min_part,
                                  unsigned long long mask_lo, unsigned long long mask_hi,
                                  const std::function<void(const Composition&)>& visit);

// Text form "2,5,3". The parser also tolerates whitespace and one pair of
// surrounding () or [] brackets.
Composition parse_composition(std::string_view text);
std::string to_text(const Composition& c);

}  // namespace catpoly
