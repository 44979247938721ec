#pragma once

// Sparse polynomials in commuting variables indexed by integer partitions,
// with 64-bit coefficients and loud overflow failure. The canonical text
// form (terms in descending lexicographic partition order, "c*x[a.b.c]"
// joined by '+') doubles as the equality/collision key everywhere.

#include <map>
#include <string>
#include <vector>

#include "catpoly/composition.hpp"

namespace catpoly {

// A partition: weakly decreasing positive parts.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const;
    bool contains(int part) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

private:
    std::vector<int> parts_;
};

// Sort the multiset of parts of c weakly decreasing.
Partition partition_type(const Composition& c);
Partition partition_from_unsorted(std::vector<int> parts);

// Descending lexicographic order (the canonical term order).
struct PartitionDescLex {
    bool operator()(const Partition& a, const Partition& b) const;
};

std::string to_text(const Partition& p);  // "4.2.1"

class PartitionPolynomial {
public:
    using Terms = std::map<Partition, long long, PartitionDescLex>;

    PartitionPolynomial() = default;

    // Checked accumulation; zero coefficients are erased.
    void add(const Partition& lambda, long long coeff);
    long long coefficient(const Partition& lambda) const;
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    long long mass() const;  // checked sum of coefficients
    bool has_part(int part) const;
    PartitionPolynomial without_part(int part) const;  // drop terms containing `part`

    // Common size of the index partitions; 0 when empty, error when mixed.
    long long homogeneous_size() const;

    bool operator==(const PartitionPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const PartitionPolynomial& o) const { return terms_ != o.terms_; }

    std::string to_text() const;

private:
    Terms terms_;
};

// Terms x_lambda (y-1)^j of the two-variable polynomial of a graph; trees
// and forests only ever produce j = 0.
class GraphUPolynomial {
public:
    struct Key {
        Partition lambda;
        int ypow;
        bool operator==(const Key& o) const { return ypow == o.ypow && lambda == o.lambda; }
    };
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;  // lambda desc-lex, then ypow asc
    };
    using Terms = std::map<Key, long long, KeyLess>;

    void add(const Partition& lambda, int ypow, long long coeff);
    long long coefficient(const Partition& lambda, int ypow) const;
    const Terms& terms() const { return terms_; }
    bool all_y_zero() const;
    PartitionPolynomial x_part() const;  // the y-exponent-0 slice
    long long mass() const;

    bool operator==(const GraphUPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const GraphUPolynomial& o) const { return terms_ != o.terms_; }

    std::string to_text() const;  // "c*x[...]" or "c*x[...]*(y-1)^j"

private:
    Terms terms_;
};

// Sum of x_{type(a)} over all coarsenings a of c (2^{l(c)-1} monomials).
PartitionPolynomial l_polynomial(const Composition& c);

}  // namespace catpoly
