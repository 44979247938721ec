#include "catpoly/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace catpoly {

namespace {

long long checked_add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("polynomial coefficient overflows 64-bit range");
    return out;
}

// Lexicographic with proper prefixes first; partitions of equal size never
// prefix one another, so this is the plain textbook order there.
int lex_compare_parts(const std::vector<int>& a, const std::vector<int>& b) {
    size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::contains(int part) const {
    return std::find(parts_.begin(), parts_.end(), part) != parts_.end();
}

Partition partition_type(const Composition& c) {
    std::vector<int> p = c.parts();
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

Partition partition_from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

bool PartitionDescLex::operator()(const Partition& a, const Partition& b) const {
    return lex_compare_parts(a.parts(), b.parts()) > 0;
}

std::string to_text(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += '.';
        out += std::to_string(p.parts()[static_cast<size_t>(i)]);
    }
    return out;
}

void PartitionPolynomial::add(const Partition& lambda, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_.emplace(lambda, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

long long PartitionPolynomial::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
}

long long PartitionPolynomial::mass() const {
    long long out = 0;
    for (const auto& [lambda, c] : terms_) out = checked_add(out, c);
    return out;
}

bool PartitionPolynomial::has_part(int part) const {
    for (const auto& [lambda, c] : terms_)
        if (lambda.contains(part)) return true;
    return false;
}

PartitionPolynomial PartitionPolynomial::without_part(int part) const {
    PartitionPolynomial out;
    for (const auto& [lambda, c] : terms_)
        if (!lambda.contains(part)) out.add(lambda, c);
    return out;
}

long long PartitionPolynomial::homogeneous_size() const {
    long long n = 0;
    for (const auto& [lambda, c] : terms_) {
        if (n == 0)
            n = lambda.size();
        else if (lambda.size() != n)
            throw std::logic_error("polynomial mixes partition sizes");
    }
    return n;
}

std::string PartitionPolynomial::to_text() const {
    std::string out;
    for (const auto& [lambda, c] : terms_) {
        if (!out.empty()) out += '+';
        out += std::to_string(c);
        out += "*x[";
        out += catpoly::to_text(lambda);
        out += ']';
    }
    return out.empty() ? "0" : out;
}

bool GraphUPolynomial::KeyLess::operator()(const Key& a, const Key& b) const {
    int c = lex_compare_parts(a.lambda.parts(), b.lambda.parts());
    if (c != 0) return c > 0;
    return a.ypow < b.ypow;
}

void GraphUPolynomial::add(const Partition& lambda, int ypow, long long coeff) {
    if (coeff == 0) return;
    Key key{lambda, ypow};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

long long GraphUPolynomial::coefficient(const Partition& lambda, int ypow) const {
    auto it = terms_.find(Key{lambda, ypow});
    return it == terms_.end() ? 0 : it->second;
}

bool GraphUPolynomial::all_y_zero() const {
    for (const auto& [key, c] : terms_)
        if (key.ypow != 0) return false;
    return true;
}

PartitionPolynomial GraphUPolynomial::x_part() const {
    PartitionPolynomial out;
    for (const auto& [key, c] : terms_)
        if (key.ypow == 0) out.add(key.lambda, c);
    return out;
}

long long GraphUPolynomial::mass() const {
    long long out = 0;
    for (const auto& [key, c] : terms_) out = checked_add(out, c);
    return out;
}

std::string GraphUPolynomial::to_text() const {
    std::string out;
    for (const auto& [key, c] : terms_) {
        if (!out.empty()) out += '+';
        out += std::to_string(c);
        out += "*x[";
        out += catpoly::to_text(key.lambda);
        out += ']';
        if (key.ypow > 0) {
            out += "*(y-1)^";
            out += std::to_string(key.ypow);
        }
    }
    return out.empty() ? "0" : out;
}

PartitionPolynomial l_polynomial(const Composition& c) {
    PartitionPolynomial out;
    coarsenings(c, [&](const Composition& a) { out.add(partition_type(a), 1); });
    return out;
}

}  // namespace catpoly
