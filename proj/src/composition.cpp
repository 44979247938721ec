#include "catpoly/composition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace catpoly {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) fail("composition must have at least one part");
    for (int p : parts_)
        if (p < 1) fail("composition parts must be positive, got " + std::to_string(p));
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

long long Composition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int lex_compare(const Composition& a, const Composition& b) {
    const auto& x = a.parts();
    const auto& y = b.parts();
    size_t m = std::min(x.size(), y.size());
    for (size_t i = 0; i < m; ++i) {
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    }
    if (x.size() == y.size()) return 0;
    return x.size() < y.size() ? -1 : 1;
}

bool lex_less(const Composition& a, const Composition& b) {
    int c = lex_compare(a, b);
    if (c == 0) fail("lex_less: compositions are equal");
    return c < 0;
}

Composition reverse(const Composition& c) {
    std::vector<int> p(c.parts().rbegin(), c.parts().rend());
    return Composition(std::move(p));
}

bool is_palindrome(const Composition& c) {
    const auto& p = c.parts();
    return std::equal(p.begin(), p.begin() + c.length() / 2, p.rbegin());
}

Composition reverse_class_rep(const Composition& c) {
    Composition r = reverse(c);
    return lex_compare(r, c) < 0 ? r : c;
}

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> p = a.parts();
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(p));
}

Composition near_concat(const Composition& a, const Composition& b) {
    std::vector<int> p = a.parts();
    p.back() += b.parts().front();
    p.insert(p.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(p));
}

Composition odot_power(const Composition& a, int i) {
    if (i < 1) fail("odot_power: exponent must be >= 1");
    Composition out = a;
    for (int j = 1; j < i; ++j) out = near_concat(out, a);
    return out;
}

Composition circ(const Composition& b, const Composition& a) {
    Composition out = odot_power(a, b[0]);
    for (int i = 1; i < b.length(); ++i) out = concat(out, odot_power(a, b[i]));
    return out;
}

int first_difference_index(const Composition& a, const Composition& b) {
    const auto& x = a.parts();
    const auto& y = b.parts();
    size_t m = std::min(x.size(), y.size());
    for (size_t i = 0; i < m; ++i)
        if (x[i] != y[i]) return static_cast<int>(i) + 1;
    if (x.size() == y.size()) fail("first_difference_index: compositions are equal");
    return static_cast<int>(m) + 1;
}

Composition prefix(const Composition& a, int k) {
    if (k < 1 || k > a.length()) fail("prefix: index out of range");
    return Composition(std::vector<int>(a.parts().begin(), a.parts().begin() + k));
}

bool is_coarsening(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return false;
    const auto& x = a.parts();
    size_t ai = 0;
    long long acc = 0;
    for (int p : b.parts()) {
        acc += p;
        if (ai == x.size()) return false;
        if (acc == x[ai]) {
            ++ai;
            acc = 0;
        } else if (acc > x[ai]) {
            return false;
        }
    }
    return acc == 0 && ai == x.size();
}

void coarsenings(const Composition& c, const std::function<void(const Composition&)>& visit) {
    int l = c.length();
    if (l > 62) fail("coarsenings: 2^(length-1) enumeration infeasible for length > 62");
    const auto& p = c.parts();
    unsigned long long total = 1ULL << (l - 1);
    std::vector<int> merged;
    for (unsigned long long mask = 0; mask < total; ++mask) {
        merged.clear();
        merged.push_back(p[0]);
        for (int i = 1; i < l; ++i) {
            if (mask >> (i - 1) & 1)
                merged.back() += p[static_cast<size_t>(i)];
            else
                merged.push_back(p[static_cast<size_t>(i)]);
        }
        visit(Composition(merged));
    }
}

std::vector<Composition> coarsenings(const Composition& c) {
    std::vector<Composition> out;
    coarsenings(c, [&](const Composition& a) { out.push_back(a); });
    return out;
}

long long leaf_functional(const Composition& c) { return c.size() - c.length(); }

void enumerate_compositions_range(long long n, int min_part,
                                  unsigned long long mask_lo, unsigned long long mask_hi,
                                  const std::function<void(const Composition&)>& visit) {
    if (n < 1) fail("enumerate_compositions: n must be >= 1");
    if (min_part < 1) fail("enumerate_compositions: min_part must be >= 1");
    if (n > 62) fail("enumerate_compositions: 2^(n-1) enumeration infeasible for n > 62");
    if (n < min_part) return;  // no valid composition; empty enumeration
    unsigned long long total = 1ULL << (n - 1);
    mask_hi = std::min(mask_hi, total);
    std::vector<int> parts;
    for (unsigned long long mask = mask_lo; mask < mask_hi; ++mask) {
        parts.clear();
        int run = 1;
        bool ok = true;
        for (int i = 0; i < n - 1; ++i) {
            if (mask >> i & 1) {
                if (run < min_part) {
                    ok = false;
                    break;
                }
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        if (!ok || run < min_part) continue;
        parts.push_back(run);
        visit(Composition(parts));
    }
}

void enumerate_compositions(long long n, int min_part,
                            const std::function<void(const Composition&)>& visit) {
    enumerate_compositions_range(n, min_part, 0, ~0ULL, visit);
}

std::vector<Composition> enumerate_compositions(long long n, int min_part) {
    std::vector<Composition> out;
    enumerate_compositions(n, min_part, [&](const Composition& c) { out.push_back(c); });
    return out;
}

Composition parse_composition(std::string_view text) {
    auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); };
    size_t lo = 0, hi = text.size();
    while (lo < hi && is_space(text[lo])) ++lo;
    while (hi > lo && is_space(text[hi - 1])) --hi;
    if (lo < hi && (text[lo] == '(' || text[lo] == '[')) {
        char close = text[lo] == '(' ? ')' : ']';
        if (text[hi - 1] != close)
            fail("composition text has unmatched bracket: '" + std::string(text) + "'");
        ++lo;
        --hi;
    }
    std::string_view body = text.substr(lo, hi - lo);
    if (body.empty()) fail("composition text is empty");

    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos ? body.size() - pos
                                                                                : comma - pos);
        size_t a = 0, b = tok.size();
        while (a < b && is_space(tok[a])) ++a;
        while (b > a && is_space(tok[b - 1])) --b;
        tok = tok.substr(a, b - a);
        if (tok.empty()) fail("composition text has an empty part");
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            fail("composition part is not a positive integer: '" + std::string(tok) + "'");
        if (value < 1) fail("composition parts must be positive, got " + std::to_string(value));
        if (value > 1000000000) fail("composition part too large: " + std::string(tok));
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

std::string to_text(const Composition& c) {
    std::string out;
    for (int i = 0; i < c.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

}  // namespace catpoly
