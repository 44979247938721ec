#include <stdexcept>

#include "catpoly/factorization.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catpoly;

TEST_CASE("trivial factorization pairs") {
    CHECK(is_trivial_factorization(Composition{1}, Composition{2, 3}));
    CHECK(is_trivial_factorization(Composition{2, 3}, Composition{1}));
    CHECK(is_trivial_factorization(Composition{2}, Composition{3}));
    CHECK(is_trivial_factorization(Composition{1, 1}, Composition{1, 1, 1}));
    CHECK(!is_trivial_factorization(Composition{2}, Composition{2, 3}));
    CHECK(!is_trivial_factorization(Composition{1, 1}, Composition{2}));
}

TEST_CASE("frozen factorizations") {
    CHECK(irreducible_factorization(Composition{2, 5, 3}) ==
          std::vector<Composition>{Composition{2}, Composition{2, 3}});
    CHECK(irreducible_factorization(Composition{4}) == std::vector<Composition>{Composition{4}});
    CHECK(irreducible_factorization(Composition{1}) == std::vector<Composition>{Composition{1}});
    CHECK(irreducible_factorization(Composition{1, 1, 1, 1}) ==
          std::vector<Composition>{Composition{1, 1, 1, 1}});
    CHECK(irreducible_factorization(Composition{2, 3, 2, 3}) ==
          std::vector<Composition>{Composition{1, 1}, Composition{2, 3}});
    // (2,3)∘(2,3) = (2,5,3)·(2,5,5,3)
    Composition big = circ(Composition{2, 3}, Composition{2, 3});
    CHECK(big == Composition{2, 5, 3, 2, 5, 5, 3});
    CHECK(irreducible_factorization(big) ==
          std::vector<Composition>{Composition{2, 3}, Composition{2, 3}});

    CHECK(is_irreducible(Composition{2, 3}));
    CHECK(is_irreducible(Composition{7}));
    CHECK(!is_irreducible(Composition{2, 5, 3}));
}

TEST_CASE("recompose inverts the factorization") {
    CHECK_THROWS_AS(recompose({}), std::invalid_argument);
    for (long long n = 1; n <= 10; ++n)
        for (const auto& b : enumerate_compositions(n, 1))
            CHECK(recompose(irreducible_factorization(b)) == b);
}

TEST_CASE("factorization agrees with the exhaustive chain oracle") {
    oracles::FactorizationOracle oracle;
    for (long long n = 1; n <= 10; ++n)
        for (const auto& b : enumerate_compositions(n, 1)) {
            const auto& chains = oracle.chains(b);
            REQUIRE(chains.size() == 1);
            CHECK(chains[0] == irreducible_factorization(b));
        }
}

TEST_CASE("reversal flips every factor") {
    for (long long n = 1; n <= 9; ++n)
        for (const auto& b : enumerate_compositions(n, 1)) {
            auto factors = irreducible_factorization(b);
            for (auto& f : factors) f = reverse(f);
            CHECK(recompose(factors) == reverse(b));
        }
}

TEST_CASE("sym class contents") {
    auto cls = sym_class(Composition{2, 5, 3});
    CHECK(cls.size() == 2);
    CHECK(cls.count(Composition{2, 5, 3}) == 1);
    CHECK(cls.count(Composition{3, 5, 2}) == 1);

    // palindromic factors produce a singleton class
    CHECK(sym_class(Composition{2, 3, 2}).size() == 1);

    for (const auto& b : enumerate_compositions(8, 1)) {
        auto c = sym_class(b);
        CHECK(c.count(b) == 1);
        CHECK(c.count(reverse(b)) == 1);
        for (const auto& m : c) CHECK(partition_type(m) == partition_type(b));
    }
}

TEST_CASE("brute force L class matches the sym class") {
    for (long long n = 1; n <= 9; ++n)
        for (const auto& b : enumerate_compositions(n, 1))
            CHECK(l_class_bruteforce(b) == sym_class(b));
}

TEST_CASE("L uniqueness up to reversal") {
    CHECK(is_l_unique(Composition{2, 2}));
    CHECK(is_l_unique(Composition{2, 5, 3}));
    CHECK(is_l_unique(Composition{2, 3, 2}));
    // two non-palindromic factors admit four distinct flip patterns
    Composition two_factor = circ(Composition{1, 2}, Composition{1, 2});
    CHECK(two_factor == Composition{1, 2, 1, 3, 2});
    CHECK(sym_class(two_factor).size() == 4);
    CHECK(!is_l_unique(two_factor));
}
