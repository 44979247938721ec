#include <cstdlib>
#include <stdexcept>
#include <string>

#include "catpoly/verify.hpp"
#include "doctest.h"

using namespace catpoly;

TEST_CASE("witness on the smallest separated pair") {
    WitnessData w = witness_theorem(Composition{1, 1}, Composition{2}, Composition{2, 3});
    CHECK(w.k_ab == 1);
    CHECK(w.k_g == 1);
    CHECK(w.a == 1);
    CHECK(w.b == 2);
    CHECK(w.delta1 == 7);
    CHECK(w.delta2 == 3);
    CHECK(w.lambda_witness == Partition({6, 3, 1}));
    CHECK(w.rho1 == Composition{2, 3, 2});
    CHECK(w.rho2 == Composition{2, 5});
    CHECK(w.coeff_S == 4);
    CHECK(w.coeff_T == 5);
}

TEST_CASE("witness on the length preserving pair") {
    WitnessData w = witness_theorem(Composition{2, 3}, Composition{3, 2}, Composition{2, 3});
    CHECK(w.k_ab == 1);
    CHECK(w.k_g == 1);
    CHECK(w.a == 2);
    CHECK(w.b == 2);
    CHECK(w.delta1 == 12);
    CHECK(w.delta2 == 13);
    CHECK(w.lambda_witness == Partition({13, 11, 1}));
    CHECK(w.rho1 == Composition{2, 5, 3, 2});
    CHECK(w.rho2 == Composition{2, 5, 5});
    CHECK(w.coeff_S == 8);
    CHECK(w.coeff_T == 9);
}

TEST_CASE("witness preconditions fail with named hypotheses") {
    auto mentions = [](const std::invalid_argument& e, const char* needle) {
        return std::string(e.what()).find(needle) != std::string::npos;
    };
    try {
        witness_theorem(Composition{2}, Composition{1, 1}, Composition{2, 3});
        FAIL("expected an ordering error");
    } catch (const std::invalid_argument& e) {
        CHECK(mentions(e, "swap"));
    }
    try {
        witness_theorem(Composition{1, 1}, Composition{2}, Composition{3, 2});
        FAIL("expected an orientation error");
    } catch (const std::invalid_argument& e) {
        CHECK(mentions(e, "reverse"));
    }
    try {
        witness_theorem(Composition{1, 1}, Composition{2}, Composition{2, 2});
        FAIL("expected a palindrome error");
    } catch (const std::invalid_argument& e) {
        CHECK(mentions(e, "palindrome"));
    }
    try {
        witness_theorem(Composition{1, 1}, Composition{2}, Composition{2, 1, 3});
        FAIL("expected a properness error");
    } catch (const std::invalid_argument& e) {
        CHECK(mentions(e, "parts >= 2"));
    }
    CHECK_THROWS_AS(witness_theorem(Composition{1, 1}, Composition{3}, Composition{2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(witness_theorem(Composition{2}, Composition{2}, Composition{2, 3}),
                    std::invalid_argument);
}

TEST_CASE("triple normalization repairs orientation and order") {
    WitnessTriple t =
        normalize_witness_triple(Composition{2}, Composition{1, 1}, Composition{3, 2});
    CHECK(t.alpha == Composition{1, 1});
    CHECK(t.beta == Composition{2});
    CHECK(t.gamma == Composition{2, 3});
    WitnessData w = witness_theorem(t.alpha, t.beta, t.gamma);
    CHECK(w.coeff_T == w.coeff_S + 1);

    CHECK_THROWS_AS(
        normalize_witness_triple(Composition{2}, Composition{1, 1}, Composition{2, 2}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        normalize_witness_triple(Composition{2}, Composition{2}, Composition{2, 3}),
        std::invalid_argument);
}

TEST_CASE("structural checks pass at small sizes with frozen instance counts") {
    CHECK(check_sym_equals_lclass(6).to_text() ==
          "check: sym-lclass\nn: 6\ninstances: 32\nfailures: 0\n");
    CHECK(check_palindromes_unique(7).to_text() ==
          "check: palindromes\nn: 7\ninstances: 8\nfailures: 0\n");
    CHECK(check_ul_equals_l(8).to_text() ==
          "check: ul-equals-l\nn: 8\ninstances: 8\nfailures: 0\n");
    CHECK(check_x1_proposition(7).to_text() == "check: x1\nn: 7\ninstances: 9\nfailures: 0\n");
    CHECK(check_main_result(9).to_text() ==
          "check: main-result\nn: 9\ninstances: 11\nfailures: 0\n");
    CHECK(check_stanley_trees(8).to_text() ==
          "check: stanley-trees\nn: 8\ninstances: 23\nfailures: 0\n");
    CHECK(check_corollary_l_implies_u(8).to_text() ==
          "check: corollary-l-u\nn: 8\ninstances: 12\nfailures: 0\n");
}

TEST_CASE("reports are byte stable across worker counts") {
    RunOptions serial;
    RunOptions parallel;
    parallel.jobs = 4;
    CHECK(check_sym_equals_lclass(9, serial).to_text() ==
          check_sym_equals_lclass(9, parallel).to_text());
    CHECK(check_main_result(11, serial).to_text() == check_main_result(11, parallel).to_text());
    CHECK(check_witness_random(25, 24, 99, serial).to_text() ==
          check_witness_random(25, 24, 99, parallel).to_text());
}

TEST_CASE("witness random sampling is seed reproducible") {
    VerificationReport a = check_witness_random(30, 28, 2024);
    VerificationReport b = check_witness_random(30, 28, 2024);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.seed.has_value());
    CHECK(*a.seed == 2024);
    CHECK(a.instances_checked == 30);
    CHECK(a.passed());
    CHECK(a.to_text().find("seed: 2024") != std::string::npos);
}

TEST_CASE("caps refuse oversized runs unless forced") {
    try {
        check_x1_proposition(13);
        FAIL("expected a cap error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("CATPOLY_CAP_X1") != std::string::npos);
    }
    setenv("CATPOLY_CAP_SYM_LCLASS", "5", 1);
    CHECK_THROWS_AS(check_sym_equals_lclass(6), std::invalid_argument);
    RunOptions forced;
    forced.force = true;
    CHECK(check_sym_equals_lclass(6, forced).passed());
    unsetenv("CATPOLY_CAP_SYM_LCLASS");
    CHECK(check_sym_equals_lclass(6).passed());

    CHECK_THROWS_AS(check_witness_random(10, 2000, 1), std::invalid_argument);
}
