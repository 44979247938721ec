#include <stdexcept>
#include <string>

#include "catpoly/caterpillar.hpp"
#include "doctest.h"

using namespace catpoly;

namespace {

Tree path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(n, std::move(edges));
}

Tree star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Tree(n, std::move(edges));
}

}  // namespace

TEST_CASE("caterpillar recognition needs a two vertex spine") {
    CHECK(!caterpillar_view(Tree(1, {})));
    CHECK(!caterpillar_view(path(2)));
    CHECK(!caterpillar_view(path(3)));
    CHECK(!caterpillar_view(star(5)));

    auto p4 = caterpillar_view(path(4));
    REQUIRE(p4);
    CHECK(p4->spine == std::vector<int>{1, 2});
    CHECK(p4->leaf_counts == std::vector<int>{1, 1});
    CHECK(p4->proper);

    auto p5 = caterpillar_view(path(5));
    REQUIRE(p5);
    CHECK(p5->leaf_counts == std::vector<int>{1, 0, 1});
    CHECK(!p5->proper);

    // chair: leaf counts 2 and 1 on the two spine vertices, reported in the
    // lexicographically smaller orientation
    Tree chair(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    auto view = caterpillar_view(chair);
    REQUIRE(view);
    CHECK(view->spine == std::vector<int>{2, 1});
    CHECK(view->leaf_counts == std::vector<int>{1, 2});
    CHECK(view->proper);

    // a spider with three legs of length two is not a caterpillar
    Tree spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(!caterpillar_view(spider));
}

TEST_CASE("phi reads spine weights up to reversal") {
    Tree chair(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    CHECK(phi(chair) == Composition{2, 3});
    CHECK(phi(path(4)) == Composition{2, 2});
    CHECK_THROWS_AS(phi(star(5)), std::invalid_argument);
    CHECK_THROWS_AS(phi(path(5)), std::invalid_argument);
}

TEST_CASE("psi builds the caterpillar with the stated labels") {
    Tree t = psi(Composition{2, 3});
    CHECK(t.vertex_count() == 5);
    CHECK(to_edge_list_text(t) == "0 1\n0 2\n1 3\n1 4\n");
    CHECK(phi(t) == Composition{2, 3});

    CHECK_THROWS_AS(psi(Composition{5}), std::invalid_argument);
    try {
        psi(Composition{2, 1, 3});
        FAIL("expected a part error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("part 2") != std::string::npos);
    }
}

TEST_CASE("phi and psi invert each other on representatives") {
    for (int n = 4; n <= 12; ++n)
        enumerate_compositions(n, 2, [&](const Composition& c) {
            if (c.length() < 2 || reverse_class_rep(c) != c) return;
            CHECK(phi(psi(c)) == c);
        });
}

TEST_CASE("restricted polynomial frozen values") {
    CHECK(u_restricted(path(4)).to_text() == "1*x[4]+1*x[2.2]");
    CHECK(u_restricted(path(5)).to_text() == "1*x[5]+2*x[3.2]+1*x[2.2.1]");
    CHECK(u_restricted(psi(Composition{2, 3})).to_text() == "1*x[5]+1*x[3.2]");
    CHECK_THROWS_AS(u_restricted(star(5)), std::invalid_argument);
}

TEST_CASE("proper caterpillar enumeration counts") {
    CHECK(enumerate_proper_caterpillars(3).empty());
    CHECK(enumerate_proper_caterpillars(4).size() == 1);
    CHECK(enumerate_proper_caterpillars(5).size() == 1);
    CHECK(enumerate_proper_caterpillars(6).size() == 3);
    CHECK(enumerate_proper_caterpillars(7).size() == 4);
    for (const Tree& t : enumerate_proper_caterpillars(9)) {
        auto view = caterpillar_view(t);
        REQUIRE(view);
        CHECK(view->proper);
        CHECK(reverse_class_rep(phi(t)) == phi(t));
    }
}
