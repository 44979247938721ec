#include <set>
#include <stdexcept>
#include <string>

#include "catpoly/free_trees.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catpoly;

TEST_CASE("free tree counts match the classical table") {
    const long long expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
    for (int n = 1; n <= 11; ++n)
        CHECK(enumerate_free_trees(n).size() == static_cast<size_t>(expected[n - 1]));
}

TEST_CASE("enumerated trees are pairwise non-isomorphic and well-formed") {
    for (int n = 1; n <= 11; ++n) {
        std::set<std::string> codes;
        enumerate_free_trees(n, [&](const Tree& t) {
            CHECK(t.vertex_count() == n);
            codes.insert(canonical_code(t));
        });
        CHECK(codes.size() == enumerate_free_trees(n).size());
    }
}

TEST_CASE("enumeration covers every isomorphism class seen through labeled trees") {
    for (int n = 2; n <= 8; ++n) {
        std::set<std::string> from_prufer;
        std::vector<int> seq(static_cast<size_t>(n - 2), 0);
        while (true) {
            from_prufer.insert(canonical_code(oracles::prufer_decode(seq, n)));
            int i = static_cast<int>(seq.size()) - 1;
            while (i >= 0 && seq[static_cast<size_t>(i)] == n - 1) {
                seq[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++seq[static_cast<size_t>(i)];
        }
        std::set<std::string> from_enum;
        enumerate_free_trees(n, [&](const Tree& t) { from_enum.insert(canonical_code(t)); });
        CHECK(from_enum == from_prufer);
    }
}

TEST_CASE("rooted level iterator starts at the path and ends at the star") {
    RootedLevelIterator it(4);
    CHECK(it.levels() == std::vector<int>{1, 2, 3, 4});
    std::vector<std::vector<int>> all;
    do {
        all.push_back(it.levels());
    } while (it.advance());
    CHECK(all.size() == 4);  // rooted trees on four vertices
    CHECK(all.back() == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("enumeration refuses sizes above the cap") {
    try {
        enumerate_free_trees(19);
        FAIL("expected a cap error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("CATPOLY_CAP_TREE_ENUM") != std::string::npos);
    }
}
