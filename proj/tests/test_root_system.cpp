#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "coxtoric/root_system.hpp"

using namespace coxtoric;

TEST_CASE("catalog sizes match the classical root counts") {
    CHECK(build_root_system('A', 1).num_roots() == 2);
    CHECK(build_root_system('A', 2).num_roots() == 6);
    CHECK(build_root_system('A', 4).num_roots() == 20);
    CHECK(build_root_system('B', 2).num_roots() == 8);
    CHECK(build_root_system('B', 3).num_roots() == 18);
    CHECK(build_root_system('C', 3).num_roots() == 18);
    CHECK(build_root_system('D', 4).num_roots() == 24);
    CHECK(build_root_system('G', 2).num_roots() == 12);
    CHECK(build_root_system('F', 4).num_roots() == 48);
}

TEST_CASE("catalog rejects unsupported requests by name") {
    CHECK_THROWS_AS(build_root_system('H', 3), catalog_error);
    CHECK_THROWS_AS(build_root_system('E', 7, true), catalog_error);
    CHECK_THROWS_AS(build_root_system('E', 8, true), catalog_error);
    CHECK_THROWS_AS(build_root_system('B', 1), catalog_error);
    CHECK_THROWS_AS(build_root_system('D', 3), catalog_error);
    CHECK_THROWS_AS(build_root_system('A', 0), catalog_error);
    CHECK_THROWS_WITH(build_root_system('E', 6), Catch::Matchers::ContainsSubstring("opt-in"));
    CHECK(build_root_system('E', 6, true).num_roots() == 72);
}

TEST_CASE("cartan matrices carry the pinned convention") {
    auto a2 = build_root_system('A', 2);
    CHECK(a2.cartan.at(0, 0) == 2);
    CHECK(a2.cartan.at(0, 1) == -1);
    CHECK(a2.cartan.at(1, 0) == -1);

    // first simple root short, second long
    auto g2 = build_root_system('G', 2);
    CHECK(g2.cartan.at(0, 1) == -1);
    CHECK(g2.cartan.at(1, 0) == -3);

    // B and C are dual: transposed Cartan matrices, distinct lattices
    auto b3 = build_root_system('B', 3);
    auto c3 = build_root_system('C', 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(b3.cartan.at(i, j) == c3.cartan.at(j, i));
    CHECK(lattice_action(b3).matrices[2] != lattice_action(c3).matrices[2]);
}

TEST_CASE("roots come in +- pairs with sign-coherent coordinates") {
    for (auto [t, r] : {std::pair<char, int>{'A', 3}, {'B', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
        auto rs = build_root_system(t, r);
        REQUIRE(rs.num_roots() == 2 * rs.num_positive);
        for (int i = 0; i < rs.num_roots(); ++i) {
            const Root& root = rs.roots[static_cast<size_t>(i)];
            const Root& neg = rs.roots[static_cast<size_t>(rs.negative_of(i))];
            for (size_t k = 0; k < root.simple_coords.size(); ++k)
                CHECK(root.simple_coords[k] == -neg.simple_coords[k]);
            CHECK(root.positive != neg.positive);
            bool nonneg = true, nonpos = true;
            for (long long c : root.simple_coords) {
                nonneg = nonneg && c >= 0;
                nonpos = nonpos && c <= 0;
            }
            CHECK((nonneg || nonpos));
            CHECK(root.positive == nonneg);
        }
        for (int i = 0; i < rs.rank; ++i) {
            CHECK(rs.cartan.at(i, i) == 2);
            for (int j = 0; j < rs.rank; ++j)
                if (i != j) CHECK(rs.cartan.at(i, j) <= 0);
        }
    }
}

TEST_CASE("reflections permute the stored root list") {
    auto rs = build_root_system('F', 4);
    for (int j = 0; j < rs.rank; ++j) {
        std::set<std::vector<long long>> seen;
        for (const Root& root : rs.roots) {
            auto c = root.simple_coords;
            long long pairing = 0;
            for (int k = 0; k < rs.rank; ++k) pairing += c[static_cast<size_t>(k)] * rs.cartan.at(k, j);
            c[static_cast<size_t>(j)] -= pairing;
            seen.insert(c);
        }
        std::set<std::vector<long long>> all;
        for (const Root& root : rs.roots) all.insert(root.simple_coords);
        CHECK(seen == all);
    }
}

TEST_CASE("parabolic subsystems restrict the Dynkin diagram") {
    auto a3 = build_root_system('A', 3);
    auto sub = parabolic_subsystem(a3, {0, 1});
    CHECK(sub.rank == 2);
    CHECK(sub.num_roots() == 6);
    CHECK(sub.cartan.at(0, 1) == -1);

    auto b3 = build_root_system('B', 3);
    auto line = parabolic_subsystem(b3, {0});
    CHECK(line.rank == 1);
    CHECK(line.num_roots() == 2);

    // disconnected subdiagram: two commuting reflections
    auto a1a1 = parabolic_subsystem(a3, {0, 2});
    CHECK(a1a1.num_roots() == 4);
    CHECK(a1a1.cartan.at(0, 1) == 0);

    auto empty = parabolic_subsystem(a3, {});
    CHECK(empty.rank == 0);
    CHECK(empty.num_roots() == 0);

    CHECK_THROWS_AS(parabolic_subsystem(a3, {7}), std::out_of_range);
}

TEST_CASE("weight lattice generators are involutions of determinant -1") {
    for (auto [t, r] : {std::pair<char, int>{'A', 3}, {'B', 2}, {'C', 3}, {'G', 2}, {'F', 4}}) {
        auto rs = build_root_system(t, r);
        auto act = lattice_action(rs);
        for (const IntMat& m : act.matrices) {
            CHECK(m * m == IntMat::identity(r));
            CHECK(m.det() == -1);
        }
        for (size_t j = 0; j < act.matrices.size(); ++j)
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b)
                    CHECK(act.mod2_matrices[j].at(a, b) ==
                          (act.matrices[j].at(a, b) % 2 + 2) % 2);
    }
}

TEST_CASE("weight action on the rank-1 and rank-2 lattices") {
    auto a1 = build_root_system('A', 1);
    auto act1 = lattice_action(a1);
    CHECK(act1.matrices[0].at(0, 0) == -1);

    auto a2 = build_root_system('A', 2);
    auto act2 = lattice_action(a2);
    const IntMat& s1 = act2.matrices[0];
    CHECK(s1.at(0, 0) == -1);
    CHECK(s1.at(0, 1) == 0);
    CHECK(s1.at(1, 0) == 1);
    CHECK(s1.at(1, 1) == 1);
    // nullity of s1 - id over F2 is 1: two fixed points in N/2N
    CHECK((s1 - IntMat::identity(2)).rank_mod2() == 1);

    std::vector<int> empty_word;
    CHECK(weight_action_matrix(act2, std::span<const int>(empty_word), 2) == IntMat::identity(2));
}
