#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxtoric/class_function.hpp"
#include "coxtoric/polynomial.hpp"
#include "oracles.hpp"

using namespace coxtoric;

namespace {
WeylGroup make(char t, int r) { return enumerate_group(build_root_system(t, r)); }

ClassFunction<long long> random_fn(const WeylGroup& g, std::mt19937& rng) {
    std::uniform_int_distribution<long long> d(-5, 5);
    ClassFunction<long long> f(g);
    for (int c = 0; c < g.num_classes(); ++c) f.value(c) = d(rng);
    return f;
}
}

TEST_CASE("inducing the trivial character counts cosets") {
    auto a1 = make('A', 1);
    auto from_nothing = embed_parabolic(a1, {});
    auto reg = induce(ClassFunction<long long>::trivial(from_nothing.subgroup), from_nothing);
    CHECK(reg.values() == std::vector<long long>{2, 0});

    // classes of the rank-2 symmetric group: identity, transpositions, 3-cycles
    auto a2 = make('A', 2);
    auto emb = embed_parabolic(a2, {0});
    auto ind = induce(ClassFunction<long long>::trivial(emb.subgroup), emb);
    CHECK(ind.values() == std::vector<long long>{3, 1, 0});

    for (auto [t, r] : {std::pair<char, int>{'A', 3}, {'B', 3}}) {
        auto g = make(t, r);
        for (std::vector<int> J : {std::vector<int>{}, {0}, {1}, {0, 1}, {0, 2}, {0, 1, 2}}) {
            auto e = embed_parabolic(g, J);
            auto f = induce(ClassFunction<long long>::trivial(e.subgroup), e);
            CHECK(f.value(0) == parabolic_index(g, J));
        }
    }
}

TEST_CASE("induction agrees with the literal Frobenius sum") {
    std::mt19937 rng(20240811);
    for (auto [t, r] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'A', 3}}) {
        auto g = make(t, r);
        for (std::vector<int> J : {std::vector<int>{}, {0}, {1}, {0, 1}}) {
            auto emb = embed_parabolic(g, J);
            for (int trial = 0; trial < 3; ++trial) {
                auto f = random_fn(emb.subgroup, rng);
                CHECK(induce(f, emb) == oracles::naive_induce(f, emb));
            }
        }
    }
}

TEST_CASE("induction is additive and commutes with scalar extension to Z[q]") {
    std::mt19937 rng(7);
    auto g = make('B', 2);
    auto emb = embed_parabolic(g, {1});
    auto f1 = random_fn(emb.subgroup, rng);
    auto f2 = random_fn(emb.subgroup, rng);
    CHECK(induce(f1 + f2, emb) == induce(f1, emb) + induce(f2, emb));

    auto lift = [](const ClassFunction<long long>& f) {
        ClassFunction<PolyZ> h(f.group());
        for (int c = 0; c < f.num_classes(); ++c)
            h.value(c) = PolyZ(std::vector<long long>{0, f.value(c)});  // f(c) * q
        return h;
    };
    CHECK(induce(lift(f1), emb) == lift(induce(f1, emb)));
}

TEST_CASE("induction is transitive along nested parabolic subgroups") {
    std::mt19937 rng(99);
    for (auto [t, r] : {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}}) {
        auto g = make(t, r);
        std::vector<std::pair<std::vector<int>, std::vector<int>>> chains;
        if (r == 2) chains = {{{0}, {0, 1}}, {{1}, {0, 1}}, {{}, {0}}};
        else
            chains = {{{0}, {0, 1}}, {{1}, {1, 2}}, {{0, 1}, {0, 1, 2}},
                      {{0, 2}, {0, 1, 2}}, {{}, {1, 2}}};
        for (auto& [J, K] : chains) {
            auto embK = embed_parabolic(g, K);
            auto embJ_in_W = embed_parabolic(g, J);
            // positions of J inside K index the subgroup's own simple roots
            std::vector<int> J_local;
            for (int j : J)
                J_local.push_back(static_cast<int>(
                    std::find(K.begin(), K.end(), j) - K.begin()));
            auto embJ_in_K = embed_parabolic(embK.subgroup, J_local);

            auto f = random_fn(embJ_in_K.subgroup, rng);
            auto direct_route = [&] {
                // transport f to the W_J copy embedded straight into W
                ClassFunction<long long> fw(embJ_in_W.subgroup);
                for (int c = 0; c < embJ_in_W.subgroup.num_classes(); ++c) {
                    // both copies are enumerations of the same subsystem
                    fw.value(c) = f.value(c);
                }
                return induce(fw, embJ_in_W);
            }();
            auto nested_route = induce(induce(f, embJ_in_K), embK);
            CHECK(direct_route == nested_route);
        }
    }
}

TEST_CASE("inner products") {
    auto a2 = make('A', 2);
    ClassFunction<long long> regular(a2, {6, 0, 0});
    CHECK(inner_product(regular, ClassFunction<long long>::trivial(a2)) == Rational(1));

    auto a1 = make('A', 1);
    ClassFunction<long long> lambda(a1, {0, 2});
    CHECK(inner_product(lambda, ClassFunction<long long>::trivial(a1)) == Rational(1));
    CHECK(inner_product(lambda, ClassFunction<long long>::sign_character(a1)) == Rational(-1));

    SECTION("positivity: <f,f> >= 0 with equality only at 0") {
        std::mt19937 rng(5);
        auto b2 = make('B', 2);
        for (int trial = 0; trial < 10; ++trial) {
            auto f = random_fn(b2, rng);
            Rational n2 = inner_product(f, f);
            CHECK(!(n2 < Rational(0)));
            bool zero = std::all_of(f.values().begin(), f.values().end(),
                                    [](long long v) { return v == 0; });
            CHECK((n2 == Rational(0)) == zero);
        }
    }

    SECTION("mismatched groups are rejected") {
        auto g1 = make('A', 2);
        auto g2 = make('B', 2);
        CHECK_THROWS_AS(inner_product(ClassFunction<long long>::trivial(g1),
                                      ClassFunction<long long>::trivial(g2)),
                        std::invalid_argument);
        CHECK_THROWS_AS(ClassFunction<long long>::trivial(g1) +
                            ClassFunction<long long>::trivial(g2),
                        std::invalid_argument);
    }
}

TEST_CASE("Frobenius reciprocity on random integer class functions") {
    std::mt19937 rng(2718);
    for (auto [t, r] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'A', 3}, {'B', 3}}) {
        auto g = make(t, r);
        for (std::vector<int> J : {std::vector<int>{0}, {1}, {0, 1}}) {
            auto emb = embed_parabolic(g, J);
            for (int trial = 0; trial < 4; ++trial) {
                auto f = random_fn(emb.subgroup, rng);
                auto h = random_fn(g, rng);
                CHECK(inner_product(induce(f, emb), h) ==
                      inner_product(f, restrict_to(h, emb)));
            }
        }
    }
}

TEST_CASE("induction from the wrong subgroup is rejected") {
    auto g = make('A', 2);
    auto emb = embed_parabolic(g, {0});
    auto other = embed_parabolic(g, {1});
    auto f = ClassFunction<long long>::trivial(other.subgroup);
    CHECK_THROWS_AS(induce(f, emb), std::invalid_argument);
}
