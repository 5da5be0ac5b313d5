#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxtoric/symn.hpp"

using namespace coxtoric;

namespace {
GradedSeries<long long> random_series(int D, std::mt19937& rng) {
    std::uniform_int_distribution<long long> d(-3, 3);
    auto s = GradedSeries<long long>::one(D);
    for (int deg = 1; deg <= D; ++deg)
        for (int i = 0; i < s.term(deg).size(); ++i) s.term(deg).at(i) = d(rng);
    return s;
}
}

TEST_CASE("series inversion") {
    auto one = GradedSeries<long long>::one(6);
    CHECK(one.inverse() == one);

    SECTION("round trip on random integer series") {
        std::mt19937 rng(424242);
        for (int trial = 0; trial < 5; ++trial) {
            auto f = random_series(6, rng);
            CHECK(f * f.inverse() == GradedSeries<long long>::one(6));
            CHECK(f.inverse() * f == GradedSeries<long long>::one(6));
        }
    }

    SECTION("the trivial series inverts to the alternating sign series") {
        CHECK(series_trivial(8).inverse() == series_sign_alternating(8));
    }

    SECTION("a unit degree-0 term is required") {
        auto s = GradedSeries<long long>(4);
        CHECK_THROWS_AS(s.inverse(), std::domain_error);
        auto two = GradedSeries<long long>::one(4);
        two.term(0).at(0) = 2;
        CHECK_THROWS_AS(two.inverse(), std::domain_error);
    }
}

TEST_CASE("sign involution") {
    auto lam = series_lambda(6);
    CHECK(lam.sign_twist().sign_twist() == lam);
    CHECK(series_trivial(6).sign_twist() == series_sign_alternating(6));

    SECTION("it is a ring homomorphism") {
        std::mt19937 rng(7);
        auto a = random_series(5, rng);
        auto b = random_series(5, rng);
        CHECK((a * b).sign_twist() == a.sign_twist() * b.sign_twist());
    }

    SECTION("it carries the twisted identity to the plain identity") {
        CHECK(series_lambda_sign_alternating(7).sign_twist() == series_lambda(7));
    }
}

TEST_CASE("graded-ring identities for the character series") {
    const int D = 6;
    // twisted character series vs inverse of the mod-2 series
    CHECK(series_lambda_sign_alternating(D) == series_pi_two(D).inverse());
    // the mod-2 series factors through the even trivial series
    CHECK(series_pi_two(D) == series_trivial(D) * series_even_trivial(D));
    // eliminating the inverse of the trivial series
    CHECK(series_lambda_sign_alternating(D) ==
          series_sign_alternating(D) * series_even_trivial(D).inverse());
    // untwisted form
    CHECK(series_lambda(D) == series_trivial(D) * series_even_sign(D).inverse());
}

TEST_CASE("even-cohomology character series") {
    auto s = stembridge_series(6);
    CHECK(s == stembridge_series_gamma(6));

    // degree 1 is the one-point variety: the constant character 1
    CHECK(s.term(1).at(0) == PolyZ(1));

    // degree 2 is the projective line: trivial character times 1 + q
    CHECK(s.term(2).value(Partition{std::vector<int>{1, 1}}) == PolyZ::geometric(0, 1));
    CHECK(s.term(2).value(Partition{std::vector<int>{2}}) == PolyZ::geometric(0, 1));

    SECTION("total dimension n! at q = 1") {
        for (int n = 1; n <= 6; ++n) {
            std::vector<int> ones(static_cast<size_t>(n), 1);
            CHECK(s.term(n).value(Partition{std::move(ones)}).evaluate(1) == factorial(n));
        }
    }
}
