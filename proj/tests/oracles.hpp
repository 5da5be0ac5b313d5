#pragma once

// Independent reference computations for the test and acceptance suites.
// Everything here recomputes expected values from first principles, without
// touching the library code paths under test.

#include <algorithm>
#include <numeric>
#include <vector>

#include "coxtoric/class_function.hpp"
#include "coxtoric/rational.hpp"
#include "coxtoric/weyl_group.hpp"

namespace oracles {

// n! times the x^n Taylor coefficient of tan(x), from the exact series
// quotient sin/cos. Independent of the boustrophedon triangle.
inline long long tangent_number(int n) {
    using coxtoric::Rational;
    int top = n + 1;
    std::vector<Rational> sin_c(static_cast<size_t>(top), Rational(0));
    std::vector<Rational> cos_c(static_cast<size_t>(top), Rational(0));
    Rational fact(1);
    for (int k = 0; k < top; ++k) {
        if (k > 0) fact *= Rational(k);
        Rational term = Rational(1) / fact;
        if (k % 2 == 1) sin_c[static_cast<size_t>(k)] = (k / 2) % 2 ? -term : term;
        if (k % 2 == 0) cos_c[static_cast<size_t>(k)] = (k / 2) % 2 ? -term : term;
    }
    // tan = sin / cos, coefficient recursion t_k = (s_k - sum t_i c_{k-i}) / c_0
    std::vector<Rational> tan_c(static_cast<size_t>(top), Rational(0));
    for (int k = 0; k < top; ++k) {
        Rational acc = sin_c[static_cast<size_t>(k)];
        for (int i = 0; i < k; ++i)
            acc -= tan_c[static_cast<size_t>(i)] * cos_c[static_cast<size_t>(k - i)];
        tan_c[static_cast<size_t>(k)] = acc;
    }
    Rational nf(1);
    for (int k = 2; k <= n; ++k) nf *= Rational(k);
    return (tan_c[static_cast<size_t>(n)] * nf).to_integer();
}

// Descent histogram of Sym_n counted directly on integer sequences.
inline std::vector<long long> eulerian_histogram(int n) {
    std::vector<long long> hist(static_cast<size_t>(n), 0);
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        int d = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(i + 1)]) ++d;
        ++hist[static_cast<size_t>(d)];
    } while (std::next_permutation(p.begin(), p.end()));
    return hist;
}

// The literal Frobenius sum (1/|H|) sum over all x in W with x^-1 w x in H,
// evaluated with the group's multiplication table operations.
inline coxtoric::ClassFunction<long long> naive_induce(
    const coxtoric::ClassFunction<long long>& f, const coxtoric::ParabolicEmbedding& emb) {
    const coxtoric::WeylGroup& W = *emb.parent;
    coxtoric::ClassFunction<long long> out(W);
    for (int c = 0; c < W.num_classes(); ++c) {
        int w = W.class_rep(c);
        long long sum = 0;
        for (int x = 0; x < W.num_elements(); ++x) {
            int conj = W.mult(W.mult(W.inverse(x), w), x);
            int sc = emb.sub_class_at[static_cast<size_t>(conj)];
            if (sc >= 0) sum += f.value(sc);
        }
        out.value(c) = coxtoric::exact_div(sum, emb.subgroup.order());
    }
    return out;
}

// Fixed points of a permutation acting on (Z/2)^n divided by the all-ones
// vector, counted by direct enumeration of the 2^n lifts.
inline long long mod2_quotient_fixed_points(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    unsigned full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    long long lifts = 0;
    for (unsigned v = 0; v <= full; ++v) {
        unsigned img = 0;
        for (int i = 0; i < n; ++i)
            if (v & (1u << i)) img |= 1u << sigma[static_cast<size_t>(i)];
        if (img == v || img == (v ^ full)) ++lifts;
    }
    return lifts / 2;
}

} // namespace oracles
