#pragma once

#include <utility>
#include <vector>

#include "coxtoric/class_function.hpp"
#include "coxtoric/polynomial.hpp"
#include "coxtoric/weyl_group.hpp"

namespace coxtoric {

// Permutation character of W on N/2N: w fixes 2^(r - rank_F2(M_w - I))
// points, with M_w the weight-lattice action matrix.
inline ClassFunction<long long> pi_two(const WeylGroup& g) {
    const RootSystem& rs = g.root_system();
    LatticeAction act = lattice_action(rs);
    ClassFunction<long long> f(g);
    for (int c = 0; c < g.num_classes(); ++c) {
        IntMat m = weight_action_matrix(act, g, g.class_rep(c));
        int nullity = rs.rank - (m - IntMat::identity(rs.rank)).rank_mod2();
        f.value(c) = pow_ll(2, nullity);
    }
    return f;
}

// Compact-supports Euler characteristic of the w-fixed locus of the real
// torus: (-1)^r eps(w) pi2(w).
inline ClassFunction<long long> phi(const WeylGroup& g) {
    int r = g.root_system().rank;
    ClassFunction<long long> f = pi_two(g).pointwise_times(ClassFunction<long long>::sign_character(g));
    return r % 2 ? f.scaled(-1) : f;
}

namespace detail {

// Subsets of {0..r-1} in increasing-cardinality order, ties by value.
inline std::vector<std::vector<int>> subsets_by_size(int r) {
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= r; ++k) {
        std::vector<int> idx(static_cast<size_t>(k));
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == k) {
                out.push_back(idx);
                return;
            }
            for (int i = start; i < r; ++i) {
                idx[static_cast<size_t>(depth)] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return out;
}

} // namespace detail

// Equivariant Euler characteristic of the real toric variety as a virtual
// character: eps_W * sum over J of (-1)^|J| Ind(pi2 of W_J), with pi2 built
// intrinsically on each parabolic subsystem.
inline ClassFunction<long long> lambda_main(const WeylGroup& g, long long cap = 1'000'000) {
    ClassFunction<long long> acc(g);
    for (const auto& J : detail::subsets_by_size(g.root_system().rank)) {
        ParabolicEmbedding emb = embed_parabolic(g, J, cap);
        ClassFunction<long long> ind = induce(pi_two(emb.subgroup), emb);
        if (J.size() % 2)
            acc -= ind;
        else
            acc += ind;
    }
    return acc.pointwise_times(ClassFunction<long long>::sign_character(g));
}

// Same virtual character computed as sum over J of Ind(phi of W_J); an
// independent route kept as a cross-check against lambda_main.
inline ClassFunction<long long> lambda_orbit(const WeylGroup& g, long long cap = 1'000'000) {
    ClassFunction<long long> acc(g);
    for (const auto& J : detail::subsets_by_size(g.root_system().rank)) {
        ParabolicEmbedding emb = embed_parabolic(g, J, cap);
        acc += induce(phi(emb.subgroup), emb);
    }
    return acc;
}

// Alternating descent sum over the whole group.
inline long long euler_char_descents(const WeylGroup& g) {
    long long chi = 0;
    auto hist = g.descent_histogram();
    for (size_t d = 0; d < hist.size(); ++d)
        chi += (d % 2 ? -hist[d] : hist[d]);
    return chi;
}

// Orbit-count route: sum over J of [W : W_J] (-2)^|J|.
inline long long euler_char_orbit(const WeylGroup& g, long long cap = 1'000'000) {
    long long chi = 0;
    for (const auto& J : detail::subsets_by_size(g.root_system().rank)) {
        long long idx = parabolic_index(g, J, cap);
        long long term = checked_mul(idx, pow_ll(-2, static_cast<int>(J.size())));
        chi = checked_add(chi, term);
    }
    return chi;
}

// The two expressions for the Poincare polynomial of the cell/orbit
// decompositions: sum over J of [W:W_J](q-1)^|J|, and sum over w of q^d(w).
// Returned as (orbit side, cell side); the pair is equal.
inline std::pair<PolyZ, PolyZ> poincare_check(const WeylGroup& g, long long cap = 1'000'000) {
    PolyZ orbit;
    PolyZ qm1(std::vector<long long>{-1, 1});
    for (const auto& J : detail::subsets_by_size(g.root_system().rank)) {
        long long idx = parabolic_index(g, J, cap);
        orbit += scale(qm1.pow(static_cast<int>(J.size())), idx);
    }
    PolyZ cells(g.descent_histogram());
    return {orbit, cells};
}

struct EulerReport {
    long long chi_descents = 0;
    long long chi_orbits = 0;
    ClassFunction<long long> lambda;
    PolyZ poincare_cells;
    PolyZ poincare_orbits;
};

// Computes every route and checks the internal identities tying them
// together; a mismatch would be a library defect, reported as logic_error.
inline EulerReport euler_report(const WeylGroup& g, long long cap = 1'000'000) {
    EulerReport rep{euler_char_descents(g), euler_char_orbit(g, cap), lambda_main(g, cap), {}, {}};
    auto [orbit, cells] = poincare_check(g, cap);
    rep.poincare_orbits = orbit;
    rep.poincare_cells = cells;
    ClassFunction<long long> via_orbit = lambda_orbit(g, cap);
    if (!(rep.lambda == via_orbit))
        throw std::logic_error("equivariant Euler characteristic routes disagree");
    if (rep.chi_descents != rep.chi_orbits ||
        rep.chi_descents != rep.lambda.value(g.class_of(g.identity())) ||
        !(rep.poincare_cells == rep.poincare_orbits) ||
        rep.poincare_cells.evaluate(-1) != rep.chi_descents)
        throw std::logic_error("Euler characteristic routes disagree");
    return rep;
}

} // namespace coxtoric
