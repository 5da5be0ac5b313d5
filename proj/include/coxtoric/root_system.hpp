#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "coxtoric/errors.hpp"
#include "coxtoric/matrix.hpp"
#include "coxtoric/rational.hpp"

namespace coxtoric {

struct Root {
    std::vector<Rational> coords;          // ambient realization
    std::vector<long long> simple_coords;  // integer coordinates in the simple basis
    bool positive = false;
};

// A crystallographic root system with a chosen simple system, realized with
// rational ambient coordinates. Positive roots come first, sorted by height
// then coordinates, and roots[i + num_positive] = -roots[i]. Immutable after
// construction.
struct RootSystem {
    std::string label;
    char type_label = 'A';
    int rank = 0;
    std::vector<Root> roots;
    std::vector<int> simple_indices;  // positions of the simple roots, size rank
    IntMat cartan;                    // cartan[i][j] = 2(a_i,a_j)/(a_j,a_j)
    int num_positive = 0;

    int num_roots() const { return static_cast<int>(roots.size()); }
    bool is_positive(int i) const { return roots[static_cast<size_t>(i)].positive; }
    int negative_of(int i) const {
        return i < num_positive ? i + num_positive : i - num_positive;
    }
};

namespace detail {

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::vector<std::vector<Rational>> simple_root_realization(char type, int rank) {
    auto basis = [](int dim, int i) {
        std::vector<Rational> v(static_cast<size_t>(dim), Rational(0));
        v[static_cast<size_t>(i)] = Rational(1);
        return v;
    };
    auto diff = [&](int dim, int i, int j) {
        auto v = basis(dim, i);
        v[static_cast<size_t>(j)] = Rational(-1);
        return v;
    };
    std::vector<std::vector<Rational>> s;
    switch (type) {
    case 'A': {
        int dim = rank + 1;
        for (int i = 0; i < rank; ++i) s.push_back(diff(dim, i, i + 1));
        break;
    }
    case 'B': {
        for (int i = 0; i + 1 < rank; ++i) s.push_back(diff(rank, i, i + 1));
        s.push_back(basis(rank, rank - 1));
        break;
    }
    case 'C': {
        for (int i = 0; i + 1 < rank; ++i) s.push_back(diff(rank, i, i + 1));
        auto v = basis(rank, rank - 1);
        v[static_cast<size_t>(rank - 1)] = Rational(2);
        s.push_back(v);
        break;
    }
    case 'D': {
        for (int i = 0; i + 1 < rank; ++i) s.push_back(diff(rank, i, i + 1));
        auto v = basis(rank, rank - 1);
        v[static_cast<size_t>(rank - 2)] = Rational(1);
        s.push_back(v);
        break;
    }
    case 'G': {
        s.push_back(diff(3, 0, 1));
        s.push_back({Rational(-2), Rational(1), Rational(1)});
        break;
    }
    case 'F': {
        s.push_back(diff(4, 1, 2));
        s.push_back(diff(4, 2, 3));
        s.push_back(basis(4, 3));
        s.push_back({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
        break;
    }
    case 'E': {
        std::vector<Rational> a1(8, Rational(-1, 2));
        a1[0] = Rational(1, 2);
        a1[7] = Rational(1, 2);
        s.push_back(a1);
        auto a2 = basis(8, 0);
        a2[1] = Rational(1);
        s.push_back(a2);
        s.push_back(diff(8, 1, 0));
        s.push_back(diff(8, 2, 1));
        s.push_back(diff(8, 3, 2));
        s.push_back(diff(8, 4, 3));
        break;
    }
    default:
        break;
    }
    return s;
}

// Assembles a RootSystem from simple roots given in ambient coordinates:
// computes the Cartan matrix, closes the simple system under its own
// reflections, and sorts roots canonically (positives by height then
// coordinates, negatives mirrored).
inline RootSystem assemble_root_system(std::string label, char type, int rank,
                                       const std::vector<std::vector<Rational>>& simples) {
    RootSystem rs;
    rs.label = std::move(label);
    rs.type_label = type;
    rs.rank = rank;
    rs.cartan = IntMat(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rational a = Rational(2) * dot(simples[static_cast<size_t>(i)], simples[static_cast<size_t>(j)]) /
                         dot(simples[static_cast<size_t>(j)], simples[static_cast<size_t>(j)]);
            rs.cartan.at(i, j) = a.to_integer();
        }

    // Reflection closure in simple-basis coordinates.
    std::map<std::vector<long long>, int> seen;
    std::vector<std::vector<long long>> all;
    for (int j = 0; j < rank; ++j) {
        std::vector<long long> e(static_cast<size_t>(rank), 0);
        e[static_cast<size_t>(j)] = 1;
        seen.emplace(e, static_cast<int>(all.size()));
        all.push_back(std::move(e));
    }
    for (size_t head = 0; head < all.size(); ++head) {
        std::vector<long long> c = all[head];
        for (int j = 0; j < rank; ++j) {
            long long pairing = 0;
            for (int k = 0; k < rank; ++k)
                pairing += c[static_cast<size_t>(k)] * rs.cartan.at(k, j);
            std::vector<long long> img = c;
            img[static_cast<size_t>(j)] -= pairing;
            if (seen.emplace(img, static_cast<int>(all.size())).second) {
                all.push_back(std::move(img));
                if (all.size() > 4096)
                    throw resource_error("reflection closure did not stabilize");
            }
        }
    }

    std::vector<std::vector<long long>> positives;
    for (const auto& c : all) {
        bool nonneg = std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; });
        bool nonpos = std::all_of(c.begin(), c.end(), [](long long x) { return x <= 0; });
        if (!nonneg && !nonpos)
            throw std::logic_error("root with mixed-sign simple coordinates");
        if (nonneg) positives.push_back(c);
    }
    std::sort(positives.begin(), positives.end(),
              [](const std::vector<long long>& a, const std::vector<long long>& b) {
                  long long ha = std::accumulate(a.begin(), a.end(), 0LL);
                  long long hb = std::accumulate(b.begin(), b.end(), 0LL);
                  if (ha != hb) return ha < hb;
                  return a > b;  // lexicographically larger first: e_1 before e_2
              });

    rs.num_positive = static_cast<int>(positives.size());
    auto ambient = [&](const std::vector<long long>& c) {
        std::vector<Rational> v(simples.empty() ? 0 : simples[0].size(), Rational(0));
        for (int k = 0; k < rank; ++k)
            for (size_t d = 0; d < v.size(); ++d)
                v[d] += Rational(c[static_cast<size_t>(k)]) * simples[static_cast<size_t>(k)][d];
        return v;
    };
    for (const auto& c : positives)
        rs.roots.push_back(Root{ambient(c), c, true});
    for (const auto& c : positives) {
        std::vector<long long> neg(c.size());
        for (size_t k = 0; k < c.size(); ++k) neg[k] = -c[k];
        rs.roots.push_back(Root{ambient(neg), neg, false});
    }

    rs.simple_indices.resize(static_cast<size_t>(rank));
    for (int j = 0; j < rank; ++j) {
        std::vector<long long> e(static_cast<size_t>(rank), 0);
        e[static_cast<size_t>(j)] = 1;
        auto it = std::find_if(rs.roots.begin(), rs.roots.end(),
                               [&](const Root& r) { return r.simple_coords == e; });
        if (it == rs.roots.end()) throw std::logic_error("simple root lost in closure");
        rs.simple_indices[static_cast<size_t>(j)] = static_cast<int>(it - rs.roots.begin());
    }
    return rs;
}

} // namespace detail

// Supported catalog: A_r (r>=1), B_r (r>=2), C_r (r>=2), D_r (r>=4),
// G_2, F_4, and E_6 behind the opt-in flag.
inline RootSystem build_root_system(char type, int rank, bool enable_e6 = false) {
    static const char* kSupported =
        "supported: A r>=1, B r>=2, C r>=2, D r>=4, G2, F4, E6 (opt-in)";
    bool ok = false;
    switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'G': ok = rank == 2; break;
    case 'F': ok = rank == 4; break;
    case 'E':
        if (rank == 6 && !enable_e6)
            throw catalog_error("E6 is opt-in; pass the enable flag (" +
                                std::string(kSupported) + ")");
        ok = rank == 6 && enable_e6;
        break;
    default: ok = false; break;
    }
    if (!ok)
        throw catalog_error("unsupported root system " + std::string(1, type) +
                            std::to_string(rank) + "; " + kSupported);
    auto simples = detail::simple_root_realization(type, rank);
    return detail::assemble_root_system(std::string(1, type) + std::to_string(rank),
                                        type, rank, simples);
}

// The root subsystem spanned by the simple roots indexed by J (0-based).
// Built intrinsically: its Cartan matrix is the JxJ submatrix and its weight
// lattice is derived from that submatrix, not from the ambient lattice.
// J = {} yields the rank-0 system with the trivial group.
inline RootSystem parabolic_subsystem(const RootSystem& rs, std::vector<int> J) {
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    for (int j : J)
        if (j < 0 || j >= rs.rank) throw std::out_of_range("simple index out of range");

    int r = static_cast<int>(J.size());
    RootSystem sub;
    sub.type_label = rs.type_label;
    sub.rank = r;
    sub.cartan = IntMat(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            sub.cartan.at(i, j) = rs.cartan.at(J[static_cast<size_t>(i)], J[static_cast<size_t>(j)]);
    sub.label = rs.label + "|J={";
    for (int i = 0; i < r; ++i)
        sub.label += (i ? "," : "") + std::to_string(J[static_cast<size_t>(i)] + 1);
    sub.label += "}";

    // Roots supported on J, with coordinates restricted to the J positions.
    std::vector<std::vector<long long>> positives;
    std::vector<std::vector<Rational>> ambient_of;
    for (const Root& root : rs.roots) {
        if (!root.positive) continue;
        bool supported = true;
        for (int k = 0; k < rs.rank; ++k)
            if (root.simple_coords[static_cast<size_t>(k)] != 0 &&
                std::find(J.begin(), J.end(), k) == J.end()) {
                supported = false;
                break;
            }
        if (!supported) continue;
        std::vector<long long> c(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) c[static_cast<size_t>(i)] = root.simple_coords[static_cast<size_t>(J[static_cast<size_t>(i)])];
        positives.push_back(std::move(c));
        ambient_of.push_back(root.coords);
    }
    std::vector<size_t> order(positives.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        long long ha = std::accumulate(positives[a].begin(), positives[a].end(), 0LL);
        long long hb = std::accumulate(positives[b].begin(), positives[b].end(), 0LL);
        if (ha != hb) return ha < hb;
        return positives[a] > positives[b];
    });
    sub.num_positive = static_cast<int>(positives.size());
    for (size_t idx : order)
        sub.roots.push_back(Root{ambient_of[idx], positives[idx], true});
    for (size_t idx : order) {
        std::vector<long long> neg(positives[idx].size());
        for (size_t k = 0; k < neg.size(); ++k) neg[k] = -positives[idx][k];
        std::vector<Rational> amb(ambient_of[idx].size());
        for (size_t k = 0; k < amb.size(); ++k) amb[k] = -ambient_of[idx][k];
        sub.roots.push_back(Root{std::move(amb), std::move(neg), false});
    }
    sub.simple_indices.resize(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) {
        std::vector<long long> e(static_cast<size_t>(r), 0);
        e[static_cast<size_t>(j)] = 1;
        auto it = std::find_if(sub.roots.begin(), sub.roots.end(),
                               [&](const Root& root) { return root.simple_coords == e; });
        if (it == sub.roots.end()) throw std::logic_error("parabolic simple root missing");
        sub.simple_indices[static_cast<size_t>(j)] = static_cast<int>(it - sub.roots.begin());
    }
    return sub;
}

// Integer matrices by which the simple reflections act on the weight lattice
// N = {w : (w, a) in Z for all roots a}, in the basis dual to the simple
// roots. s_j sends w_j to w_j - sum_i cartan[i][j] w_i and fixes the others.
struct LatticeAction {
    std::vector<IntMat> matrices;
    std::vector<IntMat> mod2_matrices;
};

inline LatticeAction lattice_action(const RootSystem& rs) {
    LatticeAction act;
    int r = rs.rank;
    for (int j = 0; j < r; ++j) {
        IntMat m = IntMat::identity(r);
        for (int i = 0; i < r; ++i)
            m.at(i, j) = (i == j ? 1 : 0) - rs.cartan.at(i, j);
        act.matrices.push_back(m);
        IntMat m2(r, r);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                m2.at(i, k) = ((m.at(i, k) % 2) + 2) % 2;
        act.mod2_matrices.push_back(std::move(m2));
    }
    return act;
}

// Matrix of a group element on N, as the product of generator matrices along
// a word in simple reflections (0-based indices, leftmost factor first).
inline IntMat weight_action_matrix(const LatticeAction& act, std::span<const int> word, int rank) {
    IntMat m = IntMat::identity(rank);
    for (int g : word) m = m * act.matrices[static_cast<size_t>(g)];
    return m;
}

} // namespace coxtoric
