#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxtoric/errors.hpp"
#include "coxtoric/matrix.hpp"
#include "coxtoric/root_system.hpp"

namespace coxtoric {

// A group element materialized on demand: the permutation it induces on the
// root list, its integer matrix on V in the simple-root basis, and the
// generator word it was constructed from.
struct WeylElement {
    std::vector<uint8_t> root_perm;
    IntMat matrix_V;
    std::vector<int> word;  // 0-based simple reflection indices, leftmost first
};

// The enumerated Weyl group of a root system: elements as root permutations,
// discovered breadth-first by word length and lexicographic generator order,
// with conjugacy classes computed by orbit closure under generator
// conjugation. Immutable after construction.
class WeylGroup {
public:
    static WeylGroup enumerate(const RootSystem& rs, long long cap = 1'000'000) {
        WeylGroup g;
        g.rs_ = std::make_shared<RootSystem>(rs);
        g.build(cap);
        g.compute_classes();
        return g;
    }

    const RootSystem& root_system() const { return *rs_; }

    long long order() const { return static_cast<long long>(len_.size()); }
    int num_elements() const { return static_cast<int>(len_.size()); }
    int identity() const { return 0; }

    std::span<const uint8_t> perm(int e) const {
        return {perms_.data() + static_cast<size_t>(e) * nroots_, static_cast<size_t>(nroots_)};
    }

    int length(int e) const { return len_[static_cast<size_t>(e)]; }

    std::vector<int> word(int e) const {
        std::vector<int> w;
        for (int cur = e; cur != 0; cur = parent_[static_cast<size_t>(cur)])
            w.push_back(gen_[static_cast<size_t>(cur)]);
        std::reverse(w.begin(), w.end());
        return w;
    }

    int mult(int a, int b) const {
        auto pa = perm(a);
        auto pb = perm(b);
        std::string key(static_cast<size_t>(nroots_), '\0');
        for (int i = 0; i < nroots_; ++i)
            key[static_cast<size_t>(i)] = static_cast<char>(pa[pb[static_cast<size_t>(i)]]);
        return index_.at(key);
    }

    int inverse(int a) const {
        auto pa = perm(a);
        std::string key(static_cast<size_t>(nroots_), '\0');
        for (int i = 0; i < nroots_; ++i)
            key[static_cast<size_t>(pa[static_cast<size_t>(i)])] = static_cast<char>(i);
        return index_.at(key);
    }

    // Index of a root permutation, or -1 when it is not a group element.
    int find(std::span<const uint8_t> p) const {
        std::string key(reinterpret_cast<const char*>(p.data()), p.size());
        auto it = index_.find(key);
        return it == index_.end() ? -1 : it->second;
    }

    const IntMat& generator_matrix(int j) const { return gen_mats_[static_cast<size_t>(j)]; }

    // Element index of the simple reflection s_j.
    int generator_element(int j) const {
        const std::vector<uint8_t>& gp = gen_perms_[static_cast<size_t>(j)];
        return find(std::span<const uint8_t>(gp.data(), gp.size()));
    }

    IntMat matrix_v(int e) const {
        IntMat m = IntMat::identity(rs_->rank);
        for (int g : word(e)) m = m * gen_mats_[static_cast<size_t>(g)];
        return m;
    }

    WeylElement element(int e) const {
        auto p = perm(e);
        return WeylElement{std::vector<uint8_t>(p.begin(), p.end()), matrix_v(e), word(e)};
    }

    // Number of simple roots sent to negative roots.
    int descent_number(int e) const {
        auto p = perm(e);
        int d = 0;
        for (int idx : rs_->simple_indices)
            if (!rs_->is_positive(p[static_cast<size_t>(idx)])) ++d;
        return d;
    }

    // Determinant on V; equals (-1)^length.
    int sign(int e) const { return len_[static_cast<size_t>(e)] % 2 ? -1 : 1; }

    int fixed_space_dimension(int e) const {
        return rs_->rank - (matrix_v(e) - IntMat::identity(rs_->rank)).rank();
    }

    int num_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_of(int e) const { return class_of_[static_cast<size_t>(e)]; }
    int class_rep(int c) const { return classes_[static_cast<size_t>(c)].front(); }
    long long class_size(int c) const { return static_cast<long long>(classes_[static_cast<size_t>(c)].size()); }

    std::vector<long long> descent_histogram() const {
        std::vector<long long> h(static_cast<size_t>(rs_->rank) + 1, 0);
        for (int e = 0; e < num_elements(); ++e) ++h[static_cast<size_t>(descent_number(e))];
        return h;
    }

private:
    WeylGroup() = default;

    void build(long long cap) {
        const RootSystem& rs = *rs_;
        nroots_ = rs.num_roots();
        int r = rs.rank;

        gen_perms_.resize(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j) {
            std::vector<uint8_t>& gp = gen_perms_[static_cast<size_t>(j)];
            gp.resize(static_cast<size_t>(nroots_));
            for (int i = 0; i < nroots_; ++i) {
                std::vector<long long> c = rs.roots[static_cast<size_t>(i)].simple_coords;
                long long pairing = 0;
                for (int k = 0; k < r; ++k) pairing += c[static_cast<size_t>(k)] * rs.cartan.at(k, j);
                c[static_cast<size_t>(j)] -= pairing;
                int img = -1;
                for (int t = 0; t < nroots_; ++t)
                    if (rs.roots[static_cast<size_t>(t)].simple_coords == c) { img = t; break; }
                if (img < 0) throw std::logic_error("reflection left the root list");
                gp[static_cast<size_t>(i)] = static_cast<uint8_t>(img);
            }
        }
        gen_mats_.clear();
        for (int j = 0; j < r; ++j) {
            IntMat m = IntMat::identity(r);
            for (int k = 0; k < r; ++k)
                m.at(j, k) = (j == k ? 1 : 0) - rs.cartan.at(k, j);
            gen_mats_.push_back(std::move(m));
        }

        // BFS from the identity, appending generators on the right.
        std::string id_key(static_cast<size_t>(nroots_), '\0');
        for (int i = 0; i < nroots_; ++i) id_key[static_cast<size_t>(i)] = static_cast<char>(i);
        perms_.assign(id_key.begin(), id_key.end());
        parent_.push_back(0);
        gen_.push_back(-1);
        len_.push_back(0);
        index_.emplace(id_key, 0);

        for (size_t head = 0; head < len_.size(); ++head) {
            for (int j = 0; j < r; ++j) {
                const std::vector<uint8_t>& gp = gen_perms_[static_cast<size_t>(j)];
                std::string key(static_cast<size_t>(nroots_), '\0');
                const uint8_t* base = perms_.data() + head * static_cast<size_t>(nroots_);
                for (int i = 0; i < nroots_; ++i)
                    key[static_cast<size_t>(i)] = static_cast<char>(base[gp[static_cast<size_t>(i)]]);
                auto [it, fresh] = index_.emplace(key, static_cast<int>(len_.size()));
                if (!fresh) continue;
                if (static_cast<long long>(len_.size()) >= cap)
                    throw resource_error("group enumeration exceeded the cap of " +
                                         std::to_string(cap) + " elements");
                perms_.insert(perms_.end(), key.begin(), key.end());
                parent_.push_back(static_cast<int>(head));
                gen_.push_back(static_cast<int8_t>(j));
                len_.push_back(static_cast<int16_t>(len_[head] + 1));
            }
        }
    }

    void compute_classes() {
        int n = num_elements();
        class_of_.assign(static_cast<size_t>(n), -1);
        int r = rs_->rank;
        for (int seed = 0; seed < n; ++seed) {
            if (class_of_[static_cast<size_t>(seed)] >= 0) continue;
            int cid = static_cast<int>(classes_.size());
            std::vector<int> orbit{seed};
            class_of_[static_cast<size_t>(seed)] = cid;
            for (size_t head = 0; head < orbit.size(); ++head) {
                auto pw = perm(orbit[head]);
                for (int j = 0; j < r; ++j) {
                    const std::vector<uint8_t>& gp = gen_perms_[static_cast<size_t>(j)];
                    std::string key(static_cast<size_t>(nroots_), '\0');
                    for (int i = 0; i < nroots_; ++i)
                        key[static_cast<size_t>(i)] =
                            static_cast<char>(gp[pw[gp[static_cast<size_t>(i)]]]);
                    int e = index_.at(key);
                    if (class_of_[static_cast<size_t>(e)] < 0) {
                        class_of_[static_cast<size_t>(e)] = cid;
                        orbit.push_back(e);
                    }
                }
            }
            std::sort(orbit.begin(), orbit.end());
            classes_.push_back(std::move(orbit));
        }
    }

    std::shared_ptr<const RootSystem> rs_;
    int nroots_ = 0;
    std::vector<uint8_t> perms_;  // flattened, num_elements x nroots
    std::vector<int> parent_;
    std::vector<int8_t> gen_;
    std::vector<int16_t> len_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<uint8_t>> gen_perms_;
    std::vector<IntMat> gen_mats_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

inline WeylGroup enumerate_group(const RootSystem& rs, long long cap = 1'000'000) {
    return WeylGroup::enumerate(rs, cap);
}

inline const std::vector<std::vector<int>>& conjugacy_classes(const WeylGroup& g) {
    return g.classes();
}

inline IntMat weight_action_matrix(const LatticeAction& act, const WeylGroup& g, int e) {
    auto w = g.word(e);
    return weight_action_matrix(act, std::span<const int>(w), g.root_system().rank);
}

// A standard parabolic subgroup W_J enumerated on its intrinsic root system,
// with the element-wise embedding into the parent group.
struct ParabolicEmbedding {
    const WeylGroup* parent = nullptr;
    std::vector<int> J;
    WeylGroup subgroup;
    std::vector<int> to_parent;     // subgroup element -> parent element
    std::vector<int> sub_class_at;  // parent element -> subgroup class, or -1
};

inline ParabolicEmbedding embed_parabolic(const WeylGroup& parent, std::vector<int> J,
                                          long long cap = 1'000'000) {
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    RootSystem sub_rs = parabolic_subsystem(parent.root_system(), J);
    ParabolicEmbedding emb{&parent, J, WeylGroup::enumerate(sub_rs, cap), {}, {}};

    int nroots = parent.root_system().num_roots();
    std::vector<std::span<const uint8_t>> gen_perm(J.size());
    for (size_t k = 0; k < J.size(); ++k)
        gen_perm[k] = parent.perm(parent.generator_element(J[k]));

    emb.to_parent.resize(static_cast<size_t>(emb.subgroup.num_elements()));
    emb.sub_class_at.assign(static_cast<size_t>(parent.num_elements()), -1);
    std::vector<int> seen(static_cast<size_t>(parent.num_elements()), 0);
    for (int e = 0; e < emb.subgroup.num_elements(); ++e) {
        std::vector<uint8_t> acc(static_cast<size_t>(nroots));
        for (int i = 0; i < nroots; ++i) acc[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
        for (int g : emb.subgroup.word(e)) {
            auto sp = gen_perm[static_cast<size_t>(g)];
            std::vector<uint8_t> next(static_cast<size_t>(nroots));
            for (int i = 0; i < nroots; ++i)
                next[static_cast<size_t>(i)] = acc[sp[static_cast<size_t>(i)]];
            acc = std::move(next);
        }
        int cur = parent.find(acc);
        if (cur < 0 || seen[static_cast<size_t>(cur)]++)
            throw std::logic_error("parabolic embedding is not injective");
        emb.to_parent[static_cast<size_t>(e)] = cur;
        emb.sub_class_at[static_cast<size_t>(cur)] = emb.subgroup.class_of(e);
    }
    return emb;
}

inline long long parabolic_index(const WeylGroup& g, const std::vector<int>& J,
                                 long long cap = 1'000'000) {
    RootSystem sub = parabolic_subsystem(g.root_system(), J);
    WeylGroup sg = WeylGroup::enumerate(sub, cap);
    return exact_div(g.order(), sg.order());
}

} // namespace coxtoric
