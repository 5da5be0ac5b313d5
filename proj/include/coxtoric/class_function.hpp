#pragma once

#include <stdexcept>
#include <vector>

#include "coxtoric/polynomial.hpp"
#include "coxtoric/rational.hpp"
#include "coxtoric/weyl_group.hpp"

namespace coxtoric {

// A function constant on conjugacy classes, with exact scalar values
// (long long, Rational, or Polynomial). Stored as one value per class of
// the group it lives on; virtual (negative) values are welcome.
template <class T>
class ClassFunction {
public:
    explicit ClassFunction(const WeylGroup& g)
        : g_(&g), v_(static_cast<size_t>(g.num_classes()), T(0)) {}
    ClassFunction(const WeylGroup& g, std::vector<T> values) : g_(&g), v_(std::move(values)) {
        if (static_cast<int>(v_.size()) != g.num_classes())
            throw std::invalid_argument("one value per conjugacy class required");
    }

    static ClassFunction trivial(const WeylGroup& g) {
        ClassFunction f(g);
        for (auto& x : f.v_) x = T(1);
        return f;
    }
    static ClassFunction sign_character(const WeylGroup& g) {
        ClassFunction f(g);
        for (int c = 0; c < g.num_classes(); ++c)
            f.v_[static_cast<size_t>(c)] = T(g.sign(g.class_rep(c)));
        return f;
    }

    const WeylGroup& group() const { return *g_; }
    int num_classes() const { return static_cast<int>(v_.size()); }

    const T& value(int c) const { return v_[static_cast<size_t>(c)]; }
    T& value(int c) { return v_[static_cast<size_t>(c)]; }
    const T& at_element(int e) const { return v_[static_cast<size_t>(g_->class_of(e))]; }
    const std::vector<T>& values() const { return v_; }

    ClassFunction& operator+=(const ClassFunction& o) {
        check_group(o);
        for (size_t i = 0; i < v_.size(); ++i) v_[i] = v_[i] + o.v_[i];
        return *this;
    }
    ClassFunction& operator-=(const ClassFunction& o) {
        check_group(o);
        for (size_t i = 0; i < v_.size(); ++i) v_[i] = v_[i] - o.v_[i];
        return *this;
    }
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }

    ClassFunction pointwise_times(const ClassFunction& o) const {
        check_group(o);
        ClassFunction r(*g_);
        for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = v_[i] * o.v_[i];
        return r;
    }

    ClassFunction scaled(long long k) const {
        ClassFunction r(*g_);
        for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = scale(v_[i], k);
        return r;
    }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.g_ == b.g_ && a.v_ == b.v_;
    }
    friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

private:
    void check_group(const ClassFunction& o) const {
        if (g_ != o.g_) throw std::invalid_argument("class functions live on different groups");
    }

    const WeylGroup* g_;
    std::vector<T> v_;
};

// Frobenius induction from an embedded parabolic subgroup. The defining sum
// (1/|W_J|) sum over x in W with x^-1 w x in W_J of f(x^-1 w x) is evaluated
// with the |C_W(w)| equal terms per conjugate collected:
//   (Ind f)(w) = |C_W(w)| / |W_J| * sum over class_W(w) ∩ W_J of f.
// The division is checked to be exact.
template <class T>
ClassFunction<T> induce(const ClassFunction<T>& f, const ParabolicEmbedding& emb) {
    if (&f.group() != &emb.subgroup)
        throw std::invalid_argument("class function does not live on the embedded subgroup");
    const WeylGroup& W = *emb.parent;
    long long sub_order = emb.subgroup.order();
    ClassFunction<T> r(W);
    for (int c = 0; c < W.num_classes(); ++c) {
        T sum(0);
        for (int e : W.classes()[static_cast<size_t>(c)]) {
            int sc = emb.sub_class_at[static_cast<size_t>(e)];
            if (sc >= 0) sum = sum + f.value(sc);
        }
        long long centralizer = exact_div(W.order(), W.class_size(c));
        r.value(c) = exact_div(scale(sum, centralizer), sub_order);
    }
    return r;
}

template <class T>
ClassFunction<T> restrict_to(const ClassFunction<T>& f, const ParabolicEmbedding& emb) {
    if (&f.group() != emb.parent)
        throw std::invalid_argument("class function does not live on the parent group");
    const WeylGroup& W = *emb.parent;
    ClassFunction<T> r(emb.subgroup);
    for (int c = 0; c < emb.subgroup.num_classes(); ++c) {
        int pe = emb.to_parent[static_cast<size_t>(emb.subgroup.class_rep(c))];
        r.value(c) = f.value(W.class_of(pe));
    }
    return r;
}

// Character pairing (1/|W|) sum_w f(w) g(w); Weyl group characters are
// real-valued, so no conjugation is involved.
template <class T>
Rational inner_product(const ClassFunction<T>& f, const ClassFunction<T>& g) {
    if (&f.group() != &g.group())
        throw std::invalid_argument("inner product across different groups");
    const WeylGroup& W = f.group();
    Rational sum;
    for (int c = 0; c < W.num_classes(); ++c)
        sum += to_rational(f.value(c)) * to_rational(g.value(c)) * Rational(W.class_size(c));
    return sum / Rational(W.order());
}

} // namespace coxtoric
