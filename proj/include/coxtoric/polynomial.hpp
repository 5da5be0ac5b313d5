#pragma once

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxtoric/rational.hpp"

namespace coxtoric {

// Dense univariate polynomial in q over an exact scalar ring (long long
// or Rational). Coefficient list carries no trailing zeros, so degree and
// equality are canonical.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(T constant) {
        if (!(constant == T(0))) c_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial q() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    // q^a + q^(a+1) + ... + q^b, zero when a > b.
    static Polynomial geometric(int a, int b) {
        if (a > b) return Polynomial();
        std::vector<T> c(static_cast<size_t>(b) + 1, T(0));
        for (int i = a; i <= b; ++i) c[static_cast<size_t>(i)] = T(1);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<T>& coeffs() const { return c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }
    Polynomial operator-() const {
        std::vector<T> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = T(0) - c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(int e) const {
        Polynomial r(T(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    T evaluate(const T& x) const {
        T acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Quotient/remainder against a monic divisor; exact over the integers.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        if (!(d.c_.back() == T(1)))
            throw std::domain_error("divmod requires a monic divisor");
        std::vector<T> rem = c_;
        std::vector<T> quo;
        int dd = d.degree();
        while (static_cast<int>(rem.size()) - 1 >= dd) {
            T lead = rem.back();
            int shift = static_cast<int>(rem.size()) - 1 - dd;
            if (static_cast<int>(quo.size()) < shift + 1) quo.resize(shift + 1, T(0));
            quo[static_cast<size_t>(shift)] = lead;
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<size_t>(shift + i)] =
                    rem[static_cast<size_t>(shift + i)] - lead * d.c_[static_cast<size_t>(i)];
            while (!rem.empty() && rem.back() == T(0)) rem.pop_back();
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == T(0)) continue;
            std::string term = term_string(c_[i], static_cast<int>(i));
            if (s.empty()) {
                s = term;
            } else if (!term.empty() && term[0] == '-') {
                s += " - " + term.substr(1);
            } else {
                s += " + " + term;
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

private:
    static std::string scalar_string(long long v) { return std::to_string(v); }
    static std::string scalar_string(const Rational& v) { return v.to_string(); }

    static std::string term_string(const T& coef, int deg) {
        std::string cs = scalar_string(coef);
        if (deg == 0) return cs;
        std::string var = deg == 1 ? "q" : "q^" + std::to_string(deg);
        if (cs == "1") return var;
        if (cs == "-1") return "-" + var;
        return cs + "*" + var;
    }

    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using PolyZ = Polynomial<long long>;
using PolyQ = Polynomial<Rational>;

template <class T>
Polynomial<T> exact_div(const Polynomial<T>& p, long long d) {
    std::vector<T> c;
    c.reserve(p.coeffs().size());
    for (const T& x : p.coeffs()) c.push_back(exact_div(x, d));
    return Polynomial<T>(std::move(c));
}

// Uniform scalar-by-integer scaling across the supported coefficient rings.
inline long long scale(long long v, long long k) { return checked_mul(v, k); }
inline Rational scale(const Rational& v, long long k) { return v * Rational(k); }
template <class T>
Polynomial<T> scale(const Polynomial<T>& v, long long k) {
    std::vector<T> c;
    c.reserve(v.coeffs().size());
    for (const T& x : v.coeffs()) c.push_back(scale(x, k));
    return Polynomial<T>(std::move(c));
}

inline std::string scalar_to_string(long long v) { return std::to_string(v); }
inline std::string scalar_to_string(const Rational& v) { return v.to_string(); }
template <class T>
std::string scalar_to_string(const Polynomial<T>& v) { return v.to_string(); }

} // namespace coxtoric
