#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "coxtoric/rational.hpp"

namespace coxtoric {

// Dense row-major integer matrix sized for rank <= 8 lattice work.
// Determinant and rank use fraction-free (Bareiss) elimination, exact
// over the integers.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    long long at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        IntMat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                long long aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    c.at(i, j) = checked_add(c.at(i, j), checked_mul(aik, b.at(k, j)));
            }
        return c;
    }

    friend IntMat operator-(const IntMat& a, const IntMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        IntMat c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntMat& a, const IntMat& b) { return !(a == b); }

    std::vector<long long> apply(const std::vector<long long>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("matrix/vector shape mismatch");
        std::vector<long long> r(static_cast<size_t>(rows_), 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r[static_cast<size_t>(i)] =
                    checked_add(r[static_cast<size_t>(i)], checked_mul(at(i, j), v[static_cast<size_t>(j)]));
        return r;
    }

    long long det() const {
        if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
        int n = rows_;
        if (n == 0) return 1;
        std::vector<__int128> m(a_.begin(), a_.end());
        auto at128 = [&](int i, int j) -> __int128& { return m[static_cast<size_t>(i) * n + j]; };
        int sign = 1;
        __int128 prev = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (at128(k, k) == 0) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (at128(i, k) != 0) { p = i; break; }
                if (p < 0) return 0;
                for (int j = 0; j < n; ++j) std::swap(at128(k, j), at128(p, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j)
                    at128(i, j) = (at128(i, j) * at128(k, k) - at128(i, k) * at128(k, j)) / prev;
                at128(i, k) = 0;
            }
            prev = at128(k, k);
        }
        return detail::narrow128(sign * at128(n - 1, n - 1));
    }

    // Rank over the rationals.
    int rank() const {
        std::vector<__int128> m(a_.begin(), a_.end());
        auto at128 = [&](int i, int j) -> __int128& { return m[static_cast<size_t>(i) * cols_ + j]; };
        int r = 0;
        __int128 prev = 1;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (at128(i, c) != 0) { p = i; break; }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap(at128(r, j), at128(p, j));
            for (int i = r + 1; i < rows_; ++i) {
                for (int j = c + 1; j < cols_; ++j)
                    at128(i, j) = (at128(i, j) * at128(r, c) - at128(i, c) * at128(r, j)) / prev;
                at128(i, c) = 0;
            }
            prev = at128(r, c);
            ++r;
        }
        return r;
    }

    // Rank of the reduction mod 2, via bit-packed elimination.
    int rank_mod2() const {
        if (cols_ > 63) throw std::invalid_argument("mod-2 rank limited to 63 columns");
        std::vector<uint64_t> rows;
        rows.reserve(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) {
            uint64_t w = 0;
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) & 1) w |= uint64_t(1) << j;
            rows.push_back(w);
        }
        int r = 0;
        for (int c = 0; c < cols_; ++c) {
            uint64_t bit = uint64_t(1) << c;
            int p = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[static_cast<size_t>(i)] & bit) { p = i; break; }
            if (p < 0) continue;
            std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(p)]);
            for (int i = 0; i < static_cast<int>(rows.size()); ++i)
                if (i != r && (rows[static_cast<size_t>(i)] & bit))
                    rows[static_cast<size_t>(i)] ^= rows[static_cast<size_t>(r)];
            ++r;
        }
        return r;
    }

private:
    int rows_;
    int cols_;
    std::vector<long long> a_;
};

} // namespace coxtoric
