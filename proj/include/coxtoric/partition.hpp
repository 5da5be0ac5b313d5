#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "coxtoric/rational.hpp"

namespace coxtoric {

// An integer partition with weakly decreasing positive parts; the cycle type
// of a permutation. The empty partition is the unique partition of 0.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
    }

    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int num_parts() const { return static_cast<int>(parts.size()); }

    bool has_odd_part() const {
        return std::any_of(parts.begin(), parts.end(), [](int p) { return p % 2 != 0; });
    }
    bool has_even_part() const {
        return std::any_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
    }

    // Centralizer order of a permutation of this cycle type:
    // prod over part sizes i of i^{m_i} m_i!.
    long long z() const {
        long long z = 1;
        int i = 0;
        while (i < num_parts()) {
            int j = i;
            while (j < num_parts() && parts[static_cast<size_t>(j)] == parts[static_cast<size_t>(i)]) ++j;
            int mult = j - i;
            for (int k = 0; k < mult; ++k)
                z = checked_mul(z, checked_mul(parts[static_cast<size_t>(i)], k + 1));
            i = j;
        }
        return z;
    }

    // Sign of a permutation of this cycle type: (-1)^(n - #parts).
    int sign() const { return (n() - num_parts()) % 2 ? -1 : 1; }

    // Part size -> multiplicity, largest size first.
    std::vector<std::pair<int, int>> multiplicities() const {
        std::vector<std::pair<int, int>> m;
        for (int p : parts) {
            if (!m.empty() && m.back().first == p)
                ++m.back().second;
            else
                m.emplace_back(p, 1);
        }
        return m;
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i)
            s += (i ? "+" : "") + std::to_string(parts[i]);
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
    return f;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int i = 0; i < k; ++i) b = exact_div(checked_mul(b, n - i), i + 1);
    return b;
}

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...,
// (1^n). This ordering is fixed; class-function vectors and serialized
// tables index by it. Cached per n; first use per n is not thread-safe.
inline const std::vector<Partition>& partitions_of(int n) {
    static std::vector<std::vector<Partition>> cache;
    if (n < 0) throw std::invalid_argument("negative partition size");
    if (static_cast<size_t>(n) < cache.size() && !cache[static_cast<size_t>(n)].empty())
        return cache[static_cast<size_t>(n)];
    if (static_cast<size_t>(n) >= cache.size()) cache.resize(static_cast<size_t>(n) + 1);

    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int max_part) -> void {
        if (rem == 0) {
            out.push_back(Partition{std::vector<int>(cur)});
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    cache[static_cast<size_t>(n)] = std::move(out);
    return cache[static_cast<size_t>(n)];
}

inline int partition_index(const Partition& p) {
    static std::vector<std::map<std::vector<int>, int>> cache;
    int n = p.n();
    if (static_cast<size_t>(n) >= cache.size()) cache.resize(static_cast<size_t>(n) + 1);
    auto& idx = cache[static_cast<size_t>(n)];
    if (idx.empty()) {
        const auto& list = partitions_of(n);
        for (size_t i = 0; i < list.size(); ++i) idx.emplace(list[i].parts, static_cast<int>(i));
    }
    auto it = idx.find(p.parts);
    if (it == idx.end()) throw std::logic_error("partition not found in its index table");
    return it->second;
}

} // namespace coxtoric
