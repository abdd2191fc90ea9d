#pragma once

#include "conjcount/rational.hpp"

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

namespace conjcount {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is allowed and represents the constant 1 in all Schur-type indexings.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1 || (i + 1 < parts.size() && parts[i] < parts[i + 1]))
                throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
        }
    }

    int weight() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < length() ? parts[i] : 0; }

    bool operator==(const Partition& o) const { return parts == o.parts; }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

/// Canonical order: graded by weight, ties broken lexicographically
/// descending. Gives reproducible vector layouts across runs.
inline bool partition_order_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts > b.parts; // lex descending within a weight class
}

enum class IndexMode { Weight, Box };

namespace detail {
inline void extend_partitions(std::vector<int>& cur, int max_part, int remaining_weight,
                              int remaining_len, std::vector<Partition>& out) {
    out.push_back(Partition(cur));
    if (remaining_len == 0) return;
    for (int p = std::min(max_part, remaining_weight); p >= 1; --p) {
        cur.push_back(p);
        extend_partitions(cur, p, remaining_weight - p, remaining_len - 1, out);
        cur.pop_back();
    }
}
} // namespace detail

/// Weight mode: all partitions with |lambda| <= bound, len <= length_bound.
/// Box mode: all partitions with lambda_1 <= bound, len <= length_bound.
/// Includes the empty partition; canonical order.
inline std::vector<Partition> enumerate_partitions(int bound, int length_bound, IndexMode mode) {
    if (bound < 0 || length_bound < 1)
        throw std::invalid_argument("enumerate_partitions: bad bounds");
    std::vector<Partition> out;
    std::vector<int> cur;
    int weight_cap = mode == IndexMode::Weight ? bound : bound * length_bound;
    detail::extend_partitions(cur, bound, weight_cap, length_bound, out);
    std::sort(out.begin(), out.end(), partition_order_less);
    return out;
}

/// Index family for the Schur map and the Plucker factorization. Weight mode
/// matches the |lambda| <= n+1-tau definition of the map; box mode matches
/// the tau x (n+1-tau) box whose cardinality is C(n+1, tau).
struct SchurIndexSet {
    int n = 0;
    int tau = 1;
    IndexMode mode = IndexMode::Weight;
    std::vector<Partition> partitions;

    int find(const Partition& lambda) const {
        for (size_t i = 0; i < partitions.size(); ++i)
            if (partitions[i] == lambda) return static_cast<int>(i);
        return -1;
    }
};

inline SchurIndexSet make_schur_index_set(int n, int tau, IndexMode mode) {
    if (tau < 1 || n + 1 < tau)
        throw std::invalid_argument("make_schur_index_set: need 1 <= tau <= n+1");
    SchurIndexSet s;
    s.n = n;
    s.tau = tau;
    s.mode = mode;
    s.partitions = enumerate_partitions(n + 1 - tau, tau, mode);
    return s;
}

/// Bijection between column sets J = (j_1 < ... < j_tau) in [0..n] and
/// partitions in the tau x (n+1-tau) box: lambda_i = j_{tau-i+1} - (tau-i).
inline Partition partition_from_columns(const std::vector<int>& J) {
    int tau = static_cast<int>(J.size());
    std::vector<int> parts;
    for (int i = 0; i < tau; ++i) {
        int v = J[tau - 1 - i] - (tau - 1 - i);
        if (v < 0) throw std::invalid_argument("partition_from_columns: columns not increasing");
        if (v > 0) parts.push_back(v);
    }
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("partition_from_columns: columns not increasing");
    return Partition(parts);
}

inline std::vector<int> columns_from_partition(const Partition& lambda, int tau) {
    std::vector<int> J(tau);
    for (int i = 0; i < tau; ++i) J[tau - 1 - i] = lambda.part(i) + (tau - 1 - i);
    return J;
}

/// All tau-element increasing column sets in [0..n].
inline std::vector<std::vector<int>> index_subsets(int n, int tau) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(tau);
    for (int i = 0; i < tau; ++i) cur[i] = i;
    if (tau == 0) return {{}};
    while (true) {
        out.push_back(cur);
        int i = tau - 1;
        while (i >= 0 && cur[i] == n - tau + 1 + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < tau; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace conjcount
