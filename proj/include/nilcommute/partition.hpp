#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcommute {

/// Jordan type of a nilpotent matrix: weakly decreasing positive block sizes
/// u_1 >= ... >= u_t summing to the ambient dimension n.
class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("Partition: empty");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: nonpositive part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            parts.push_back(std::stoi(item));
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int count() const { return static_cast<int>(parts_.size()); }
    int part(int h) const { return parts_.at(static_cast<std::size_t>(h)); } // zero-based

    /// Conjugate partition (column lengths of the Young diagram).
    Partition conjugate() const {
        std::vector<int> c;
        for (int m = 1; m <= parts_[0]; ++m) {
            int cnt = 0;
            for (int u : parts_)
                if (u >= m) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    /// All partitions of n, largest part first, in reverse lexicographic order.
    static std::vector<Partition> all_of(int n) {
        std::vector<Partition> out;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int rest, int maxpart) {
            if (rest == 0) {
                out.emplace_back(cur);
                return;
            }
            for (int next = std::min(rest, maxpart); next >= 1; --next) {
                cur.push_back(next);
                rec(rest - next, next);
                cur.pop_back();
            }
        };
        rec(n, n);
        return out;
    }

private:
    std::vector<int> parts_;
    int n_;
};

/// Combinatorial invariants of a partition controlling the centralizer
/// structure: the grouping q_0 < ... < q_that of equal parts, the chain
/// starts n_i with their count r_B, the maximal near-equal run length s_B,
/// and the gap depths h(i,j).
struct PartitionInvariants {
    std::vector<int> q;       // q_0 = 0 < q_1 < ... < q_that = t (1-based part counts)
    int t_hat = 0;            // number of distinct part sizes
    std::vector<int> n_idx;   // n_1 = 1, ..., n_{r_B} (1-based block indices)
    int r_B = 0;
    int s_B = 0;
    std::vector<std::vector<int>> h_table; // h[i][j] for 0-based i <= j

    int h(int i, int j) const {
        int a = std::min(i, j), b = std::max(i, j);
        return h_table.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b - a));
    }

    /// Group index (0-based) of the 0-based block h.
    int group_of(int block) const {
        for (std::size_t a = 1; a < q.size(); ++a)
            if (block + 1 <= q[a]) return static_cast<int>(a) - 1;
        throw std::logic_error("PartitionInvariants: block out of range");
    }
};

/// Maximal near-equal run starting at 0-based index i: the largest j with
/// u_i - u_j <= 1 (runs are contiguous because parts are sorted).
inline int near_equal_run_end(const Partition& p, int i) {
    int j = i;
    while (j + 1 < p.count() && p.part(i) - p.part(j + 1) <= 1) ++j;
    return j;
}

inline PartitionInvariants partition_invariants(const Partition& p) {
    PartitionInvariants inv;
    int t = p.count();
    // q_alpha: boundaries of runs of equal parts
    inv.q.push_back(0);
    for (int h = 0; h < t; ++h) {
        if (h + 1 == t || p.part(h + 1) != p.part(h)) inv.q.push_back(h + 1);
    }
    inv.t_hat = static_cast<int>(inv.q.size()) - 1;
    // n_i: greedy chain from the top; n_{i+1} is the least index whose part
    // drops by at least 2 from part(n_i)
    int cur = 0;
    inv.n_idx.push_back(1);
    for (;;) {
        int nxt = -1;
        for (int j = cur + 1; j < t; ++j) {
            if (p.part(cur) - p.part(j) >= 2) {
                nxt = j;
                break;
            }
        }
        if (nxt < 0) break;
        inv.n_idx.push_back(nxt + 1);
        cur = nxt;
    }
    inv.r_B = static_cast<int>(inv.n_idx.size());
    // s_B: maximum cardinality of a near-equal index run
    for (int i = 0; i < t; ++i) inv.s_B = std::max(inv.s_B, near_equal_run_end(p, i) - i + 1);
    // h(i,j): number of >=2 drops along the greedy chain from i down to the
    // first index whose part is within 1 of u_j
    inv.h_table.assign(static_cast<std::size_t>(t), {});
    for (int i = 0; i < t; ++i) {
        for (int j = i; j < t; ++j) {
            int hval = 0;
            int k = i;
            while (p.part(k) - p.part(j) >= 2) {
                int nxt = -1;
                for (int c = k + 1; c <= j; ++c) {
                    if (p.part(k) - p.part(c) >= 2) {
                        nxt = c;
                        break;
                    }
                }
                ++hval;
                k = nxt; // nxt exists: j itself qualifies
            }
            inv.h_table[static_cast<std::size_t>(i)].push_back(hval);
        }
    }
    return inv;
}

} // namespace nilcommute
