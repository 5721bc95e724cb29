// Subset and set-partition enumeration used by the lemma checkers.
#pragma once

#include <functional>
#include <vector>

#include "cubecross/graph.hpp"

namespace cubecross {

/// All k-subsets of {0..n-1}, in lexicographic order.
inline void for_each_subset(int n, int k,
                            const std::function<void(const VertexSubset&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(VertexSubset(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// All unordered partitions of {0..n-1} into exactly t nonempty blocks,
/// each visited once (restricted-growth enumeration). Blocks arrive sorted
/// by size descending, ties broken by smallest element.
inline void for_each_partition(
    int n, int t, const std::function<void(const std::vector<VertexSubset>&)>& fn) {
    std::vector<int> rgs(n, 0);
    auto emit = [&]() {
        std::vector<std::vector<int>> blocks(t);
        for (int v = 0; v < n; ++v) blocks[rgs[v]].push_back(v);
        std::vector<VertexSubset> parts;
        for (auto& b : blocks) parts.emplace_back(std::move(b));
        std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a.verts < b.verts;
        });
        fn(parts);
    };
    // rgs[v] <= 1 + max(rgs[0..v-1]); exactly t values used
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (n - v < t - used) return;  // cannot still reach t blocks
        if (v == n) {
            if (used == t) emit();
            return;
        }
        for (int b = 0; b < std::min(used + 1, t); ++b) {
            rgs[v] = b;
            self(self, v + 1, b == used ? used + 1 : used);
        }
    };
    rec(rec, 1, 1);  // vertex 0 is always in block 0
}

}  // namespace cubecross
