#include "hpf/multi_index.hpp"

#include <algorithm>

namespace hpf {

bool indices_in_range(const MultiIndex& idx, int n) {
    return std::all_of(idx.begin(), idx.end(), [n](int v) { return v >= 1 && v <= n; });
}

bool has_distinct_entries(const MultiIndex& idx) {
    MultiIndex sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<int> content_vector(const MultiIndex& idx, int n) {
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (int v : idx) ++counts[static_cast<std::size_t>(v) - 1];
    return counts;
}

}  // namespace hpf
