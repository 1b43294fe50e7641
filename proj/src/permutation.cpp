#include "hpf/permutation.hpp"

#include <algorithm>

#include "hpf/errors.hpp"

namespace hpf {

namespace {

std::uint64_t merge_count(std::vector<int>& seq, std::vector<int>& tmp, std::size_t lo,
                          std::size_t hi) {
    if (hi - lo <= 1) return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = merge_count(seq, tmp, lo, mid) + merge_count(seq, tmp, mid, hi);
    std::size_t a = lo, b = mid, out = lo;
    while (a < mid && b < hi) {
        if (seq[b] < seq[a]) {
            inv += mid - a;
            tmp[out++] = seq[b++];
        } else {
            tmp[out++] = seq[a++];
        }
    }
    while (a < mid) tmp[out++] = seq[a++];
    while (b < hi) tmp[out++] = seq[b++];
    std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
              tmp.begin() + static_cast<std::ptrdiff_t>(hi),
              seq.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

}  // namespace

std::uint64_t count_inversions(std::vector<int> seq) {
    std::vector<int> tmp(seq.size());
    return merge_count(seq, tmp, 0, seq.size());
}

int inversion_sign(const std::vector<int>& seq) {
    return count_inversions(seq) % 2 == 0 ? 1 : -1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
            throw ValidationError("image sequence is not a bijection on 1..n");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw DimensionMismatchError("composing permutations of different sizes");
    std::vector<int> images(images_.size());
    for (int i = 1; i <= size(); ++i)
        images[static_cast<std::size_t>(i) - 1] = (*this)(other(i));
    return Permutation(std::move(images));
}

std::optional<Permutation> as_permutation(const MultiIndex& idx) {
    const int n = static_cast<int>(idx.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : idx) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1]) return std::nullopt;
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
    return Permutation(idx);
}

}  // namespace hpf
