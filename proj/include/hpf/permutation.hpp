#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hpf/multi_index.hpp"

namespace hpf {

// Counts pairs (i, j) with i < j and seq[i] > seq[j], merge-based O(n log n).
std::uint64_t count_inversions(std::vector<int> seq);

// (-1)^inversions for a sequence of distinct integers.
int inversion_sign(const std::vector<int>& seq);

/// A bijection on {1,...,n}, stored as the image sequence p(1),...,p(n).
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& images() const { return images_; }

    // this∘other: i -> this(other(i)).
    Permutation compose(const Permutation& other) const;

    int sign() const { return inversion_sign(images_); }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }

private:
    std::vector<int> images_;
};

// The permutation with the given image sequence, if the multi-index is one;
// nullopt when entries repeat or fall outside 1..n.
std::optional<Permutation> as_permutation(const MultiIndex& idx);

}  // namespace hpf
