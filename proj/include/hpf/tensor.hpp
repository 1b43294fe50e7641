#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hpf/errors.hpp"
#include "hpf/multi_index.hpp"
#include "hpf/permutation.hpp"
#include "hpf/rational.hpp"

namespace hpf {

/*
 * Sparse order-m tensor over C^n with coefficients in a commutative ring C
 * (exact rationals, or polynomials for symbolic evaluation).  Only nonzero
 * coefficients are stored, keyed on the lexicographically ordered multi-index,
 * so iteration order is deterministic.  Immutable by convention once built.
 */
template <typename C>
class BasicSparseTensor {
public:
    using EntryMap = std::map<MultiIndex, C>;

    BasicSparseTensor(int dim, int order) : dim_(dim), order_(order) {
        if (dim < 1 || order < 1) throw ValidationError("tensor needs positive dimension and order");
    }

    int dim() const { return dim_; }
    int order() const { return order_; }
    std::size_t term_count() const { return entries_.size(); }
    const EntryMap& entries() const { return entries_; }

    // Accumulates into the coefficient at idx, erasing it if the sum is zero.
    void add(const MultiIndex& idx, const C& value) {
        check_index(idx);
        if (value.is_zero()) return;
        auto [it, inserted] = entries_.emplace(idx, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    void set(const MultiIndex& idx, const C& value) {
        check_index(idx);
        if (value.is_zero())
            entries_.erase(idx);
        else
            entries_[idx] = value;
    }

    // Zero when absent.
    C coefficient(const MultiIndex& idx) const {
        auto it = entries_.find(idx);
        return it == entries_.end() ? C() : it->second;
    }

    bool contains(const MultiIndex& idx) const { return entries_.count(idx) > 0; }
    bool is_zero_tensor() const { return entries_.empty(); }

    BasicSparseTensor scaled(const C& factor) const {
        BasicSparseTensor out(dim_, order_);
        if (factor.is_zero()) return out;
        for (const auto& [idx, c] : entries_) out.add(idx, factor * c);
        return out;
    }

    BasicSparseTensor plus(const BasicSparseTensor& other) const {
        if (dim_ != other.dim_ || order_ != other.order_)
            throw DimensionMismatchError("adding tensors of different shape");
        BasicSparseTensor out = *this;
        for (const auto& [idx, c] : other.entries_) out.add(idx, c);
        return out;
    }

    friend bool operator==(const BasicSparseTensor& a, const BasicSparseTensor& b) {
        return a.dim_ == b.dim_ && a.order_ == b.order_ && a.entries_ == b.entries_;
    }

private:
    void check_index(const MultiIndex& idx) const {
        if (static_cast<int>(idx.size()) != order_)
            throw DimensionMismatchError("multi-index length does not match tensor order");
        if (!indices_in_range(idx, dim_))
            throw ValidationError("multi-index entry out of range 1..n");
    }

    int dim_;
    int order_;
    EntryMap entries_;
};

using SparseTensor = BasicSparseTensor<Rational>;

/// Dense n x n matrix of exact rationals; accessors are 1-based.
class SquareMatrix {
public:
    explicit SquareMatrix(int n);
    static SquareMatrix identity(int n);

    int dim() const { return n_; }
    const Rational& entry(int i, int j) const { return cells_[flat(i, j)]; }
    void set_entry(int i, int j, Rational v) { cells_[flat(i, j)] = std::move(v); }

    SquareMatrix multiply(const SquareMatrix& other) const;
    SquareMatrix transpose() const;
    bool is_antisymmetric() const;

    // The matrix viewed as the order-2 tensor sum_{i,j} a_ij e_i (x) e_j.
    SparseTensor as_order2_tensor() const;

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.cells_ == b.cells_;
    }

private:
    std::size_t flat(int i, int j) const;

    int n_;
    std::vector<Rational> cells_;
};

/*
 * Pairing with the antisymmetrizer v = e_1 ^ ... ^ e_n, normalized so that
 * <v, e_{s(1)} (x) ... (x) e_{s(n)}> = sign(s) for every permutation s.
 * Entries whose multi-index repeats a letter contribute nothing, so the sum
 * runs over the stored permutation-indexed entries only; v itself is never
 * materialized here.
 */
template <typename C>
C pair_with_antisymmetrizer(const BasicSparseTensor<C>& t) {
    if (t.order() != t.dim())
        throw DimensionMismatchError("antisymmetrizer pairing needs tensor order equal to dimension");
    C total{};
    for (const auto& [idx, c] : t.entries()) {
        auto p = as_permutation(idx);
        if (!p) continue;
        if (p->sign() > 0)
            total += c;
        else
            total += -c;
    }
    return total;
}

template <typename C>
BasicSparseTensor<C> tensor_product(const BasicSparseTensor<C>& a, const BasicSparseTensor<C>& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("tensor product over different dimensions");
    BasicSparseTensor<C> out(a.dim(), a.order() + b.order());
    for (const auto& [ia, ca] : a.entries())
        for (const auto& [ib, cb] : b.entries()) out.add(concat(ia, ib), ca * cb);
    return out;
}

template <typename C>
BasicSparseTensor<C> tensor_power(const BasicSparseTensor<C>& t, int d) {
    if (d < 1) throw ValidationError("tensor power needs a positive exponent");
    BasicSparseTensor<C> out = t;
    for (int i = 1; i < d; ++i) out = tensor_product(out, t);
    return out;
}

// Slot-permutation image of a multi-index under swapping contiguous blocks
// a and a+1 of the given size (1-based block positions).
MultiIndex swap_adjacent_blocks(const MultiIndex& idx, int block_size, int a);

/*
 * True iff t is invariant under every permutation of its m/b contiguous
 * blocks of size b.  Adjacent block transpositions generate the full block
 * permutation group, so checking those suffices.
 */
template <typename C>
bool is_block_symmetric(const BasicSparseTensor<C>& t, int block_size) {
    if (block_size < 1 || t.order() % block_size != 0)
        throw ValidationError("block size must divide tensor order");
    const int blocks = t.order() / block_size;
    for (int a = 1; a < blocks; ++a) {
        for (const auto& [idx, c] : t.entries()) {
            auto it = t.entries().find(swap_adjacent_blocks(idx, block_size, a));
            if (it == t.entries().end() || !(it->second == c)) return false;
        }
    }
    return true;
}

// g acting slot-wise: g(v_1 (x) ... (x) v_m) = (g v_1) (x) ... (x) (g v_m),
// re-expanded in the standard basis.  Exact; zero products are dropped as
// soon as they appear.
SparseTensor apply_group_element(const SquareMatrix& g, const SparseTensor& t);

// Derivation (Leibniz) action of the elementary matrix E_{ij}: sum over
// slots holding j of the tensor with that slot replaced by i.
SparseTensor apply_lie_generator(int i, int j, const SparseTensor& t);

// The antisymmetrizer v materialized sparsely: n! entries, coefficients +-1.
SparseTensor antisymmetrizer(int n);

// Product of `factors` random transvections I + c E_{ij}; the determinant is
// exactly 1 by construction.  factors = 0 gives the identity.
SquareMatrix random_special_linear(int n, std::uint64_t seed, int factors);

}  // namespace hpf
