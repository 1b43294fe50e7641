#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hpf/rational.hpp"

namespace hpf {

/// One sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseIntRow = std::vector<std::pair<int, BigInt>>;

/// Row-major sparse integer matrix.  Rows are kept sorted and deduplicated;
/// zero values are dropped on insertion.
class SparseIntMatrix {
public:
    explicit SparseIntMatrix(int cols);

    int cols() const { return cols_; }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<SparseIntRow>& rows() const { return rows_; }

    /// Appends a row given as unsorted (column, value) triples; duplicate
    /// columns accumulate.
    void add_row(SparseIntRow row);

    /// Builds from (row, col, value) triples; duplicate positions accumulate.
    static SparseIntMatrix from_triplets(std::size_t rows, int cols,
                                         std::vector<std::tuple<int, int, BigInt>> triplets);

    /// Exact matrix-vector product (dense vector of length cols()).
    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

private:
    int cols_;
    std::vector<SparseIntRow> rows_;
};

/*
 * Exact rank over Q by sparse fraction-free elimination.  Pivots are chosen
 * with a Markowitz-style rule (shortest active row, then least-filled
 * column); every combined row is divided by the gcd of its entries, keeping
 * growth in check.  Deterministic.
 */
std::size_t rank_exact(const SparseIntMatrix& m);

/*
 * Rank of the same matrix reduced mod a prime p < 2^31.  Any mod-p
 * nonsingular minor is nonsingular over Q, so the result is a lower bound
 * on the rational rank.
 */
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);

}  // namespace hpf
