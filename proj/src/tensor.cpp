#include "hpf/tensor.hpp"

#include <algorithm>

#include "hpf/rng.hpp"

namespace hpf {

SquareMatrix::SquareMatrix(int n) : n_(n) {
    if (n < 1) throw ValidationError("matrix dimension must be positive");
    cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
}

std::size_t SquareMatrix::flat(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw ValidationError("matrix index out of range");
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
}

SquareMatrix SquareMatrix::identity(int n) {
    SquareMatrix m(n);
    for (int i = 1; i <= n; ++i) m.set_entry(i, i, Rational(1));
    return m;
}

SquareMatrix SquareMatrix::multiply(const SquareMatrix& other) const {
    if (n_ != other.n_) throw DimensionMismatchError("multiplying matrices of different dimensions");
    SquareMatrix out(n_);
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k) {
            const Rational& a = entry(i, k);
            if (a.is_zero()) continue;
            for (int j = 1; j <= n_; ++j) {
                const Rational& b = other.entry(k, j);
                if (b.is_zero()) continue;
                out.set_entry(i, j, out.entry(i, j) + a * b);
            }
        }
    return out;
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix out(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out.set_entry(j, i, entry(i, j));
    return out;
}

bool SquareMatrix::is_antisymmetric() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= n_; ++j)
            if (entry(i, j) != -entry(j, i)) return false;
    return true;
}

SparseTensor SquareMatrix::as_order2_tensor() const {
    SparseTensor t(n_, 2);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (!entry(i, j).is_zero()) t.set({i, j}, entry(i, j));
    return t;
}

MultiIndex swap_adjacent_blocks(const MultiIndex& idx, int block_size, int a) {
    if (block_size <= 0 || idx.size() % static_cast<std::size_t>(block_size) != 0)
        throw ValidationError("block size must divide the index length");
    const int blocks = static_cast<int>(idx.size()) / block_size;
    if (a < 1 || a + 1 > blocks) throw ValidationError("block position out of range");
    MultiIndex out = idx;
    auto first = out.begin() + static_cast<std::ptrdiff_t>((a - 1) * block_size);
    std::swap_ranges(first, first + block_size, first + block_size);
    return out;
}

SparseTensor apply_group_element(const SquareMatrix& g, const SparseTensor& t) {
    if (g.dim() != t.dim())
        throw DimensionMismatchError("group element dimension does not match tensor");
    const int n = t.dim();
    const int m = t.order();

    // Nonzero rows of each column of g, so zero products never enter the
    // expansion.
    std::vector<std::vector<std::pair<int, Rational>>> column(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            if (!g.entry(i, j).is_zero()) column[static_cast<std::size_t>(j)].emplace_back(i, g.entry(i, j));

    SparseTensor out(n, m);
    MultiIndex image(static_cast<std::size_t>(m));
    for (const auto& [idx, coeff] : t.entries()) {
        // Depth-first expansion of the product (g e_{idx_1}) (x) ... (x) (g e_{idx_m}).
        auto expand = [&](auto&& self, int slot, const Rational& partial) -> void {
            if (slot == m) {
                out.add(image, partial);
                return;
            }
            for (const auto& [row, gij] : column[static_cast<std::size_t>(idx[static_cast<std::size_t>(slot)])]) {
                image[static_cast<std::size_t>(slot)] = row;
                self(self, slot + 1, partial * gij);
            }
        };
        expand(expand, 0, coeff);
    }
    return out;
}

SparseTensor apply_lie_generator(int i, int j, const SparseTensor& t) {
    if (i < 1 || i > t.dim() || j < 1 || j > t.dim() || i == j)
        throw ValidationError("lie generator needs distinct indices in 1..n");
    SparseTensor out(t.dim(), t.order());
    for (const auto& [idx, c] : t.entries()) {
        for (std::size_t slot = 0; slot < idx.size(); ++slot) {
            if (idx[slot] != j) continue;
            MultiIndex moved = idx;
            moved[slot] = i;
            out.add(moved, c);
        }
    }
    return out;
}

SparseTensor antisymmetrizer(int n) {
    if (n > 8) throw ResourceError("antisymmetrizer materialization is limited to n <= 8", std::to_string(n) + "!");
    SparseTensor v(n, n);
    MultiIndex idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    do {
        v.set(idx, Rational(inversion_sign(idx)));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return v;
}

SquareMatrix random_special_linear(int n, std::uint64_t seed, int factors) {
    if (n < 2) throw ValidationError("special linear sampling needs n >= 2");
    if (factors < 0) throw ValidationError("factor count must be nonnegative");
    SeededRng rng(seed);
    SquareMatrix m = SquareMatrix::identity(n);
    for (int f = 0; f < factors; ++f) {
        int i = static_cast<int>(rng.int_in(1, n));
        int j = static_cast<int>(rng.int_in(1, n - 1));
        if (j >= i) ++j;
        Rational c = rng.nonzero_rational(3, 3);
        // Right-multiplying by I + c E_{ij} adds c * column(i) to column(j).
        for (int r = 1; r <= n; ++r)
            m.set_entry(r, j, m.entry(r, j) + c * m.entry(r, i));
    }
    return m;
}

}  // namespace hpf
