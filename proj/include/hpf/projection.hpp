#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hpf/invariants.hpp"
#include "hpf/polynomial.hpp"
#include "hpf/tensor.hpp"

namespace hpf {

/// Order-2k tensor whose coefficients are polynomials in a d x d grid of
/// variables x_{i,j}.
using SymbolicTensor = BasicSparseTensor<Polynomial>;

/// Variable slot for x_{i,j} in the d x d grid, i and j 1-based.
int xij_slot(int d, int i, int j);

/// Display namer for grid variables: slot -> "xi_j".
std::function<std::string(int)> grid_namer(int d);

/*
 * The substitution tensor q in dimension n = 2kd with one entry per grid
 * cell: cell (i,j) contributes coefficient x_{i,j} at the multi-index whose
 * first k letters are 2k(i-1)+1 .. 2k(i-1)+k and whose last k letters are
 * 2k(j-1)+k+1 .. 2k(j-1)+2k.  Evaluating Pf_{k,n} on q lands in the
 * polynomial ring of the grid.
 */
SymbolicTensor build_projection_tensor(int k, int d);

/*
 * Pf_{k,2kd} of the substitution tensor, computed symbolically with the same
 * backtracking evaluator used for numeric inputs.  The leaf count is (d!)^2
 * in the worst case; d >= 5 is refused unless force is set.
 */
Polynomial symbolic_hyperpfaffian(int k, int d, bool force = false);

/*
 * Sign of one evaluation leaf: the inversion sign of the concatenated
 * multi-index of blocks (i_seq[t], j_seq[t]) for t = 1..d.  Both sequences
 * must be permutations of 1..d.  Satisfies
 *   leaf_sign(k, i, j) = sgn(i)^k * sgn(j)^k.
 */
int leaf_sign(int k, const MultiIndex& i_seq, const MultiIndex& j_seq);

/// Leibniz-sum reference polynomials over the d x d grid, arity d^2.
Polynomial permanent_polynomial(int d);
Polynomial determinant_polynomial(int d);

/// Numeric tensor obtained by evaluating every polynomial coefficient.
SparseTensor substitute(const SymbolicTensor& t, const std::vector<Rational>& point);

struct ProjectionReport {
    int k = 0;
    int d = 0;
    bool even_k = false;
    std::string target;  // "permanent" or "determinant"
    bool equal = false;
    std::size_t terms_lhs = 0;
    std::size_t terms_rhs = 0;

    std::string to_text() const;
    std::string to_records() const;
};

/*
 * Checks the projection identity
 *   Pf_{k,2kd}(q) = d! * per_d   (k even)
 *   Pf_{k,2kd}(q) = d! * det_d   (k odd)
 * by exact polynomial comparison in the canonical term order.
 */
ProjectionReport verify_projection_theorem(int k, int d, bool force = false);

}  // namespace hpf
