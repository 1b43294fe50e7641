#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpf/rational.hpp"

namespace hpf {

/// Which space to measure: tensors of order m over C^n, optionally restricted
/// to the subspace symmetric under permuting the m/b contiguous blocks of
/// size b.
struct InvariantDimensionQuery {
    int n = 0;
    int m = 0;
    std::optional<int> symmetrize_block;
    std::uint64_t basis_budget = 20'000;  // maximum number of basis vectors
};

/// Predicted dimension of the SL_n-invariant subspace of tensor words of
/// length m: the number of standard Young tableaux of the n x (m/n)
/// rectangle, zero when n does not divide m.
BigInt invariant_dimension_predicted(int n, int m);

/*
 * Measured dimension of the same space: the joint kernel of the simple
 * raising maps E_{i,i+1} and lowering maps E_{i+1,i} (1 <= i < n) acting by
 * the derivation rule on the chosen basis, computed by exact rank.  Basis
 * columns are grouped by letter content before elimination; the generators
 * shift content by one letter, so the joint kernel splits losslessly into
 * per-content blocks, and any vector killed by both E_i and F_i is killed by
 * their commutator, whose action on a content class is the scalar
 * c_i - c_{i+1} — classes with unequal letter counts contribute nothing.
 */
std::size_t invariant_dimension_bruteforce(const InvariantDimensionQuery& q);

enum class CheckStatus { Pass, Fail, PredictedOnly };

struct PropositionItem {
    std::string label;
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
};

struct PropositionReport {
    int k = 0;
    int n = 0;
    int d = 0;
    std::vector<PropositionItem> items;

    /// True when no item failed (predicted-only items do not fail).
    bool all_passed() const;
    std::string to_text() const;
    std::string to_records() const;
};

/*
 * Desk-scale check that Pf_{k,n} is the lowest-degree invariant and unique
 * at its degree:
 *   (a) for every 0 < d' < n/2k, n does not divide 2kd' and the measured
 *       invariant dimension at m = 2kd' is zero;
 *   (b) the measured dimension of block-symmetric invariants (b = 2k) at
 *       m = n is one;
 *   (c) the antisymmetrizer v is block-symmetric and killed by every
 *       generator E_{ij}, i != j.
 * Items whose basis would exceed the budget degrade to predicted-only.
 */
PropositionReport verify_proposition(int k, int n, std::uint64_t basis_budget = 20'000);

}  // namespace hpf
