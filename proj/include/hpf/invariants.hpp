#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "hpf/tensor.hpp"

namespace hpf {

/// Input to Pf_{k,n}: an order-2k tensor over C^n with 2k | n.
/// The evaluation degree is d = n / 2k.
class HyperpfaffianInstance {
public:
    HyperpfaffianInstance(int k, SparseTensor input);

    int k() const { return k_; }
    int n() const { return input_.dim(); }
    int d() const { return input_.dim() / (2 * k_); }
    const SparseTensor& input() const { return input_; }

private:
    int k_;
    SparseTensor input_;
};

struct EvalStats {
    std::uint64_t nodes = 0;   // branch points visited
    std::uint64_t leaves = 0;  // complete covers found
};

// Multiplicative unit and factorial scaling of the coefficient ring, derived
// from an existing value so polynomial arities carry through.  Overloads for
// other rings live with their types and are found by argument lookup.
Rational unit_for(const Rational& zero);
Rational scale_by_factorial(const Rational& value, unsigned long d);

/*
 * Backtracking evaluator for <v, p^{(x)d}> where p has order 2k over C^n and
 * d = n/2k.  Families of d stored entries with disjoint supports covering
 * {1..n} are enumerated in canonical order: the next entry must contain the
 * smallest index not yet covered.  Each such family stands for the d!
 * orderings of its blocks inside p^{(x)d}; blocks have even length 2k, so
 * permuting them never changes the inversion parity of the concatenated
 * index sequence and all d! orderings carry the same sign.  The total is
 * therefore d! times the canonical sum.  The sign of each family is taken
 * from a single merge-based inversion count of its concatenated multi-index.
 * p^{(x)d} is never materialized.
 *
 * Works over any coefficient ring (rationals, polynomials); `zero` supplies
 * the additive identity of C.
 */
template <typename C>
C hyperpfaffian_backtrack(const BasicSparseTensor<C>& p, int k, C zero, EvalStats* stats = nullptr) {
    const int n = p.dim();
    if (k < 1 || p.order() != 2 * k)
        throw ValidationError("tensor order must equal 2k");
    if (n % (2 * k) != 0)
        throw ValidationError("2k must divide the tensor dimension");
    if (n > 64) throw ValidationError("dimension exceeds the supported range (n <= 64)");
    const int d = n / (2 * k);

    // Entries with a repeated letter can never complete a permutation of
    // 1..n; drop them up front and bucket the rest by smallest letter.
    struct Candidate {
        std::uint64_t mask;
        const MultiIndex* idx;
        const C* coeff;
    };
    std::vector<std::vector<Candidate>> by_min(static_cast<std::size_t>(n) + 1);
    for (const auto& [idx, c] : p.entries()) {
        if (!has_distinct_entries(idx)) continue;
        std::uint64_t mask = 0;
        int min_letter = n + 1;
        for (int v : idx) {
            mask |= std::uint64_t{1} << (v - 1);
            min_letter = std::min(min_letter, v);
        }
        by_min[static_cast<std::size_t>(min_letter)].push_back({mask, &idx, &c});
    }

    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    C total = zero;
    std::vector<const MultiIndex*> chosen;
    chosen.reserve(static_cast<std::size_t>(d));
    MultiIndex flat;
    flat.reserve(static_cast<std::size_t>(n));

    auto descend = [&](auto&& self, std::uint64_t covered, const C& partial) -> void {
        if (stats) ++stats->nodes;
        if (covered == full) {
            if (stats) ++stats->leaves;
            flat.clear();
            for (const MultiIndex* block : chosen) flat.insert(flat.end(), block->begin(), block->end());
            if (inversion_sign(flat) > 0)
                total += partial;
            else
                total += -partial;
            return;
        }
        const int smallest = std::countr_one(covered) + 1;
        for (const Candidate& cand : by_min[static_cast<std::size_t>(smallest)]) {
            if (cand.mask & covered) continue;
            chosen.push_back(cand.idx);
            self(self, covered | cand.mask, partial * *cand.coeff);
            chosen.pop_back();
        }
    };
    descend(descend, 0, unit_for(zero));

    return scale_by_factorial(total, static_cast<unsigned long>(d));
}

/// Pf_{k,n}(p) = <v, p^{(x)d}> by pruned backtracking; exact.
Rational hyperpfaffian(const HyperpfaffianInstance& inst, EvalStats* stats = nullptr);

/*
 * Oracle route for the same value: materializes p^{(x)d} with tensor_power
 * and pairs it with the antisymmetrizer entry by entry.  Refuses to expand
 * past `term_budget` product terms (the bound (#entries)^d is reported).
 */
Rational hyperpfaffian_expand(const HyperpfaffianInstance& inst,
                              std::uint64_t term_budget = 10'000'000);

/// Perfect-matching Pfaffian of an antisymmetric matrix with even dimension.
Rational classical_pfaffian(const SquareMatrix& a);

/// Exact permanent by Ryser inclusion-exclusion over column subsets, O(2^n n).
Rational permanent(const SquareMatrix& m);

/// Exact permanent as the plain Leibniz sum over all n! permutations.
Rational permanent_naive(const SquareMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// denominators.
Rational determinant(const SquareMatrix& m);

}  // namespace hpf
