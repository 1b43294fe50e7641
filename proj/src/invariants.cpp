#include "hpf/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hpf {

HyperpfaffianInstance::HyperpfaffianInstance(int k, SparseTensor input)
    : k_(k), input_(std::move(input)) {
    if (k < 1) throw ValidationError("k must be positive");
    if (input_.order() != 2 * k)
        throw ValidationError("instance tensor must have order 2k");
    if (input_.dim() % (2 * k) != 0)
        throw ValidationError("2k must divide the tensor dimension");
}

Rational unit_for(const Rational&) { return Rational(1); }

Rational scale_by_factorial(const Rational& value, unsigned long d) {
    return value * Rational(factorial(d));
}

Rational hyperpfaffian(const HyperpfaffianInstance& inst, EvalStats* stats) {
    return hyperpfaffian_backtrack(inst.input(), inst.k(), Rational(0), stats);
}

Rational hyperpfaffian_expand(const HyperpfaffianInstance& inst, std::uint64_t term_budget) {
    const int d = inst.d();
    const std::uint64_t entries = inst.input().term_count();
    // Worst-case term count of p^{(x)d} is (#entries)^d.
    BigInt bound = 1;
    for (int i = 0; i < d; ++i) bound *= BigInt(static_cast<unsigned long>(entries));
    if (bound > BigInt(static_cast<unsigned long>(term_budget)))
        throw ResourceError("full expansion would exceed the term budget", bound.get_str());
    if (inst.input().is_zero_tensor()) return Rational(0);
    return pair_with_antisymmetrizer(tensor_power(inst.input(), d));
}

Rational classical_pfaffian(const SquareMatrix& a) {
    const int n = a.dim();
    if (n % 2 != 0) throw ValidationError("pfaffian needs even dimension");
    if (!a.is_antisymmetric()) throw ValidationError("pfaffian input must be antisymmetric");

    // Sum over perfect matchings {(a_1,b_1),...}, a_l < b_l, a_1 < a_2 < ...;
    // the sign of a matching is the inversion parity of (a_1 b_1 a_2 b_2 ...).
    Rational total(0);
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto recurse = [&](auto&& self, int matched, const Rational& partial) -> void {
        if (matched == n) {
            if (inversion_sign(flat) > 0)
                total += partial;
            else
                total += -partial;
            return;
        }
        int lo = 1;
        while (used[static_cast<std::size_t>(lo)]) ++lo;
        used[static_cast<std::size_t>(lo)] = true;
        for (int hi = lo + 1; hi <= n; ++hi) {
            if (used[static_cast<std::size_t>(hi)] || a.entry(lo, hi).is_zero()) continue;
            used[static_cast<std::size_t>(hi)] = true;
            flat.push_back(lo);
            flat.push_back(hi);
            self(self, matched + 2, partial * a.entry(lo, hi));
            flat.pop_back();
            flat.pop_back();
            used[static_cast<std::size_t>(hi)] = false;
        }
        used[static_cast<std::size_t>(lo)] = false;
    };
    recurse(recurse, 0, Rational(1));
    return total;
}

Rational permanent(const SquareMatrix& m) {
    const int n = m.dim();
    if (n > 24) throw ResourceError("Ryser permanent is limited to n <= 24", std::to_string(n));

    // Ryser: per(M) = (-1)^n sum_{S != 0} (-1)^|S| prod_i sum_{j in S} m_ij,
    // walking subsets in Gray-code order so each step adjusts the row sums
    // by a single column.
    std::vector<Rational> row_sum(static_cast<std::size_t>(n), Rational(0));
    Rational total(0);
    std::uint64_t prev_gray = 0;
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << n); ++t) {
        const std::uint64_t gray = t ^ (t >> 1);
        const std::uint64_t diff = gray ^ prev_gray;
        const int col = std::countr_zero(diff) + 1;
        const bool added = (gray & diff) != 0;
        for (int i = 1; i <= n; ++i) {
            if (added)
                row_sum[static_cast<std::size_t>(i - 1)] += m.entry(i, col);
            else
                row_sum[static_cast<std::size_t>(i - 1)] -= m.entry(i, col);
        }
        prev_gray = gray;
        Rational prod(1);
        for (const Rational& s : row_sum) prod *= s;
        if (std::popcount(gray) % 2 == 0)
            total += prod;
        else
            total += -prod;
    }
    if (n % 2 != 0) total = -total;
    return total;
}

Rational permanent_naive(const SquareMatrix& m) {
    const int n = m.dim();
    if (n > 10) throw ResourceError("Leibniz permanent is limited to n <= 10", std::to_string(n));
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 1);
    Rational total(0);
    do {
        Rational prod(1);
        for (int i = 1; i <= n; ++i) prod *= m.entry(i, cols[static_cast<std::size_t>(i - 1)]);
        total += prod;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return total;
}

Rational determinant(const SquareMatrix& m) {
    const int n = m.dim();

    // Clear denominators row by row, then run Bareiss on big integers; the
    // interior divisions are exact by construction.
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n)));
    BigInt scale = 1;
    for (int i = 0; i < n; ++i) {
        BigInt lcm = 1;
        for (int j = 0; j < n; ++j) {
            BigInt den = m.entry(i + 1, j + 1).denominator();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int j = 0; j < n; ++j) {
            const Rational& v = m.entry(i + 1, j + 1);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                v.numerator() * (lcm / v.denominator());
        }
        scale *= lcm;
    }

    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (sgn(a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (sgn(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]) != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Rational(0);
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                mpz_divexact(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    BigInt det = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

}  // namespace hpf
