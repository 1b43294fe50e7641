#include "hpf/projection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hpf/errors.hpp"
#include "hpf/permutation.hpp"

namespace hpf {

namespace {

// Multi-index of the grid cell (i,j): row half then column half.
MultiIndex cell_index(int k, int i, int j) {
    MultiIndex idx;
    idx.reserve(static_cast<std::size_t>(2 * k));
    for (int t = 1; t <= k; ++t) {
        idx.push_back(2 * k * (i - 1) + t);
    }
    for (int t = k + 1; t <= 2 * k; ++t) {
        idx.push_back(2 * k * (j - 1) + t);
    }
    return idx;
}

void check_grid_shape(int k, int d) {
    if (k < 1) {
        throw ValidationError("k must be at least 1");
    }
    if (d < 1) {
        throw ValidationError("d must be at least 1");
    }
    if (2 * k * d > 64) {
        throw ValidationError("dimension 2kd exceeds the supported range (n <= 64)");
    }
}

}  // namespace

int xij_slot(int d, int i, int j) {
    if (i < 1 || i > d || j < 1 || j > d) {
        throw ValidationError("grid cell out of range");
    }
    return (i - 1) * d + (j - 1);
}

std::function<std::string(int)> grid_namer(int d) {
    return [d](int slot) {
        const int i = slot / d + 1;
        const int j = slot % d + 1;
        return "x" + std::to_string(i) + "_" + std::to_string(j);
    };
}

SymbolicTensor build_projection_tensor(int k, int d) {
    check_grid_shape(k, d);
    const int n = 2 * k * d;
    SymbolicTensor q(n, 2 * k);
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            q.set(cell_index(k, i, j), Polynomial::variable(d * d, xij_slot(d, i, j)));
        }
    }
    return q;
}

Polynomial symbolic_hyperpfaffian(int k, int d, bool force) {
    check_grid_shape(k, d);
    if (d >= 5 && !force) {
        const BigInt leaves = factorial(static_cast<unsigned long>(d)) *
                              factorial(static_cast<unsigned long>(d));
        throw ResourceError("symbolic evaluation at d >= 5 must be forced", leaves.get_str());
    }
    const SymbolicTensor q = build_projection_tensor(k, d);
    return hyperpfaffian_backtrack(q, k, Polynomial::zero(d * d));
}

int leaf_sign(int k, const MultiIndex& i_seq, const MultiIndex& j_seq) {
    if (k < 1) {
        throw ValidationError("k must be at least 1");
    }
    if (i_seq.size() != j_seq.size()) {
        throw DimensionMismatchError("block sequences must have equal length");
    }
    if (!as_permutation(i_seq) || !as_permutation(j_seq)) {
        throw ValidationError("block sequences must be permutations of 1..d");
    }
    MultiIndex flat;
    flat.reserve(2 * static_cast<std::size_t>(k) * i_seq.size());
    for (std::size_t t = 0; t < i_seq.size(); ++t) {
        const MultiIndex block = cell_index(k, i_seq[t], j_seq[t]);
        flat.insert(flat.end(), block.begin(), block.end());
    }
    return inversion_sign(flat);
}

namespace {

Polynomial leibniz_polynomial(int d, bool signed_terms) {
    if (d < 1) {
        throw ValidationError("d must be at least 1");
    }
    Polynomial out = Polynomial::zero(d * d);
    MultiIndex images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 1);
    do {
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(d * d), 0);
        for (int i = 1; i <= d; ++i) {
            exps[static_cast<std::size_t>(xij_slot(d, i, images[static_cast<std::size_t>(i - 1)]))] = 1;
        }
        const int sign = signed_terms ? inversion_sign(images) : 1;
        out.add_term(Monomial(std::move(exps)), Rational(sign));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace

Polynomial permanent_polynomial(int d) {
    return leibniz_polynomial(d, false);
}

Polynomial determinant_polynomial(int d) {
    return leibniz_polynomial(d, true);
}

SparseTensor substitute(const SymbolicTensor& t, const std::vector<Rational>& point) {
    SparseTensor out(t.dim(), t.order());
    for (const auto& [idx, poly] : t.entries()) {
        out.add(idx, poly.evaluate(point));
    }
    return out;
}

std::string ProjectionReport::to_text() const {
    std::ostringstream out;
    out << "projection check: k=" << k << " d=" << d << "\n";
    out << "k parity " << (even_k ? "even" : "odd") << ", target " << d << "!*" << target << "_"
        << d << "\n";
    out << "lhs terms: " << terms_lhs << "\n";
    out << "rhs terms: " << terms_rhs << "\n";
    out << "identity " << (equal ? "holds" : "FAILS") << "\n";
    return out.str();
}

std::string ProjectionReport::to_records() const {
    std::ostringstream out;
    out << "k=" << k << "\n";
    out << "d=" << d << "\n";
    out << "parity=" << (even_k ? "even" : "odd") << "\n";
    out << "target=" << target << "\n";
    out << "equal=" << (equal ? "true" : "false") << "\n";
    out << "terms_lhs=" << terms_lhs << "\n";
    out << "terms_rhs=" << terms_rhs << "\n";
    return out.str();
}

ProjectionReport verify_projection_theorem(int k, int d, bool force) {
    ProjectionReport report;
    report.k = k;
    report.d = d;
    report.even_k = (k % 2 == 0);
    report.target = report.even_k ? "permanent" : "determinant";

    const Polynomial lhs = symbolic_hyperpfaffian(k, d, force);
    const Polynomial base = report.even_k ? permanent_polynomial(d) : determinant_polynomial(d);
    const Polynomial rhs = scale_by_factorial(base, static_cast<unsigned long>(d));

    report.equal = (lhs == rhs);
    report.terms_lhs = lhs.term_count();
    report.terms_rhs = rhs.term_count();
    return report;
}

}  // namespace hpf
