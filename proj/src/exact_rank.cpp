#include "hpf/exact_rank.hpp"

#include <algorithm>
#include <tuple>

#include "hpf/errors.hpp"

namespace hpf {

SparseIntMatrix::SparseIntMatrix(int cols) : cols_(cols) {
    if (cols < 0) {
        throw ValidationError("column count must be non-negative");
    }
}

void SparseIntMatrix::add_row(SparseIntRow row) {
    for (const auto& [col, val] : row) {
        if (col < 0 || col >= cols_) {
            throw ValidationError("row entry column out of range");
        }
        (void)val;
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseIntRow packed;
    packed.reserve(row.size());
    for (auto& [col, val] : row) {
        if (!packed.empty() && packed.back().first == col) {
            packed.back().second += val;
            if (packed.back().second == 0) {
                packed.pop_back();
            }
        } else if (val != 0) {
            packed.emplace_back(col, std::move(val));
        }
    }
    rows_.push_back(std::move(packed));
}

SparseIntMatrix SparseIntMatrix::from_triplets(std::size_t rows, int cols,
                                               std::vector<std::tuple<int, int, BigInt>> triplets) {
    std::vector<SparseIntRow> buckets(rows);
    for (auto& [r, c, v] : triplets) {
        if (r < 0 || static_cast<std::size_t>(r) >= rows) {
            throw ValidationError("triplet row out of range");
        }
        buckets[static_cast<std::size_t>(r)].emplace_back(c, std::move(v));
    }
    SparseIntMatrix m(cols);
    for (auto& bucket : buckets) {
        m.add_row(std::move(bucket));
    }
    return m;
}

std::vector<BigInt> SparseIntMatrix::apply(const std::vector<BigInt>& v) const {
    if (v.size() != static_cast<std::size_t>(cols_)) {
        throw DimensionMismatchError("vector length does not match column count");
    }
    std::vector<BigInt> out(rows_.size(), BigInt(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        BigInt acc(0);
        for (const auto& [col, val] : rows_[r]) {
            acc += val * v[static_cast<std::size_t>(col)];
        }
        out[r] = std::move(acc);
    }
    return out;
}

namespace {

// Divides every entry of the row by the gcd of its values.
void strip_content(SparseIntRow& row) {
    BigInt g(0);
    for (const auto& [col, val] : row) {
        (void)col;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
        if (g == 1) {
            return;
        }
    }
    if (g > 1) {
        for (auto& [col, val] : row) {
            (void)col;
            mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), g.get_mpz_t());
        }
    }
}

// pv * target - tv * pivot, merged by column, zeros dropped.
SparseIntRow combine_rows(const SparseIntRow& target, const BigInt& tv, const SparseIntRow& pivot,
                          const BigInt& pv) {
    SparseIntRow out;
    out.reserve(target.size() + pivot.size());
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < target.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < target.size() && target[a].first < pivot[b].first)) {
            out.emplace_back(target[a].first, pv * target[a].second);
            ++a;
        } else if (a == target.size() || pivot[b].first < target[a].first) {
            out.emplace_back(pivot[b].first, -(tv * pivot[b].second));
            ++b;
        } else {
            BigInt v = pv * target[a].second - tv * pivot[b].second;
            if (v != 0) {
                out.emplace_back(target[a].first, std::move(v));
            }
            ++a;
            ++b;
        }
    }
    return out;
}

const BigInt* value_at(const SparseIntRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& item, int c) { return item.first < c; });
    if (it == row.end() || it->first != col) {
        return nullptr;
    }
    return &it->second;
}

}  // namespace

std::size_t rank_exact(const SparseIntMatrix& m) {
    std::vector<SparseIntRow> rows = m.rows();
    const int cols = m.cols();
    std::vector<bool> alive(rows.size(), true);
    std::vector<int> col_count(static_cast<std::size_t>(cols), 0);
    // col_rows holds candidate row ids per column; entries can go stale when
    // rows change, so membership is re-checked before use.
    std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [col, val] : rows[r]) {
            (void)val;
            ++col_count[static_cast<std::size_t>(col)];
            col_rows[static_cast<std::size_t>(col)].push_back(static_cast<int>(r));
        }
    }

    std::size_t rank = 0;
    for (;;) {
        // Markowitz-style pivot: shortest remaining row, then its least
        // occupied column.  Ties break to the smallest index for determinism.
        int pivot_row = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r] || rows[r].empty()) {
                continue;
            }
            if (pivot_row < 0 || rows[r].size() < rows[static_cast<std::size_t>(pivot_row)].size()) {
                pivot_row = static_cast<int>(r);
            }
        }
        if (pivot_row < 0) {
            break;
        }
        const SparseIntRow& prow = rows[static_cast<std::size_t>(pivot_row)];
        int pivot_col = prow.front().first;
        for (const auto& [col, val] : prow) {
            (void)val;
            if (col_count[static_cast<std::size_t>(col)] <
                col_count[static_cast<std::size_t>(pivot_col)]) {
                pivot_col = col;
            }
        }
        ++rank;

        const BigInt pv = *value_at(prow, pivot_col);
        std::vector<int> victims;
        victims.swap(col_rows[static_cast<std::size_t>(pivot_col)]);
        for (int s : victims) {
            if (s == pivot_row || !alive[static_cast<std::size_t>(s)]) {
                continue;
            }
            const BigInt* tv = value_at(rows[static_cast<std::size_t>(s)], pivot_col);
            if (tv == nullptr) {
                continue;  // stale index entry
            }
            SparseIntRow replacement = combine_rows(rows[static_cast<std::size_t>(s)], *tv, prow, pv);
            strip_content(replacement);
            for (const auto& [col, val] : rows[static_cast<std::size_t>(s)]) {
                (void)val;
                --col_count[static_cast<std::size_t>(col)];
            }
            for (const auto& [col, val] : replacement) {
                (void)val;
                ++col_count[static_cast<std::size_t>(col)];
                if (col != pivot_col) {
                    col_rows[static_cast<std::size_t>(col)].push_back(s);
                }
            }
            rows[static_cast<std::size_t>(s)] = std::move(replacement);
        }

        for (const auto& [col, val] : prow) {
            (void)val;
            --col_count[static_cast<std::size_t>(col)];
        }
        alive[static_cast<std::size_t>(pivot_row)] = false;
        rows[static_cast<std::size_t>(pivot_row)].clear();
    }
    return rank;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t out = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) {
            out = (out * base) % mod;
        }
        base = (base * base) % mod;
        exp >>= 1;
    }
    return out;
}

}  // namespace

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
    if (p < 2) {
        throw ValidationError("modulus must be at least 2");
    }
    using ModRow = std::vector<std::pair<int, std::uint32_t>>;
    const int cols = m.cols();
    std::vector<ModRow> rows;
    rows.reserve(m.row_count());
    for (const SparseIntRow& src : m.rows()) {
        ModRow row;
        row.reserve(src.size());
        for (const auto& [col, val] : src) {
            const std::uint32_t v = static_cast<std::uint32_t>(mpz_fdiv_ui(val.get_mpz_t(), p));
            if (v != 0) {
                row.emplace_back(col, v);
            }
        }
        rows.push_back(std::move(row));
    }

    std::vector<bool> alive(rows.size(), true);
    std::vector<int> col_count(static_cast<std::size_t>(cols), 0);
    std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [col, val] : rows[r]) {
            (void)val;
            ++col_count[static_cast<std::size_t>(col)];
            col_rows[static_cast<std::size_t>(col)].push_back(static_cast<int>(r));
        }
    }

    std::size_t rank = 0;
    for (;;) {
        int pivot_row = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r] || rows[r].empty()) {
                continue;
            }
            if (pivot_row < 0 || rows[r].size() < rows[static_cast<std::size_t>(pivot_row)].size()) {
                pivot_row = static_cast<int>(r);
            }
        }
        if (pivot_row < 0) {
            break;
        }
        ModRow& prow = rows[static_cast<std::size_t>(pivot_row)];
        int pivot_col = prow.front().first;
        std::uint32_t pv = prow.front().second;
        for (const auto& [col, val] : prow) {
            if (col_count[static_cast<std::size_t>(col)] <
                col_count[static_cast<std::size_t>(pivot_col)]) {
                pivot_col = col;
                pv = val;
            } else if (col == pivot_col) {
                pv = val;
            }
        }
        ++rank;

        // Scale the pivot row so the pivot becomes 1.
        const std::uint64_t inv = pow_mod(pv, p - 2, p);
        for (auto& [col, val] : prow) {
            (void)col;
            val = static_cast<std::uint32_t>((static_cast<std::uint64_t>(val) * inv) % p);
        }

        std::vector<int> victims;
        victims.swap(col_rows[static_cast<std::size_t>(pivot_col)]);
        for (int s : victims) {
            if (s == pivot_row || !alive[static_cast<std::size_t>(s)]) {
                continue;
            }
            ModRow& target = rows[static_cast<std::size_t>(s)];
            auto it = std::lower_bound(target.begin(), target.end(), pivot_col,
                                       [](const auto& item, int c) { return item.first < c; });
            if (it == target.end() || it->first != pivot_col) {
                continue;
            }
            const std::uint64_t factor = it->second;
            ModRow replacement;
            replacement.reserve(target.size() + prow.size());
            std::size_t a = 0;
            std::size_t b = 0;
            while (a < target.size() || b < prow.size()) {
                if (b == prow.size() || (a < target.size() && target[a].first < prow[b].first)) {
                    replacement.push_back(target[a]);
                    ++a;
                } else if (a == target.size() || prow[b].first < target[a].first) {
                    const std::uint64_t sub = (factor * prow[b].second) % p;
                    if (sub != 0) {
                        replacement.emplace_back(prow[b].first,
                                                 static_cast<std::uint32_t>(p - sub));
                    }
                    ++b;
                } else {
                    const std::uint64_t sub = (factor * prow[b].second) % p;
                    const std::uint64_t v = (target[a].second + p - sub) % p;
                    if (v != 0) {
                        replacement.emplace_back(target[a].first, static_cast<std::uint32_t>(v));
                    }
                    ++a;
                    ++b;
                }
            }
            for (const auto& [col, val] : target) {
                (void)val;
                --col_count[static_cast<std::size_t>(col)];
            }
            for (const auto& [col, val] : replacement) {
                (void)val;
                ++col_count[static_cast<std::size_t>(col)];
                if (col != pivot_col) {
                    col_rows[static_cast<std::size_t>(col)].push_back(s);
                }
            }
            target = std::move(replacement);
        }

        for (const auto& [col, val] : prow) {
            (void)val;
            --col_count[static_cast<std::size_t>(col)];
        }
        alive[static_cast<std::size_t>(pivot_row)] = false;
        prow.clear();
    }
    return rank;
}

}  // namespace hpf
