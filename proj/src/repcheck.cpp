#include "hpf/repcheck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "hpf/errors.hpp"
#include "hpf/exact_rank.hpp"
#include "hpf/multi_index.hpp"
#include "hpf/partition.hpp"
#include "hpf/permutation.hpp"
#include "hpf/tensor.hpp"

namespace hpf {

namespace {

// Columns with at most this many entries go straight to exact elimination;
// larger blocks first try the certified modular sandwich below.
constexpr std::size_t kExactColsThreshold = 300;

// Primes below 2^31 used for the modular rank bounds, tried in order.
constexpr std::uint32_t kCertPrimes[] = {2147483647u, 2147483629u, 2147483587u, 1073741789u};

std::vector<int> content_of(const MultiIndex& w, int n) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (int letter : w) {
        ++c[static_cast<std::size_t>(letter - 1)];
    }
    return c;
}

std::vector<MultiIndex> split_blocks(const MultiIndex& w, int b) {
    std::vector<MultiIndex> blocks;
    blocks.reserve(w.size() / static_cast<std::size_t>(b));
    for (std::size_t at = 0; at < w.size(); at += static_cast<std::size_t>(b)) {
        blocks.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(at),
                            w.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(b)));
    }
    return blocks;
}

MultiIndex join_blocks(const std::vector<MultiIndex>& blocks) {
    MultiIndex w;
    for (const MultiIndex& block : blocks) {
        w.insert(w.end(), block.begin(), block.end());
    }
    return w;
}

// Lexicographically smallest ordering of the b-sized blocks of w.
MultiIndex canonical_rep(const MultiIndex& w, int b) {
    std::vector<MultiIndex> blocks = split_blocks(w, b);
    std::sort(blocks.begin(), blocks.end());
    return join_blocks(blocks);
}

// All words in the block-permutation orbit of a canonical representative.
std::vector<MultiIndex> orbit_words(const MultiIndex& rep, int b) {
    std::vector<MultiIndex> blocks = split_blocks(rep, b);
    std::vector<MultiIndex> out;
    do {
        out.push_back(join_blocks(blocks));
    } while (std::next_permutation(blocks.begin(), blocks.end()));
    return out;
}

struct ContentClass {
    std::vector<MultiIndex> reps;
    std::map<MultiIndex, int> index_of;
};

using ClassMap = std::map<std::vector<int>, ContentClass>;

std::vector<MultiIndex> enumerate_words(int n, int m) {
    std::vector<MultiIndex> words;
    MultiIndex w(static_cast<std::size_t>(m), 1);
    for (;;) {
        words.push_back(w);
        int pos = m - 1;
        while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) {
            w[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++w[static_cast<std::size_t>(pos)];
    }
    return words;
}

ClassMap build_classes(int n, int m, std::optional<int> block) {
    std::vector<MultiIndex> reps;
    if (block) {
        std::set<MultiIndex> seen;
        for (MultiIndex& w : enumerate_words(n, m)) {
            seen.insert(canonical_rep(w, *block));
        }
        reps.assign(seen.begin(), seen.end());
    } else {
        reps = enumerate_words(n, m);
    }
    ClassMap classes;
    for (MultiIndex& rep : reps) {
        ContentClass& cls = classes[content_of(rep, n)];
        cls.index_of.emplace(rep, static_cast<int>(cls.reps.size()));
        cls.reps.push_back(std::move(rep));
    }
    return classes;
}

bool is_balanced(const std::vector<int>& content) {
    for (std::size_t i = 1; i < content.size(); ++i) {
        if (content[i] != content[0]) {
            return false;
        }
    }
    return true;
}

/*
 * Stacked matrix of all simple generators restricted to one content class.
 * Generator (a <- b) sends a basis column (an orbit sum) to a combination of
 * canonical words of the shifted content; the coefficient of a target
 * representative is the number of (member word, slot) pairs mapping onto it.
 */
SparseIntMatrix assemble_class_matrix(const std::vector<int>& content, const ContentClass& cls,
                                      const ClassMap& classes, int n,
                                      std::optional<int> block) {
    struct GeneratorBlock {
        int from = 0;  // letter replaced
        int to = 0;    // replacement letter
        const ContentClass* target = nullptr;
        std::size_t offset = 0;
    };
    std::vector<GeneratorBlock> gens;
    std::size_t total_rows = 0;
    for (int i = 1; i < n; ++i) {
        for (const auto& [to, from] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
            GeneratorBlock g;
            g.from = from;
            g.to = to;
            if (content[static_cast<std::size_t>(from - 1)] > 0) {
                std::vector<int> shifted = content;
                --shifted[static_cast<std::size_t>(from - 1)];
                ++shifted[static_cast<std::size_t>(to - 1)];
                auto it = classes.find(shifted);
                if (it != classes.end()) {
                    g.target = &it->second;
                }
            }
            g.offset = total_rows;
            total_rows += g.target ? g.target->reps.size() : 0;
            gens.push_back(g);
        }
    }

    std::vector<std::tuple<int, int, BigInt>> triplets;
    for (std::size_t col = 0; col < cls.reps.size(); ++col) {
        const std::vector<MultiIndex> members =
            block ? orbit_words(cls.reps[col], *block) : std::vector<MultiIndex>{cls.reps[col]};
        for (const GeneratorBlock& g : gens) {
            if (g.target == nullptr) {
                continue;
            }
            for (const MultiIndex& w : members) {
                for (std::size_t slot = 0; slot < w.size(); ++slot) {
                    if (w[slot] != g.from) {
                        continue;
                    }
                    MultiIndex moved = w;
                    moved[slot] = g.to;
                    if (block) {
                        // Only mass landing exactly on a canonical word counts;
                        // the rest of the orbit carries the same coefficient.
                        auto it = g.target->index_of.find(moved);
                        if (it == g.target->index_of.end()) {
                            continue;
                        }
                        triplets.emplace_back(static_cast<int>(g.offset) + it->second,
                                              static_cast<int>(col), BigInt(1));
                    } else {
                        triplets.emplace_back(
                            static_cast<int>(g.offset) + g.target->index_of.at(moved),
                            static_cast<int>(col), BigInt(1));
                    }
                }
            }
        }
    }
    return SparseIntMatrix::from_triplets(total_rows, static_cast<int>(cls.reps.size()),
                                          std::move(triplets));
}

// ---- explicit invariant vectors used as kernel certificates ----

using WordVector = std::map<MultiIndex, int>;

void noncrossing_matchings_rec(int lo, int hi,
                               std::vector<std::pair<int, int>>& current,
                               std::vector<std::vector<std::pair<int, int>>>& out) {
    if (lo > hi) {
        out.push_back(current);
        return;
    }
    for (int b = lo + 1; b <= hi; b += 2) {
        current.emplace_back(lo, b);
        // inner segment and outer segment close independently
        std::vector<std::vector<std::pair<int, int>>> inner;
        std::vector<std::pair<int, int>> scratch;
        noncrossing_matchings_rec(lo + 1, b - 1, scratch, inner);
        for (const auto& inside : inner) {
            const std::size_t mark = current.size();
            current.insert(current.end(), inside.begin(), inside.end());
            noncrossing_matchings_rec(b + 1, hi, current, out);
            current.resize(mark);
        }
        current.pop_back();
    }
}

// Wedge e_1^e_2 placed on every matched slot pair, expanded to words.
std::vector<WordVector> matching_candidates(int m) {
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> scratch;
    noncrossing_matchings_rec(0, m - 1, scratch, matchings);
    std::vector<WordVector> out;
    out.reserve(matchings.size());
    for (const auto& pairs : matchings) {
        WordVector v;
        MultiIndex word(static_cast<std::size_t>(m), 0);
        auto expand = [&](auto&& self, std::size_t at, int sign) -> void {
            if (at == pairs.size()) {
                v[word] = sign;
                return;
            }
            const auto [a, b] = pairs[at];
            word[static_cast<std::size_t>(a)] = 1;
            word[static_cast<std::size_t>(b)] = 2;
            self(self, at + 1, sign);
            word[static_cast<std::size_t>(a)] = 2;
            word[static_cast<std::size_t>(b)] = 1;
            self(self, at + 1, -sign);
        };
        expand(expand, 0, 1);
        out.push_back(std::move(v));
    }
    return out;
}

void equal_partitions_rec(std::vector<int>& free_slots, int n, std::vector<std::vector<int>>& current,
                          std::vector<std::vector<std::vector<int>>>& out) {
    if (free_slots.empty()) {
        out.push_back(current);
        return;
    }
    const int head = free_slots.front();
    std::vector<int> rest(free_slots.begin() + 1, free_slots.end());
    // choose n-1 companions for the smallest free slot, in lex order
    std::vector<int> combo;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (combo.size() == static_cast<std::size_t>(n - 1)) {
            std::vector<int> group{head};
            group.insert(group.end(), combo.begin(), combo.end());
            std::vector<int> remaining;
            std::set<int> chosen(combo.begin(), combo.end());
            for (int s : rest) {
                if (chosen.find(s) == chosen.end()) {
                    remaining.push_back(s);
                }
            }
            current.push_back(group);
            equal_partitions_rec(remaining, n, current, out);
            current.pop_back();
            return;
        }
        for (std::size_t at = from; at < rest.size(); ++at) {
            combo.push_back(rest[at]);
            self(self, at + 1);
            combo.pop_back();
        }
    };
    rec(rec, 0);
}

// One wedge of all n letters per partition group, expanded to words.
std::vector<WordVector> partition_candidates(int n, int m) {
    std::vector<int> slots(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) {
        slots[static_cast<std::size_t>(s)] = s;
    }
    std::vector<std::vector<std::vector<int>>> partitions;
    std::vector<std::vector<int>> current;
    equal_partitions_rec(slots, n, current, partitions);

    std::vector<WordVector> out;
    out.reserve(partitions.size());
    MultiIndex letters(static_cast<std::size_t>(n));
    for (const auto& groups : partitions) {
        WordVector v;
        MultiIndex word(static_cast<std::size_t>(m), 0);
        auto expand = [&](auto&& self, std::size_t at, int sign) -> void {
            if (at == groups.size()) {
                v[word] = sign;
                return;
            }
            MultiIndex perm(static_cast<std::size_t>(n));
            for (int t = 0; t < n; ++t) {
                perm[static_cast<std::size_t>(t)] = t + 1;
            }
            do {
                for (int t = 0; t < n; ++t) {
                    word[static_cast<std::size_t>(groups[at][static_cast<std::size_t>(t)])] =
                        perm[static_cast<std::size_t>(t)];
                }
                self(self, at + 1, sign * inversion_sign(perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        expand(expand, 0, 1);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<WordVector> candidate_invariant_words(int n, int m) {
    if (n < 2 || m % n != 0 || m > 16) {
        return {};
    }
    if (n == 2) {
        return matching_candidates(m);
    }
    if (m / n <= 4) {
        return partition_candidates(n, m);
    }
    return {};
}

/*
 * Kernel dimension of one stacked class matrix.  Small blocks go through
 * exact fraction-free elimination directly.  Large blocks are sandwiched:
 * candidate invariant vectors verified exactly to lie in the kernel give
 * rank_p(candidates) <= dim ker, and cols - rank_p(matrix) >= dim ker; when
 * the two modular bounds meet, that value is exact.  Otherwise fall back to
 * exact elimination.
 */
std::size_t class_kernel_dimension(const SparseIntMatrix& matrix, std::size_t cols,
                                   const std::vector<std::vector<std::pair<int, int>>>& candidates) {
    if (matrix.row_count() == 0) {
        return cols;
    }
    if (cols <= kExactColsThreshold) {
        return cols - rank_exact(matrix);
    }

    std::vector<std::tuple<int, int, BigInt>> cand_triplets;
    std::size_t verified = 0;
    for (const auto& cand : candidates) {
        std::vector<BigInt> dense(cols, BigInt(0));
        for (const auto& [local, coeff] : cand) {
            dense[static_cast<std::size_t>(local)] = coeff;
        }
        bool in_kernel = true;
        for (const BigInt& image : matrix.apply(dense)) {
            if (image != 0) {
                in_kernel = false;
                break;
            }
        }
        if (!in_kernel) {
            continue;  // never expected; dropping keeps the bound sound
        }
        for (const auto& [local, coeff] : cand) {
            cand_triplets.emplace_back(local, static_cast<int>(verified), BigInt(coeff));
        }
        ++verified;
    }
    const SparseIntMatrix cand_matrix = SparseIntMatrix::from_triplets(
        cols, static_cast<int>(verified), std::move(cand_triplets));

    for (std::uint32_t p : kCertPrimes) {
        const std::size_t upper = cols - rank_mod_p(matrix, p);
        const std::size_t lower = verified == 0 ? 0 : rank_mod_p(cand_matrix, p);
        if (upper == lower) {
            return upper;
        }
    }
    return cols - rank_exact(matrix);
}

}  // namespace

BigInt invariant_dimension_predicted(int n, int m) {
    return rectangle_dimension(n, m);
}

std::size_t invariant_dimension_bruteforce(const InvariantDimensionQuery& q) {
    if (q.n < 1 || q.m < 1) {
        throw ValidationError("n and m must be positive");
    }
    if (q.symmetrize_block && (*q.symmetrize_block < 1 || q.m % *q.symmetrize_block != 0)) {
        throw ValidationError("block size must be positive and divide m");
    }
    BigInt basis_size;
    mpz_ui_pow_ui(basis_size.get_mpz_t(), static_cast<unsigned long>(q.n),
                  static_cast<unsigned long>(q.m));
    if (basis_size > BigInt(static_cast<unsigned long>(q.basis_budget))) {
        throw ResourceError("basis budget exceeded", basis_size.get_str());
    }

    const ClassMap classes = build_classes(q.n, q.m, q.symmetrize_block);

    std::size_t total = 0;
    for (const auto& [content, cls] : classes) {
        if (!is_balanced(content)) {
            continue;  // killed by a commutator [E_i, F_i] acting as c_i - c_{i+1}
        }
        const SparseIntMatrix matrix =
            assemble_class_matrix(content, cls, classes, q.n, q.symmetrize_block);

        std::vector<std::vector<std::pair<int, int>>> local_candidates;
        if (!q.symmetrize_block && cls.reps.size() > kExactColsThreshold) {
            for (const WordVector& cand : candidate_invariant_words(q.n, q.m)) {
                std::vector<std::pair<int, int>> local;
                local.reserve(cand.size());
                bool ok = true;
                for (const auto& [word, coeff] : cand) {
                    auto it = cls.index_of.find(word);
                    if (it == cls.index_of.end()) {
                        ok = false;
                        break;
                    }
                    local.emplace_back(it->second, coeff);
                }
                if (ok) {
                    local_candidates.push_back(std::move(local));
                }
            }
        }
        total += class_kernel_dimension(matrix, cls.reps.size(), local_candidates);
    }
    return total;
}

bool PropositionReport::all_passed() const {
    for (const PropositionItem& item : items) {
        if (item.status == CheckStatus::Fail) {
            return false;
        }
    }
    return true;
}

namespace {

const char* status_word(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "pass";
        case CheckStatus::Fail:
            return "fail";
        case CheckStatus::PredictedOnly:
            return "predicted-only";
    }
    return "unknown";
}

}  // namespace

std::string PropositionReport::to_text() const {
    std::ostringstream out;
    out << "proposition check: k=" << k << " n=" << n << " (degree d=" << d << ")\n";
    for (const PropositionItem& item : items) {
        out << "  [" << status_word(item.status) << "] " << item.label;
        if (!item.detail.empty()) {
            out << ": " << item.detail;
        }
        out << "\n";
    }
    out << "result: " << (all_passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string PropositionReport::to_records() const {
    std::ostringstream out;
    out << "k=" << k << "\n";
    out << "n=" << n << "\n";
    out << "d=" << d << "\n";
    out << "items=" << items.size() << "\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
        out << "item" << (i + 1) << "_label=" << items[i].label << "\n";
        out << "item" << (i + 1) << "_status=" << status_word(items[i].status) << "\n";
        if (!items[i].detail.empty()) {
            out << "item" << (i + 1) << "_detail=" << items[i].detail << "\n";
        }
    }
    out << "result=" << (all_passed() ? "pass" : "fail") << "\n";
    return out.str();
}

PropositionReport verify_proposition(int k, int n, std::uint64_t basis_budget) {
    if (k < 1 || n < 1 || n % (2 * k) != 0) {
        throw ValidationError("verify_proposition needs 2k | n");
    }
    PropositionReport report;
    report.k = k;
    report.n = n;
    report.d = n / (2 * k);

    auto within_budget = [&](int m) {
        BigInt size;
        mpz_ui_pow_ui(size.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(m));
        return size <= BigInt(static_cast<unsigned long>(basis_budget));
    };

    for (int dprime = 1; dprime < report.d; ++dprime) {
        const int m = 2 * k * dprime;
        PropositionItem item;
        item.label = "no invariants at degree " + std::to_string(dprime) + " (m=" + std::to_string(m) + ")";
        if (m % n == 0) {
            item.status = CheckStatus::Fail;
            item.detail = "n divides 2k*d'";
        } else if (!within_budget(m)) {
            item.status = CheckStatus::PredictedOnly;
            item.detail = "n does not divide m; basis over budget, kernel not measured";
        } else {
            InvariantDimensionQuery q;
            q.n = n;
            q.m = m;
            q.basis_budget = basis_budget;
            const std::size_t dim = invariant_dimension_bruteforce(q);
            item.status = dim == 0 ? CheckStatus::Pass : CheckStatus::Fail;
            item.detail = "n does not divide m; measured dimension " + std::to_string(dim);
        }
        report.items.push_back(std::move(item));
    }

    {
        PropositionItem item;
        item.label = "unique block-symmetric invariant at degree " + std::to_string(report.d) +
                     " (m=" + std::to_string(n) + ", b=" + std::to_string(2 * k) + ")";
        if (!within_budget(n)) {
            item.status = CheckStatus::PredictedOnly;
            item.detail = "basis over budget; predicted dimension " +
                          invariant_dimension_predicted(n, n).get_str();
        } else {
            InvariantDimensionQuery q;
            q.n = n;
            q.m = n;
            q.symmetrize_block = 2 * k;
            q.basis_budget = basis_budget;
            const std::size_t dim = invariant_dimension_bruteforce(q);
            item.status = dim == 1 ? CheckStatus::Pass : CheckStatus::Fail;
            item.detail = "measured dimension " + std::to_string(dim);
        }
        report.items.push_back(std::move(item));
    }

    {
        PropositionItem item;
        item.label = "wedge vector is block-symmetric (b=" + std::to_string(2 * k) + ")";
        if (n > 8) {
            item.status = CheckStatus::PredictedOnly;
            item.detail = "wedge vector too large to materialize";
        } else {
            item.status = is_block_symmetric(antisymmetrizer(n), 2 * k) ? CheckStatus::Pass
                                                                        : CheckStatus::Fail;
        }
        report.items.push_back(std::move(item));
    }

    {
        PropositionItem item;
        item.label = "wedge vector is annihilated by every generator";
        if (n > 8) {
            item.status = CheckStatus::PredictedOnly;
            item.detail = "wedge vector too large to materialize";
        } else if (n == 1) {
            item.status = CheckStatus::Pass;
            item.detail = "no generators in dimension 1";
        } else {
            const SparseTensor v = antisymmetrizer(n);
            bool all_zero = true;
            int checked = 0;
            for (int i = 1; i <= n && all_zero; ++i) {
                for (int j = 1; j <= n && all_zero; ++j) {
                    if (i == j) {
                        continue;
                    }
                    all_zero = apply_lie_generator(i, j, v).entries().empty();
                    ++checked;
                }
            }
            item.status = all_zero ? CheckStatus::Pass : CheckStatus::Fail;
            item.detail = std::to_string(checked) + " generators checked";
        }
        report.items.push_back(std::move(item));
    }

    return report;
}

}  // namespace hpf
