// Command-line front end: exact hyperpfaffian evaluation, projection and
// uniqueness verification, classical oracles, circuit manipulation, and
// seeded randomized suites.  All arithmetic is exact; machine-readable
// output ("records") is byte-identical for identical configurations.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hpf/circuit.hpp"
#include "hpf/errors.hpp"
#include "hpf/invariants.hpp"
#include "hpf/projection.hpp"
#include "hpf/repcheck.hpp"
#include "hpf/rng.hpp"
#include "hpf/tensor.hpp"
#include "hpf/tensor_io.hpp"

namespace {

using namespace hpf;

SparseTensor load_tensor(const std::string& path) {
    if (path.empty() || path == "-") {
        return read_tensor(std::cin);
    }
    return read_tensor_file(path);
}

ArithmeticCircuit load_circuit(const std::string& path) {
    if (path.empty() || path == "-") {
        return read_circuit(std::cin);
    }
    return read_circuit_file(path);
}

// Inline matrix text: rows separated by ';', entries by ',', e.g. "1,2;2,1".
SquareMatrix parse_inline_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::stringstream row_stream(text);
    std::string row_text;
    while (std::getline(row_stream, row_text, ';')) {
        std::vector<Rational> row;
        std::stringstream cell_stream(row_text);
        std::string cell;
        while (std::getline(cell_stream, cell, ',')) {
            std::size_t begin = cell.find_first_not_of(" \t");
            std::size_t end = cell.find_last_not_of(" \t");
            if (begin == std::string::npos) {
                throw ValidationError("empty matrix cell");
            }
            row.push_back(Rational::parse(cell.substr(begin, end - begin + 1)));
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n == 0) {
        throw ValidationError("empty inline matrix");
    }
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw ValidationError("inline matrix must be square");
        }
    }
    SquareMatrix m(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.set_entry(static_cast<int>(i + 1), static_cast<int>(j + 1), rows[i][j]);
        }
    }
    return m;
}

SquareMatrix matrix_from_order2(const SparseTensor& t) {
    if (t.order() != 2) {
        throw ValidationError("matrix input needs an order-2 tensor");
    }
    SquareMatrix m(t.dim());
    for (const auto& [idx, c] : t.entries()) {
        m.set_entry(idx[0], idx[1], c);
    }
    return m;
}

SquareMatrix load_matrix(const std::string& input, const std::string& inline_text) {
    if (!inline_text.empty()) {
        return parse_inline_matrix(inline_text);
    }
    return matrix_from_order2(load_tensor(input));
}

SparseTensor random_tensor(SeededRng& rng, int n, int order, int entries) {
    SparseTensor t(n, order);
    for (int e = 0; e < entries; ++e) {
        MultiIndex idx(static_cast<std::size_t>(order));
        for (int& v : idx) {
            v = static_cast<int>(rng.int_in(1, n));
        }
        t.add(idx, rng.rational(4, 3));
    }
    return t;
}

Rational coefficient_sum(const SparseTensor& t) {
    Rational total(0);
    for (const auto& [idx, c] : t.entries()) {
        (void)idx;
        total += c;
    }
    return total;
}

bool g_records = false;

void emit(const std::string& key, const std::string& value, const std::string& text_line) {
    if (g_records) {
        std::cout << key << "=" << value << "\n";
    } else if (!text_line.empty()) {
        std::cout << text_line << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact evaluation and verification toolkit for hyperpfaffian invariants"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string format = "text";
    std::string input;
    std::string inline_matrix;
    int k = 1;
    int n = 2;
    int d = 2;
    int m = 2;
    int b = 0;
    std::uint64_t seed = 1;
    int trials = 100;
    std::uint64_t budget = 0;
    bool force = false;
    bool perturb = false;
    double density = 0.1;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "records"}));
    };

    // ---- eval ----
    CLI::App* eval_cmd = app.add_subcommand("eval", "hyperpfaffian of an hpft tensor (backtracking)");
    eval_cmd->add_option("--k", k, "half the tensor order")->required();
    eval_cmd->add_option("--input", input, "hpft file, '-' for stdin");
    add_format(eval_cmd);
    eval_cmd->callback([&] {
        g_records = format == "records";
        const HyperpfaffianInstance inst(k, load_tensor(input));
        const Rational value = hyperpfaffian(inst);
        if (g_records) {
            std::cout << "k=" << inst.k() << "\nn=" << inst.n() << "\nd=" << inst.d() << "\n"
                      << "value=" << value.str() << "\n";
        } else {
            std::cout << value.str() << "\n";
        }
    });

    // ---- expand ----
    CLI::App* expand_cmd =
        app.add_subcommand("expand", "hyperpfaffian via full tensor-power expansion (oracle)");
    expand_cmd->add_option("--k", k, "half the tensor order")->required();
    expand_cmd->add_option("--input", input, "hpft file, '-' for stdin");
    expand_cmd->add_option("--budget", budget, "term budget for the expansion");
    add_format(expand_cmd);
    expand_cmd->callback([&] {
        g_records = format == "records";
        const HyperpfaffianInstance inst(k, load_tensor(input));
        const Rational value =
            budget > 0 ? hyperpfaffian_expand(inst, budget) : hyperpfaffian_expand(inst);
        if (g_records) {
            std::cout << "k=" << inst.k() << "\nn=" << inst.n() << "\nd=" << inst.d() << "\n"
                      << "value=" << value.str() << "\n";
        } else {
            std::cout << value.str() << "\n";
        }
    });

    // ---- permanent / determinant / pfaffian ----
    const auto add_matrix_cmd = [&](const std::string& name, const std::string& help,
                                    auto compute) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--input", input, "hpft file with an order-2 tensor, '-' for stdin");
        sub->add_option("--matrix", inline_matrix, "inline matrix, rows 'a,b;c,d'");
        add_format(sub);
        sub->callback([&, compute, name] {
            g_records = format == "records";
            const SquareMatrix mat = load_matrix(input, inline_matrix);
            const Rational value = compute(mat);
            if (g_records) {
                std::cout << "n=" << mat.dim() << "\nvalue=" << value.str() << "\n";
            } else {
                std::cout << value.str() << "\n";
            }
        });
    };
    add_matrix_cmd("permanent", "permanent of a matrix (Ryser)",
                   [](const SquareMatrix& mat) { return permanent(mat); });
    add_matrix_cmd("determinant", "determinant of a matrix (fraction-free)",
                   [](const SquareMatrix& mat) { return determinant(mat); });
    add_matrix_cmd("pfaffian", "pfaffian of an antisymmetric matrix",
                   [](const SquareMatrix& mat) { return classical_pfaffian(mat); });

    // ---- verify-projection ----
    CLI::App* proj_cmd = app.add_subcommand(
        "verify-projection", "check Pf on the grid substitution against d!*per_d or d!*det_d");
    proj_cmd->add_option("--k", k, "half the tensor order")->required();
    proj_cmd->add_option("--d", d, "grid size")->required();
    proj_cmd->add_flag("--force", force, "run even when d >= 5");
    add_format(proj_cmd);
    proj_cmd->callback([&] {
        g_records = format == "records";
        const ProjectionReport report = verify_projection_theorem(k, d, force);
        std::cout << (g_records ? report.to_records() : report.to_text());
        if (!report.equal) {
            exit_code = 1;
        }
    });

    // ---- invariant-dim ----
    CLI::App* dim_cmd =
        app.add_subcommand("invariant-dim", "predicted vs measured invariant-space dimension");
    dim_cmd->add_option("--n", n, "vector-space dimension")->required();
    dim_cmd->add_option("--m", m, "tensor order")->required();
    dim_cmd->add_option("--b", b, "restrict to block-symmetric subspace, block size b");
    dim_cmd->add_option("--budget", budget, "basis budget (number of basis vectors)");
    add_format(dim_cmd);
    dim_cmd->callback([&] {
        g_records = format == "records";
        InvariantDimensionQuery q;
        q.n = n;
        q.m = m;
        if (dim_cmd->count("--b") > 0) {
            q.symmetrize_block = b;
        }
        if (budget > 0) {
            q.basis_budget = budget;
        }
        const BigInt predicted = invariant_dimension_predicted(n, m);
        std::string brute = "-";
        std::string match = "-";
        try {
            const std::size_t measured = invariant_dimension_bruteforce(q);
            brute = std::to_string(measured);
            match = (BigInt(static_cast<unsigned long>(measured)) == predicted) ? "true" : "false";
        } catch (const ResourceError&) {
            // over budget: predicted-only row
        }
        if (g_records) {
            std::cout << "n=" << n << "\nm=" << m << "\nb="
                      << (q.symmetrize_block ? std::to_string(*q.symmetrize_block) : "-") << "\n"
                      << "predicted=" << predicted.get_str() << "\nbrute=" << brute << "\n"
                      << "match=" << match << "\n";
        } else {
            std::cout << "n m b predicted brute match\n";
            std::cout << n << " " << m << " "
                      << (q.symmetrize_block ? std::to_string(*q.symmetrize_block) : "-") << " "
                      << predicted.get_str() << " " << brute << " " << match << "\n";
        }
        if (match == "false") {
            exit_code = 1;
        }
    });

    // ---- check-invariance ----
    CLI::App* inv_cmd = app.add_subcommand(
        "check-invariance", "hyperpfaffian invariance under random transvection products");
    inv_cmd->add_option("--k", k, "half the tensor order")->required();
    inv_cmd->add_option("--n", n, "vector-space dimension")->required();
    inv_cmd->add_option("--trials", trials, "number of random trials");
    inv_cmd->add_option("--seed", seed, "random seed");
    inv_cmd->add_flag("--perturb", perturb,
                      "negative control: also add a non-invariant coefficient sum");
    add_format(inv_cmd);
    inv_cmd->callback([&] {
        g_records = format == "records";
        if (trials < 0) {
            throw ValidationError("trials must be nonnegative");
        }
        SeededRng rng(seed);
        const int order = 2 * k;
        int passes = 0;
        int failures = 0;
        for (int t = 0; t < trials; ++t) {
            const SparseTensor p = random_tensor(rng, n, order, std::min(2 * n + 2, 12));
            const SquareMatrix g = random_special_linear(n, rng.next(), 6);
            const SparseTensor gp = apply_group_element(g, p);
            Rational lhs = hyperpfaffian(HyperpfaffianInstance(k, gp));
            Rational rhs = hyperpfaffian(HyperpfaffianInstance(k, p));
            if (perturb) {
                // Coefficient sums are not invariant; this makes the checked
                // quantity a deliberately broken "invariant".
                lhs += coefficient_sum(gp);
                rhs += coefficient_sum(p);
            }
            if (lhs == rhs) {
                ++passes;
            } else {
                ++failures;
            }
        }
        if (g_records) {
            std::cout << "k=" << k << "\nn=" << n << "\ntrials=" << trials << "\nseed=" << seed
                      << "\nperturb=" << (perturb ? "true" : "false") << "\npasses=" << passes
                      << "\nfailures=" << failures << "\n";
        } else {
            std::cout << "invariance suite k=" << k << " n=" << n << " seed=" << seed << ": "
                      << passes << "/" << trials << " trials pass";
            if (perturb) {
                std::cout << " (negative control active)";
            }
            std::cout << "\n";
        }
        if (failures > 0) {
            exit_code = 1;
        }
    });

    // ---- circuit ----
    std::string action = "print";
    std::vector<std::string> assignments;
    std::vector<std::string> mappings;
    CLI::App* circ_cmd = app.add_subcommand("circuit", "parse, evaluate, expand, or project hpfc circuits");
    circ_cmd->add_option("--input", input, "hpfc file, '-' for stdin");
    circ_cmd->add_option("--action", action, "print | size | eval | expand | project")
        ->check(CLI::IsMember({"print", "size", "eval", "expand", "project"}));
    circ_cmd->add_option("--set", assignments, "input assignment name=p/q (repeatable)");
    circ_cmd->add_option("--map", mappings,
                         "projection entry name=affine-form (repeatable), e.g. x1_2=y+1");
    circ_cmd->add_option("--budget", budget, "term budget for polynomial expansion");
    add_format(circ_cmd);
    circ_cmd->callback([&] {
        g_records = format == "records";
        const ArithmeticCircuit c = load_circuit(input);
        if (action == "print") {
            write_circuit(std::cout, c);
        } else if (action == "size") {
            emit("size", std::to_string(c.size()), std::to_string(c.size()));
        } else if (action == "eval") {
            std::map<std::string, Rational> assignment;
            for (const std::string& item : assignments) {
                const std::size_t at = item.find('=');
                if (at == std::string::npos) {
                    throw ValidationError("assignment must look like name=value: " + item);
                }
                assignment[item.substr(0, at)] = Rational::parse(item.substr(at + 1));
            }
            const Rational value = c.evaluate(assignment);
            emit("value", value.str(), value.str());
        } else if (action == "expand") {
            const Polynomial poly =
                budget > 0 ? c.to_polynomial(budget) : c.to_polynomial();
            const std::vector<std::string> names = c.input_names();
            const std::string text = poly.str([&names](int slot) {
                return names[static_cast<std::size_t>(slot)];
            });
            emit("polynomial", text, text);
        } else if (action == "project") {
            AffineSubstitution subst;
            for (const std::string& item : mappings) {
                const std::size_t at = item.find('=');
                if (at == std::string::npos) {
                    throw ValidationError("mapping must look like name=affine-form: " + item);
                }
                subst[item.substr(0, at)] = AffineForm::parse(item.substr(at + 1));
            }
            write_circuit(std::cout, project(c, subst));
        }
    });

    // ---- bench ----
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "timed hyperpfaffian evaluation on random tensors");
    bench_cmd->add_option("--k", k, "half the tensor order")->required();
    bench_cmd->add_option("--n", n, "vector-space dimension")->required();
    bench_cmd->add_option("--trials", trials, "number of random tensors");
    bench_cmd->add_option("--seed", seed, "random seed");
    bench_cmd->add_option("--density", density, "stored-entry fraction of n^(2k)")
        ->check(CLI::Range(0.0, 1.0));
    add_format(bench_cmd);
    bench_cmd->callback([&] {
        g_records = format == "records";
        if (trials < 0) {
            throw ValidationError("trials must be nonnegative");
        }
        double slots = 1.0;
        for (int i = 0; i < 2 * k; ++i) {
            slots *= n;
        }
        const int entries = std::max(1, static_cast<int>(density * slots));
        SeededRng rng(seed);
        EvalStats stats;
        Rational value_sum(0);
        const auto start = std::chrono::steady_clock::now();
        for (int t = 0; t < trials; ++t) {
            const SparseTensor p = random_tensor(rng, n, 2 * k, entries);
            value_sum += hyperpfaffian(HyperpfaffianInstance(k, p), &stats);
        }
        const auto stop = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() / 1000.0;
        if (g_records) {
            // wall time is deliberately omitted: records must be byte-stable
            std::cout << "k=" << k << "\nn=" << n << "\ntrials=" << trials << "\nseed=" << seed
                      << "\nentries=" << entries << "\nnodes=" << stats.nodes
                      << "\nleaves=" << stats.leaves << "\nvalue_sum=" << value_sum.str() << "\n";
        } else {
            std::cout << "bench k=" << k << " n=" << n << " trials=" << trials << " seed=" << seed
                      << " entries=" << entries << "\n";
            std::cout << "nodes=" << stats.nodes << " leaves=" << stats.leaves
                      << " value_sum=" << value_sum.str() << "\n";
            std::cout << "time_ms=" << ms << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << " (computed bound " << e.computed_bound() << ")\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
