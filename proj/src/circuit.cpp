#include "hpf/circuit.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hpf/errors.hpp"

namespace hpf {

std::uint32_t ArithmeticCircuit::check_operand(std::uint32_t id) const {
    if (id >= nodes_.size()) {
        throw ValidationError("operand id does not exist yet");
    }
    return id;
}

std::uint32_t ArithmeticCircuit::add_input(std::string name) {
    if (name.empty()) {
        throw ValidationError("input name must be non-empty");
    }
    CircuitNode node;
    node.kind = NodeKind::Input;
    node.name = std::move(name);
    nodes_.push_back(std::move(node));
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t ArithmeticCircuit::add_constant(Rational value) {
    CircuitNode node;
    node.kind = NodeKind::Constant;
    node.value = std::move(value);
    nodes_.push_back(std::move(node));
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t ArithmeticCircuit::add_sum(std::uint32_t lhs, std::uint32_t rhs) {
    CircuitNode node;
    node.kind = NodeKind::Add;
    node.lhs = check_operand(lhs);
    node.rhs = check_operand(rhs);
    nodes_.push_back(std::move(node));
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t ArithmeticCircuit::add_product(std::uint32_t lhs, std::uint32_t rhs) {
    CircuitNode node;
    node.kind = NodeKind::Mul;
    node.lhs = check_operand(lhs);
    node.rhs = check_operand(rhs);
    nodes_.push_back(std::move(node));
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

void ArithmeticCircuit::set_output(std::uint32_t id) {
    output_ = check_operand(id);
    has_output_ = true;
}

std::uint32_t ArithmeticCircuit::output() const {
    if (!has_output_) {
        throw ValidationError("circuit has no designated output");
    }
    return output_;
}

std::vector<std::string> ArithmeticCircuit::input_names() const {
    std::set<std::string> names;
    for (const CircuitNode& node : nodes_) {
        if (node.kind == NodeKind::Input) {
            names.insert(node.name);
        }
    }
    return std::vector<std::string>(names.begin(), names.end());
}

Rational ArithmeticCircuit::evaluate(const std::map<std::string, Rational>& assignment) const {
    std::vector<Rational> value(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const CircuitNode& node = nodes_[i];
        switch (node.kind) {
            case NodeKind::Input: {
                auto it = assignment.find(node.name);
                if (it == assignment.end()) {
                    throw EvalError("unassigned input variable: " + node.name);
                }
                value[i] = it->second;
                break;
            }
            case NodeKind::Constant:
                value[i] = node.value;
                break;
            case NodeKind::Add:
                value[i] = value[node.lhs] + value[node.rhs];
                break;
            case NodeKind::Mul:
                value[i] = value[node.lhs] * value[node.rhs];
                break;
        }
    }
    return value[output()];
}

Polynomial ArithmeticCircuit::to_polynomial(std::uint64_t term_budget) const {
    const std::vector<std::string> names = input_names();
    const int arity = static_cast<int>(names.size());
    std::map<std::string, int> slot_of;
    for (int s = 0; s < arity; ++s) {
        slot_of.emplace(names[static_cast<std::size_t>(s)], s);
    }

    std::vector<Polynomial> value(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const CircuitNode& node = nodes_[i];
        switch (node.kind) {
            case NodeKind::Input:
                value[i] = Polynomial::variable(arity, slot_of.at(node.name));
                break;
            case NodeKind::Constant:
                value[i] = Polynomial::constant(arity, node.value);
                break;
            case NodeKind::Add:
                value[i] = value[node.lhs] + value[node.rhs];
                break;
            case NodeKind::Mul:
                value[i] = value[node.lhs] * value[node.rhs];
                break;
        }
        if (value[i].term_count() > term_budget) {
            throw ResourceError("polynomial expansion exceeds term budget",
                                std::to_string(value[i].term_count()));
        }
    }
    return value[output()];
}

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t';
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::size_t at = 0;
    while (at < line.size()) {
        while (at < line.size() && is_space(line[at])) {
            ++at;
        }
        std::size_t end = at;
        while (end < line.size() && !is_space(line[end])) {
            ++end;
        }
        if (end > at) {
            tokens.push_back(line.substr(at, end - at));
        }
        at = end;
    }
    return tokens;
}

}  // namespace

AffineForm AffineForm::parse(const std::string& text) {
    AffineForm form;
    form.constant = Rational(0);
    std::size_t at = 0;
    const auto skip_ws = [&] {
        while (at < text.size() && is_space(text[at])) {
            ++at;
        }
    };
    skip_ws();
    if (at == text.size()) {
        throw ValidationError("empty affine form");
    }
    bool first = true;
    while (at < text.size()) {
        int sign = 1;
        skip_ws();
        if (!first || text[at] == '+' || text[at] == '-') {
            if (at >= text.size() || (text[at] != '+' && text[at] != '-')) {
                throw ValidationError("expected '+' or '-' between affine terms");
            }
            sign = text[at] == '-' ? -1 : 1;
            ++at;
            skip_ws();
        }
        first = false;
        // read one term: [rational] [* name] | name
        std::size_t end = at;
        while (end < text.size() && !is_space(text[end]) && text[end] != '+' && text[end] != '-' &&
               text[end] != '*') {
            ++end;
        }
        if (end == at) {
            throw ValidationError("malformed affine term");
        }
        std::string token = text.substr(at, end - at);
        at = end;
        skip_ws();
        const bool numeric = token.find_first_not_of("0123456789/") == std::string::npos;
        if (numeric) {
            Rational coeff = Rational::parse(token);
            if (at < text.size() && text[at] == '*') {
                ++at;
                skip_ws();
                std::size_t name_end = at;
                while (name_end < text.size() && !is_space(text[name_end]) &&
                       text[name_end] != '+' && text[name_end] != '-') {
                    ++name_end;
                }
                if (name_end == at) {
                    throw ValidationError("expected variable name after '*'");
                }
                form.terms.emplace_back(text.substr(at, name_end - at),
                                        sign < 0 ? -coeff : coeff);
                at = name_end;
            } else {
                form.constant += sign < 0 ? -coeff : coeff;
            }
        } else {
            if (at < text.size() && text[at] == '*') {
                throw ValidationError("variable-times-variable is not affine");
            }
            form.terms.emplace_back(std::move(token), Rational(sign));
        }
        skip_ws();
    }
    return form;
}

ArithmeticCircuit project(const ArithmeticCircuit& c, const AffineSubstitution& s) {
    for (const std::string& name : c.input_names()) {
        if (s.find(name) == s.end()) {
            throw ValidationError("substitution missing input variable: " + name);
        }
    }
    ArithmeticCircuit out;
    std::vector<std::uint32_t> remap(c.nodes().size(), 0);
    for (std::size_t i = 0; i < c.nodes().size(); ++i) {
        const CircuitNode& node = c.nodes()[i];
        switch (node.kind) {
            case NodeKind::Input: {
                const AffineForm& form = s.at(node.name);
                std::vector<std::uint32_t> parts;
                for (const auto& [var, coeff] : form.terms) {
                    if (coeff.is_zero()) {
                        continue;
                    }
                    const std::uint32_t leaf = out.add_input(var);
                    if (coeff == Rational(1)) {
                        parts.push_back(leaf);
                    } else {
                        parts.push_back(out.add_product(out.add_constant(coeff), leaf));
                    }
                }
                if (parts.empty() || !form.constant.is_zero()) {
                    parts.push_back(out.add_constant(form.constant));
                }
                while (parts.size() > 1) {
                    // balanced pairwise reduction
                    std::vector<std::uint32_t> next;
                    for (std::size_t a = 0; a + 1 < parts.size(); a += 2) {
                        next.push_back(out.add_sum(parts[a], parts[a + 1]));
                    }
                    if (parts.size() % 2 == 1) {
                        next.push_back(parts.back());
                    }
                    parts = std::move(next);
                }
                remap[i] = parts.front();
                break;
            }
            case NodeKind::Constant:
                remap[i] = out.add_constant(c.nodes()[i].value);
                break;
            case NodeKind::Add:
                remap[i] = out.add_sum(remap[node.lhs], remap[node.rhs]);
                break;
            case NodeKind::Mul:
                remap[i] = out.add_product(remap[node.lhs], remap[node.rhs]);
                break;
        }
    }
    out.set_output(remap[c.output()]);
    return out;
}

namespace {

std::uint32_t balanced_fold(ArithmeticCircuit& c, std::vector<std::uint32_t> parts, bool product) {
    while (parts.size() > 1) {
        std::vector<std::uint32_t> next;
        for (std::size_t a = 0; a + 1 < parts.size(); a += 2) {
            next.push_back(product ? c.add_product(parts[a], parts[a + 1])
                                   : c.add_sum(parts[a], parts[a + 1]));
        }
        if (parts.size() % 2 == 1) {
            next.push_back(parts.back());
        }
        parts = std::move(next);
    }
    return parts.front();
}

}  // namespace

ArithmeticCircuit build_permanent_circuit(int n) {
    if (n < 1 || n > 6) {
        throw ValidationError("permanent circuit construction supports 1 <= n <= 6");
    }
    ArithmeticCircuit c;
    std::vector<std::vector<std::uint32_t>> cell(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            cell[static_cast<std::size_t>(i - 1)].push_back(
                c.add_input("x" + std::to_string(i) + "_" + std::to_string(j)));
        }
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        images[static_cast<std::size_t>(i)] = i;
    }
    std::vector<std::uint32_t> products;
    do {
        std::vector<std::uint32_t> factors;
        for (int i = 0; i < n; ++i) {
            factors.push_back(
                cell[static_cast<std::size_t>(i)][static_cast<std::size_t>(images[static_cast<std::size_t>(i)])]);
        }
        products.push_back(balanced_fold(c, std::move(factors), true));
    } while (std::next_permutation(images.begin(), images.end()));
    c.set_output(balanced_fold(c, std::move(products), false));
    return c;
}

ArithmeticCircuit read_circuit(std::istream& in) {
    ArithmeticCircuit c;
    std::string line;
    int line_no = 0;
    bool saw_output = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }
        if (saw_output) {
            throw ParseError("content after output line", line_no);
        }
        try {
            if (tokens[0] == "output") {
                if (tokens.size() != 2) {
                    throw ValidationError("output line needs exactly one id");
                }
                const unsigned long id = std::stoul(tokens[1]);
                if (id >= c.size()) {
                    throw ValidationError("output id does not exist");
                }
                c.set_output(static_cast<std::uint32_t>(id));
                saw_output = true;
                continue;
            }
            if (tokens.size() < 3) {
                throw ValidationError("node line needs at least an id, a kind, and arguments");
            }
            const unsigned long id = std::stoul(tokens[0]);
            if (id != c.size()) {
                throw ValidationError("node ids must be consecutive from 0");
            }
            const std::string& kind = tokens[1];
            if (kind == "input") {
                if (tokens.size() != 3) {
                    throw ValidationError("input line needs exactly one name");
                }
                c.add_input(tokens[2]);
            } else if (kind == "const") {
                if (tokens.size() != 3) {
                    throw ValidationError("const line needs exactly one rational");
                }
                c.add_constant(Rational::parse(tokens[2]));
            } else if (kind == "add" || kind == "mul") {
                if (tokens.size() != 4) {
                    throw ValidationError("gate line needs exactly two operand ids");
                }
                const unsigned long lhs = std::stoul(tokens[2]);
                const unsigned long rhs = std::stoul(tokens[3]);
                if (lhs >= id || rhs >= id) {
                    throw ValidationError("gate operands must precede the gate");
                }
                if (kind == "add") {
                    c.add_sum(static_cast<std::uint32_t>(lhs), static_cast<std::uint32_t>(rhs));
                } else {
                    c.add_product(static_cast<std::uint32_t>(lhs), static_cast<std::uint32_t>(rhs));
                }
            } else {
                throw ValidationError("unknown node kind: " + kind);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed integer", line_no);
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", line_no);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!saw_output) {
        throw ParseError("missing output line", line_no);
    }
    return c;
}

ArithmeticCircuit read_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open circuit file: " + path);
    }
    return read_circuit(in);
}

void write_circuit(std::ostream& out, const ArithmeticCircuit& c) {
    for (std::size_t i = 0; i < c.nodes().size(); ++i) {
        const CircuitNode& node = c.nodes()[i];
        out << i << " ";
        switch (node.kind) {
            case NodeKind::Input:
                out << "input " << node.name;
                break;
            case NodeKind::Constant:
                out << "const " << node.value.str();
                break;
            case NodeKind::Add:
                out << "add " << node.lhs << " " << node.rhs;
                break;
            case NodeKind::Mul:
                out << "mul " << node.lhs << " " << node.rhs;
                break;
        }
        out << "\n";
    }
    out << "output " << c.output() << "\n";
}

std::string circuit_to_string(const ArithmeticCircuit& c) {
    std::ostringstream out;
    write_circuit(out, c);
    return out.str();
}

}  // namespace hpf
