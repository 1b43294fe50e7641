#include "hpf/tensor_io.hpp"

#include <fstream>
#include <sstream>

#include "hpf/errors.hpp"

namespace hpf {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_positive_int(const std::string& tok, const char* what, std::size_t line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 1) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected positive integer for ") + what + ", got '" + tok + "'",
                         line);
    }
}

}  // namespace

SparseTensor read_tensor(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    auto next_content_line = [&](std::vector<std::string>& toks) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            toks = tokens_of(line);
            if (!toks.empty()) return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_content_line(toks) || toks.size() != 2 || toks[0] != "hpft" || toks[1] != "1")
        throw ParseError("expected header 'hpft 1'", lineno ? lineno : 1);

    if (!next_content_line(toks) || toks.size() != 4 || toks[0] != "n" || toks[2] != "m")
        throw ParseError("expected dimension line 'n <n> m <m>'", lineno ? lineno : 2);
    const int n = parse_positive_int(toks[1], "n", lineno);
    const int m = parse_positive_int(toks[3], "m", lineno);

    SparseTensor t(n, m);
    while (next_content_line(toks)) {
        if (toks.size() != static_cast<std::size_t>(m) + 1)
            throw ParseError("entry line needs " + std::to_string(m) + " indices and a coefficient",
                             lineno);
        MultiIndex idx(static_cast<std::size_t>(m));
        for (int s = 0; s < m; ++s) {
            int v = parse_positive_int(toks[static_cast<std::size_t>(s)], "index", lineno);
            if (v > n) throw ParseError("index " + std::to_string(v) + " out of range 1.." + std::to_string(n), lineno);
            idx[static_cast<std::size_t>(s)] = v;
        }
        Rational coeff;
        try {
            coeff = Rational::parse(toks.back());
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), lineno);
        }
        if (coeff.is_zero()) throw ParseError("stored coefficients must be nonzero", lineno);
        if (t.contains(idx)) throw ParseError("duplicate multi-index", lineno);
        t.set(idx, coeff);
    }
    return t;
}

SparseTensor read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return read_tensor(in);
}

void write_tensor(std::ostream& out, const SparseTensor& t) {
    out << "hpft 1\n";
    out << "n " << t.dim() << " m " << t.order() << "\n";
    for (const auto& [idx, c] : t.entries()) {
        for (int v : idx) out << v << " ";
        out << c.str() << "\n";
    }
}

std::string tensor_to_string(const SparseTensor& t) {
    std::ostringstream ss;
    write_tensor(ss, t);
    return ss.str();
}

}  // namespace hpf
