#include "tangency/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace tangency {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

FlagMismatch::FlagMismatch(const std::string& flag)
    : std::runtime_error("declared flag '" + flag + "' does not hold"), flag_(flag) {}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool skip(const std::string& line) {
    const auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos || line[p] == '#';
}

Rational rational_at(const Token& t, std::size_t line, std::size_t offset = 0) {
    try {
        return parse_rational(std::string_view(t.text).substr(offset));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, t.column + offset, e.what());
    }
}

long long integer_at(const Token& t, std::size_t line) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
    }
}

std::string flags_line(const CurveFamily& f) {
    std::string s = "flags";
    if (f.x_monotone) s += " x_monotone";
    if (f.bi_infinite) s += " bi_infinite";
    if (f.claims_one_intersecting) s += " one_intersecting";
    if (f.claims_precisely_one) s += " precisely_one";
    return s;
}

}  // namespace

void write_family(std::ostream& out, const CurveFamily& f) {
    out << "tangency-family 1\n";
    if (!f.generator.empty()) out << "generator " << f.generator << '\n';
    if (f.seed) out << "seed " << *f.seed << '\n';
    if (f.window) out << "window " << to_string(f.window->x_lo) << ' ' << to_string(f.window->x_hi) << '\n';
    if (f.ground) out << "ground " << to_string(*f.ground) << '\n';
    out << flags_line(f) << '\n';
    out << "curves " << f.chains.size() << '\n';
    std::vector<const PolyChain*> sorted;
    for (const auto& c : f.chains) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(), [](const PolyChain* a, const PolyChain* b) { return a->id < b->id; });
    for (const PolyChain* c : sorted) {
        out << "curve " << c->id;
        for (const auto& p : c->vertices) out << ' ' << to_string(p.x) << ',' << to_string(p.y);
        out << '\n';
    }
}

CurveFamily read_family(std::istream& in) {
    CurveFamily f;
    std::string line;
    std::size_t no = 0;
    bool header = false;
    std::optional<std::size_t> declared;
    while (std::getline(in, line)) {
        ++no;
        if (skip(line)) continue;
        const auto tok = tokenize(line);
        const std::string& key = tok[0].text;
        if (!header) {
            if (key != "tangency-family") throw ParseError(no, tok[0].column, "expected 'tangency-family' header");
            if (tok.size() != 2 || tok[1].text != "1") {
                throw ParseError(no, tok.size() > 1 ? tok[1].column : line.size() + 1, "unsupported format version");
            }
            header = true;
            continue;
        }
        auto need = [&](std::size_t n) {
            if (tok.size() != n) {
                throw ParseError(no, tok.size() > n ? tok[n].column : line.size() + 1,
                                 "'" + key + "' expects " + std::to_string(n - 1) + " value(s)");
            }
        };
        if (key == "generator") {
            if (tok.size() < 2) throw ParseError(no, line.size() + 1, "generator needs a name");
            const std::size_t from = tok[1].column - 1;
            const std::size_t to = line.find_last_not_of(" \t\r");
            f.generator = line.substr(from, to + 1 - from);
        } else if (key == "seed") {
            need(2);
            try {
                std::size_t used = 0;
                f.seed = std::stoull(tok[1].text, &used);
                if (used != tok[1].text.size() || tok[1].text[0] == '-') throw std::invalid_argument("seed");
            } catch (const std::exception&) {
                throw ParseError(no, tok[1].column, "malformed seed '" + tok[1].text + "'");
            }
        } else if (key == "window") {
            need(3);
            f.window = Window{rational_at(tok[1], no), rational_at(tok[2], no)};
            if (!(f.window->x_lo < f.window->x_hi)) throw ParseError(no, tok[1].column, "empty window");
        } else if (key == "ground") {
            need(2);
            f.ground = rational_at(tok[1], no);
        } else if (key == "flags") {
            for (std::size_t i = 1; i < tok.size(); ++i) {
                const auto& t = tok[i].text;
                if (t == "x_monotone") f.x_monotone = true;
                else if (t == "bi_infinite") f.bi_infinite = true;
                else if (t == "one_intersecting") f.claims_one_intersecting = true;
                else if (t == "precisely_one") f.claims_precisely_one = true;
                else throw ParseError(no, tok[i].column, "unknown flag '" + t + "'");
            }
        } else if (key == "curves") {
            need(2);
            const long long n = integer_at(tok[1], no);
            if (n < 0) throw ParseError(no, tok[1].column, "negative curve count");
            declared = static_cast<std::size_t>(n);
        } else if (key == "curve") {
            if (tok.size() < 2) throw ParseError(no, line.size() + 1, "curve needs an id");
            PolyChain c;
            c.id = static_cast<CurveId>(integer_at(tok[1], no));
            for (std::size_t i = 2; i < tok.size(); ++i) {
                const auto comma = tok[i].text.find(',');
                if (comma == std::string::npos) throw ParseError(no, tok[i].column, "expected x,y");
                Token xt{tok[i].text.substr(0, comma), tok[i].column};
                c.vertices.push_back({rational_at(xt, no), rational_at(tok[i], no, comma + 1)});
            }
            if (c.vertices.size() < 2) throw ParseError(no, tok[0].column, "curve needs at least two vertices");
            f.chains.push_back(std::move(c));
        } else {
            throw ParseError(no, tok[0].column, "unknown record '" + key + "'");
        }
    }
    if (!header) throw ParseError(no + 1, 1, "missing 'tangency-family' header");
    if (declared && *declared != f.chains.size()) {
        throw ParseError(no + 1, 1, "declared " + std::to_string(*declared) + " curves, found " +
                                        std::to_string(f.chains.size()));
    }
    return f;
}

void save_family(const CurveFamily& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_family(out, f);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

CurveFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    CurveFamily f = read_family(in);
    if (f.x_monotone) {
        for (const auto& c : f.chains) {
            if (!is_x_monotone(c)) throw FlagMismatch("x_monotone");
        }
    }
    if (!(f.bi_infinite || f.ground || f.claims_one_intersecting || f.claims_precisely_one)) return f;
    const ValidationReport r = validate_family(f);
    if (!r.ids_unique) throw FlagMismatch("unique ids");
    if (f.bi_infinite && !r.bi_infinite_ok) throw FlagMismatch("bi_infinite");
    if (f.ground && !r.grounded_ok) throw FlagMismatch("ground");
    if (f.claims_one_intersecting && !r.is_1_intersecting) throw FlagMismatch("one_intersecting");
    if (f.claims_precisely_one && !r.is_precisely_1) throw FlagMismatch("precisely_one");
    return f;
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
    out << "A " << g.a_size() << " B " << g.b_size() << '\n';
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

BipartiteGraph read_graph(std::istream& in) {
    std::string line;
    std::size_t no = 0;
    std::optional<BipartiteGraph> g;
    while (std::getline(in, line)) {
        ++no;
        if (skip(line)) continue;
        const auto tok = tokenize(line);
        if (!g) {
            if (tok.size() != 4 || tok[0].text != "A" || tok[2].text != "B") {
                throw ParseError(no, tok[0].column, "expected header 'A <size> B <size>'");
            }
            const long long a = integer_at(tok[1], no);
            const long long b = integer_at(tok[3], no);
            if (a < 0 || b < 0) throw ParseError(no, tok[1].column, "negative side size");
            g.emplace(static_cast<int>(a), static_cast<int>(b));
            continue;
        }
        if (tok.size() != 2) throw ParseError(no, tok[0].column, "expected 'a b'");
        const long long a = integer_at(tok[0], no);
        const long long b = integer_at(tok[1], no);
        if (a < 0 || a >= g->a_size()) throw ParseError(no, tok[0].column, "A vertex out of range");
        if (b < 0 || b >= g->b_size()) throw ParseError(no, tok[1].column, "B vertex out of range");
        if (!g->add_edge(static_cast<int>(a), static_cast<int>(b))) throw ParseError(no, tok[0].column, "duplicate edge");
    }
    if (!g) throw ParseError(no + 1, 1, "missing graph header");
    return *g;
}

void save_graph(const BipartiteGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_graph(out, g);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

BipartiteGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_graph(in);
}

std::vector<std::vector<int>> read_lists(std::istream& in) {
    std::vector<std::vector<int>> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto p = line.find_first_not_of(" \t\r");
        if (p != std::string::npos && line[p] == '#') continue;
        std::vector<int> list;
        for (const auto& t : tokenize(line)) list.push_back(static_cast<int>(integer_at(t, no)));
        out.push_back(std::move(list));
    }
    return out;
}

}  // namespace tangency
