#include "mixspec/graph_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace mixspec {

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> split_line(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long parse_number(const Token& tok, int line_no) {
    try {
        size_t pos = 0;
        long v = std::stol(tok.text, &pos);
        if (pos != tok.text.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, tok.column, "expected an integer, got '" + tok.text + "'");
    }
}

}  // namespace

MixedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

MixedGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool saw_header = false, saw_n = false;
    MixedGraph g;

    auto check_vertex = [&](long v, const Token& tok, int ln) {
        if (v < 0 || v >= g.vertex_count())
            throw ParseError(ln, tok.column,
                             "vertex id " + std::to_string(v) + " out of range [0," +
                                 std::to_string(g.vertex_count()) + ")");
        return static_cast<Vertex>(v);
    };
    auto read_mult = [&](const std::vector<Token>& toks, size_t idx, int ln) {
        if (toks.size() <= idx) return 1L;
        long m = parse_number(toks[idx], ln);
        if (m < 0) throw ParseError(ln, toks[idx].column, "negative multiplicity");
        return m;
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<Token> toks = split_line(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;

        if (!saw_header) {
            if (kw != "mg") throw ParseError(line_no, toks[0].column, "expected header 'mg 1'");
            if (toks.size() != 2 || toks[1].text != "1")
                throw ParseError(line_no, toks.size() > 1 ? toks[1].column : toks[0].column,
                                 "unsupported format version");
            saw_header = true;
            continue;
        }
        if (!saw_n) {
            if (kw != "n") throw ParseError(line_no, toks[0].column, "expected vertex count 'n <count>'");
            if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "'n' takes one argument");
            long n = parse_number(toks[1], line_no);
            if (n < 0) throw ParseError(line_no, toks[1].column, "negative vertex count");
            g = MixedGraph(static_cast<int>(n));
            saw_n = true;
            continue;
        }

        if (kw == "e" || kw == "a") {
            if (toks.size() < 3 || toks.size() > 4)
                throw ParseError(line_no, toks[0].column, "'" + kw + "' takes two vertex ids and an optional multiplicity");
            Vertex u = check_vertex(parse_number(toks[1], line_no), toks[1], line_no);
            Vertex v = check_vertex(parse_number(toks[2], line_no), toks[2], line_no);
            long m = read_mult(toks, 3, line_no);
            if (u == v)
                throw ParseError(line_no, toks[2].column,
                                 "endpoints must differ; use 'le'/'la' for loops");
            g = kw == "e" ? g.add_edge(u, v, static_cast<int>(m))
                          : g.add_arc(u, v, static_cast<int>(m));
        } else if (kw == "le" || kw == "la") {
            if (toks.size() < 2 || toks.size() > 3)
                throw ParseError(line_no, toks[0].column, "'" + kw + "' takes one vertex id and an optional multiplicity");
            Vertex v = check_vertex(parse_number(toks[1], line_no), toks[1], line_no);
            long m = read_mult(toks, 2, line_no);
            g = kw == "le" ? g.add_loop(v, static_cast<int>(m))
                           : g.add_dloop(v, static_cast<int>(m));
        } else {
            throw ParseError(line_no, toks[0].column, "unknown statement '" + kw + "'");
        }
    }
    if (!saw_header) throw ParseError(line_no + 1, 1, "missing header 'mg 1'");
    if (!saw_n) throw ParseError(line_no + 1, 1, "missing vertex count 'n <count>'");
    return g;
}

std::string serialize_graph(const MixedGraph& g) {
    std::ostringstream os;
    os << "mg 1\n";
    os << "n " << g.vertex_count() << "\n";
    for (const auto& [key, m] : g.edges()) {
        os << "e " << key.first << " " << key.second;
        if (m != 1) os << " " << m;
        os << "\n";
    }
    for (const auto& [key, m] : g.arcs()) {
        os << "a " << key.first << " " << key.second;
        if (m != 1) os << " " << m;
        os << "\n";
    }
    for (const auto& [v, m] : g.loops()) {
        os << "le " << v;
        if (m != 1) os << " " << m;
        os << "\n";
    }
    for (const auto& [v, m] : g.dloops()) {
        os << "la " << v;
        if (m != 1) os << " " << m;
        os << "\n";
    }
    return os.str();
}

}  // namespace mixspec
