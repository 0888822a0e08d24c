#include "turancert/edge_list.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "turancert/errors.hpp"

namespace turancert {

namespace {

bool is_blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

bool is_comment(const std::string& s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return false;
}

long long parse_int(const std::string& tok, int line, const char* what) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok +
                                   "'");
    }
    if (pos != tok.size())
        throw ParseError(line, std::string("trailing characters after ") + what + ": '" + tok +
                                   "'");
    return value;
}

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string raw;
    int line_no = 0;
    long long n = -1, m = -1;
    Graph g;
    long long seen = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        if (is_blank(raw) || is_comment(raw)) continue;
        auto toks = tokens_of(raw);

        if (n < 0) {  // header
            if (toks.size() != 2)
                throw ParseError(line_no, "header must be 'n m', got " +
                                              std::to_string(toks.size()) + " tokens");
            n = parse_int(toks[0], line_no, "vertex count");
            m = parse_int(toks[1], line_no, "edge count");
            if (n < 0) throw ParseError(line_no, "vertex count is negative");
            if (m < 0) throw ParseError(line_no, "edge count is negative");
            if (n > kMaxOrder)
                throw ParseError(line_no, "vertex count " + std::to_string(n) +
                                              " exceeds limit " + std::to_string(kMaxOrder));
            if (m > static_cast<long long>(n) * (n - 1) / 2)
                throw ParseError(line_no, "edge count exceeds pair count");
            g = Graph(static_cast<int>(n));
            continue;
        }

        if (seen == m) throw ParseError(line_no, "more edge lines than declared");
        if (toks.size() != 2)
            throw ParseError(line_no,
                             "edge line must be 'u v', got " + std::to_string(toks.size()) +
                                 " tokens");
        long long u = parse_int(toks[0], line_no, "endpoint");
        long long v = parse_int(toks[1], line_no, "endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "vertex outside [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "self-loop");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(line_no, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }

    if (n < 0) throw ParseError(line_no + 1, "missing header line");
    if (seen != m)
        throw ParseError(line_no + 1, "declared " + std::to_string(m) + " edges, found " +
                                          std::to_string(seen));
    return g;
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_edge_list(iss);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << to_edge_list(g);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace turancert
