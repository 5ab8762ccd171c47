#include "oddcolor/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace oddcolor {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, int line)
{
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw parse_error(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

template <class F>
void for_each_line(std::string_view text, F&& f)
{
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        ++lineno;
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        f(lineno, line);
        pos = nl + 1;
    }
}

graph parse_dimacs(std::string_view text)
{
    bool have_header = false;
    int n = 0;
    std::vector<std::pair<vertex, vertex>> edges;
    std::vector<int> edge_lines;
    for_each_line(text, [&](int lineno, std::string_view line) {
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c")
            return;
        if (tok[0] == "p") {
            if (have_header)
                throw parse_error(lineno, "duplicate problem line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                throw parse_error(lineno, "malformed header, expected 'p edge <n> <m>'");
            long long nn = to_int(tok[2], lineno);
            to_int(tok[3], lineno);
            if (nn < 0 || nn > 1'000'000)
                throw parse_error(lineno, "vertex count out of range");
            n = static_cast<int>(nn);
            have_header = true;
            return;
        }
        if (tok[0] == "e") {
            if (!have_header)
                throw parse_error(lineno, "edge before 'p edge' header");
            if (tok.size() != 3)
                throw parse_error(lineno, "malformed edge line");
            long long u = to_int(tok[1], lineno), v = to_int(tok[2], lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(lineno, "vertex index out of range");
            if (u == v)
                throw parse_error(lineno, "self-loop");
            edges.emplace_back(static_cast<vertex>(u - 1), static_cast<vertex>(v - 1));
            return;
        }
        throw parse_error(lineno, "unrecognised line type '" + std::string(tok[0]) + "'");
    });
    if (!have_header)
        throw parse_error(1, "missing 'p edge' header");
    return graph(n, edges);
}

graph parse_edgelist(std::string_view text)
{
    std::vector<std::pair<vertex, vertex>> edges;
    int n = 0;
    for_each_line(text, [&](int lineno, std::string_view line) {
        auto tok = split_ws(line);
        if (tok.empty() || tok[0].front() == '#')
            return;
        if (tok.size() != 2)
            throw parse_error(lineno, "expected 'u v'");
        long long u = to_int(tok[0], lineno), v = to_int(tok[1], lineno);
        if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
            throw parse_error(lineno, "vertex index out of range");
        if (u == v)
            throw parse_error(lineno, "self-loop");
        edges.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
        n = std::max<int>(n, static_cast<int>(std::max(u, v)) + 1);
    });
    return graph(n, edges);
}

} // namespace

graph parse_graph(std::string_view text, graph_format format)
{
    return format == graph_format::dimacs ? parse_dimacs(text) : parse_edgelist(text);
}

graph_format parse_format_name(std::string_view name)
{
    if (name == "dimacs" || name == "col")
        return graph_format::dimacs;
    if (name == "edgelist")
        return graph_format::edgelist;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

std::string write_dimacs(const graph& g, std::string_view comment)
{
    std::ostringstream out;
    if (!comment.empty())
        out << "c " << comment << '\n';
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string write_edgelist(const graph& g)
{
    std::ostringstream out;
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace oddcolor
