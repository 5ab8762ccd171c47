#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "oddcolor/graph.hpp"

namespace oddcolor {

enum class graph_format { dimacs, edgelist };

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

/// DIMACS: "c ..." comments, one "p edge <n> <m>" header, "e <u> <v>" with
/// 1-indexed endpoints. Edgelist: one 0-indexed "u v" pair per line; the
/// vertex count is one more than the largest index seen. Duplicate edges
/// collapse; self-loops and out-of-range indices are errors.
graph parse_graph(std::string_view text, graph_format format);
graph_format parse_format_name(std::string_view name);

std::string write_dimacs(const graph& g, std::string_view comment = {});
std::string write_edgelist(const graph& g);

} // namespace oddcolor
