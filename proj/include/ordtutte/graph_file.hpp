#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>

#include "ordtutte/multigraph.hpp"
#include "ordtutte/weights.hpp"

namespace ordtutte {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

// Text format: a `vertices <m>` line followed by one `edge <id> <u> <v>
// [<lambda>]` line per edge; `#` starts a comment. The edge order in the
// file IS the processing order, so a separate `order` directive is rejected.
// Lambda literals are optional exact rationals ("1/3", "0.25"); without one
// the weight stays the symbolic lambda_id.
struct ParsedGraph {
    Multigraph graph;
    EdgeOrdering ordering;                  // file order
    std::map<int, Rational> lambda_literals;  // only edges that carried one
};

ParsedGraph parse_graph_file(std::istream& in);
ParsedGraph parse_graph_file(const std::filesystem::path& path);

}  // namespace ordtutte
