#include "ordtutte/graph_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ordtutte {

ParsedGraph parse_graph_file(std::istream& in) {
    int line_no = 0;
    bool have_vertices = false;
    int vertex_count = 0;
    std::vector<Edge> edges;
    EdgeOrdering ordering;
    std::map<int, Rational> literals;

    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) continue;  // blank or comment-only

        if (keyword == "vertices") {
            if (have_vertices) throw parse_error(line_no, "duplicate vertices line");
            std::string extra;
            if (!(fields >> vertex_count) || vertex_count < 0 || (fields >> extra))
                throw parse_error(line_no, "expected: vertices <m>");
            have_vertices = true;
        } else if (keyword == "edge") {
            if (!have_vertices)
                throw parse_error(line_no, "vertices line must come before edges");
            int id, u, v;
            if (!(fields >> id >> u >> v))
                throw parse_error(line_no, "expected: edge <id> <u> <v> [<lambda>]");
            if (id <= 0) throw parse_error(line_no, "edge ids must be positive");
            for (const Edge& e : edges)
                if (e.id == id)
                    throw parse_error(line_no, "duplicate edge id " + std::to_string(id));
            if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
                throw parse_error(line_no, "endpoint out of range for edge " +
                                               std::to_string(id));
            std::string literal;
            if (fields >> literal) {
                try {
                    literals[id] = parse_rational(literal);
                } catch (const std::exception&) {
                    throw parse_error(line_no, "bad lambda literal '" + literal + "'");
                }
                std::string extra;
                if (fields >> extra)
                    throw parse_error(line_no, "unexpected trailing field '" + extra + "'");
            }
            edges.push_back({id, u, v});
            ordering.push_back(id);
        } else if (keyword == "order") {
            throw parse_error(line_no,
                              "the edge order in the file is the processing order; "
                              "an 'order' directive is not supported");
        } else {
            throw parse_error(line_no, "unknown directive '" + keyword + "'");
        }
    }
    if (!have_vertices) throw parse_error(line_no, "missing vertices line");
    return {Multigraph(vertex_count, std::move(edges)), std::move(ordering),
            std::move(literals)};
}

ParsedGraph parse_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_graph_file(in);
}

}  // namespace ordtutte
