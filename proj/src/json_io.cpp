#include "ordtutte/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace ordtutte {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string coeff_str(const Poly2& poly,
                      const std::optional<std::pair<Rational, Rational>>& eps_point) {
    if (!eps_point) return poly.str();
    return rational_str(poly.eval<Rational>(eps_point->first, eps_point->second));
}

ordered_json arg_json(const LinForm& arg,
                      const std::optional<std::pair<Rational, Rational>>& eps_point) {
    ordered_json out = ordered_json::object();
    for (const auto& [edge, poly] : arg.coeffs()) {
        const std::string rendered = coeff_str(poly, eps_point);
        if (rendered != "0") out[std::to_string(edge)] = rendered;
    }
    return out;
}

}  // namespace

std::string render_state_sum_json(
    const StateSum& s, const std::optional<std::pair<Rational, Rational>>& eps_point) {
    const StateSum canon = s.normalized();
    ordered_json doc;
    doc["n"] = canon.n();
    doc["vertices"] = canon.vertex_count();
    doc["ordering"] = canon.ordering();
    ordered_json terms = ordered_json::array();
    for (const Term& term : canon.terms()) {
        ordered_json jt;
        ordered_json subgraph = ordered_json::array();
        for (int id : canon.ids_from_mask(term.mask)) subgraph.push_back(id);
        jt["subgraph"] = std::move(subgraph);
        jt["q_power"] = term.q_exponent;
        ordered_json factors = ordered_json::array();
        for (const Factor& f : term.factors) {
            ordered_json jf;
            jf["edge"] = f.edge;
            jf["kind"] = f.kind == FactorKind::alpha ? "alpha" : "beta";
            jf["arg"] = arg_json(f.arg, eps_point);
            factors.push_back(std::move(jf));
        }
        jt["factors"] = std::move(factors);
        terms.push_back(std::move(jt));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

std::string render_state_sum_pretty(
    const StateSum& s, const std::optional<std::pair<Rational, Rational>>& eps_point) {
    const StateSum canon = s.normalized();
    std::ostringstream out;
    out << "n=" << canon.n() << " vertices=" << canon.vertex_count() << " ordering=(";
    for (std::size_t i = 0; i < canon.ordering().size(); ++i)
        out << (i ? "," : "") << canon.ordering()[i];
    out << ")\n";
    for (const Term& term : canon.terms()) {
        out << "B={";
        bool first = true;
        for (int id : canon.ids_from_mask(term.mask)) {
            out << (first ? "" : ",") << id;
            first = false;
        }
        out << "} q^" << term.q_exponent;
        for (const Factor& f : term.factors) {
            out << " * " << (f.kind == FactorKind::alpha ? "alpha(" : "beta(");
            if (eps_point) {
                bool first_part = true;
                for (const auto& [edge, poly] : f.arg.coeffs()) {
                    const std::string c =
                        rational_str(poly.eval<Rational>(eps_point->first, eps_point->second));
                    if (c == "0") continue;
                    if (!first_part) out << " + ";
                    first_part = false;
                    if (c != "1") out << c << "*";
                    out << "l" << edge;
                }
                if (first_part) out << "0";
            } else {
                out << f.arg.str();
            }
            out << ")";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace ordtutte
