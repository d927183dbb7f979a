#include "ordtutte/linform.hpp"

#include <sstream>

namespace ordtutte {

LinForm LinForm::unit(int edge_id) {
    LinForm f;
    f.coeffs_[edge_id] = Poly2::one();
    return f;
}

Poly2 LinForm::coeff(int edge_id) const {
    auto it = coeffs_.find(edge_id);
    return it == coeffs_.end() ? Poly2{} : it->second;
}

void LinForm::add_scaled(const Poly2& scale, const LinForm& src) {
    if (scale.is_zero()) return;
    for (const auto& [edge, poly] : src.coeffs_) {
        auto it = coeffs_.find(edge);
        if (it == coeffs_.end()) {
            coeffs_.emplace(edge, scale * poly);
        } else {
            it->second += scale * poly;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
}

LinForm& LinForm::operator+=(const LinForm& rhs) {
    add_scaled(Poly2::one(), rhs);
    return *this;
}

LinForm LinForm::substituted(std::int64_t eps_val, std::int64_t eps_prime_val) const {
    LinForm out;
    for (const auto& [edge, poly] : coeffs_) {
        std::int64_t c = poly.eval_int(eps_val, eps_prime_val);
        if (c != 0) out.coeffs_[edge] = Poly2::constant(c);
    }
    return out;
}

std::int64_t LinForm::constant_coeff(int edge_id) const {
    auto it = coeffs_.find(edge_id);
    if (it == coeffs_.end()) return 0;
    const auto& m = it->second.coeffs();
    if (m.size() != 1 || m.begin()->first != Poly2::Key{0, 0})
        throw std::logic_error("coefficient of lambda_" + std::to_string(edge_id) +
                               " is not a constant");
    return m.begin()->second;
}

std::string LinForm::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [edge, poly] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        if (poly.is_one()) {
            out << "l" << edge;
        } else if (poly.coeffs().size() == 1) {
            out << poly.str() << "*l" << edge;
        } else {
            out << "(" << poly.str() << ")*l" << edge;
        }
    }
    return out.str();
}

}  // namespace ordtutte
