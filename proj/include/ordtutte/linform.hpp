#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "ordtutte/poly2.hpp"

namespace ordtutte {

// Linear combination sum_l c_l * lambda_l with Poly2 coefficients, keyed by
// edge id. Zero coefficients are never stored.
class LinForm {
public:
    using Map = std::map<int, Poly2>;

    LinForm() = default;

    // lambda_e with unit coefficient
    static LinForm unit(int edge_id);

    bool is_zero() const { return coeffs_.empty(); }
    const Map& coeffs() const { return coeffs_; }
    Poly2 coeff(int edge_id) const;

    // *this += scale * src
    void add_scaled(const Poly2& scale, const LinForm& src);
    LinForm& operator+=(const LinForm& rhs);

    friend bool operator==(const LinForm&, const LinForm&) = default;

    // Specialize eps and eps' to integers; coefficients become constants.
    LinForm substituted(std::int64_t eps_val, std::int64_t eps_prime_val) const;

    // Valid only after substitution collapsed every coefficient to a constant.
    std::int64_t constant_coeff(int edge_id) const;

    template <class S>
    S eval(const S& eps, const S& eps_prime, const std::map<int, S>& lambdas) const {
        S total{0};
        for (const auto& [edge, poly] : coeffs_) {
            auto it = lambdas.find(edge);
            if (it == lambdas.end())
                throw std::invalid_argument("missing lambda for edge " + std::to_string(edge));
            total += poly.eval(eps, eps_prime) * it->second;
        }
        return total;
    }

    // "(eps + eps^2)*l1 + eps*l3 + l5", ascending edge id
    std::string str() const;

private:
    Map coeffs_;
};

// Free-function spelling used where the update reads better as a verb.
inline LinForm linform_axpy(LinForm dst, const Poly2& scale, const LinForm& src) {
    dst.add_scaled(scale, src);
    return dst;
}

}  // namespace ordtutte
