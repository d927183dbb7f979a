#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace ordtutte {

// Exact bivariate polynomial in the two memory parameters eps and eps'.
// Sparse map (eps degree, eps' degree) -> integer coefficient; zero
// coefficients are never stored, so map equality is canonical equality.
class Poly2 {
public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, std::int64_t>;

    Poly2() = default;

    static Poly2 constant(std::int64_t c) { return monomial(0, 0, c); }
    static Poly2 one() { return constant(1); }
    static Poly2 eps() { return monomial(1, 0); }
    static Poly2 eps_prime() { return monomial(0, 1); }
    static Poly2 monomial(int deg_eps, int deg_eps_prime, std::int64_t coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    const Map& coeffs() const { return coeffs_; }

    Poly2& operator+=(const Poly2& rhs);
    Poly2& operator-=(const Poly2& rhs);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { a += b; return a; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { a -= b; return a; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2& operator*=(const Poly2& rhs);

    friend bool operator==(const Poly2&, const Poly2&) = default;

    // Specialize eps and eps' to integers; the result stays exact.
    std::int64_t eval_int(std::int64_t e, std::int64_t ep) const;

    template <class S>
    S eval(const S& e, const S& ep) const {
        S total{0};
        for (const auto& [key, c] : coeffs_) {
            S term = static_cast<S>(c);
            for (int i = 0; i < key.first; ++i) term *= e;
            for (int j = 0; j < key.second; ++j) term *= ep;
            total += term;
        }
        return total;
    }

    // Canonical rendering, terms graded by eps degree then eps' degree:
    // "0", "1", "eps + eps^2", "2*eps*eps'", "1 - eps".
    std::string str() const;

private:
    Map coeffs_;
};

}  // namespace ordtutte
