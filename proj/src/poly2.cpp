#include "ordtutte/poly2.hpp"

#include <cstdlib>
#include <sstream>

namespace ordtutte {

Poly2 Poly2::monomial(int deg_eps, int deg_eps_prime, std::int64_t coeff) {
    Poly2 p;
    if (coeff != 0) p.coeffs_[{deg_eps, deg_eps_prime}] = coeff;
    return p;
}

bool Poly2::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == Key{0, 0} &&
           coeffs_.begin()->second == 1;
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
    for (const auto& [key, c] : rhs.coeffs_) {
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            coeffs_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
    for (const auto& [key, c] : rhs.coeffs_) {
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            coeffs_.emplace(key, -c);
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            Poly2::Key key{ka.first + kb.first, ka.second + kb.second};
            auto it = out.coeffs_.find(key);
            if (it == out.coeffs_.end()) {
                out.coeffs_.emplace(key, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
    }
    return out;
}

Poly2& Poly2::operator*=(const Poly2& rhs) {
    *this = *this * rhs;
    return *this;
}

std::int64_t Poly2::eval_int(std::int64_t e, std::int64_t ep) const {
    std::int64_t total = 0;
    for (const auto& [key, c] : coeffs_) {
        std::int64_t term = c;
        for (int i = 0; i < key.first; ++i) term *= e;
        for (int j = 0; j < key.second; ++j) term *= ep;
        total += term;
    }
    return total;
}

std::string Poly2::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : coeffs_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool has_vars = key.first > 0 || key.second > 0;
        bool need_star = false;
        if (mag != 1 || !has_vars) {
            out << mag;
            need_star = true;
        }
        if (key.first > 0) {
            if (need_star) out << "*";
            out << "eps";
            if (key.first > 1) out << "^" << key.first;
            need_star = true;
        }
        if (key.second > 0) {
            if (need_star) out << "*";
            out << "eps'";
            if (key.second > 1) out << "^" << key.second;
        }
    }
    return out.str();
}

}  // namespace ordtutte
