#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace ordtutte {

using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& r);

// Accepts "7", "-3", "2/5" and plain decimals like "0.25" or "-1.5e-2",
// all converted exactly.
Rational parse_rational(const std::string& text);

// Thrown by a weight function whose value does not exist at the argument
// (division by zero). evaluate() re-throws with term context attached.
struct singular_argument : std::domain_error {
    explicit singular_argument(const std::string& what) : std::domain_error(what) {}
};

// A pluggable pair of scalar weight functions: alpha is applied to
// contracted-edge arguments, beta to deleted-edge arguments.
template <class S>
struct WeightModel {
    std::string alpha_name;
    std::string beta_name;
    std::function<S(const S&)> alpha;
    std::function<S(const S&)> beta;
};

// alpha(x) = x
template <class S>
std::function<S(const S&)> fk_alpha() {
    return [](const S& x) { return x; };
}

// beta(x) = 1 - x
template <class S>
std::function<S(const S&)> fk_beta() {
    return [](const S& x) { return S{1} - x; };
}

// alpha(x) = e^x / x, singular at 0
inline std::function<double(const double&)> gbm_alpha() {
    return [](const double& x) -> double {
        if (x == 0.0) throw singular_argument("alpha(x) = e^x/x undefined at x = 0");
        return std::exp(x) / x;
    };
}

// beta(x) = -1/x, singular at 0
inline std::function<double(const double&)> gbm_beta() {
    return [](const double& x) -> double {
        if (x == 0.0) throw singular_argument("beta(x) = -1/x undefined at x = 0");
        return -1.0 / x;
    };
}

template <class S>
std::function<S(const S&)> unit_weight() {
    return [](const S&) { return S{1}; };
}

template <class S>
WeightModel<S> fk_weights() {
    return {"fk", "fk", fk_alpha<S>(), fk_beta<S>()};
}

inline WeightModel<double> gbm_weights() {
    return {"gbm", "gbm", gbm_alpha(), gbm_beta()};
}

template <class S>
WeightModel<S> unit_weights() {
    return {"unit", "unit", unit_weight<S>(), unit_weight<S>()};
}

}  // namespace ordtutte
