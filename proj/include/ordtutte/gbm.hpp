#pragma once

#include <cstdint>
#include <vector>

namespace ordtutte {

struct GbmParams {
    double mu = 0.05;      // drift, 1/time
    double sigma = 0.2;    // volatility, 1/sqrt(time)
    double t = 1.0;        // horizon
    int steps = 2000;      // uniform grid size
    std::int64_t paths = 100000;
    std::uint64_t seed = 42;
};

void validate(const GbmParams& p);

// Per path, the trapezoidal approximation of the time integral of
// exp{(mu - sigma^2/2) s + sigma W_s} over [0, t], with exact Gaussian
// increments of W on the uniform grid. Each path's randomness derives from
// (seed, path index), so the output is identical under any thread count
// (ORDTUTTE_THREADS, default 1).
std::vector<double> simulate_integral(const GbmParams& p);

// lambda_i = t * (mu + (n - i) * sigma^2), i = 1..n
std::vector<double> moment_lambdas(const GbmParams& p, int n);

struct MomentReport {
    int n = 0;
    double mc_mean = 0;
    double mc_stderr = 0;
    double formula_value = 0;
    double z_score = 0;
};

// n-th sample moment of the integral against the chain-graph formula
// t^n * n! * s_n(lambda_1..lambda_n). Throws singular_argument when some
// lambda_i (or a merged weight) vanishes.
MomentReport moment_vs_s_n(const GbmParams& p, int n);

}  // namespace ordtutte
