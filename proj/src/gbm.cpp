#include "ordtutte/gbm.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "ordtutte/reductions.hpp"

namespace ordtutte {

void validate(const GbmParams& p) {
    if (!(p.t > 0)) throw std::invalid_argument("t must be positive");
    if (p.steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (p.paths < 1) throw std::invalid_argument("paths must be >= 1");
    if (p.sigma < 0) throw std::invalid_argument("sigma must be >= 0");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double one_path(const GbmParams& p, std::int64_t index) {
    std::mt19937_64 rng(splitmix64(splitmix64(p.seed) ^ static_cast<std::uint64_t>(index + 1)));
    std::normal_distribution<double> gauss(0.0, 1.0);

    const double dt = p.t / p.steps;
    const double sqrt_dt = std::sqrt(dt);
    const double drift = p.mu - 0.5 * p.sigma * p.sigma;

    double w = 0.0;
    double prev = 1.0;  // integrand at s = 0
    double integral = 0.0;
    for (int j = 1; j <= p.steps; ++j) {
        w += sqrt_dt * gauss(rng);
        const double cur = std::exp(drift * (j * dt) + p.sigma * w);
        integral += 0.5 * dt * (prev + cur);
        prev = cur;
    }
    return integral;
}

int thread_count() {
    if (const char* env = std::getenv("ORDTUTTE_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return 1;
}

}  // namespace

std::vector<double> simulate_integral(const GbmParams& p) {
    validate(p);
    std::vector<double> samples(static_cast<std::size_t>(p.paths));
    const int workers = thread_count();
    if (workers <= 1) {
        for (std::int64_t i = 0; i < p.paths; ++i) samples[i] = one_path(p, i);
        return samples;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::int64_t i = w; i < p.paths; i += workers) samples[i] = one_path(p, i);
        });
    }
    for (auto& th : pool) th.join();
    return samples;
}

std::vector<double> moment_lambdas(const GbmParams& p, int n) {
    std::vector<double> lambdas(n);
    for (int i = 1; i <= n; ++i) lambdas[i - 1] = p.t * (p.mu + (n - i) * p.sigma * p.sigma);
    return lambdas;
}

MomentReport moment_vs_s_n(const GbmParams& p, int n) {
    if (n < 1) throw std::invalid_argument("moment order must be >= 1");
    const std::vector<double> lambdas = moment_lambdas(p, n);
    const double s_value = s_n_via_generalized(ChainInstance(n, lambdas));

    double factorial = 1.0;
    for (int i = 2; i <= n; ++i) factorial *= i;

    MomentReport report;
    report.n = n;
    report.formula_value = std::pow(p.t, n) * factorial * s_value;

    const std::vector<double> samples = simulate_integral(p);
    double mean = 0.0;
    for (double x : samples) mean += std::pow(x, n);
    mean /= static_cast<double>(samples.size());
    double var = 0.0;
    for (double x : samples) {
        const double d = std::pow(x, n) - mean;
        var += d * d;
    }
    var /= static_cast<double>(samples.size() - 1);

    report.mc_mean = mean;
    report.mc_stderr = std::sqrt(var / static_cast<double>(samples.size()));
    report.z_score = std::abs(mean - report.formula_value) / report.mc_stderr;
    return report;
}

}  // namespace ordtutte
