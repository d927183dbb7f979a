// Command-line surface for the ordering-dependent contraction-deletion
// polynomial: compute renders the spanning-subgraph expansion of a graph
// file, verify runs the identity suites, gbm runs the Monte-Carlo moment
// check. Exit codes: 0 success/pass, 1 verification failure, 2 usage or
// input errors.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordtutte/closed_form.hpp"
#include "ordtutte/gbm.hpp"
#include "ordtutte/graph_file.hpp"
#include "ordtutte/json_io.hpp"
#include "ordtutte/recursion.hpp"
#include "ordtutte/reductions.hpp"

using namespace ordtutte;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

Backend backend_from(const std::string& name) {
    if (name == "recursive") return Backend::recursive;
    if (name == "closed") return Backend::closed;
    throw CLI::ValidationError("--backend", "expected 'recursive' or 'closed'");
}

struct ComputeOptions {
    std::string file;
    std::string backend = "recursive";
    std::string eps = "symbolic";
    std::string epsprime = "symbolic";
    std::string output = "json";
    int max_edges = 20;
    bool evaluate = false;
    std::string alpha = "";
    std::string beta = "";
    std::string q = "1";
};

ParsedGraph load_guarded(const std::string& file, int max_edges) {
    const ParsedGraph parsed = parse_graph_file(std::filesystem::path(file));
    const int n = parsed.graph.edge_count();
    if (n > max_edges) {
        const double terms = std::pow(2.0, n);
        std::cerr << "refusing to expand " << n << " edges: 2^" << n << " = " << terms
                  << " terms with " << n << " factors each (about " << terms * n
                  << " factor records); raise --max-edges if you mean it\n";
        std::exit(kExitUsage);
    }
    return parsed;
}

int run_compute(const ComputeOptions& opt) {
    const ParsedGraph parsed = load_guarded(opt.file, opt.max_edges);
    const StateSum sum = state_sum(parsed.graph, parsed.ordering, backend_from(opt.backend));

    const bool eps_numeric = opt.eps != "symbolic";
    const bool epsprime_numeric = opt.epsprime != "symbolic";
    if (eps_numeric != epsprime_numeric) {
        std::cerr << "--eps and --epsprime must both be symbolic or both numeric\n";
        return kExitUsage;
    }
    std::optional<std::pair<Rational, Rational>> eps_point;
    if (eps_numeric)
        eps_point = {parse_rational(opt.eps), parse_rational(opt.epsprime)};

    if (opt.evaluate) {
        if (!eps_point) {
            std::cerr << "--evaluate needs numeric --eps and --epsprime\n";
            return kExitUsage;
        }
        if (opt.alpha.empty() || opt.beta.empty()) {
            std::cerr << "--evaluate needs --alpha and --beta (fk, gbm or unit)\n";
            return kExitUsage;
        }
        std::map<int, Rational> lambdas;
        for (int id : parsed.graph.edge_ids()) {
            auto it = parsed.lambda_literals.find(id);
            if (it == parsed.lambda_literals.end()) {
                std::cerr << "edge " << id << " has no lambda literal; numeric evaluation "
                          << "needs one per edge\n";
                return kExitUsage;
            }
            lambdas[id] = it->second;
        }
        const bool needs_float = opt.alpha == "gbm" || opt.beta == "gbm";
        if (needs_float) {
            WeightModel<double> model{opt.alpha, opt.beta, {}, {}};
            auto pick = [](const std::string& name) -> std::function<double(const double&)> {
                if (name == "fk") return fk_alpha<double>();
                if (name == "gbm") return gbm_alpha();
                if (name == "unit") return unit_weight<double>();
                throw CLI::ValidationError("--alpha/--beta", "expected fk, gbm or unit");
            };
            auto pick_beta = [](const std::string& name) -> std::function<double(const double&)> {
                if (name == "fk") return fk_beta<double>();
                if (name == "gbm") return gbm_beta();
                if (name == "unit") return unit_weight<double>();
                throw CLI::ValidationError("--alpha/--beta", "expected fk, gbm or unit");
            };
            model.alpha = pick(opt.alpha);
            model.beta = pick_beta(opt.beta);
            std::map<int, double> dl;
            for (const auto& [id, r] : lambdas)
                dl[id] = static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
            const double value = sum.evaluate<double>(
                static_cast<double>(parse_rational(opt.q)),
                static_cast<double>(eps_point->first), static_cast<double>(eps_point->second),
                dl, model);
            std::cout << std::setprecision(17) << value << "\n";
        } else {
            WeightModel<Rational> model{opt.alpha, opt.beta, {}, {}};
            auto pick = [](const std::string& name,
                           bool is_alpha) -> std::function<Rational(const Rational&)> {
                if (name == "fk") return is_alpha ? fk_alpha<Rational>() : fk_beta<Rational>();
                if (name == "unit") return unit_weight<Rational>();
                throw CLI::ValidationError("--alpha/--beta", "expected fk, gbm or unit");
            };
            model.alpha = pick(opt.alpha, true);
            model.beta = pick(opt.beta, false);
            const Rational value = sum.evaluate<Rational>(
                parse_rational(opt.q), eps_point->first, eps_point->second, lambdas, model);
            std::cout << rational_str(value) << "\n";
        }
        return kExitPass;
    }

    if (opt.output == "json") {
        std::cout << render_state_sum_json(sum, eps_point) << "\n";
    } else if (opt.output == "pretty") {
        std::cout << render_state_sum_pretty(sum, eps_point);
    } else {
        std::cerr << "--output must be json or pretty\n";
        return kExitUsage;
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------
// verify suites

int verify_backends(const ParsedGraph& parsed) {
    const StateSum rec = state_sum_recursive(parsed.graph, parsed.ordering);
    const StateSum cls = state_sum_closed(parsed.graph, parsed.ordering);
    if (rec == cls) {
        std::cout << "PASS backends: " << rec.terms().size()
                  << " terms identical between recursion and closed form\n";
        return kExitPass;
    }
    std::cout << "FAIL backends: canonical state sums differ\n";
    for (std::size_t i = 0; i < rec.terms().size(); ++i) {
        if (i >= cls.terms().size() || !(rec.terms()[i] == cls.terms()[i])) {
            std::cout << "  first difference at term index " << i << ", subgraph {";
            bool first = true;
            for (int id : rec.ids_from_mask(rec.terms()[i].mask)) {
                std::cout << (first ? "" : ",") << id;
                first = false;
            }
            std::cout << "}\n";
            break;
        }
    }
    return kExitVerifyFail;
}

int verify_lemma(const ParsedGraph& parsed) {
    const int n = parsed.graph.edge_count();
    long checks = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        EdgeIdSet b;
        for (int k = 0; k < n; ++k)
            if (bits >> k & 1) b.insert(parsed.ordering[k]);
        for (int k = 2; k <= n; ++k) {
            if (!lemma_ckl_check(parsed.graph, parsed.ordering, b, k)) {
                std::cout << "FAIL lemma: identity broken at k=" << k << " B={";
                bool first = true;
                for (int id : b) {
                    std::cout << (first ? "" : ",") << id;
                    first = false;
                }
                std::cout << "}\n";
                return kExitVerifyFail;
            }
            ++checks;
        }
    }
    std::cout << "PASS lemma: " << checks << " (B, k) identities hold\n";
    return kExitPass;
}

int verify_fk(const ParsedGraph& parsed, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Rational q_menu[] = {Rational{2}, Rational{3}, Rational{1, 2}, Rational{7, 3}};
    int done = 0;
    for (int trial = 0; trial < 20; ++trial) {
        FkInstance inst{parsed.graph, {}, q_menu[rng() % 4]};
        for (int id : parsed.graph.edge_ids()) {
            std::uniform_int_distribution<int> den_dist(1, 12);
            const int den = den_dist(rng);
            std::uniform_int_distribution<int> num_dist(0, den);
            inst.p[id] = Rational{num_dist(rng), den};
        }
        const Rational expect = fk_oracle(inst);
        for (Backend backend : {Backend::recursive, Backend::closed}) {
            if (fk_via_generalized(inst, backend) != expect) {
                std::cout << "FAIL fk: instance " << trial << " (q=" << rational_str(inst.q)
                          << ") disagrees with the subgraph-sum oracle\n";
                return kExitVerifyFail;
            }
        }
        ++done;
    }
    std::cout << "PASS fk: " << done
              << " random rational instances match the independent oracle exactly\n";
    return kExitPass;
}

int verify_orderings(const ParsedGraph& parsed, std::uint64_t seed) {
    const Multigraph& g = parsed.graph;
    const int n = g.edge_count();
    std::vector<EdgeOrdering> orderings;
    if (n <= 7) {
        EdgeOrdering ids = g.sorted_edge_ids();
        do {
            orderings.push_back(ids);
        } while (std::next_permutation(ids.begin(), ids.end()));
    } else {
        std::mt19937_64 rng(seed);
        EdgeOrdering ids = g.sorted_edge_ids();
        for (int i = 0; i < 200; ++i) {
            std::shuffle(ids.begin(), ids.end(), rng);
            orderings.push_back(ids);
        }
        std::cout << "note: " << n << " edges, sampling 200 of n! orderings\n";
    }
    const StateSum reference =
        state_sum_recursive(g, parsed.ordering).substituted(0, 0);
    for (const EdgeOrdering& order : orderings) {
        const StateSum other = state_sum_recursive(g, order).substituted(0, 0);
        if (!order_free_equal(reference, other)) {
            std::cout << "FAIL orderings: memory-free limit differs for ordering (";
            for (std::size_t i = 0; i < order.size(); ++i)
                std::cout << (i ? "," : "") << order[i];
            std::cout << ")\n";
            return kExitVerifyFail;
        }
    }
    std::cout << "PASS orderings: eps = eps' = 0 state sum identical across "
              << orderings.size() << " orderings\n";
    return kExitPass;
}

int verify_factorization(const ParsedGraph& parsed) {
    const auto parts = connected_components(parsed.graph);
    if (parts.size() < 2) {
        std::cerr << "factorization suite needs a disconnected graph; this one has a "
                     "single component\n";
        return kExitUsage;
    }
    const StateSum whole = state_sum_recursive(parsed.graph, parsed.ordering);

    StateSum product;
    bool product_started = false;
    for (const Multigraph& part : parts) {
        EdgeOrdering induced;
        for (int id : parsed.ordering)
            if (part.has_edge(id)) induced.push_back(id);
        const StateSum sum = state_sum_recursive(part, induced);
        product = product_started ? tensor_product(product, sum) : sum;
        product_started = true;
    }
    if (order_free_equal(whole, product)) {
        std::cout << "PASS factorization: product over " << parts.size()
                  << " components matches the joint state sum symbolically\n";
        return kExitPass;
    }
    std::cout << "FAIL factorization: joint state sum differs from the component product\n";
    return kExitVerifyFail;
}

int run_verify(const std::string& file, const std::string& suite, std::uint64_t seed) {
    const ParsedGraph parsed = load_guarded(file, 20);
    if (suite == "backends") return verify_backends(parsed);
    if (suite == "lemma") return verify_lemma(parsed);
    if (suite == "fk") return verify_fk(parsed, seed);
    if (suite == "orderings") return verify_orderings(parsed, seed);
    if (suite == "factorization") return verify_factorization(parsed);
    std::cerr << "unknown suite '" << suite
              << "' (expected backends, lemma, fk, orderings or factorization)\n";
    return kExitUsage;
}

int run_gbm(const GbmParams& params, int n) {
    const MomentReport report = moment_vs_s_n(params, n);
    nlohmann::ordered_json doc;
    doc["mu"] = params.mu;
    doc["sigma"] = params.sigma;
    doc["t"] = params.t;
    doc["n"] = n;
    doc["paths"] = params.paths;
    doc["steps"] = params.steps;
    doc["seed"] = params.seed;
    doc["mc_mean"] = report.mc_mean;
    doc["mc_stderr"] = report.mc_stderr;
    doc["formula_value"] = report.formula_value;
    doc["z_score"] = report.z_score;
    std::cout << doc.dump() << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the ordering-dependent contraction-deletion polynomial"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "expand a graph file into a state sum");
    compute->add_option("file", copt.file, "graph file")->required();
    compute->add_option("--backend", copt.backend, "recursive or closed");
    compute->add_option("--eps", copt.eps, "symbolic or an exact rational");
    compute->add_option("--epsprime", copt.epsprime, "symbolic or an exact rational");
    compute->add_option("--output", copt.output, "json or pretty");
    compute->add_option("--max-edges", copt.max_edges, "edge-count guard (default 20)");
    compute->add_flag("--evaluate", copt.evaluate,
                      "evaluate numerically instead of rendering (needs lambda literals)");
    compute->add_option("--alpha", copt.alpha, "weight menu: fk, gbm or unit");
    compute->add_option("--beta", copt.beta, "weight menu: fk, gbm or unit");
    compute->add_option("--q", copt.q, "q value for --evaluate (exact rational)");

    std::string verify_file, suite;
    std::uint64_t verify_seed = 20250810;
    CLI::App* verify = app.add_subcommand("verify", "run an identity suite on a graph file");
    verify->add_option("file", verify_file, "graph file")->required();
    verify->add_option("--suite", suite, "backends, lemma, fk, orderings or factorization")
        ->required();
    verify->add_option("--seed", verify_seed, "seed for randomized suites");

    GbmParams gparams;
    int moment_order = 1;
    CLI::App* gbm = app.add_subcommand("gbm", "Monte-Carlo moment check for the chain formula");
    gbm->add_option("--mu", gparams.mu, "drift");
    gbm->add_option("--sigma", gparams.sigma, "volatility");
    gbm->add_option("--t", gparams.t, "horizon");
    gbm->add_option("--n", moment_order, "moment order");
    gbm->add_option("--paths", gparams.paths, "sample count");
    gbm->add_option("--steps", gparams.steps, "grid size");
    gbm->add_option("--seed", gparams.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*compute) return run_compute(copt);
        if (*verify) return run_verify(verify_file, suite, verify_seed);
        if (*gbm) return run_gbm(gparams, moment_order);
    } catch (const parse_error& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const singular_argument& err) {
        std::cerr << "singular input: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
