// rcct: rigged configuration crystal tool.
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 internal error.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rcrystal_c.h"

namespace {

struct ResultGuard {
    rcr_result* res = nullptr;
    ~ResultGuard() { rcr_result_free(res); }
};

int finish(int rc, const ResultGuard& g) {
    if (rc != 0) {
        std::fprintf(stderr, "error: %s\n", rcr_last_error());
        return rc;
    }
    std::fputs(rcr_result_str(g.res), stdout);
    std::fputc('\n', stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigged configurations, Kleber trees and the bijection to KR tableaux"};
    app.require_subcommand(1);

    std::string type, format = "text", lambda, seed_spec = "hw:0", suite;
    std::vector<std::string> factor_args;
    int r = 1, s = 1, index = 0, rank_max = 0, s_max = 0, factors_max = 0, workers = 1;
    unsigned rng_seed = 2026;
    bool trace = false, allow_large = false;

    auto* enumerate = app.add_subcommand("enumerate", "highest weight rigged configurations");
    enumerate->add_option("--type", type, "affine type, e.g. D_5^1")->required();
    enumerate->add_option("--factors", factor_args, "factors as r,s pairs, e.g. 2,1 1,2")
        ->required()
        ->expected(-1);
    enumerate->add_option("--format", format, "text|json");

    auto* fill_cmd = app.add_subcommand("fill", "filling map of a highest weight element");
    fill_cmd->add_option("--type", type)->required();
    fill_cmd->add_option("-r", r, "node index")->required();
    fill_cmd->add_option("-s", s, "rectangle width")->required();
    fill_cmd->add_option("--lambda", lambda, "varpi coefficients, e.g. 0,2,1,0")->required();
    fill_cmd->add_option("--format", format, "text|json");

    auto* phi_cmd = app.add_subcommand("phi", "bijection image of a highest weight rc");
    phi_cmd->add_option("--type", type)->required();
    phi_cmd->add_option("--factors", factor_args)->required()->expected(-1);
    phi_cmd->add_option("--index", index, "highest weight rc index");
    phi_cmd->add_flag("--trace", trace, "print the delta selection trace");

    auto* graph_cmd = app.add_subcommand("graph", "crystal graph export");
    graph_cmd->add_option("--type", type)->required();
    graph_cmd->add_option("--factors", factor_args)->expected(-1);
    graph_cmd->add_option("--seed", seed_spec, "hw:<idx> or lambda:<coeffs>");
    graph_cmd->add_option("--format", format, "dot|json");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "suite name")->required();
    verify_cmd->add_option("--type", type, "restrict to one affine type");
    verify_cmd->add_option("--rank-max", rank_max);
    verify_cmd->add_option("--s-max", s_max);
    verify_cmd->add_option("--factors-max", factors_max);
    verify_cmd->add_option("--workers", workers);
    verify_cmd->add_option("--seed", rng_seed, "seed for randomized checks");
    verify_cmd->add_flag("--allow-large", allow_large, "permit grids beyond the envelope");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string factors;
    for (auto& f : factor_args) {
        if (!factors.empty()) factors += ' ';
        factors += f;
    }

    ResultGuard g;
    if (enumerate->parsed())
        return finish(rcr_enumerate(type.c_str(), factors.c_str(), format.c_str(), &g.res),
                      g);
    if (fill_cmd->parsed())
        return finish(
            rcr_fill(type.c_str(), r, s, lambda.c_str(), format.c_str(), &g.res), g);
    if (phi_cmd->parsed())
        return finish(rcr_phi(type.c_str(), factors.c_str(), index, trace ? 1 : 0, &g.res),
                      g);
    if (graph_cmd->parsed())
        return finish(rcr_graph(type.c_str(), factors.empty() ? nullptr : factors.c_str(),
                                seed_spec.c_str(), format.c_str(), &g.res),
                      g);
    if (verify_cmd->parsed()) {
        int rc = rcr_verify(suite.c_str(), type.empty() ? nullptr : type.c_str(), rank_max,
                            s_max, factors_max, workers, rng_seed, allow_large ? 1 : 0,
                            &g.res);
        if (rc != 0) {
            std::fprintf(stderr, "error: %s\n", rcr_last_error());
            return rc;
        }
        std::fputs(rcr_result_str(g.res), stdout);
        std::fputc('\n', stdout);
        return rcr_result_ok(g.res) ? 0 : 1;
    }
    return 2;
}
