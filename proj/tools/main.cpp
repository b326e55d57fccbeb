#include <CLI11.hpp>
#include <iostream>

#include "aztec/common.hpp"
#include "commands.hpp"

#ifndef AZTEC_VERSION
#define AZTEC_VERSION "unknown"
#endif

using aztec::cli::Options;

int main(int argc, char** argv) {
    CLI::App app{"Two-periodic Aztec diamond: exact and asymptotic inverse Kasteleyn, covariances, sampling"};
    app.set_config("--config", "", "flat key=value configuration file");
    app.set_version_flag("--version", std::string("aztec ") + AZTEC_VERSION);
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--n", o.n, "linear size n (multiple of 4)");
        c->add_option("--a", o.a, "weight a in (0,1)");
        c->add_option("--B", o.B, "mesoscopic scale B");
        c->add_option("--out", o.out, "CSV / dump output path ('-' or empty: stdout)");
        c->add_option("--svg", o.svg, "optional SVG plot path");
        c->add_option("--seed", o.seed, "chain seed");
    };
    auto chain = [&](CLI::App* c) {
        c->add_option("--sweeps", o.sweeps, "sweeps between records");
        c->add_option("--burnin", o.burnin, "burn-in sweeps (default 20 n^2)");
        c->add_option("--gap", o.gap, "sweeps between samples (default n^2/4)");
        c->add_option("--samples", o.samples, "number of samples");
        c->add_flag("--confirm-long", o.confirm_long, "allow n >= 128 runs");
    };

    auto* cmp = app.add_subcommand("compare-kinv", "full-plane inverse vs Bessel asymptotics along alpha");
    common(cmp);
    cmp->add_option("--v", o.v, "transverse offsets")->delimiter(',');
    cmp->add_option("--eps2", o.eps2, "black class of the row (0 or 1)");

    auto* val = app.add_subcommand("validate-theorem", "boundary-integral formula vs dense inverse");
    common(val);
    val->add_option("--quad-points", o.quad_points, "trapezoid nodes per contour");
    val->add_option("--radius", o.radius, "use circles of this radius instead of the default contours");

    auto* cov = app.add_subcommand("cov-experiment", "edge covariances: prediction vs Monte Carlo");
    common(cov);
    chain(cov);
    cov->add_option("--alpha-tilde", o.alpha_tilde, "fixed edge coordinate(s)")->delimiter(',');
    cov->add_option("--pair-type", o.pair_type, "e1 e2 et1 et2, one of 1010 1001 0011 1100 0000 1111");

    auto* smp = app.add_subcommand("sample", "run the chain and dump tilings");
    common(smp);
    chain(smp);

    auto* qc = app.add_subcommand("q-curves", "q functions against alpha at fixed alpha-tilde");
    common(qc);
    qc->add_option("--alpha-tilde", o.alpha_tilde, "fixed coordinate(s)")->delimiter(',');
    qc->add_option("--points", o.points, "grid points on [-6, -0.05]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    o.header = std::string("aztec ") + AZTEC_VERSION + "\ncommand: " + sub->get_name() + "\n" +
               sub->config_to_str(true, false);
    try {
        if (sub == cmp) return aztec::cli::compare_kinv(o);
        if (sub == val) return aztec::cli::validate_theorem(o);
        if (sub == cov) return aztec::cli::cov_experiment(o);
        if (sub == smp) return aztec::cli::sample(o);
        return aztec::cli::q_curves(o);
    } catch (const aztec::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const aztec::DomainError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const aztec::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const aztec::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 4;
    }
}
