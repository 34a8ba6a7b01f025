#include <CLI11.hpp>

#include "santalo/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Yao-Yao equipartitions, functional Santalo duality and Blaschke-Santalo checks"};
    app.require_subcommand(1);

    santalo::CommandRequest request;
    std::uint64_t seed_value = 0;

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed_value, "random seed (default: SANTALO_SEED or 0)")
            ->each([&](const std::string&) { request.seed = seed_value; });
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", request.out_path, "output JSON path (default: stdout)");
    };

    // partition
    auto* partition = app.add_subcommand("partition", "compute a Yao-Yao equipartition");
    partition->add_option("--input", request.input_path, "cloud JSON (otherwise generated)");
    partition->add_option("--dim", request.dim, "dimension of the generated cloud (1-3)");
    partition->add_option("--n", request.count, "atom count of the generated cloud");
    partition->add_option("--mass-tol", request.mass_tol, "acceptance tolerance (fraction of mass)");
    partition->add_flag("--even", request.even_mode, "force the center to the origin (even measures)");
    partition->add_flag("--general-position", request.general_position,
                        "seeded 1e-9-scale jitter applied to the cloud at load time");
    partition->add_option("--svg", request.svg_path, "render the 2D partition to this SVG path");
    add_seed(partition);
    add_out(partition);

    // verify-santalo
    auto* verify = app.add_subcommand("verify-santalo", "check int f * int g <= (int rho)^2");
    verify->add_option("--f", request.input_path, "field JSON for f");
    verify->add_option("--fixture", request.fixture, "builtin f: counterexample, gaussian-1d, gaussian-2d");
    verify->add_option("--g", request.g_path, "field JSON for g (default: maximal polar of f)");
    verify->add_option("--center", request.center, "center c (default: origin)");
    verify->add_option("--weight", request.weight, "weight: indicator or gaussian");
    verify->add_option("--pairs", request.pairs, "sampled pairs for the duality check");
    add_seed(verify);
    add_out(verify);

    // polar
    auto* polar = app.add_subcommand("polar", "compute the pointwise-maximal dual function");
    polar->add_option("--f", request.input_path, "field JSON for f");
    polar->add_option("--fixture", request.fixture, "builtin f fixture");
    polar->add_option("--center", request.center, "center c (default: origin)");
    polar->add_option("--weight", request.weight, "weight: indicator or gaussian");
    polar->add_option("--out-lo", request.out_lo, "output box lower corner");
    polar->add_option("--out-hi", request.out_hi, "output box upper corner");
    polar->add_option("--out-shape", request.out_shape, "output grid shape");
    add_out(polar);

    // conewise
    auto* conewise = app.add_subcommand("conewise", "per-cone proof trace of the main inequality");
    conewise->add_option("--f", request.input_path, "field JSON for f (centered)");
    conewise->add_option("--fixture", request.fixture, "builtin f fixture");
    conewise->add_option("--g", request.g_path, "field JSON for g")->required();
    conewise->add_option("--weight", request.weight, "weight: indicator or gaussian");
    conewise->add_option("--tree", request.tree_path, "tree JSON (default: coordinate tree at 0)");
    add_out(conewise);

    // pl
    auto* pl = app.add_subcommand("pl", "Prekopa-Leindler check");
    pl->add_option("--phi1", request.input_path)->required();
    pl->add_option("--phi2", request.g_path)->required();
    pl->add_option("--phi3", request.f3_path)->required();
    pl->add_option("--lambda", request.lambda, "interpolation parameter in (0,1)");
    pl->add_option("--pairs", request.pairs, "sampled pairs");
    add_seed(pl);
    add_out(pl);

    // logpl
    auto* logpl = app.add_subcommand("logpl", "logarithmic Prekopa-Leindler check");
    logpl->add_option("--f1", request.input_path)->required();
    logpl->add_option("--f2", request.g_path)->required();
    logpl->add_option("--f3", request.f3_path)->required();
    logpl->add_option("--pairs", request.pairs, "sampled pairs");
    add_seed(logpl);
    add_out(logpl);

    // body-polar
    auto* body_polar = app.add_subcommand("body-polar", "polar polytope");
    body_polar->add_option("--polytope", request.input_path, "polytope JSON");
    body_polar->add_option("--fixture", request.fixture, "builtin polytope: square, 64-gon");
    add_out(body_polar);

    // santalo-point
    auto* santalo_point = app.add_subcommand("santalo-point", "Santalo point of a polytope");
    santalo_point->add_option("--polytope", request.input_path, "polytope JSON");
    santalo_point->add_option("--fixture", request.fixture, "builtin polytope: square, 64-gon");
    add_seed(santalo_point);
    add_out(santalo_point);

    // paper-counterexample
    auto* counter = app.add_subcommand(
        "paper-counterexample", "the barycenter counterexample (expected to fail, exit 1)");
    counter->add_option("--pairs", request.pairs, "sampled pairs for the duality check");
    add_seed(counter);
    add_out(counter);

    CLI11_PARSE(app, argc, argv);

    request.subcommand = app.get_subcommands().front()->get_name();
    return santalo::dispatch(request);
}
