#include "santalo/cli.hpp"

#include <cstdlib>
#include <iostream>

#include "santalo/fixtures.hpp"
#include "santalo/io.hpp"
#include "santalo/svg.hpp"

namespace santalo {

namespace {

std::uint64_t effective_seed(const CommandRequest& request) {
    if (request.seed) return *request.seed;
    if (const char* env = std::getenv("SANTALO_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

RadialWeight parse_weight(const std::string& name) {
    if (name == "indicator") return RadialWeight::indicator_unit();
    if (name == "gaussian") return RadialWeight::gaussian();
    throw Error("unknown weight: " + name + " (expected indicator or gaussian)");
}

void emit(const CommandRequest& request, const Json& j) {
    if (request.out_path.empty()) {
        std::cout << dump_json(j);
    } else {
        write_json_file(request.out_path, j);
    }
}

WeightedPointCloud load_or_generate_cloud(const CommandRequest& request, std::uint64_t seed) {
    auto finish = [&](WeightedPointCloud cloud) {
        if (request.general_position) return general_position_jitter(cloud, seed);
        return cloud;
    };
    if (!request.input_path.empty())
        return finish(cloud_from_json(parse_json_file(request.input_path)));
    switch (request.dim) {
        case 1:
            return finish(cloud_from_grid(
                fixtures::density_from_field(fixtures::counterexample_f())));
        case 2:
            return finish(fixtures::uniform_disc_cloud(static_cast<int>(request.count), seed));
        case 3:
            return finish(fixtures::uniform_ball_cloud(static_cast<int>(request.count), seed));
        default:
            throw Error("generated clouds support --dim 1, 2 or 3");
    }
}

ConvexPolytope load_polytope(const CommandRequest& request) {
    if (!request.fixture.empty()) {
        if (request.fixture == "square") return fixtures::square();
        if (request.fixture == "64-gon") return fixtures::regular_polygon(64);
        throw Error("unknown polytope fixture: " + request.fixture);
    }
    if (request.input_path.empty()) throw Error("missing polytope (--polytope or --fixture)");
    return polytope_from_json(parse_json_file(request.input_path));
}

ScalarField load_f(const CommandRequest& request) {
    if (!request.fixture.empty()) {
        if (request.fixture == "counterexample") return fixtures::counterexample_f();
        if (request.fixture == "gaussian-1d") return fixtures::gaussian_field(1, 3000);
        if (request.fixture == "gaussian-2d") return fixtures::gaussian_field(2, 96);
        throw Error("unknown fixture: " + request.fixture);
    }
    if (request.input_path.empty()) throw Error("missing input field (--f or --fixture)");
    return field_from_json(parse_json_file(request.input_path));
}

int run_paper_counterexample(const CommandRequest& request) {
    const ScalarField f = fixtures::counterexample_f();
    const ScalarField g = fixtures::counterexample_g();
    const RadialWeight rho = RadialWeight::indicator_unit();
    const std::uint64_t seed = effective_seed(request);

    const Certificate duality = duality_check(f, g, Vec{0.0}, rho, request.pairs, seed);
    const Certificate verify = santalo_verify(f, g, rho);
    const Vec bary = barycenter(cloud_from_grid(fixtures::density_from_field(f)));

    Json j = certificate_to_json(verify);
    j["duality"] = certificate_to_json(duality);
    j["barycenter"] = bary;
    emit(request, j);
    return verify.passed ? kExitPass : kExitFail;
}

int run_partition(const CommandRequest& request) {
    const std::uint64_t seed = effective_seed(request);
    const WeightedPointCloud cloud = load_or_generate_cloud(request, seed);

    SolverOptions opts;
    opts.mass_tol = request.mass_tol;
    opts.even_mode = request.even_mode;
    opts.seed = seed;

    std::string svg_path = request.svg_path;
    if (svg_path.empty() && !request.out_path.empty() && cloud.dim() == 2) {
        svg_path = request.out_path;
        const auto dot = svg_path.rfind('.');
        if (dot != std::string::npos) svg_path.resize(dot);
        svg_path += ".svg";
    }
    auto finish = [&](const EquipartitionReport& report, const Json* error) {
        Json j = report_to_json(report);
        j["verify"] = certificate_to_json(
            equipartition_verify(report.tree, cloud, request.mass_tol));
        if (error) j["error"] = *error;
        emit(request, j);
        if (cloud.dim() == 2 && !svg_path.empty())
            write_svg_file(svg_path, report.tree, cloud);
    };

    try {
        const EquipartitionReport report = yy_equipartition(cloud, opts);
        finish(report, nullptr);
        return kExitPass;
    } catch (const NoBracket& e) {
        Json err;
        err["type"] = "NoBracket";
        err["message"] = e.what();
        finish(e.best_report, &err);
        return kExitNotConverged;
    } catch (const NotConverged& e) {
        Json err;
        err["type"] = "NotConverged";
        err["message"] = e.what();
        finish(e.best_report, &err);
        return kExitNotConverged;
    }
}

int run_verify_santalo(const CommandRequest& request) {
    ScalarField f = load_f(request);
    RadialWeight rho = parse_weight(
        request.fixture.rfind("gaussian", 0) == 0 && request.weight == "indicator" ? "gaussian"
                                                                                   : request.weight);
    Vec c = request.center;
    if (c.empty()) c = Vec(static_cast<std::size_t>(f.dim()), 0.0);

    ScalarField g = request.g_path.empty()
                        ? polar_function(f, c, rho, f.lo, f.hi, f.shape)
                        : field_from_json(parse_json_file(request.g_path));

    const Certificate cert = santalo_verify(f, g, rho);
    Json j = certificate_to_json(cert);
    const std::uint64_t seed = effective_seed(request);
    j["duality"] = certificate_to_json(duality_check(f, g, c, rho, request.pairs, seed));
    emit(request, j);
    return cert.passed ? kExitPass : kExitFail;
}

int run_polar(const CommandRequest& request) {
    const ScalarField f = load_f(request);
    const RadialWeight rho = parse_weight(request.weight);
    Vec c = request.center;
    if (c.empty()) c = Vec(static_cast<std::size_t>(f.dim()), 0.0);

    const Vec out_lo = request.out_lo.empty() ? f.lo : request.out_lo;
    const Vec out_hi = request.out_hi.empty() ? f.hi : request.out_hi;
    const std::vector<int> out_shape = request.out_shape.empty() ? f.shape : request.out_shape;

    double cap_used = 0.0;
    const ScalarField g = polar_function(f, c, rho, out_lo, out_hi, out_shape, -1.0, &cap_used);
    Json j = field_to_json(g);
    j["center"] = c;
    j["weight"] = request.weight;
    j["cap"] = cap_used;
    emit(request, j);
    return kExitPass;
}

int run_conewise(const CommandRequest& request) {
    const ScalarField f = load_f(request);
    if (request.g_path.empty()) throw Error("conewise needs --g");
    const ScalarField g = field_from_json(parse_json_file(request.g_path));
    const RadialWeight rho = parse_weight(request.weight);
    const YaoYaoTree tree = request.tree_path.empty()
                                ? axis_aligned_tree(Vec(static_cast<std::size_t>(f.dim()), 0.0))
                                : tree_from_json(parse_json_file(request.tree_path));
    const Certificate cert = conewise_trace(f, g, rho, tree);
    emit(request, certificate_to_json(cert));
    return cert.passed ? kExitPass : kExitFail;
}

int run_pl(const CommandRequest& request) {
    if (request.input_path.empty() || request.g_path.empty() || request.f3_path.empty())
        throw Error("pl needs --phi1, --phi2 and --phi3");
    const ScalarField p1 = field_from_json(parse_json_file(request.input_path));
    const ScalarField p2 = field_from_json(parse_json_file(request.g_path));
    const ScalarField p3 = field_from_json(parse_json_file(request.f3_path));
    const Certificate cert =
        pl_check(p1, p2, p3, request.lambda, request.pairs, effective_seed(request));
    emit(request, certificate_to_json(cert));
    return cert.passed ? kExitPass : kExitFail;
}

int run_logpl(const CommandRequest& request) {
    if (request.input_path.empty() || request.g_path.empty() || request.f3_path.empty())
        throw Error("logpl needs --f1, --f2 and --f3");
    const ScalarField f1 = field_from_json(parse_json_file(request.input_path));
    const ScalarField f2 = field_from_json(parse_json_file(request.g_path));
    const ScalarField f3 = field_from_json(parse_json_file(request.f3_path));
    const Certificate cert = log_pl_check(f1, f2, f3, request.pairs, effective_seed(request));
    emit(request, certificate_to_json(cert));
    return cert.passed ? kExitPass : kExitFail;
}

int run_body_polar(const CommandRequest& request) {
    const ConvexPolytope P = load_polytope(request);
    const ConvexPolytope polar = polar_polytope(P);
    emit(request, polytope_to_json(polar));
    return kExitPass;
}

int run_santalo_point(const CommandRequest& request) {
    const ConvexPolytope P = load_polytope(request);
    SantaloSearchOptions opts;
    opts.seed = effective_seed(request);
    Certificate search;
    const Vec z = santalo_point_body(P, opts, &search);
    const BodyCertificate cert = blaschke_santalo_check(P, z);

    Json j = body_certificate_to_json(cert);
    j["search"] = certificate_to_json(search);
    emit(request, j);
    if (!search.passed) return kExitNotConverged;
    return cert.passed ? kExitPass : kExitFail;
}

} // namespace

int dispatch(const CommandRequest& request) {
    try {
        if (request.subcommand == "paper-counterexample") return run_paper_counterexample(request);
        if (request.subcommand == "partition") return run_partition(request);
        if (request.subcommand == "verify-santalo") return run_verify_santalo(request);
        if (request.subcommand == "polar") return run_polar(request);
        if (request.subcommand == "conewise") return run_conewise(request);
        if (request.subcommand == "pl") return run_pl(request);
        if (request.subcommand == "logpl") return run_logpl(request);
        if (request.subcommand == "body-polar") return run_body_polar(request);
        if (request.subcommand == "santalo-point") return run_santalo_point(request);
        throw Error("unknown subcommand: " + request.subcommand);
    } catch (const NoBracket& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotConverged;
    } catch (const NotConverged& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotConverged;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!request.out_path.empty()) {
            Json err;
            err["error"]["type"] = "input";
            err["error"]["message"] = e.what();
            try {
                write_json_file(request.out_path, err);
            } catch (...) {
            }
        }
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace santalo
