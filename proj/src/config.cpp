#include "vimo/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "vimo/extended_real.hpp"
#include "vimo/obstacle.hpp"
#include "vimo/report_io.hpp"
#include "vimo/sampling.hpp"

namespace vimo {

namespace {

using json = nlohmann::json;
constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& pointer, const std::string& message) {
    throw ConfigError(pointer, message);
}

Vector vector_field(const json& j, const std::string& pointer) {
    if (!j.is_array()) fail(pointer, "expected an array of numbers");
    std::vector<double> coords;
    for (const auto& x : j) {
        if (!x.is_number()) fail(pointer, "expected an array of numbers");
        coords.push_back(x.get<double>());
    }
    return Vector(std::move(coords));
}

// bound arrays allow null entries for one-sided constraints
std::vector<double> bound_field(const json& j, const std::string& pointer, double unbounded) {
    if (!j.is_array()) fail(pointer, "expected an array of numbers or nulls");
    std::vector<double> coords;
    for (const auto& x : j) {
        if (x.is_null()) {
            coords.push_back(unbounded);
        } else if (x.is_number()) {
            coords.push_back(x.get<double>());
        } else {
            fail(pointer, "expected numbers or nulls");
        }
    }
    return coords;
}

SetValuedOperator build_operator(const json& decl, std::size_t dim, const std::string& pointer) {
    if (!decl.is_object() || !decl.contains("kind")) fail(pointer, "operator needs a kind");
    const std::string kind = decl.at("kind").get<std::string>();
    if (kind == "identity") return ops::identity(dim);
    if (kind == "negative_identity") return ops::negative_identity(dim);
    if (kind == "subdiff_l1") return ops::subdiff_l1(dim);
    if (kind == "cubic") return ops::componentwise_cubic(dim);
    if (kind == "power_norm") {
        return ops::power_norm(dim, decl.value("p", 3.0));
    }
    if (kind == "linear") {
        if (!decl.contains("matrix")) fail(pointer, "linear operator needs a matrix");
        std::vector<std::vector<double>> m;
        for (const auto& row : decl.at("matrix")) {
            m.push_back(row.get<std::vector<double>>());
        }
        if (m.size() != dim) fail(pointer, "matrix does not match instance dim");
        return ops::linear(m);
    }
    if (kind == "constant_box") {
        Vector lo = vector_field(decl.at("lo"), pointer + "/lo");
        Vector hi = vector_field(decl.at("hi"), pointer + "/hi");
        if (lo.dim() != dim) fail(pointer, "box bounds do not match instance dim");
        return ops::constant_box(lo, hi);
    }
    if (kind == "constant_finite_set") {
        std::vector<Vector> pts;
        for (const auto& p : decl.at("points")) pts.push_back(vector_field(p, pointer + "/points"));
        return ops::constant_finite_set(dim, std::move(pts));
    }
    if (kind == "step_down_1d") {
        if (dim != 1) fail(pointer, "step_down_1d is one-dimensional");
        return ops::step_down_1d();
    }
    if (kind == "reciprocal_1d") {
        if (dim != 1) fail(pointer, "reciprocal_1d is one-dimensional");
        return ops::reciprocal_1d();
    }
    if (kind == "sum") {
        if (!decl.contains("operands") || !decl.at("operands").is_array() ||
            decl.at("operands").size() < 2) {
            fail(pointer, "sum operator needs at least two operands");
        }
        auto it = decl.at("operands").begin();
        SetValuedOperator acc = build_operator(*it, dim, pointer + "/operands/0");
        std::size_t idx = 1;
        for (++it; it != decl.at("operands").end(); ++it, ++idx) {
            acc = sum_operator(
                acc, build_operator(*it, dim, pointer + "/operands/" + std::to_string(idx)));
        }
        return acc;
    }
    fail(pointer, "unknown operator kind: " + kind);
}

ProperConvexFunction build_phi(const json& decl, std::size_t dim, const std::string& pointer) {
    if (!decl.is_object() || !decl.contains("kind")) fail(pointer, "phi needs a kind");
    const std::string kind = decl.at("kind").get<std::string>();
    if (kind == "zero") return ProperConvexFunction::zero(dim);
    if (kind == "l1") return ProperConvexFunction::l1_norm(dim, decl.value("weight", 1.0));
    if (kind == "half_sqnorm") return ProperConvexFunction::half_sqnorm(dim);
    if (kind == "positive_part") return ProperConvexFunction::positive_part(dim);
    fail(pointer, "unknown phi kind: " + kind);
}

ConvexSet build_set(const json& decl, std::size_t dim, const std::string& pointer) {
    if (!decl.is_object() || !decl.contains("kind")) fail(pointer, "set needs a kind");
    const std::string kind = decl.at("kind").get<std::string>();
    if (kind == "whole_space") return ConvexSet::whole_space(dim);
    if (kind == "box") {
        auto lo = bound_field(decl.at("lo"), pointer + "/lo", -kInf);
        auto hi = bound_field(decl.at("hi"), pointer + "/hi", kInf);
        if (lo.size() != dim) fail(pointer, "box bounds do not match instance dim");
        return ConvexSet::box(std::move(lo), std::move(hi));
    }
    if (kind == "ball") {
        Vector c = vector_field(decl.at("center"), pointer + "/center");
        if (c.dim() != dim) fail(pointer, "ball center does not match instance dim");
        return ConvexSet::ball(c, decl.at("radius").get<double>());
    }
    if (kind == "polytope") {
        std::vector<Vector> rows;
        std::vector<double> offsets;
        for (const auto& r : decl.at("rows")) rows.push_back(vector_field(r, pointer + "/rows"));
        for (const auto& b : decl.at("offsets")) offsets.push_back(b.get<double>());
        return ConvexSet::polytope(std::move(rows), std::move(offsets));
    }
    if (kind == "intersect_ball") {
        ConvexSet base = build_set(decl.at("base"), dim, pointer + "/base");
        Vector c = vector_field(decl.at("center"), pointer + "/center");
        return ConvexSet::intersect_with_ball(std::move(base), c, decl.at("radius").get<double>());
    }
    fail(pointer, "unknown set kind: " + kind);
}

VIMOProblem build_instance(const json& decl, const std::string& pointer) {
    if (!decl.is_object()) fail(pointer, "instance must be an object");
    if (!decl.contains("dim")) fail(pointer, "instance needs dim");
    const std::size_t dim = decl.at("dim").get<std::size_t>();
    if (dim == 0) fail(pointer + "/dim", "dim must be positive");
    if (!decl.contains("f")) fail(pointer, "instance needs f");
    Vector f = vector_field(decl.at("f"), pointer + "/f");
    if (f.dim() != dim) fail(pointer + "/f", "f does not match dim");

    SetValuedOperator a = build_operator(decl.value("operator", json{{"kind", "identity"}}), dim,
                                         pointer + "/operator");
    ProperConvexFunction phi =
        build_phi(decl.value("phi", json{{"kind", "zero"}}), dim, pointer + "/phi");
    ConvexSet k = build_set(decl.value("set", json{{"kind", "whole_space"}}), dim, pointer + "/set");

    Vector witness(dim);
    if (decl.contains("witness")) {
        witness = vector_field(decl.at("witness"), pointer + "/witness");
    } else {
        try {
            witness = k.an_interior_point();
        } catch (const std::exception&) {
            fail(pointer, "set kind has no default witness; provide one");
        }
    }
    try {
        return VIMOProblem(std::move(a), std::move(phi), std::move(k), std::move(f),
                           std::move(witness));
    } catch (const std::invalid_argument& e) {
        fail(pointer, e.what());
    }
}

SolverOptions solver_options(const json& cfg, std::uint64_t seed) {
    SolverOptions opt;
    if (cfg.contains("solver")) {
        const auto& s = cfg.at("solver");
        opt.step = s.value("step", opt.step);
        opt.tol = s.value("tol", opt.tol);
        opt.max_iter = s.value("max_iter", opt.max_iter);
        opt.probes.count = s.value("probes", opt.probes.count);
        opt.probes.radius = s.value("probe_radius", opt.probes.radius);
    }
    opt.probes.seed = seed + 1;
    return opt;
}

struct OutputSinks {
    std::string records_path;
    std::string csv_path;
    std::ostringstream records;
    std::ostringstream csv;

    void flush() const {
        if (!records_path.empty()) {
            std::ofstream out(records_path, std::ios::binary);
            if (!out) throw ConfigError("/output/records", "cannot open " + records_path);
            out << records.str();
        }
        if (!csv_path.empty()) {
            std::ofstream out(csv_path, std::ios::binary);
            if (!out) throw ConfigError("/output/csv", "cannot open " + csv_path);
            out << csv.str();
        }
    }
};

int task_solve(const json& cfg, std::uint64_t seed, OutputSinks& sinks) {
    VIMOProblem problem = build_instance(cfg.value("instance", json::object()), "/instance");
    SolverOptions opt = solver_options(cfg, seed);
    std::string method = "extragradient";
    if (cfg.contains("solver")) method = cfg.at("solver").value("method", method);

    SolveReport rep;
    if (method == "extragradient") {
        rep = solve_extragradient(problem, problem.witness(), opt);
    } else if (method == "galerkin") {
        GalerkinOptions gopt;
        gopt.solver = opt;
        std::vector<std::vector<std::size_t>> chain;
        if (cfg.at("solver").contains("filter")) {
            for (const auto& sub : cfg.at("solver").at("filter")) {
                chain.push_back(sub.get<std::vector<std::size_t>>());
            }
        }
        GalerkinFilter filter =
            chain.empty() ? GalerkinFilter::full(problem.dim()) : GalerkinFilter(std::move(chain));
        rep = solve_galerkin(problem, filter, gopt);
    } else if (method == "truncated") {
        TruncationOptions topt;
        topt.inner = opt;
        if (cfg.contains("solver") && cfg.at("solver").contains("radii")) {
            topt.radii = cfg.at("solver").at("radii").get<std::vector<double>>();
        }
        rep = solve_truncated(problem, topt);
    } else if (method == "lifted") {
        LiftedProblem lifted = epigraph_lift(problem);
        SolveReport inner = solve_extragradient(lifted.lifted(), lifted.lifted().witness(), opt);
        rep = lifted.unlift(inner);
    } else if (method == "homotopy") {
        HomotopyOptions hopt;
        hopt.tol = opt.tol;
        hopt.probes = opt.probes;
        hopt.fallback = opt;
        if (cfg.contains("solver")) {
            const auto& s = cfg.at("solver");
            hopt.eps = s.value("eps", hopt.eps);
            if (s.contains("lambda_schedule")) {
                hopt.lambda_schedule = s.at("lambda_schedule").get<std::vector<double>>();
            }
        }
        rep = homotopy_solve(problem.K(), problem.A(), problem.f(), hopt);
    } else {
        fail("/solver/method", "unknown method: " + method);
    }

    std::cout << emit_report(rep, ReportFormat::Table);
    sinks.records << emit_report(rep, ReportFormat::Records) << "\n";
    sinks.csv << emit_report(rep, ReportFormat::Csv);
    return rep.converged() ? 0 : 2;
}

int task_check_classes(const json& cfg, std::uint64_t seed, OutputSinks& sinks) {
    const json& inst = cfg.value("instance", json::object());
    if (!inst.contains("dim")) fail("/instance", "check-classes needs instance.dim");
    const std::size_t dim = inst.at("dim").get<std::size_t>();
    SetValuedOperator a = build_operator(inst.value("operator", json{{"kind", "identity"}}), dim,
                                         "/instance/operator");

    const json checks = cfg.value("checks", json::object());
    const int pair_count = checks.value("pairs", 200);
    const double radius = checks.value("sample_radius", 2.0);
    const double big_r = checks.value("R", 10.0);
    const double eps = checks.value("eps", 0.5);
    CheckOptions copt;
    copt.tolerance = checks.value("tolerance", copt.tolerance);
    copt.seed = seed;

    VariationModulus modulus = VariationModulus::zero();
    if (checks.contains("modulus")) {
        const auto& m = checks.at("modulus");
        const std::string kind = m.value("kind", "zero");
        if (kind == "power") {
            modulus = VariationModulus::power(m.value("coeff", 1.0), m.value("exponent", 2.0));
        } else if (kind != "zero") {
            fail("/checks/modulus", "unknown modulus kind: " + kind);
        }
    }

    std::vector<std::string> battery = {"monotone"};
    if (checks.contains("battery")) {
        battery = checks.at("battery").get<std::vector<std::string>>();
    }

    auto pairs = sample_pairs(dim, pair_count, radius, seed);
    std::vector<ClassReport> reports;
    for (const auto& name : battery) {
        if (name == "monotone") {
            reports.push_back(check_monotone(a, pairs, copt));
        } else if (name == "semibounded_variation") {
            auto ball_pairs = pairs;
            reports.push_back(
                check_semibounded_variation(a, modulus, big_r, ball_pairs, std::nullopt, copt));
        } else if (name == "radial_semicontinuity") {
            std::vector<std::array<Vector, 3>> triples;
            Sampler s(seed);
            for (int i = 0; i < std::max(1, pair_count / 10); ++i) {
                triples.push_back({s.random_point(dim, -radius, radius),
                                   s.random_point(dim, -1.0, 1.0), s.random_point(dim, -1.0, 1.0)});
            }
            std::vector<double> grid;
            for (double t = 1.0; t > 1e-10; t *= 0.25) grid.push_back(t);
            reports.push_back(check_radial_semicontinuity(a, triples, grid, false, copt));
        } else if (name == "coercivity") {
            CoercivityOptions oopt;
            oopt.base = copt;
            reports.push_back(
                check_coercivity(a, Vector(dim), {1.0, 4.0, 16.0, 64.0, 256.0, 1024.0}, oopt));
        } else if (name == "local_boundedness") {
            LocalBoundednessOptions lopt;
            lopt.base = copt;
            reports.push_back(check_local_boundedness(a, Vector(dim), eps, 128, lopt));
        } else if (name == "pseudomonotone") {
            Vector dir(dim);
            for (std::size_t i = 0; i < dim; ++i) dir[i] = 1.0;
            Trajectory traj = Trajectory::geometric(Vector(dim), dir, 0.1, 0.5, 45, &a, &dir);
            Sampler s(seed + 3);
            std::vector<Vector> probes;
            for (int i = 0; i < 16; ++i) probes.push_back(s.random_point(dim, -radius, radius));
            PseudoMonotoneOptions popt;
            popt.base = copt;
            reports.push_back(check_pseudomonotone_surrogate(a, traj, probes, popt));
        } else {
            fail("/checks/battery", "unknown check: " + name);
        }
    }

    bool all_pass = true;
    for (const auto& rep : reports) {
        std::cout << emit_report(rep, ReportFormat::Table);
        sinks.records << emit_report(rep, ReportFormat::Records) << "\n";
        all_pass = all_pass && rep.passed();
    }
    return all_pass ? 0 : 2;
}

int task_obstacle_demo(const json& cfg, std::uint64_t seed, OutputSinks& sinks) {
    const json ob = cfg.value("obstacle", json::object());
    const int dimension = ob.value("dimension", 1);
    const int nodes = ob.value("nodes", 17);
    const double p = ob.value("p", 2.0);
    const bool multivalued = ob.value("multivalued", false);
    const double trunc_radius = ob.value("truncation_radius", 10.0);
    const int stages = ob.value("galerkin_stages", 3);

    GridConfig grid(dimension, nodes);
    const std::string coeff_kind = ob.value("coefficients", "unit");
    CoefficientField coeffs = (coeff_kind == "isotropic")
                                  ? CoefficientField::isotropic_default(dimension, p)
                                  : CoefficientField::constant_unit(dimension);
    if (coeff_kind != "unit" && coeff_kind != "isotropic") {
        fail("/obstacle/coefficients", "unknown coefficient kind: " + coeff_kind);
    }

    Vector f(grid.total_nodes());
    if (ob.contains("f") && ob.at("f").is_object() && ob.at("f").value("kind", "") == "values") {
        f = vector_field(ob.at("f").at("values"), "/obstacle/f/values");
    } else {
        double value = -1.0;
        if (ob.contains("f") && ob.at("f").is_object()) value = ob.at("f").value("value", -1.0);
        for (std::size_t i = 0; i < f.dim(); ++i) f[i] = value;
    }

    SignoriniInstance inst = build_signorini_problem(grid, coeffs, f, multivalued, 200, seed);

    // bounded working set for the Galerkin filter
    VIMOProblem bounded(inst.problem.A(), inst.problem.phi(),
                        ConvexSet::intersect_with_ball(inst.problem.K(), Vector(f.dim()),
                                                       trunc_radius),
                        inst.problem.f(), inst.problem.witness());

    SolverOptions opt = solver_options(cfg, seed);
    double h = grid.spacing();
    if (!cfg.contains("solver") || !cfg.at("solver").contains("step")) {
        opt.step = h * h / 4.0;  // stability scale for the stiffness row sums
    }

    GalerkinOptions gopt;
    gopt.solver = opt;
    gopt.inner = GalerkinOptions::Inner::Extragradient;
    // nested prefix windows growing to the full grid
    std::vector<std::size_t> sizes;
    const std::size_t total = grid.total_nodes();
    for (int s = 1; s <= stages; ++s) {
        std::size_t sz = std::max<std::size_t>(2, total * s / stages);
        if (sizes.empty() || sz > sizes.back()) sizes.push_back(sz);
    }
    if (sizes.empty() || sizes.back() != total) sizes.push_back(total);
    GalerkinFilter filter = GalerkinFilter::prefixes(total, sizes);

    SolveReport rep = solve_galerkin(bounded, filter, gopt);
    ClassReport comp = verify_complementarity(inst, rep.y, 1e-4);

    std::cout << emit_report(rep, ReportFormat::Table);
    std::cout << emit_report(comp, ReportFormat::Table);
    sinks.records << emit_report(rep, ReportFormat::Records) << "\n";
    sinks.records << emit_report(comp, ReportFormat::Records) << "\n";

    // solution export: node coordinates, value, boundary flux
    auto flux = boundary_flux(inst, rep.y);
    std::ostringstream csv;
    csv << (dimension == 1 ? "x,y,flux\n" : "x1,x2,y,flux\n");
    std::size_t b = 0;
    for (std::size_t i = 0; i < total; ++i) {
        Vector pos = grid.node_position(i);
        for (std::size_t d = 0; d < pos.dim(); ++d) csv << pos[d] << ",";
        csv << rep.y[i] << ",";
        if (grid.is_boundary(i)) {
            csv << flux[b++];
        }
        csv << "\n";
    }
    sinks.csv << csv.str();

    return (rep.converged() && comp.passed()) ? 0 : 2;
}

int task_residual_scan(const json& cfg, std::uint64_t seed, OutputSinks& sinks) {
    VIMOProblem problem = build_instance(cfg.value("instance", json::object()), "/instance");
    if (problem.dim() > 2) fail("/instance/dim", "residual-scan supports dim 1 or 2");
    SolverOptions opt = solver_options(cfg, seed);
    auto probes = make_probes(problem, opt.probes);

    const json scan = cfg.value("scan", json::object());
    const int resolution = scan.value("resolution", 41);
    double radius = scan.value("radius", 2.0);
    if (problem.K().is_bounded()) radius = std::min(radius, problem.K().bounding_radius() + 0.5);

    std::ostringstream csv;
    csv << (problem.dim() == 1 ? "x,residual\n" : "x1,x2,residual\n");
    const Vector& c = problem.witness();
    for (int i = 0; i < resolution; ++i) {
        double x0 = c[0] - radius + 2.0 * radius * i / (resolution - 1);
        if (problem.dim() == 1) {
            Vector y = problem.K().project(Vector{x0});
            csv << y[0] << "," << residual(problem, y, probes) << "\n";
            continue;
        }
        for (int j = 0; j < resolution; ++j) {
            double x1 = c[1] - radius + 2.0 * radius * j / (resolution - 1);
            Vector y = problem.K().project(Vector{x0, x1});
            csv << y[0] << "," << y[1] << "," << residual(problem, y, probes) << "\n";
        }
    }
    sinks.csv << csv.str();
    std::cout << "residual scan written (" << resolution << (problem.dim() == 2 ? "^2" : "")
              << " samples)\n";
    return 0;
}

}  // namespace

int run_config(const std::string& path, const CliOverrides& overrides) {
    json cfg;
    {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot open config file " << path << "\n";
            return 1;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        try {
            cfg = json::parse(text);
        } catch (const json::parse_error& e) {
            std::size_t line = 1;
            for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
                if (text[i] == '\n') ++line;
            }
            std::cerr << "error: " << path << ":" << line << ": " << e.what() << "\n";
            return 1;
        }
    }

    try {
        if (!cfg.is_object()) throw ConfigError("/", "config must be a JSON object");
        const int version = cfg.value("schema_version", 0);
        if (version != 1) {
            throw ConfigError("/schema_version", "unsupported schema_version (expected 1)");
        }

        std::uint64_t seed = 0;
        if (const char* env = std::getenv("VIMO_SEED"); env != nullptr) {
            seed = std::strtoull(env, nullptr, 10);
        }
        seed = cfg.value("seed", seed);
        if (overrides.seed) seed = *overrides.seed;

        if (overrides.tol) cfg["solver"]["tol"] = *overrides.tol;
        if (overrides.step) cfg["solver"]["step"] = *overrides.step;
        if (overrides.max_iter) cfg["solver"]["max_iter"] = *overrides.max_iter;
        if (overrides.probes) cfg["solver"]["probes"] = *overrides.probes;

        std::string task = cfg.value("task", "");
        if (overrides.task) task = *overrides.task;
        if (task.empty()) throw ConfigError("/task", "missing task");

        OutputSinks sinks;
        sinks.records_path = cfg.contains("output") ? cfg.at("output").value("records", "") : "";
        sinks.csv_path = cfg.contains("output") ? cfg.at("output").value("csv", "") : "";
        if (overrides.records_path) sinks.records_path = *overrides.records_path;
        if (overrides.csv_path) sinks.csv_path = *overrides.csv_path;

        int code = 0;
        if (task == "solve") {
            code = task_solve(cfg, seed, sinks);
        } else if (task == "check-classes") {
            code = task_check_classes(cfg, seed, sinks);
        } else if (task == "obstacle-demo") {
            code = task_obstacle_demo(cfg, seed, sinks);
        } else if (task == "residual-scan") {
            code = task_residual_scan(cfg, seed, sinks);
        } else {
            throw ConfigError("/task", "unknown task: " + task);
        }
        sinks.flush();
        return code;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace vimo
