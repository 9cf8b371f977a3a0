#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "vimo/config.hpp"
#include "vimo/report_io.hpp"

using namespace vimo;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content = "") {
        path = std::string("/tmp/vimo_test_") + name;
        if (!content.empty()) {
            std::ofstream out(path, std::ios::binary);
            out << content;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }

    std::string read() const {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
};

SolveReport sample_solve_report() {
    SolveReport r;
    r.y = Vector{1.0, 0.5};
    r.residual = 3.25e-9;
    r.iterations = 42;
    r.witness_w = Vector{1.0, 0.5};
    r.trace = {{0, 1.0}, {10, 0.25}, {42, 3.25e-9}};
    r.status = SolveStatus::Converged;
    r.method = "extragradient";
    r.notes = {"example"};
    return r;
}

ClassReport sample_class_report() {
    ClassReport r;
    r.verdict = Verdict::Fail;
    r.samples_used = 17;
    r.margin = -0.5;
    r.check_name = "monotone";
    ClassWitness w;
    w.points = {Vector{1.0}, Vector{0.0}};
    w.values = {-1.0, 0.0};
    w.detail = "violation";
    r.witness = std::move(w);
    return r;
}

}  // namespace

TEST_CASE("records round-trip to equal reports") {
    auto solve = sample_solve_report();
    auto line = emit_report(solve, ReportFormat::Records);
    CHECK(parse_solve_report(line) == solve);

    auto cls = sample_class_report();
    auto cline = emit_report(cls, ReportFormat::Records);
    CHECK(parse_class_report(cline) == cls);

    // witness coordinates appear in the records line
    CHECK(cline.find("\"points\"") != std::string::npos);
    CHECK(cline.find("violation") != std::string::npos);
}

TEST_CASE("csv carries the iteration trace") {
    auto solve = sample_solve_report();
    auto csv = emit_report(solve, ReportFormat::Csv);
    int rows = 0;
    for (char c : csv) rows += (c == '\n');
    CHECK(rows == 4);  // header + 3 trace rows
    CHECK(csv.rfind("iteration,residual\n", 0) == 0);
}

TEST_CASE("table format mentions residual and iterations") {
    auto text = emit_report(sample_solve_report(), ReportFormat::Table);
    CHECK(text.find("residual") != std::string::npos);
    CHECK(text.find("42") != std::string::npos);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("solve task: shrinkage instance converges with exit 0") {
    TempFile records("shrink.jsonl");
    TempFile cfg("shrink.json", R"({
      "schema_version": 1,
      "task": "solve",
      "seed": 5,
      "instance": {
        "dim": 1,
        "operator": {"kind": "identity"},
        "phi": {"kind": "l1"},
        "set": {"kind": "whole_space"},
        "f": [2.0]
      },
      "solver": {"method": "extragradient", "tol": 1e-7}
    })");
    CliOverrides ov;
    ov.records_path = records.path;
    int code = run_config(cfg.path, ov);
    CHECK(code == 0);
    auto rep = parse_solve_report(records.read());
    CHECK(rep.status == SolveStatus::Converged);
    CHECK(std::abs(rep.y[0] - 1.0) < 1e-6);
}

TEST_CASE("unknown operator kind exits 1") {
    TempFile cfg("badop.json", R"({
      "schema_version": 1,
      "task": "solve",
      "instance": {"dim": 1, "operator": {"kind": "mystery"}, "f": [1.0]}
    })");
    CHECK(run_config(cfg.path, {}) == 1);
}

TEST_CASE("parse errors exit 1") {
    TempFile cfg("broken.json", "{ not json ");
    CHECK(run_config(cfg.path, {}) == 1);
    CHECK(run_config("/tmp/does_not_exist_vimo.json", {}) == 1);

    TempFile wrong_version("wrongver.json", R"({"schema_version": 99, "task": "solve"})");
    CHECK(run_config(wrong_version.path, {}) == 1);
}

TEST_CASE("check-classes on -y fails with exit 2 and a witness record") {
    TempFile records("negid.jsonl");
    TempFile cfg("negid.json", R"({
      "schema_version": 1,
      "task": "check-classes",
      "seed": 9,
      "instance": {"dim": 1, "operator": {"kind": "negative_identity"}, "f": [0.0]},
      "checks": {"battery": ["monotone"], "pairs": 50}
    })");
    CliOverrides ov;
    ov.records_path = records.path;
    CHECK(run_config(cfg.path, ov) == 2);
    auto rep = parse_class_report(records.read());
    CHECK(rep.verdict == Verdict::Fail);
    CHECK(rep.witness.has_value());
}

TEST_CASE("check-classes battery passes for the subdifferential") {
    TempFile cfg("subdiff.json", R"({
      "schema_version": 1,
      "task": "check-classes",
      "seed": 11,
      "instance": {"dim": 2, "operator": {"kind": "subdiff_l1"}, "f": [0.0, 0.0]},
      "checks": {
        "battery": ["monotone", "semibounded_variation", "radial_semicontinuity",
                     "local_boundedness", "pseudomonotone"],
        "pairs": 100
      }
    })");
    CHECK(run_config(cfg.path, {}) == 0);
}

TEST_CASE("records output is byte-identical across reruns with the same seed") {
    const char* config_text = R"({
      "schema_version": 1,
      "task": "solve",
      "seed": 31,
      "instance": {
        "dim": 2,
        "operator": {"kind": "linear", "matrix": [[2.0, 0.5], [0.5, 1.0]]},
        "set": {"kind": "box", "lo": [0.0, 0.0], "hi": [1.0, 1.0]},
        "f": [2.0, 0.5]
      },
      "solver": {"method": "extragradient"}
    })";
    TempFile cfg("det.json", config_text);
    TempFile rec1("det1.jsonl"), rec2("det2.jsonl");
    CliOverrides ov1, ov2;
    ov1.records_path = rec1.path;
    ov2.records_path = rec2.path;
    REQUIRE(run_config(cfg.path, ov1) == 0);
    REQUIRE(run_config(cfg.path, ov2) == 0);
    CHECK(rec1.read() == rec2.read());
    CHECK(!rec1.read().empty());
}

TEST_CASE("VIMO_SEED supplies the default seed") {
    TempFile rec1("env1.jsonl"), rec2("env2.jsonl");
    TempFile cfg("envseed.json", R"({
      "schema_version": 1,
      "task": "check-classes",
      "instance": {"dim": 2, "operator": {"kind": "subdiff_l1"}, "f": [0.0, 0.0]},
      "checks": {"battery": ["local_boundedness"], "pairs": 30}
    })");
    setenv("VIMO_SEED", "1234", 1);
    CliOverrides ov1;
    ov1.records_path = rec1.path;
    REQUIRE(run_config(cfg.path, ov1) == 0);
    setenv("VIMO_SEED", "1234", 1);
    CliOverrides ov2;
    ov2.records_path = rec2.path;
    REQUIRE(run_config(cfg.path, ov2) == 0);
    unsetenv("VIMO_SEED");
    CHECK(rec1.read() == rec2.read());
    CHECK(!rec1.read().empty());
}

TEST_CASE("cli overrides replace config keys") {
    TempFile cfg("ovr.json", R"({
      "schema_version": 1,
      "task": "solve",
      "instance": {"dim": 1, "operator": {"kind": "identity"}, "f": [0.5]},
      "solver": {"max_iter": 5000}
    })");
    CliOverrides ov;
    ov.max_iter = 1;   // starve the solver
    ov.tol = 1e-16;    // and make the target unreachable
    int code = run_config(cfg.path, ov);
    CHECK(code == 2);
}

TEST_CASE("obstacle demo runs end to end") {
    TempFile records("obst.jsonl");
    TempFile csv("obst.csv");
    TempFile cfg("obst.json", R"({
      "schema_version": 1,
      "task": "obstacle-demo",
      "seed": 3,
      "obstacle": {"dimension": 1, "nodes": 9, "p": 2.0,
                    "f": {"kind": "constant", "value": -2.0},
                    "galerkin_stages": 2},
      "solver": {"max_iter": 40000}
    })");
    CliOverrides ov;
    ov.records_path = records.path;
    ov.csv_path = csv.path;
    int code = run_config(cfg.path, ov);
    CHECK(code == 0);
    auto text = records.read();
    CHECK(text.find("solve_report") != std::string::npos);
    CHECK(text.find("complementarity") != std::string::npos);
    // csv: header + one row per node
    int rows = 0;
    for (char c : csv.read()) rows += (c == '\n');
    CHECK(rows == 10);
}

TEST_CASE("residual scan writes a grid of residuals") {
    TempFile csv("scan.csv");
    TempFile cfg("scan.json", R"({
      "schema_version": 1,
      "task": "residual-scan",
      "instance": {
        "dim": 1,
        "operator": {"kind": "subdiff_l1"},
        "set": {"kind": "whole_space"},
        "f": [0.5]
      },
      "scan": {"resolution": 21, "radius": 2.0}
    })");
    CliOverrides ov;
    ov.csv_path = csv.path;
    CHECK(run_config(cfg.path, ov) == 0);
    auto text = csv.read();
    int rows = 0;
    for (char c : text) rows += (c == '\n');
    CHECK(rows == 22);
    CHECK(text.rfind("x,residual\n", 0) == 0);
}

TEST_CASE("sum operators and truncated method via config") {
    TempFile cfg("sum.json", R"({
      "schema_version": 1,
      "task": "solve",
      "instance": {
        "dim": 1,
        "operator": {"kind": "sum", "operands": [
            {"kind": "subdiff_l1"}, {"kind": "identity"}]},
        "set": {"kind": "whole_space"},
        "f": [2.0]
      },
      "solver": {"method": "truncated", "radii": [1.0, 2.0, 4.0]}
    })");
    // d|y| + y ∋ 2 has the solution y = 1 (interior of B_2)
    TempFile records("sum.jsonl");
    CliOverrides ov;
    ov.records_path = records.path;
    CHECK(run_config(cfg.path, ov) == 0);
    auto rep = parse_solve_report(records.read());
    CHECK(std::abs(rep.y[0] - 1.0) < 1e-5);
}

TEST_CASE("lifted method via config") {
    TempFile records("lift.jsonl");
    TempFile cfg("lift.json", R"({
      "schema_version": 1,
      "task": "solve",
      "instance": {
        "dim": 1,
        "operator": {"kind": "identity"},
        "phi": {"kind": "l1"},
        "set": {"kind": "whole_space"},
        "f": [2.0]
      },
      "solver": {"method": "lifted"}
    })");
    CliOverrides ov;
    ov.records_path = records.path;
    CHECK(run_config(cfg.path, ov) == 0);
    auto rep = parse_solve_report(records.read());
    CHECK(std::abs(rep.y[0] - 1.0) < 1e-5);
}

TEST_CASE("galerkin method with a config filter") {
    TempFile records("gal.jsonl");
    TempFile cfg("gal.json", R"({
      "schema_version": 1,
      "task": "solve",
      "instance": {
        "dim": 2,
        "operator": {"kind": "identity"},
        "set": {"kind": "box", "lo": [0.0, 0.0], "hi": [1.0, 1.0]},
        "f": [2.0, 0.5],
        "witness": [0.0, 0.0]
      },
      "solver": {"method": "galerkin", "filter": [[0], [0, 1]]}
    })");
    CliOverrides ov;
    ov.records_path = records.path;
    CHECK(run_config(cfg.path, ov) == 0);
    auto rep = parse_solve_report(records.read());
    CHECK(std::abs(rep.y[0] - 1.0) < 1e-6);
    CHECK(std::abs(rep.y[1] - 0.5) < 1e-6);
    CHECK(rep.trace.size() == 2);
}

TEST_CASE("residual scan covers 2-D boxes") {
    TempFile csv("scan2.csv");
    TempFile cfg("scan2.json", R"({
      "schema_version": 1,
      "task": "residual-scan",
      "instance": {
        "dim": 2,
        "operator": {"kind": "identity"},
        "set": {"kind": "box", "lo": [0.0, 0.0], "hi": [1.0, 1.0]},
        "f": [2.0, 0.5],
        "witness": [0.5, 0.5]
      },
      "scan": {"resolution": 11, "radius": 1.0}
    })");
    CliOverrides ov;
    ov.csv_path = csv.path;
    CHECK(run_config(cfg.path, ov) == 0);
    auto text = csv.read();
    int rows = 0;
    for (char c : text) rows += (c == '\n');
    CHECK(rows == 122);  // header + 11^2 samples
    CHECK(text.rfind("x1,x2,residual\n", 0) == 0);
}

TEST_CASE("homotopy method via config") {
    TempFile records("homo.jsonl");
    TempFile cfg("homo.json", R"({
      "schema_version": 1,
      "task": "solve",
      "instance": {
        "dim": 1,
        "operator": {"kind": "identity"},
        "set": {"kind": "box", "lo": [0.0], "hi": [1.0]},
        "f": [2.0]
      },
      "solver": {"method": "homotopy"}
    })");
    CliOverrides ov;
    ov.records_path = records.path;
    CHECK(run_config(cfg.path, ov) == 0);
    auto rep = parse_solve_report(records.read());
    CHECK(std::abs(rep.y[0] - 1.0) < 1e-6);
}
