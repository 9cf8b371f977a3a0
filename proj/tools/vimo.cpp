#include <string>

#include "CLI11.hpp"
#include "vimo/config.hpp"

namespace {

void add_overrides(CLI::App* cmd, std::string& config_path, vimo::CliOverrides& ov) {
    cmd->add_option("config", config_path, "config file (JSON)")->required();
    cmd->add_option("--seed", [&ov](const std::vector<std::string>& v) {
        ov.seed = std::stoull(v.back());
        return true;
    }, "override the seed");
    cmd->add_option("--tol", [&ov](const std::vector<std::string>& v) {
        ov.tol = std::stod(v.back());
        return true;
    }, "override the solver tolerance");
    cmd->add_option("--step", [&ov](const std::vector<std::string>& v) {
        ov.step = std::stod(v.back());
        return true;
    }, "override the solver step");
    cmd->add_option("--max-iter", [&ov](const std::vector<std::string>& v) {
        ov.max_iter = std::stoi(v.back());
        return true;
    }, "override the iteration cap");
    cmd->add_option("--probes", [&ov](const std::vector<std::string>& v) {
        ov.probes = std::stoi(v.back());
        return true;
    }, "override the probe count");
    cmd->add_option("--records", [&ov](const std::vector<std::string>& v) {
        ov.records_path = v.back();
        return true;
    }, "records output path (line-delimited JSON)");
    cmd->add_option("--csv", [&ov](const std::vector<std::string>& v) {
        ov.csv_path = v.back();
        return true;
    }, "CSV output path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"variational inequalities with multivalued operators: batch runner"};
    app.require_subcommand(1);

    struct Cmd {
        std::string task;
        std::string config_path;
        vimo::CliOverrides overrides;
    };
    std::vector<std::shared_ptr<Cmd>> cmds;
    for (const auto& task :
         {std::string("solve"), std::string("check-classes"), std::string("obstacle-demo"),
          std::string("residual-scan")}) {
        auto cmd = std::make_shared<Cmd>();
        cmd->task = task;
        cmd->overrides.task = task;
        auto* sub = app.add_subcommand(task, "run the " + task + " task from a config file");
        add_overrides(sub, cmd->config_path, cmd->overrides);
        sub->callback([cmd]() {
            int code = vimo::run_config(cmd->config_path, cmd->overrides);
            if (code != 0) throw CLI::RuntimeError(code);
        });
        cmds.push_back(cmd);
    }

    CLI11_PARSE(app, argc, argv);
    return 0;
}
