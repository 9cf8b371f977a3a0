#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "vimo/problem.hpp"
#include "vimo/solvers.hpp"

namespace vimo {

/// Schema or usage error with an anchor: the 1-based line for parse errors,
/// the JSON pointer path for semantic ones.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string anchor, const std::string& message)
        : std::runtime_error(anchor + ": " + message), anchor_(std::move(anchor)) {}

    const std::string& anchor() const { return anchor_; }

private:
    std::string anchor_;
};

/// Command-line overrides applied on top of the config file.
struct CliOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<double> step;
    std::optional<int> max_iter;
    std::optional<int> probes;
    std::optional<std::string> task;
    std::optional<std::string> records_path;
    std::optional<std::string> csv_path;
};

/// Loads a config file, executes the declared task and writes the outputs.
/// Exit codes: 0 converged / all checks pass, 2 fail or max_iter, 1 usage or
/// schema error (message on stderr, anchored).
int run_config(const std::string& path, const CliOverrides& overrides = {});

}  // namespace vimo
