#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace prodring {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

enum class ReportFormat { Text, Machine };

/// Overrides from the command line; unset fields defer to the scenario.
struct RunOverrides {
    std::optional<std::uint64_t> bound;
    std::optional<std::uint64_t> seed;
};

struct Report {
    std::vector<nlohmann::json> records;  // header, one per query, summary
    int exit_code = 0;                    // 0 ok, 2 assertion failed
};

/// Thrown for malformed or inconsistent input; maps to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses JSON text, reporting line and column on failure (InputError).
nlohmann::json parse_scenario_text(const std::string& text, const std::string& source);

/// Executes every query in order. Input errors throw InputError; errors
/// raised while answering a query are recorded in that query's record.
Report run_scenario(const nlohmann::json& scenario, const std::string& name, const RunOverrides& overrides = {});

Report run_scenario_file(const std::string& path, const RunOverrides& overrides = {});

std::string render(const Report& report, ReportFormat format);

/// The refusal text for requests about infinite index sets.
std::string infinite_index_refusal();

}  // namespace prodring
