#ifndef HAHN_SELFTEST_SUITES_HPP
#define HAHN_SELFTEST_SUITES_HPP

// Property suites behind `hahncalc selftest` and the acceptance binary. Each
// suite draws from a fixed seed, counts samples and failed checks, and hashes
// the exact values it computes so that two runs can be compared bit for bit.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hahn::selftest
{

inline constexpr std::uint64_t default_seed = 0x5eed2026;

struct suite_result {
    std::string name;
    int criterion = 0;
    std::uint64_t samples = 0;
    std::uint64_t failures = 0;
    // FNV-1a over the JSON text of the exact values the suite computed.
    std::uint64_t digest = 0;
    std::optional<std::string> first_failure;
    // Wall time; kept out of to_json so reports stay reproducible.
    double seconds = 0;

    bool ok() const
    {
        return failures == 0 && samples > 0;
    }
};

struct suite_info {
    std::string name;
    int criterion;
    std::string summary;
};

const std::vector<suite_info> &suite_list();

// Runs one suite by name. Throws std::invalid_argument for unknown names.
suite_result run_suite(const std::string &name, std::uint64_t seed = default_seed);

// "all" runs every suite in order.
std::vector<suite_result> run(const std::string &which, std::uint64_t seed = default_seed);

nlohmann::json to_json(const suite_result &r);
nlohmann::json report(const std::vector<suite_result> &results);

} // namespace hahn::selftest

#endif
