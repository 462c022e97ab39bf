#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glat/germ.hpp"

namespace glat::verify {

// Unset fields fall back to each suite's own default range.
struct Config {
    std::optional<std::size_t> max_enum;
    std::optional<int> max_degree;
    std::optional<int> max_length;
    std::optional<int> level;  // n in p^n R^delta, Phi_n, ...
    std::optional<int> p;
    std::optional<int> delta;
    std::uint64_t seed = 0;
    std::optional<int> samples;
    std::string format = "text";
    std::string input;
    std::string output;
};

// Rejects unknown keys and non-positive guards with BadInput.
Config config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Config& c);

struct Failure {
    std::string case_id;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    std::string name;
    nlohmann::json params;
    std::string range;
    std::int64_t cases = 0;
    std::int64_t failed = 0;
    std::vector<Failure> failures;  // the first few, in case order
    double seconds = 0;
    bool passed() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const Config& cfg = {});
// "all" runs every suite in the order of suite_names().
std::vector<SuiteReport> run_suites(const std::string& name, const Config& cfg = {});

nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

// Germs addressable by name: klein, free_abelian, braid3, integer, products
// such as integer*klein, and solution:<n>:<index> for the structure germ of
// the index-th solution of ybe::enumerate(n).
std::optional<germ::GermTable> named_germ(const std::string& name);
std::vector<std::string> builtin_germ_names();
// Structure germs of every solution with at most maxN points, by name.
std::vector<std::string> solution_germ_names(int maxN);

}  // namespace glat::verify
