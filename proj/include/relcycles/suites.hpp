#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relcycles/cubical.hpp"

// Randomized verification suites shared by the CLI and the acceptance binary.
// A report depends only on its configuration; wall time is emitted only on request.

namespace relcycles::suites {

using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string counterexample; // first failure only
    std::string skipped;        // reason, when the check could not run

    void record(bool ok, const std::function<std::string()>& describe);
    /// Runs body; a thrown Error counts as a failure and is appended to the description.
    void attempt(const std::function<bool()>& body, const std::function<std::string()>& describe);
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    Json config = Json::object();
    Json results = Json::object();
    std::deque<Check> checks; // references stay valid as checks are added
    double wall_seconds = 0;

    /// Existing check with this name, or a new one appended at the end.
    Check& check(const std::string& name);
    bool passed() const;
};

enum class Format { Json, Tsv, Text };

/// "json" | "tsv" | "text"; InvalidArgument otherwise.
Format parse_format(const std::string& text);
std::string render(const Report& report, Format format, bool timing = false);
Json to_json(const Report& report, bool timing = false);

/// "Q" or a prime p.
Field parse_field(const std::string& text);
std::string field_name(Field f);

struct CubicalConfig {
    std::vector<std::uint32_t> primes{3, 5, 7};
    std::vector<long> exponents{1, 2, 3};
    std::size_t max_arity = 4;
    std::size_t samples = 200;
    cubical::WeightNorm norm = cubical::WeightNorm::Max;
    std::uint64_t seed = 1;
};
Report run_cubical_suite(const CubicalConfig& cfg);

struct Weight1Config {
    Field field = Field::prime(5);
    long exponent = 2;
    std::size_t trials = 200;
    std::size_t cycles3 = 10; // 3-cycles for the contraction check
    std::uint64_t seed = 1;
};
Report run_weight1_suite(const Weight1Config& cfg);

struct ChowConfig {
    std::uint32_t q = 3;
    std::string modulus = "2*[0]";
    bool oracle = true;
    long degree_bound = 3;
    long separation_degree = 3;
    std::size_t relation_trials = 200;
    std::size_t curve_trials = 0;
    std::uint64_t seed = 1;
};
Report run_chow_suite(const ChowConfig& cfg);

struct FormsConfig {
    Field field = Field::prime(5);
    std::size_t nvars = 3;
    std::vector<int> mult{2, 1};
    std::vector<bool> in_F{};
    int degree = 2;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};
Report run_forms_suite(const FormsConfig& cfg);

} // namespace relcycles::suites
