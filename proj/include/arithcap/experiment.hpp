#pragma once

// Experiment configuration and the dispatcher behind the command-line tool.
// A configuration round-trips through JSON; every field has a default, so a
// file only needs the fields it changes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arithcap/domain.hpp"
#include "arithcap/errors.hpp"
#include "arithcap/patching.hpp"

namespace arithcap {

struct ExperimentConfig {
    std::string command;

    // Inputs. domain is either a shorthand string ("circle(1.5)"), a path to a
    // JSON file, or an inline JSON object; null means the unit disk.
    nlohmann::json domain;
    std::string poly;       // integerize / patch input, family p
    std::string map;        // holomorphic map (polynomial text or JSON list of [re, im])
    std::string phi = "z";  // gluing-side map for pseudoconvex / family
    std::string f;          // family: series composed with the members
    std::string holes_path;
    std::string seeds_path;
    std::string samples_path;
    std::string output_path;

    std::string method = "both";
    std::string which = "prop35";
    std::optional<std::vector<double>> at;

    // Tolerances.
    double residual_threshold = 1e-6;
    double vanishing_tolerance = 1e-10;
    double boundary_zero = 1e-8;
    double center_zero = 1e-10;

    // Resolutions.
    std::size_t resolution = 256; // collocation points per curve
    std::size_t nodes = 256;      // measure nodes per curve
    unsigned grid = 256;
    unsigned max_grid = 2048;
    std::size_t samples = 20;
    unsigned spot_samples = 1000;
    std::size_t jet_order = 16;

    // Degrees and orders.
    std::uint64_t max_degree = 4096;
    unsigned denominator_limit = 64;
    unsigned top = 1;
    std::uint64_t cap = 4096;
    bool search = false;
    std::size_t order = 0; // 0 selects 16 * deg p
    unsigned degree_budget = 8;

    double hole_radius = 1.0;

    // Family seeds generated when no seeds file is given.
    std::size_t count = 8;
    std::size_t length = 8;
    std::int64_t bound = 1;
    std::uint64_t seed = 1;

    void validate() const;
};

void to_json(nlohmann::json& j, const ExperimentConfig& c);
void from_json(const nlohmann::json& j, ExperimentConfig& c);

ExperimentConfig load_config(const std::string& path);

// Parses the domain field: shorthand, file path or JSON object.
DomainSpec parse_domain(const nlohmann::json& spec);
RegionSpec parse_holes(const nlohmann::json& holes);

// Exit status for an error family; 0 is success, 1 an unexpected failure.
int exit_code(ErrorFamily family);
nlohmann::json error_record(const Error& e);

// Runs the configured command. The JSON result (or CSV for `measure`) goes to
// output_path when set, otherwise to `out`. Errors are reported as a JSON
// record on `out` and mapped to the exit status.
int run(const ExperimentConfig& config, std::ostream& out);

} // namespace arithcap
