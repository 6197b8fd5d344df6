// arithcap: command-line front end. Each subcommand fills an ExperimentConfig,
// optionally starting from --config FILE, and hands it to run().

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arithcap/experiment.hpp"

namespace {

using arithcap::ExperimentConfig;

struct Binding {
    CLI::Option* option;
    std::function<void(ExperimentConfig&)> apply;
};

class Flags {
public:
    Flags(CLI::App* sub, std::vector<Binding>& out) : sub_(sub), out_(out) {}

    template <class T>
    Flags& add(const std::string& name, T ExperimentConfig::*field, const std::string& help) {
        auto value = std::make_shared<T>();
        CLI::Option* opt = sub_->add_option(name, *value, help);
        out_.push_back({opt, [value, field](ExperimentConfig& c) { c.*field = *value; }});
        return *this;
    }

    Flags& flag(const std::string& name, bool ExperimentConfig::*field, const std::string& help) {
        CLI::Option* opt = sub_->add_flag(name, help);
        out_.push_back({opt, [field](ExperimentConfig& c) { c.*field = true; }});
        return *this;
    }

    Flags& domain() {
        auto value = std::make_shared<std::string>();
        CLI::Option* opt = sub_->add_option("--domain", *value, "shorthand like circle(1.5), a JSON file, or inline JSON");
        out_.push_back({opt, [value](ExperimentConfig& c) {
                            c.domain = !value->empty() && value->front() == '{' ? nlohmann::json::parse(*value)
                                                                                : nlohmann::json(*value);
                        }});
        return *this;
    }

    Flags& at() {
        auto value = std::make_shared<std::string>();
        CLI::Option* opt = sub_->add_option("--at", *value, "point x,y");
        out_.push_back({opt, [value](ExperimentConfig& c) {
                            std::vector<double> v;
                            std::stringstream ss(*value);
                            std::string item;
                            while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
                            c.at = v;
                        }});
        return *this;
    }

    Flags& potential() {
        domain();
        add("--resolution", &ExperimentConfig::resolution, "collocation points per curve");
        add("--residual-threshold", &ExperimentConfig::residual_threshold, "max collocation residual");
        return *this;
    }

    Flags& identities() {
        add("--nodes", &ExperimentConfig::nodes, "measure nodes per curve");
        add("--boundary-zero", &ExperimentConfig::boundary_zero, "min |f| on the boundary");
        add("--center-zero", &ExperimentConfig::center_zero, "|f(O)| treated as zero below this");
        add("--vanishing-tol", &ExperimentConfig::vanishing_tolerance, "relative Taylor coefficient zero threshold");
        add("--jet-order", &ExperimentConfig::jet_order, "Taylor order");
        return *this;
    }

private:
    CLI::App* sub_;
    std::vector<Binding>& out_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithcap: integer patching, power series families and equilibrium potentials"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; flags override it");
    std::vector<Binding> bindings;

    auto sub = [&](const std::string& name, const std::string& help) { return Flags(app.add_subcommand(name, help), bindings); };
    auto out = [](Flags& f) { f.add("--out,--output", &ExperimentConfig::output_path, "write the artifact here"); };

    {
        auto f = sub("capacity", "Robin constant and capacity of a domain");
        f.potential();
        out(f);
    }
    {
        auto f = sub("green", "Green's function at a point");
        f.potential().at();
        out(f);
    }
    {
        auto f = sub("measure", "equilibrium measure as CSV (t, x, y, weight)");
        f.potential().add("--nodes", &ExperimentConfig::nodes, "nodes per curve");
        out(f);
    }
    {
        auto f = sub("jet", "Taylor jet of a map at the center and its capacitary norm");
        f.potential().add("--map", &ExperimentConfig::map, "polynomial in z or JSON list of [re, im]");
        f.add("--jet-order", &ExperimentConfig::jet_order, "Taylor order");
        f.add("--vanishing-tol", &ExperimentConfig::vanishing_tolerance, "relative zero threshold");
        out(f);
    }
    {
        auto f = sub("overflow", "overflow of a polynomial map");
        f.potential().identities().add("--map", &ExperimentConfig::map, "polynomial map");
        f.add("--method", &ExperimentConfig::method, "def, energy or both");
        out(f);
    }
    {
        auto f = sub("identity-check", "pushforward and constant-term identities");
        f.potential().identities().at().add("--map", &ExperimentConfig::map, "polynomial map");
        f.add("--which", &ExperimentConfig::which, "prop34, prop35 or cor36");
        f.add("--samples", &ExperimentConfig::samples, "number of sample points");
        f.add("--samples-file", &ExperimentConfig::samples_path, "JSON list of [x, y] points");
        out(f);
    }
    {
        auto f = sub("classical-check", "exterior of a disk in the inverted chart");
        f.add("--hole-radius", &ExperimentConfig::hole_radius, "radius of K");
        f.add("--samples", &ExperimentConfig::samples, "number of exterior points");
        f.add("--resolution", &ExperimentConfig::resolution, "collocation points");
        f.add("--nodes", &ExperimentConfig::nodes, "measure nodes");
        out(f);
    }
    {
        auto f = sub("symmetry-check", "conjugation symmetry of a map on the boundary");
        f.domain().add("--map", &ExperimentConfig::map, "polynomial map");
        f.add("--samples", &ExperimentConfig::samples, "boundary samples");
        out(f);
    }
    {
        auto f = sub("pseudoconvex", "degree of the gluing datum and jet relations");
        f.potential().add("--phi", &ExperimentConfig::phi, "gluing map");
        f.add("--jet-order", &ExperimentConfig::jet_order, "Taylor order");
        out(f);
    }
    {
        auto f = sub("integerize", "exponent M making the top coefficients of f^M integral");
        f.add("--poly", &ExperimentConfig::poly, "monic rational polynomial");
        f.add("--top", &ExperimentConfig::top, "number N of top coefficients");
        f.flag("--search", &ExperimentConfig::search, "smallest M by exhaustive search");
        f.add("--cap", &ExperimentConfig::cap, "search bound");
        out(f);
    }
    {
        auto f = sub("patch", "monic integer polynomial large outside the holes");
        f.add("--poly", &ExperimentConfig::poly, "monic polynomial m (decimals allowed)");
        f.add("--holes", &ExperimentConfig::holes_path, "JSON list of {center, radius}");
        f.add("--max-degree", &ExperimentConfig::max_degree, "cap on the output degree");
        f.add("--grid", &ExperimentConfig::grid, "initial grid per axis");
        f.add("--max-grid", &ExperimentConfig::max_grid, "grid refinement limit");
        f.add("--denominator-limit", &ExperimentConfig::denominator_limit, "rationalization denominator");
        f.add("--spot-samples", &ExperimentConfig::spot_samples, "spot-check points");
        f.add("--seed", &ExperimentConfig::seed, "random seed for spot checks");
        out(f);
    }
    {
        auto f = sub("family", "integer power series sum a_n / q^n");
        f.add("--p,--poly", &ExperimentConfig::poly, "monic integer polynomial p");
        f.add("--order", &ExperimentConfig::order, "truncation order D (default 16 deg p)");
        f.add("--seeds", &ExperimentConfig::seeds_path, "JSON list of integer sequences");
        f.add("--count", &ExperimentConfig::count, "random seeds to draw");
        f.add("--length", &ExperimentConfig::length, "length of random seeds");
        f.add("--bound", &ExperimentConfig::bound, "entries drawn from [-bound, bound]");
        f.add("--random-seed,--seed", &ExperimentConfig::seed, "generator seed");
        f.add("--f", &ExperimentConfig::f, "integer series to compose with");
        f.add("--phi", &ExperimentConfig::phi, "map for the tail bound");
        f.add("--samples", &ExperimentConfig::samples, "tail bound sample points");
        f.domain();
        out(f);
    }
    {
        auto f = sub("suggest-region", "heuristic real polynomial for a sample cloud");
        f.add("--samples-file", &ExperimentConfig::samples_path, "JSON list of [x, y] points");
        f.add("--degree-budget", &ExperimentConfig::degree_budget, "maximum degree");
        out(f);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    ExperimentConfig cfg;
    try {
        if (!config_path.empty()) cfg = arithcap::load_config(config_path);
        cfg.command = app.get_subcommands().front()->get_name();
        for (const auto& b : bindings)
            if (b.option->count() > 0) b.apply(cfg);
    } catch (const arithcap::Error& e) {
        std::cout << arithcap::error_record(e).dump(2) << '\n';
        return arithcap::exit_code(e.family());
    } catch (const std::exception& e) {
        arithcap::Error err(arithcap::ErrorCode::InvalidArgument, e.what());
        std::cout << arithcap::error_record(err).dump(2) << '\n';
        return arithcap::exit_code(err.family());
    }
    return arithcap::run(cfg, std::cout);
}
