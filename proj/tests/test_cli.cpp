#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "arithcap/experiment.hpp"
#include "arithcap/text_format.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int rc = -1;
    std::string out;
};

Result cli(const std::string& args) {
    const std::string cmd = std::string(ARITHCAP_BIN) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "arithcap_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("capacity of a disk") {
    auto r = cli("capacity --domain 'circle(1.5)'");
    REQUIRE(r.rc == 0);
    auto j = json::parse(r.out);
    CHECK(std::abs(j["robin"].get<double>() - std::log(1.5)) < 1e-9);
    CHECK(std::abs(j["capacity"].get<double>() - 2.0 / 3.0) < 1e-9);
}

TEST_CASE("integerize by search") {
    auto r = cli("integerize --poly 'x+1/2' --top 2 --search");
    REQUIRE(r.rc == 0);
    auto j = json::parse(r.out);
    CHECK(j["M"] == "8");
    CHECK(j["verified"] == true);
    CHECK(json::parse(cli("integerize --poly 'x+1/2' --top 2").out)["M"] == "16");
}

TEST_CASE("exit codes and error records") {
    auto io = cli("patch --poly 'x-1/2' --holes /nonexistent/holes.json");
    CHECK(io.rc == 3);
    auto e = json::parse(io.out);
    CHECK(e["error"]["code"] == "IOError");
    CHECK(e["error"]["family"] == "io");

    auto parse = cli("integerize --poly 'x^^2' --top 1");
    CHECK(parse.rc == 4);
    CHECK(json::parse(parse.out)["error"]["code"] == "SyntaxError");

    CHECK(cli("integerize --poly '2*x+1' --top 1").rc == 5);
    CHECK(cli("integerize --poly 'x+1/2' --top 2 --search --cap 4").rc == 6);
    CHECK(cli("capacity --domain 'circle(1,1,0)'").rc == 8);
    CHECK(cli("family --p 'x-2' --order 4 --count 2 --domain 'circle(0.3)' --phi 0").rc == 9);
    CHECK(cli("capacity --resolution 8").rc == 2);
    CHECK(cli("no-such-command").rc == 2);
    CHECK(cli("").rc == 2);
}

TEST_CASE("patching failure maps to its own code") {
    auto holes = scratch("tight_holes.json");
    write(holes, R"([{"center": [0, 0], "radius": 9}])");
    CHECK(cli("patch --poly 'x-1/2' --holes " + holes.string() + " --max-degree 100").rc == 7);
}

TEST_CASE("determinism: identical runs give identical bytes") {
    const std::string args = "identity-check --domain 'circle(1.5)' --map 'z^2 - 0.5*z' --which cor36 --samples 5";
    auto a = cli(args), b = cli(args);
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    auto f1 = cli("family --p 'x^2-x-1' --count 4 --random-seed 9"), f2 = cli("family --p 'x^2-x-1' --count 4 --random-seed 9");
    CHECK(f1.out == f2.out);
}

TEST_CASE("measure CSV") {
    auto path = scratch("measure.csv");
    auto r = cli("measure --domain 'circle(1,0.4,0)' --nodes 64 --out " + path.string());
    REQUIRE(r.rc == 0);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,x,y,weight");
    double total = 0.0;
    int rows = 0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string cell;
        for (int k = 0; k < 4; ++k) std::getline(ss, cell, ',');
        total += std::stod(cell);
        ++rows;
    }
    CHECK(rows == 64);
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("config file with flag override") {
    auto cfg = scratch("cfg.json");
    write(cfg, R"js({"domain": "circle(3)", "resolution": 128})js");
    auto a = json::parse(cli("--config " + cfg.string() + " capacity").out);
    CHECK(std::abs(a["capacity"].get<double>() - 1.0 / 3.0) < 1e-9);
    CHECK(a["collocation"] == 128);
    auto b = json::parse(cli("--config " + cfg.string() + " capacity --domain 'circle(0.5)'").out);
    CHECK(std::abs(b["capacity"].get<double>() - 2.0) < 1e-9);
    write(cfg, R"js({"domian": "circle(3)"})js");
    CHECK(cli("--config " + cfg.string() + " capacity").rc == 2);
}

TEST_CASE("config round-trips through JSON") {
    arithcap::ExperimentConfig c;
    c.command = "patch";
    c.domain = json{{"type", "ellipse"}, {"params", {{"a", 2.0}, {"b", 1.0}}}, {"center", {0.1, 0.0}}};
    c.poly = "x - 1/2";
    c.at = std::vector<double>{0.25, -0.125};
    c.residual_threshold = 3.0e-7;
    c.seed = 77;
    c.search = true;
    json j = c;
    arithcap::ExperimentConfig back = j.get<arithcap::ExperimentConfig>();
    CHECK(json(back) == j);
    CHECK(json(back).dump() == j.dump());
}

TEST_CASE("domain JSON schema") {
    auto dom = scratch("ellipse.json");
    write(dom, R"({"type": "ellipse", "params": {"a": 2, "b": 1}, "center": [0.5, 0]})");
    auto r = cli("capacity --domain " + dom.string());
    REQUIRE(r.rc == 0);
    auto inline_r = cli(R"(capacity --domain '{"type": "ellipse", "params": {"a": 2, "b": 1}, "center": [0.5, 0]}')");
    CHECK(r.out == inline_r.out);
    auto img = cli(R"(capacity --domain '{"type": "conformal_poly_image", "params": {"coeffs": [[0,0],[1.3,0],[0.2,0]]}}')");
    CHECK(std::abs(json::parse(img.out)["capacity"].get<double>() - 1 / 1.3) < 1e-8);
}

TEST_CASE("emitted polynomials and series re-parse") {
    auto holes = scratch("holes_small.json");
    write(holes, R"([{"center": [0, 0], "radius": 2}])");
    auto r = cli("patch --poly 'x^2 - 2' --holes " + holes.string());
    REQUIRE(r.rc == 0);
    auto j = json::parse(r.out);
    CHECK(arithcap::to_string(arithcap::parse_polynomial(j["p"].get<std::string>())) == j["p"].get<std::string>());
    auto f = json::parse(cli("family --p 'x-2' --order 8 --count 3 --random-seed 5").out);
    for (const auto& m : f["members"]) {
        auto s = arithcap::series_from_json(m["series"]);
        CHECK(arithcap::series_to_json(s) == m["series"]);
    }
}

TEST_CASE("potential subcommands produce the documented fields") {
    auto g = json::parse(cli("green --domain 'circle(1)' --at 0.5,0").out);
    CHECK(std::abs(g["g"].get<double>() - std::log(2.0)) < 1e-9);
    auto jet = json::parse(cli("jet --domain 'circle(1.5)' --map 'z^2 - 0.5*z'").out);
    CHECK(jet["e"] == 1);
    auto ov = json::parse(cli("overflow --domain 'circle(1.5)' --map 'z^2' --method def").out);
    CHECK(ov.contains("def"));
    CHECK_FALSE(ov.contains("energy"));
    auto cl = json::parse(cli("classical-check --hole-radius 2").out);
    CHECK(std::abs(cl["v_infinity"].get<double>() - std::log(2.0)) < 1e-8);
    auto sy = json::parse(cli("symmetry-check --domain 'circle(1.5)' --map '[[0,0],[0,0],[0,1]]'").out);
    CHECK(sy["max_deviation"].get<double>() > 4.0);
    auto ps = json::parse(cli("pseudoconvex --domain 'circle(0.8)'").out);
    CHECK(ps["pseudoconvex"] == true);
    auto samples = scratch("ring.json");
    json ring = json::array();
    for (int i = 0; i < 200; ++i) ring.push_back({2 * std::cos(i * 0.0314159), 2 * std::sin(i * 0.0314159)});
    write(samples, ring.dump());
    auto sr = cli("suggest-region --samples-file " + samples.string());
    CHECK(sr.rc == 0);
}
