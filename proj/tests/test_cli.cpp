#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(LEVYAREA_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string config(const char* name) { return std::string(" --config ") + LEVYAREA_CONFIG_DIR + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = std::string(LEVYAREA_TEST_TMP) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("lst at alpha 0") {
    const Run r = run("lst" + config("mm1.json") + " --x 1 --alpha-grid 0:0:1");
    CHECK(r.code == 0);
    CHECK(r.out == "alpha,lst\n0,1\n");
}

TEST_CASE("lst with simulation") {
    const Run r = run("lst" + config("mm1.json") + " --x 1 --alpha-grid 1:1:1 --with-sim --reps 2000");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("alpha,lst,mc_lst,se\n1,0.46821526013128", 0) == 0);
}

TEST_CASE("exponent table") {
    const Run r = run("exponent" + config("mm1.json") + " --alpha-grid 0:2:3 --n 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("alpha,phi,dphi\n0,0,0.5\n") == 0);
    CHECK(r.out.find("2,1.5,0.875\n") != std::string::npos);
    CHECK(r.out.find("\nn,deriv0\n1,0.5\n2,0.5\n3,-0.75\n4,1.5\n") != std::string::npos);
}

TEST_CASE("moments table") {
    const Run r = run("moments" + config("mm1.json") + " --x 1 --n 2");
    CHECK(r.code == 0);
    CHECK(r.out == "k,c_k,mu_k\n0,0,1\n1,1,1\n2,1.3333333333333333,2.333333333333333\n");
}

TEST_CASE("inventory EOQ") {
    const Run r = run("inventory" + config("eoq.json"));
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["x_star"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(j["cost"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(j["p_star"].get<double>() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(j["bounded"].get<bool>());
    CHECK(j["multiclass"]["proportions"] == json::array({0.0, 1.0, 0.0}));

    const std::string flat = write_temp("flat.json", R"({"process": {"drift": -0.5},
        "holding": {"kind": "constant", "c": 1.0}, "inventory": {"K": 4.0}})");
    const Run u = run("inventory --config " + flat);
    REQUIRE(u.code == 0);
    const json k = json::parse(u.out);
    CHECK_FALSE(k["bounded"].get<bool>());
    CHECK(k["x_star"].is_null());
}

TEST_CASE("simulate is reproducible") {
    const std::string csv_a = std::string(LEVYAREA_TEST_TMP) + "/a.csv";
    const std::string csv_b = std::string(LEVYAREA_TEST_TMP) + "/b.csv";
    const Run a = run("simulate" + config("mm1.json") + " --x 1 --reps 500 --seed 3 --raw-csv " + csv_a);
    const Run b = run("simulate" + config("mm1.json") + " --x 1 --reps 500 --seed 3 --raw-csv " + csv_b);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::stringstream sa, sb;
    sa << std::ifstream(csv_a).rdbuf();
    sb << std::ifstream(csv_b).rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().rfind("rep,T_x,area\n", 0) == 0);
    CHECK(sa.str().find('\r') == std::string::npos);
    const Run c = run("simulate" + config("mm1.json") + " --x 1 --reps 500 --seed 4");
    CHECK(c.out != a.out);
    CHECK(json::parse(a.out)["reps"] == 500);
}

TEST_CASE("longrun and clt") {
    const Run l = run("longrun" + config("mm1.json") + " --x 2 --horizon 4000");
    REQUIRE(l.code == 0);
    const json lj = json::parse(l.out);
    CHECK(lj["expected"].get<double>() == 1.0);
    CHECK(std::abs(lj["average"].get<double>() - 1.0) < 4.0 * lj["std_error"].get<double>());

    const Run c = run("clt" + config("mm1.json") + " --x 1 --scale 10 --reps 500");
    REQUIRE(c.code == 0);
    const json cj = json::parse(c.out);
    CHECK(cj["limit_var"].get<double>() == doctest::Approx(4.0 / 3.0));
    CHECK(cj.contains("ks_distance"));
    CHECK(cj.contains("sample_var"));
}

TEST_CASE("verify exit codes") {
    const Run ok = run("verify" + config("deterministic.json") + " --reps 2000");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(ok.out.find("PASS sim.pathwise") != std::string::npos);

    const Run bm = run("verify" + config("brownian.json"));
    CHECK(bm.code == 0);
    CHECK(bm.out.find("SKIP sim.moments") != std::string::npos);
}

TEST_CASE("config errors exit with 2") {
    CHECK(run("lst --config /nonexistent.json --x 1 --alpha-grid 0:1:2").code == 2);
    const std::string bad = write_temp("bad.json", R"({"process": {"drift": -1}, "colour": "red"})");
    CHECK(run("inventory --config " + bad).code == 2);
    const std::string drift = write_temp("drift.json", R"({"process": {"drift": 1}})");
    CHECK(run("verify --config " + drift).code == 2);
    CHECK(run("lst" + config("eoq.json") + " --alpha-grid 0:1:2").code == 2);
    CHECK(run("lst" + config("mm1.json") + " --x 1 --alpha-grid 1:0").code == 2);
    CHECK(run("inventory" + config("mm1.json")).code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("").code == 2);
}
