#include "doctest.h"

#include "cli/cli.hpp"
#include "cli/config.hpp"
#include "cli/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace htlab::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    fs::path d = fs::temp_directory_path() / ("htlab-test-" + name);
    fs::remove_all(d);
    return d;
}

// The single file with the given extension in a directory.
fs::path only_file(const fs::path& dir, const std::string& ext) {
    fs::path found;
    int n = 0;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ext) {
            found = e.path();
            ++n;
        }
    REQUIRE(n == 1);
    return found;
}

}  // namespace

TEST_CASE("height command") {
    auto r = run({"height", "rad: 2/3 ^ 1/5"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/5*log(3) ≈ 0.2197224577\n");
    r = run({"height", "rad: 1"});
    CHECK(r.out == "0\n");
    r = run({"height", "alg: x^2 - x - 1"});
    CHECK(r.code == 0);
    CHECK(r.out == "≈ 0.2406059125\n");
    r = run({"height", "alg: x^2 - 1"});
    CHECK(r.code == 0);
    CHECK(r.err.find("reducible") != std::string::npos);
    r = run({"height", "rad: 2/3 ^ 1/x"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 13") != std::string::npos);
    r = run({"height", "rad: 2", "--gamma", "-1"});
    CHECK(r.out.find("h_gamma") != std::string::npos);
    CHECK(run({"height", "foo: 2"}).code == 2);
}

TEST_CASE("global flags and usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"--precision", "10", "height", "rad: 2"}).code == 2);
    CHECK(run({"--workers", "0", "height", "rad: 2"}).code == 2);
    CHECK(run({"--format", "xml", "height", "rad: 2"}).code == 2);
    CHECK(run({"cm", "frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    // flags may follow the subcommand
    CHECK(run({"height", "rad: 2", "--precision", "20"}).code == 0);
}

TEST_CASE("config file, overridden by flags") {
    RunConfig cfg;
    apply_config_text(cfg, "# comment\nprecision = 30\nworkers=3\nformat=json\nout=/tmp/x\nseed=5\n");
    CHECK(cfg.precision_digits == 30);
    CHECK(cfg.worker_count == 3);
    CHECK(cfg.format == Format::json);
    CHECK(cfg.output_dir == "/tmp/x");
    CHECK(cfg.seed == 5);
    CHECK_THROWS_AS(apply_config_text(cfg, "colour=blue"), UsageError);
    CHECK_THROWS_AS(apply_config_text(cfg, "precision=abc"), UsageError);
    CHECK_THROWS_AS(apply_config_text(cfg, "just text"), UsageError);

    fs::path dir = fresh_dir("config");
    fs::create_directories(dir);
    fs::path conf = dir / "run.conf";
    std::ofstream(conf) << "format = json\nprecision = 12\n";
    // precision 12 from the file is invalid unless a flag overrides it
    CHECK(run({"--config", conf.string(), "cm", "scan", "--dmax", "20", "--out", dir.string()}).code == 2);
    auto r = run({"--config", conf.string(), "--precision", "20", "cm", "scan", "--dmax", "20", "--out", dir.string()});
    CHECK(r.code == 0);
    only_file(dir, ".json");
}

TEST_CASE("parameter hash") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    Params p{{"dmax", "200"}, {"precision", "40"}};
    CHECK(output_stem("cm-scan", p) == output_stem("cm-scan", Params{{"precision", "40"}, {"dmax", "200"}}));
    CHECK(output_stem("cm-scan", p) != output_stem("cm-scan", Params{{"dmax", "201"}, {"precision", "40"}}));
    CHECK(output_stem("cm-scan", p).size() == std::string("cm-scan-").size() + 16);
}

TEST_CASE("report rows round-trip") {
    ReportRow a{"x", "D=-3", {{"D", "-3"}, {"note", "a, \"quoted\" value"}, {"v", "0.170186047701335"}}};
    ReportRow b{"x", "D=-4", {{"D", "-4"}, {"note", ""}, {"v", "1e-05"}}};
    std::vector<ReportRow> rows{a, b};
    std::string csv = to_csv(rows);
    CHECK(from_csv(csv, "x") == rows);
    CHECK(to_csv(from_csv(csv, "x")) == csv);
    std::string js = to_json("x", {{"k", "v"}}, rows);
    CHECK(from_json(js) == rows);
    CHECK(to_json("x", {{"k", "v"}}, from_json(js)) == js);
}

TEST_CASE("cm scan output is deterministic across worker counts") {
    fs::path d1 = fresh_dir("scan1"), d4 = fresh_dir("scan4");
    auto r1 = run({"cm", "scan", "--dmax", "200", "--workers", "1", "--out", d1.string()});
    auto r4 = run({"cm", "scan", "--dmax", "200", "--workers", "4", "--out", d4.string()});
    REQUIRE(r1.code == 0);
    REQUIRE(r4.code == 0);
    fs::path f1 = only_file(d1, ".csv"), f4 = only_file(d4, ".csv");
    CHECK(f1.filename() == f4.filename());
    CHECK(f1.filename().string().rfind("cm-scan-", 0) == 0);
    std::string text = slurp(f1);
    CHECK(text == slurp(f4));
    auto rows = from_csv(text, "cm-scan");
    CHECK(rows.size() == 62);  // fundamental discriminants with |D| <= 200
    CHECK(text.rfind("D,class_number,j_height,j_height_err,faltings_height,", 0) == 0);
    CHECK(rows[0].at("D") == "-3");
    CHECK(rows[0].at("precision") == "40");
    CHECK(!rows[0].at("version").empty());
    CHECK(rows[0].at("errors").empty());
    // rerun into the same directory rewrites the same file
    run({"cm", "scan", "--dmax", "200", "--out", d1.string()});
    CHECK(slurp(f1) == text);
}

TEST_CASE("cm scan with class polynomials") {
    fs::path d = fresh_dir("poly");
    auto r = run({"cm", "scan", "--dmax", "23", "--class-poly", "--format", "json", "--out", d.string()});
    REQUIRE(r.code == 0);
    auto rows = from_json(slurp(only_file(d, ".json")));
    CHECK(rows.back().at("D") == "-23");
    CHECK(rows.back().at("class_poly") == "x^3 + 3491750*x^2 - 5151296875*x + 12771880859375");
}

TEST_CASE("cm finiteness, faltings and theta") {
    fs::path d = fresh_dir("fin");
    auto r = run({"cm", "finiteness", "--cprime", "100", "--dmax", "200", "--out", d.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("census (ratio <= 100): [-3, -4, -7, -8, -11, -19, -43, -67, -163]") != std::string::npos);
    CHECK(r.out.find("census size: 9") != std::string::npos);
    r = run({"cm", "finiteness", "--cprime", "0", "--dmax", "200", "--out", d.string()});
    CHECK(r.out.find("census size: 0") != std::string::npos);
    r = run({"cm", "faltings", "-D", "-4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("faltings_height: 0.18077055021786") != std::string::npos);
    CHECK(run({"cm", "faltings", "-D", "-5"}).code == 2);
    r = run({"cm", "theta", "-D", "-23"});
    CHECK(r.code == 0);
    CHECK(r.out.find("archimedean estimate") != std::string::npos);
}

TEST_CASE("cm verify commands") {
    fs::path d = fresh_dir("verify");
    auto r = run({"cm", "verify-decay", "--dmax", "500", "--out", d.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("env nonincreasing: true") != std::string::npos);
    CHECK(r.out.find("env(right end) < env(100): true") != std::string::npos);
    only_file(d, ".dat");
    fs::path d2 = fresh_dir("verify-tf");
    r = run({"cm", "verify-tf", "--dmax", "300", "--out", d2.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("c finite: true") != std::string::npos);
    CHECK(r.out.find("stable under precision doubling: true") != std::string::npos);
}

TEST_CASE("tower commands") {
    fs::path d = fresh_dir("tower");
    fs::create_directories(d);
    auto g = run({"tower", "gen", "--gamma", "-1", "-C", "0.69", "--levels", "1", "--schedule", "[2]", "--seed", "0"});
    REQUIRE(g.code == 0);
    CHECK(g.out.find("\"p\": \"17\"") != std::string::npos);
    CHECK(run({"tower", "gen", "-C", "0.69", "--levels", "1", "--schedule", "2"}).out == g.out);
    std::ofstream(d / "t.json") << g.out;
    auto c = run({"tower", "certify", "--tower", (d / "t.json").string(), "--budget", "50", "--out", d.string()});
    CHECK(c.code == 0);
    CHECK(c.out.find("failures=0") != std::string::npos);
    auto rows = from_csv(slurp(only_file(d, ".csv")), "tower-certificate");
    CHECK(rows.size() == 50);
    for (const auto& row : rows) CHECK(row.at("pass") == "true");

    auto bad = run({"tower", "gen", "-C", "1000", "--levels", "1", "--schedule", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("cap") != std::string::npos);

    std::ofstream(d / "control.json") << R"({"gamma": -1, "C": 1, "levels": [{"p": "3", "q": "2", "d": 2}]})";
    auto ctl = run({"tower", "certify", "--tower", (d / "control.json").string(), "--budget", "20", "--out", d.string()});
    CHECK(ctl.code == 1);
}

TEST_CASE("point commands") {
    auto r = run({"point-height", "[1 : 2^1/2]", "--gamma", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("h: 1/2*log(2)") != std::string::npos);
    CHECK(r.out.find("degree: 2") != std::string::npos);
    r = run({"lemma-check", "[1 : 17^1/4]", "--gamma", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: holds") != std::string::npos);
    CHECK(run({"lemma-check", "[1 : 2]", "--gamma", "1"}).code == 2);
    CHECK(run({"point-height", "[1 : 2"}).code == 2);
}
