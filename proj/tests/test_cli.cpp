#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    fs::path outfile = fs::temp_directory_path() / "fc_cli_out.txt";
    std::string cmd = std::string(FC_CLI_PATH) + " " + args + " > " +
                      outfile.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(outfile);
    std::stringstream ss;
    ss << in.rdbuf();
    int code = rc == -1 ? -1 : WEXITSTATUS(rc);
    return {code, ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("validate: exit 0, residual columns, printed-T2 flag") {
    fs::path dir = fresh_dir("fc_cli_validate");
    RunResult r = run_cli("--out-dir " + dir.string() + " validate");
    CHECK(r.exit_code == 0);
    REQUIRE(fs::exists(dir / "validate.csv"));
    REQUIRE(fs::exists(dir / "registry.json"));

    auto rows = lines_of(slurp(dir / "validate.csv"));
    REQUIRE(rows.size() == 9);  // header comment + column row + 7 groups
    CHECK(rows[0].rfind("# fuchscodec", 0) == 0);
    for (size_t i = 2; i < rows.size(); ++i) {
        auto cells = split_csv(rows[i]);
        REQUIRE(cells.size() == 10);
        double corrected = std::stod(cells[4]);
        double printed = std::stod(cells[3]);
        CHECK(std::abs(corrected) <= 1e-9);
        if (cells[0] == "T2") {
            CHECK(printed > 0.1);  // the tabulated z fails the Fricke check
        } else {
            CHECK(std::abs(printed) <= 1e-9);
        }
    }
    std::string reg = slurp(dir / "registry.json");
    CHECK(reg.find("\"z2_printed\"") != std::string::npos);
    CHECK(reg.find("\"u\": \"6\"") != std::string::npos);  // T2 printed z^2
}

TEST_CASE("build T2 4nuf: twelve walls, codebook schema, structured SVG") {
    fs::path dir = fresh_dir("fc_cli_build");
    RunResult r = run_cli("--out-dir " + dir.string() + " build --group T2 --preset 4nuf");
    CHECK(r.exit_code == 0);

    std::string dom = slurp(dir / "T2_4nuf_domain.json");
    CHECK(dom.find("\"model\": \"disk\"") != std::string::npos);
    size_t walls = 0;
    for (size_t pos = 0; (pos = dom.find("\"pairing\"", pos)) != std::string::npos; ++pos)
        ++walls;
    CHECK(walls == 12);

    std::string cbj = slurp(dir / "T2_4nuf_codebook.json");
    for (const char* key : {"\"group\"", "\"tau\"", "\"entries\"", "\"index\"",
                            "\"word\"", "\"matrix\"", "\"re\"", "\"im\""})
        CHECK(cbj.find(key) != std::string::npos);

    std::string svg = slurp(dir / "T2_4nuf.svg");
    CHECK(svg.find("<?xml") == 0);
    // well-formed: every <svg>, <circle>, <path>, <text> closes
    size_t markers = 0, up = 0, down = 0;
    for (size_t pos = 0; (pos = svg.find("class=\"codeword\"", pos)) != std::string::npos;
         ++pos) {
        ++markers;
        size_t dpos = svg.find("data-im=\"", pos);
        REQUIRE(dpos != std::string::npos);
        double im = std::stod(svg.substr(dpos + 9));
        (im > 0 ? up : down)++;
    }
    CHECK(markers == 4);
    CHECK(up == 2);
    CHECK(down == 2);
}

TEST_CASE("build rejects unknown groups with exit 2") {
    RunResult r = run_cli("build --group T9");
    CHECK(r.exit_code == 2);
}

TEST_CASE("simulate: zero sigma row, byte-identical reruns, monotone ser") {
    fs::path dir = fresh_dir("fc_cli_sim");
    std::string args = "--out-dir " + dir.string() +
                       " simulate --group T1 --preset 4nuf --sigma 0 --sigma 0.001"
                       " --sigma 0.01 --sigma 0.1 --trials 2000 --seed 99";
    RunResult r1 = run_cli(args);
    CHECK(r1.exit_code == 0);
    std::string csv1 = slurp(dir / "T1_4nuf_simulate.csv");
    RunResult r2 = run_cli(args);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(dir / "T1_4nuf_simulate.csv") == csv1);  // determinism, byte level

    auto rows = lines_of(csv1);
    REQUIRE(rows.size() == 6);
    auto first = split_csv(rows[2]);
    CHECK(first[2] == "0");
    CHECK(std::stod(first[7]) == 0.0);  // ser column at sigma 0
    double last = -1.0;
    for (size_t i = 2; i < rows.size(); ++i) {
        double ser = std::stod(split_csv(rows[i])[7]);
        CHECK(ser >= last);
        last = ser;
    }
}

TEST_CASE("census: even counts, rate column, T2 >= T1 in the unit ball") {
    fs::path dir = fresh_dir("fc_cli_census");
    RunResult r = run_cli("--out-dir " + dir.string() +
                          " census --group T1 --group T2 --budget 5000"
                          " --radius 1.0 --radius 0.5");
    CHECK(r.exit_code == 0);
    auto rows = lines_of(slurp(dir / "census.csv"));
    REQUIRE(rows.size() == 6);
    long t1_r1 = 0, t2_r1 = 0;
    for (size_t i = 2; i < rows.size(); ++i) {
        auto cells = split_csv(rows[i]);
        REQUIRE(cells.size() == 7);
        long count = std::stol(cells[4]);
        CHECK(count % 2 == 0);
        CHECK(cells[1] == (cells[0] == "T1" ? "3" : "6"));
        if (cells[3] == "1" || cells[3] == "1.0") {
            if (cells[0] == "T1") t1_r1 = count;
            if (cells[0] == "T2") t2_r1 = count;
        }
    }
    CHECK(t2_r1 >= t1_r1);
}

TEST_CASE("rates: degree, bound, admissible prime, branch cases") {
    RunResult r = run_cli("rates 5 7 13");
    CHECK(r.exit_code == 0);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() >= 5);
    CHECK(split_csv(rows[2]) == std::vector<std::string>{"5", "2", "6", "11"});
    CHECK(split_csv(rows[3]) == std::vector<std::string>{"7", "3", "9", "n/a"});
    CHECK(split_csv(rows[4]) == std::vector<std::string>{"13", "6", "18", "79"});

    CHECK(run_cli("rates 9").exit_code == 2);   // composite input
    CHECK(run_cli("unknown-subcommand").exit_code == 2);
}
