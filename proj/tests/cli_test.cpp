#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "tribic/cli.hpp"

using namespace tribic;
using namespace tribic::cli;
using testing::demo4x5;

namespace {

const char* kDemoCsv =
    ",m1,m2,m3,m4,m5\n"
    "g1,1,2,2,1,6\n"
    "g2,2,1,1,0,6\n"
    "g3,2,2,1,7,6\n"
    "g4,8,9,2,6,7\n";

// Writes content to a temp file, removed on destruction.
struct TempCsv {
    std::filesystem::path path;

    explicit TempCsv(const std::string& content, const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               ("tribic_test_" + tag + "_" + std::to_string(::getpid()) + ".csv");
        std::ofstream out(path);
        out << content;
    }
    ~TempCsv() { std::filesystem::remove(path); }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("csv parsing") {
    std::istringstream in(kDemoCsv);
    auto d = parse_csv(in, "demo");
    CHECK(d.object_count() == 4);
    CHECK(d.attribute_count() == 5);
    CHECK(d.object_ids() == std::vector<std::string>{"g1", "g2", "g3", "g4"});
    CHECK(d.attribute_ids() == std::vector<std::string>{"m1", "m2", "m3", "m4", "m5"});
    CHECK(d.value(1, 3) == 0);
    CHECK(d.value(3, 1) == 9);
    CHECK(distinct_values(d) == std::vector<double>{0, 1, 2, 6, 7, 8, 9});
}

TEST_CASE("csv parse errors carry a location") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            parse_csv(in, "bad");
            FAIL("expected input_error");
        } catch (const input_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    expect_error("", "empty");
    expect_error(",m1\ng1,1\ng1,2\n", "duplicate");
    expect_error(",m1,m2\ng1,1\n", "expected 2");
    expect_error(",m1,m2\ng1,1,\n", "blank cell");
    expect_error(",m1,m2\ng1,1,abc\n", "not a number");
    expect_error(",m1,m2\ng1,1,inf\n", "finite");
    expect_error(",m1,m2\ng1,1,2\n,3,4\n", "blank object name");
}

TEST_CASE("csv round trip") {
    auto d = demo4x5();
    std::istringstream in(emit_csv(d));
    auto back = parse_csv(in, "roundtrip");
    CHECK(back.object_ids() == d.object_ids());
    CHECK(back.attribute_ids() == d.attribute_ids());
    CHECK(back.values() == d.values());

    auto synth = synthetic_dataset(13, 7, 997, 42);
    std::istringstream in2(emit_csv(synth));
    auto back2 = parse_csv(in2, "roundtrip");
    CHECK(back2.values() == synth.values());
}

TEST_CASE("synthetic data is seed-determined") {
    auto a = synthetic_dataset(20, 8, 100, 7, 2);
    auto b = synthetic_dataset(20, 8, 100, 7, 2);
    CHECK(a.values() == b.values());
    auto c = synthetic_dataset(20, 8, 100, 8, 2);
    CHECK(a.values() != c.values());
    for (double v : a.values()) {
        CHECK(v >= 0);
        CHECK(v <= 100);
    }
}

TEST_CASE("number formatting round-trips") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-3.0) == "-3");
    CHECK(format_number(0.28) == "0.28");
    CHECK(format_number(0.5) == "0.5");
    for (double v : {1.0 / 3.0, 2.5e-7, 1234.5678}) {
        double back = std::stod(format_number(v));
        CHECK(back == v);
    }
}

TEST_CASE("blocks command prints tolerance blocks") {
    TempCsv file(kDemoCsv, "blocks");
    auto r = run_cli({"blocks", "--theta", "2", file.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "[0,2] [6,8] [7,9]\n");

    auto r1 = run_cli({"blocks", "--theta", "1", file.path.string()});
    CHECK(r1.out == "[0,1] [1,2] [6,7] [7,8] [8,9]\n");
}

TEST_CASE("scale command prints interordinal conditions") {
    TempCsv file(kDemoCsv, "scale");
    auto r = run_cli({"scale", file.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "[0,0] [0,1] [0,2] [0,6] [0,7] [0,8] [0,9] [1,9] [2,9] [6,9] [7,9] [8,9] [9,9]\n");

    auto dense = run_cli({"scale", "--scale", "dense", file.path.string()});
    CHECK(dense.code == 0);
    // 2s + 1 = 19 space-separated conditions.
    CHECK(std::count(dense.out.begin(), dense.out.end(), '[') == 19);
}

TEST_CASE("mine command emits the documented json") {
    TempCsv file(kDemoCsv, "mine");
    auto r = run_cli({"mine", "--theta", "1", file.path.string()});
    REQUIRE(r.code == 0);

    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.contains("dataset"));
    REQUIRE(doc.contains("timing"));
    REQUIRE(doc.contains("biclusters"));
    CHECK(doc["dataset"]["objects"] == 4);
    CHECK(doc["dataset"]["attributes"] == 5);
    CHECK(doc["timing"].contains("elapsed_ms"));

    bool seen = false;
    for (const auto& b : doc["biclusters"]) {
        REQUIRE(b.contains("extent"));
        REQUIRE(b.contains("intent"));
        REQUIRE(b.contains("theta"));
        REQUIRE(b.contains("value_min"));
        REQUIRE(b.contains("value_max"));
        if (b["extent"] == nlohmann::json({"g1", "g2", "g3"}) &&
            b["intent"] == nlohmann::json({"m1", "m2", "m3"})) {
            seen = true;
            CHECK(b["theta"] == 1.0);
            CHECK(b["value_min"] == 1.0);
            CHECK(b["value_max"] == 2.0);
        }
    }
    CHECK(seen);
}

TEST_CASE("mine command csv output") {
    TempCsv file(kDemoCsv, "minecsv");
    auto r = run_cli({"mine", "--theta", "0", "--format", "csv", file.path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.starts_with("extent,intent,theta,value_min,value_max\n"));
    CHECK(r.out.find("g1|g2|g3,m5,0,6,6") != std::string::npos);
}

TEST_CASE("mine-all includes the all-theta results") {
    TempCsv file(kDemoCsv, "mineall");
    auto r = run_cli({"mine-all", "--format", "csv", file.path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("g1|g2|g3,m1|m2|m3,1,1,2") != std::string::npos);
    CHECK(r.out.find("g1|g2|g3,m1|m2|m3|m4|m5,7,0,7") != std::string::npos);
}

TEST_CASE("stats command") {
    TempCsv file(kDemoCsv, "stats");
    auto r = run_cli({"stats", "--theta", "1", file.path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("objects: 4\n") != std::string::npos);
    CHECK(r.out.find("distinct_values: 7\n") != std::string::npos);
    CHECK(r.out.find("interordinal_conditions: 13\n") != std::string::npos);
    CHECK(r.out.find("blocks: 5\n") != std::string::npos);
    CHECK(r.out.find("crosses: 28\n") != std::string::npos);
    CHECK(r.out.find("density: 0.28\n") != std::string::npos);
}

TEST_CASE("bench metrics are deterministic apart from timings") {
    auto r1 = run_cli({"bench", "--rows", "20", "--cols", "6", "--vmax", "50", "--seed", "7",
                       "--steps", "4"});
    auto r2 = run_cli({"bench", "--rows", "20", "--cols", "6", "--vmax", "50", "--seed", "7",
                       "--steps", "4"});
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);

    auto deterministic_columns = [](const std::string& text) {
        std::istringstream in(text);
        std::string line, kept;
        while (std::getline(in, line)) {
            std::size_t cut = 0;
            for (int commas = 0; commas < 5 && cut != std::string::npos; ++commas)
                cut = line.find(',', cut + 1);
            kept += line.substr(0, cut) + "\n";
        }
        return kept;
    };
    CHECK(deterministic_columns(r1.out) == deterministic_columns(r2.out));
    CHECK(r1.out.starts_with(kMetricsHeader));
}

TEST_CASE("oracle subcommand is wired") {
    TempCsv file(kDemoCsv, "oraclecmd");
    auto r = run_cli({"oracle", "--theta", "9", file.path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("g1|g2|g3|g4,m1|m2|m3|m4|m5,9,0,9") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"mine", "--theta", "1", "/nonexistent/file.csv"}).code == 1);
    CHECK(run_cli({"mine", "--bogus-flag"}).code == 1);
    CHECK(run_cli({"nonsense"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);

    TempCsv bad(",m1\ng1,oops\n", "badcell");
    auto r = run_cli({"mine", "--theta", "1", bad.path.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("not a number") != std::string::npos);

    // Theta must be non-negative.
    TempCsv file(kDemoCsv, "negtheta");
    CHECK(run_cli({"mine", "--theta", "-1", file.path.string()}).code == 1);
}

TEST_SUITE_END();
