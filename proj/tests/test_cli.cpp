#include "dqpt_cli/cli.hpp"
#include "dqpt_cli/output.hpp"

#include "dqpt/qsl.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using dqpt::cli::run_cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string w; is >> w;) v.push_back(w);
    return v;
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        if (!line.empty() && line[0] != '#') v.push_back(line);
    }
    return v;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Re-runs the command stored in the first header line.
Outcome rerun_from_header(const std::string& text) {
    const std::string first = text.substr(0, text.find('\n'));
    auto words = split(first);
    EXPECT_GE(words.size(), 3u);
    EXPECT_EQ(words[0], "#");
    EXPECT_EQ(words[1], "dqpt");
    return run(std::vector<std::string>(words.begin() + 2, words.end()));
}

} // namespace

TEST(Format, ShortestRoundTrip) {
    EXPECT_EQ(dqpt::cli::format_number(0.1), "0.1");
    EXPECT_EQ(dqpt::cli::format_number(1.0), "1");
    EXPECT_EQ(dqpt::cli::format_number(INFINITY), "inf");
    EXPECT_EQ(dqpt::cli::format_number(-INFINITY), "-inf");
    const double x = 0.1 + 0.2;
    EXPECT_EQ(std::stod(dqpt::cli::format_number(x)), x);
}

TEST(CliEcho, SinglePointGrid) {
    const Outcome r = run({"echo", "--gamma-f", "2", "--t-points", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(data_lines(r.out), std::vector<std::string>{"0,1,0"});
}

TEST(CliEcho, DefaultsGiveOneSeriesPerPositiveMatchedMode) {
    const Outcome r = run({"echo", "--t-points", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::size_t series = 0;
    std::istringstream is(r.out);
    for (std::string line; std::getline(is, line);) series += line.rfind("# series", 0) == 0;
    std::size_t positive = 0;
    for (const auto& z : dqpt::zero_set(0.3, 22, dqpt::Sector::EvenAPBC)) {
        positive += !z.unbounded() && z.gamma_f().value() > 0.0;
    }
    EXPECT_EQ(series, positive);
    EXPECT_EQ(data_lines(r.out).size(), 5 * positive);

    const Outcome all = run({"echo", "--t-points", "5", "--all-modes"});
    EXPECT_EQ(data_lines(all.out).size(), 5 * 11u);
}

TEST(CliEcho, RateIsInfAtExactZero) {
    // t-grid hitting Jt0 for mode 8 is not representable on a uniform grid,
    // so check the inf token on a matched mode with t_max equal to Jt0.
    const auto zs = dqpt::zero_set(0.3, 22, dqpt::Sector::EvenAPBC);
    const double jt0 = dqpt::critical_times(zs[7], 0).times.front();
    const Outcome r = run({"echo", "--mode", "8", "--t-max", dqpt::cli::format_number(jt0), "--t-points", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = data_lines(r.out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[1], dqpt::cli::format_number(jt0) + ",0,inf");
}

TEST(CliEcho, DeterministicAndRoundTripsThroughHeader) {
    const auto dir = std::filesystem::temp_directory_path() / "dqpt_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.csv";
    const auto b = dir / "b.csv";
    ASSERT_EQ(run({"echo", "--L", "30", "--gamma-i", "0.45", "--t-max", "6", "--t-points", "73", "--out", a.string()}).code, 0);
    ASSERT_EQ(run({"echo", "--L", "30", "--gamma-i", "0.45", "--t-max", "6", "--t-points", "73", "--out", b.string()}).code, 0);
    const std::string first = slurp(a);
    EXPECT_EQ(first, slurp(b));
    const Outcome again = rerun_from_header(first);
    ASSERT_EQ(again.code, 0) << again.err;
    EXPECT_EQ(again.out, first);
    std::filesystem::remove_all(dir);
}

TEST(CliHeaders, EverySubcommandRoundTrips) {
    const std::vector<std::vector<std::string>> cmds{
        {"zeros", "--gamma-i-range", "0:3:0.25", "--L", "14"},
        {"zeros", "--gamma-i", "0.5", "--L", "14", "--sector", "pbc", "--format", "json"},
        {"spacing", "--L-range", "10:100:10"},
        {"spacing", "--table", "gap", "--gamma-i", "-0.2", "--side", "minus", "--L-range", "100:400:100"},
        {"qsl", "--gamma-i", "0.2", "--L", "30"},
        {"qsl", "--gamma-i", "2", "--L-range", "10:60:2"},
        {"stats", "--gamma-i-range", "0:2:0.5", "--L-range", "10:40:2"},
        {"echo", "--J", "2", "--gamma-i", "0.3", "--gamma-f", "1.7", "--L", "12", "--t-points", "9"},
    };
    for (const auto& cmd : cmds) {
        const Outcome r = run(cmd);
        ASSERT_EQ(r.code, 0) << r.err;
        if (r.out[0] == '{') {
            const auto j = nlohmann::json::parse(r.out);
            auto words = split(j["command"].get<std::string>());
            EXPECT_EQ(run(std::vector<std::string>(words.begin() + 1, words.end())).out, r.out);
        } else {
            EXPECT_EQ(rerun_from_header(r.out).out, r.out) << cmd[0];
        }
    }
}

TEST(CliZeros, UnboundedRenderedWithSign) {
    const Outcome r = run({"zeros", "--gamma-i", "0", "--L", "6"});
    ASSERT_EQ(r.code, 0);
    const auto lines = data_lines(r.out);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[1], "0,2,0.5,-inf");
}

TEST(CliQsl, SingleSizeMatchesReport) {
    const Outcome r = run({"qsl", "--gamma-i", "0.7", "--L", "18"});
    ASSERT_EQ(r.code, 0);
    const dqpt::QslReport rep = dqpt::qsl_report(0.7, 18);
    const auto lines = data_lines(r.out);
    ASSERT_EQ(lines.size(), rep.entries.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto cells = split([&] {
            std::string s = lines[i];
            for (char& ch : s) if (ch == ',') ch = ' ';
            return s;
        }());
        EXPECT_EQ(std::stod(cells[4]), rep.entries[i].tau);
    }
}

TEST(CliStats, SingleSizeRangeHasZeroVariance) {
    const Outcome r = run({"stats", "--gamma-i", "0.4", "--L-range", "20:20:2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = data_lines(r.out);
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(lines[0], "0.4," + dqpt::cli::format_number(dqpt::tau_min(0.4, 20).tau) + ",0,1,0");
}

TEST(CliStats, SpotValueAtTwoMatchesDirectLoop) {
    const Outcome r = run({"stats", "--gamma-i", "2", "--L-range", "10:300:2"});
    ASSERT_EQ(r.code, 0);
    const dqpt::TauMinStats s = dqpt::tau_min_stats(2.0, 10, 300, 2);
    EXPECT_EQ(data_lines(r.out)[0],
              "2," + dqpt::cli::format_number(s.mean) + "," + dqpt::cli::format_number(s.variance) + ",146,0");
}

TEST(CliExitCodes, ArgumentErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"echo", "--L", "7"}).code, 2);
    EXPECT_EQ(run({"echo", "--t-points", "0"}).code, 2);
    EXPECT_EQ(run({"echo", "--gamma-f", "1", "--mode", "2"}).code, 2);
    EXPECT_EQ(run({"echo", "--gamma-i", "0", "--L", "6", "--mode", "2"}).code, 2);
    EXPECT_EQ(run({"echo", "--sector", "open"}).code, 2);
    EXPECT_EQ(run({"zeros", "--gamma-i-range", "1:0:0.1"}).code, 2);
    EXPECT_EQ(run({"spacing", "--L-range", "10:20:3"}).code, 2);
    EXPECT_EQ(run({"spacing", "--table", "gap", "--gamma-i", "1"}).code, 2);
    EXPECT_EQ(run({"stats", "--L-range", "2:20:2"}).code, 2);
    EXPECT_EQ(run({"echo", "--J", "-1"}).code, 2);
    const Outcome r = run({"echo", "--L", "7"});
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
}

TEST(CliExitCodes, HelpIsSuccess) {
    const Outcome r = run({"echo", "--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("--gamma-f"), std::string::npos);
}

TEST(CliVerify, PassesAndReportsJson) {
    const Outcome r = run({"verify", "--L-range", "4:8:2", "--t-points", "50"});
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_LE(j["duality"]["max_relative_error"].get<double>(), 1e-12);
    EXPECT_LE(j["oracle"]["max_abs_echo_error"].get<double>(), 1e-8);
    EXPECT_EQ(j["oracle"]["cases"].size(), 3u * 16u);
}

TEST(CliVerify, ResourceGuardExitCode) {
    EXPECT_EQ(run({"verify", "--L-range", "4:14:2"}).code, 4);
}

TEST(CliVerify, CsvRejected) {
    EXPECT_EQ(run({"verify", "--format", "csv"}).code, 2);
}
