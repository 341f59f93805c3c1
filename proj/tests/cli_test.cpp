#include <gtest/gtest.h>
#include <sys/wait.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pseudogas/cli/commands.hpp"
#include "pseudogas/cli/run_config.hpp"
#include "pseudogas/cli/table.hpp"

namespace cli = pseudogas::cli;
namespace fs = std::filesystem;

namespace {

struct Invocation {
    int exit_code = -1;
    std::string out;
};

Invocation run_binary(const std::string& args, const std::string& env = "") {
    const std::string command = env + " " PSEUDOGAS_CLI_PATH " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {};
    Invocation inv;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) inv.out.append(buffer, n);
    const int status = pclose(pipe);
    inv.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return inv;
}

cli::RunConfig config(cli::Subcommand sub, const cli::ParameterMap& values) {
    return cli::make_run_config(sub, {}, values);
}

std::string emit(const cli::RunConfig& cfg) {
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cli::run(cfg, out, err), cli::kExitOk) << err.str();
    return out.str();
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("pseudogas_cli_test_" + name);
}

}  // namespace

TEST(FormatNumber, Examples) {
    EXPECT_EQ(cli::format_number(1.0, 12), "1.00000000000e0");
    EXPECT_EQ(cli::format_number(-2.5e-7, 3), "-2.50e-7");
    EXPECT_EQ(cli::format_number(6.02e23, 4), "6.020e23");
    EXPECT_EQ(cli::format_number(0.0, 2), "0.0e0");
    EXPECT_EQ(cli::format_number(std::nan(""), 12), "nan");
    EXPECT_EQ(cli::format_number(-INFINITY, 12), "-inf");
}

TEST(FormatNumber, RoundTripWithinHalfUnitInLastPlace) {
    for (double v : {0.1, 1.0 / 3.0, 2.718281828459045, 1e-300, 6.62607015e-34, 123456.789}) {
        for (int p : {6, 12, 17}) {
            const std::string s = cli::format_number(v, p);
            double back = 0.0;
            std::from_chars(s.data(), s.data() + s.size(), back);
            const double exponent = std::floor(std::log10(std::fabs(v)));
            const double half_unit = 0.5 * std::pow(10.0, exponent - (p - 1));
            EXPECT_LE(std::fabs(back - v), half_unit * (1 + 1e-12)) << s;
        }
        const std::string full = cli::format_number(v, 17);
        double back = 0.0;
        std::from_chars(full.data(), full.data() + full.size(), back);
        EXPECT_EQ(back, v);
    }
}

TEST(EmitTable, CsvAndJsonShapes) {
    cli::SweepResult r;
    r.axis_name = "eta";
    r.axis_values = {0.1, 0.2};
    r.columns = {{"x", {1.0, NAN}}};
    std::ostringstream csv;
    cli::emit_table(csv, r, cli::TableFormat::Csv, 3);
    EXPECT_EQ(csv.str(), "eta,x\n1.00e-1,1.00e0\n2.00e-1,nan\n");
    std::ostringstream js;
    cli::emit_table(js, r, cli::TableFormat::Json, 3);
    const auto doc = nlohmann::json::parse(js.str());
    EXPECT_EQ(doc["axis"]["name"], "eta");
    EXPECT_EQ(doc["axis"]["values"].size(), 2u);
    EXPECT_TRUE(doc["columns"][0]["values"][1].is_null());
    EXPECT_DOUBLE_EQ(doc["columns"][0]["values"][0].get<double>(), 1.0);
}

TEST(EmitTable, EmptySweepIsHeaderOnly) {
    const auto cfg = config(cli::Subcommand::Sweep, {{"op", "polymer"},
                                                     {"axis", "eta"},
                                                     {"from", "1e-3"},
                                                     {"to", "1e-2"},
                                                     {"points", "0"},
                                                     {"j", "2"}});
    EXPECT_EQ(emit(cfg), "eta,j,x_j,leading,residual\n");
    auto json_cfg = cfg;
    json_cfg.output_format = cli::TableFormat::Json;
    const auto doc = nlohmann::json::parse(emit(json_cfg));
    EXPECT_TRUE(doc["axis"]["values"].empty());
    for (const auto& col : doc["columns"]) EXPECT_TRUE(col["values"].empty());
}

TEST(ConfigParsing, CommentsBlanksAndErrors) {
    const auto m = cli::parse_config_text("# header\n\neta = 0.01  # inline\n j=3\n");
    EXPECT_EQ(m.at("eta"), "0.01");
    EXPECT_EQ(m.at("j"), "3");
    EXPECT_THROW(cli::parse_config_text("eta 0.01\n"), pseudogas::InvalidInput);
    EXPECT_THROW(cli::parse_config_text("eta = 1\neta = 2\n"), pseudogas::InvalidInput);
    EXPECT_THROW(cli::read_config_file("/nonexistent/pseudogas.cfg"), cli::IoError);
}

TEST(ConfigParsing, CommandLineOverridesFile) {
    const auto cfg = cli::make_run_config(cli::Subcommand::Polymer,
                                          {{"eta", "0.01"}, {"j", "3"}, {"precision", "5"}},
                                          {{"j", "2"}});
    EXPECT_EQ(cfg.parameters.at("j"), "2");
    EXPECT_EQ(cfg.parameters.at("eta"), "0.01");
    EXPECT_EQ(cfg.output_precision, 5);
    EXPECT_THROW(cli::make_run_config(cli::Subcommand::Polymer, {{"ga", "2"}}, {}),
                 pseudogas::InvalidInput);
    EXPECT_THROW(cli::make_run_config(cli::Subcommand::Polymer, {}, {{"precision", "18"}}),
                 pseudogas::InvalidInput);
}

TEST(Evaluate, OracleValues) {
    const auto polymer = cli::evaluate(config(cli::Subcommand::Polymer, {{"eta", "0.01"}}));
    ASSERT_EQ(polymer.columns[2].name, "x_j");
    EXPECT_NEAR(polymer.columns[2].values[0], 0.02547547609787481207, 1e-15);
    const auto fug = cli::evaluate(
        config(cli::Subcommand::Fugacity, {{"eta-sp", "0.1"}, {"stats", "fermi"}}));
    EXPECT_NEAR(fug.columns[1].values[0], 0.1035936642528053123674, 1e-14);
}

TEST(Binary, ExitCodes) {
    EXPECT_EQ(run_binary("polymer --eta 0.01").exit_code, 0);
    EXPECT_EQ(run_binary("polymer --eta -1").exit_code, 2);
    EXPECT_EQ(run_binary("polymer --eta 0.01 --bogus 1").exit_code, 2);
    EXPECT_EQ(run_binary("pressure --eta 0.5 --ga 1 --stats nope").exit_code, 2);
    EXPECT_EQ(run_binary("fugacity --eta-sp 5 --stats bose").exit_code, 2);
    EXPECT_EQ(run_binary("lattice --spacing 0.3 --nmax 20 --n 4 --stats bose --method enumerate "
                             "--mass 6.6465e-27 --temperature 1")
                  .exit_code,
              4);
    EXPECT_EQ(run_binary("lattice --spacing 0.3 --nmax 25 --n 2 --mass 6.6465e-27 --temperature 1").exit_code, 4);
    EXPECT_EQ(run_binary("polymer --config /nonexistent/x.cfg").exit_code, 1);
}

TEST(Binary, ConfigFileAndOutPath) {
    const fs::path cfg = temp_file("polymer.cfg");
    const fs::path out = temp_file("polymer.csv");
    {
        std::ofstream f(cfg);
        f << "# dimer\neta = 0.01\nj = 2\nprecision = 6\n";
    }
    fs::remove(out);
    const auto inv = run_binary("polymer --config " + cfg.string() + " --out " + out.string());
    EXPECT_EQ(inv.exit_code, 0);
    EXPECT_TRUE(inv.out.empty());
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str().substr(0, text.str().find('\n')), "eta,j,x_j,leading,residual");
    EXPECT_NE(text.str().find("2.54755e-2"), std::string::npos);
    fs::remove(cfg);
    fs::remove(out);
}

TEST(Binary, OutputIndependentOfThreadCount) {
    const std::string sweep =
        "sweep --op pressure --axis eta --from 1e-4 --to 1e-1 --points 40 --log --ga 2 "
        "--stats fermi --format json";
    const std::string sample =
        "lattice --spacing 0.2 --nmax 10 --n 6 --stats boltzmann --method sample --trials 4000 "
        "--seed 17 --mass 6.6465e-27 --temperature 1";
    for (const std::string& args : {sweep, sample}) {
        const auto one = run_binary(args, "PSEUDOGAS_THREADS=1");
        ASSERT_EQ(one.exit_code, 0) << args;
        for (const char* n : {"2", "7"}) {
            const auto many = run_binary(args, std::string("PSEUDOGAS_THREADS=") + n);
            EXPECT_EQ(many.out, one.out) << args;
        }
        EXPECT_EQ(run_binary(args, "PSEUDOGAS_THREADS=3").out, one.out);
    }
    EXPECT_TRUE(nlohmann::json::accept(run_binary(sweep).out));
}
