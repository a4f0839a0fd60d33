#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ppdt/manifest.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the CLI binary, capturing stdout and the exit code.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PPDT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string tmp_path(const std::string& name) {
    return std::string(PPDT_TEST_TMPDIR) + "/" + name;
}

}  // namespace

TEST_CASE("expand emits the hand-checked series") {
    const RunResult r = run_cli("expand --delta 0 --nmax 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,coeff") != std::string::npos);
    CHECK(r.out.find("3,\"[[-2,\"\"1\"\"],[-1,\"\"1\"\"],[0,\"\"2\"\"],[1,\"\"1\"\"],[2,\"\"1\"\"]]\"") !=
          std::string::npos);

    const RunResult r0 = run_cli("expand --nmax 0");
    CHECK(r0.exit_code == 0);
    CHECK(r0.out.find("0,\"[[0,\"\"1\"\"]]\"") != std::string::npos);
}

TEST_CASE("expand half-power declares the refined-DT exponent unit") {
    const RunResult r = run_cli("expand --delta 3 --nmax 1 --half-power");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("exponent_unit=q^(1/2)") != std::string::npos);
    CHECK(r.out.find("1,\"[[3,\"\"1\"\"]]\"") != std::string::npos);  // q^(3/2) in half units
}

TEST_CASE("expand jet ring emits decimal jet entries") {
    const RunResult r = run_cli("expand --delta 0 --nmax 3 --ring jet --kmax 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,d0,d1,d2") != std::string::npos);
    CHECK(r.out.find("3,6,0,10") != std::string::npos);  // p_3(1)=6, odd 0, second 10
}

TEST_CASE("expand jet-float ring tracks the exact jets") {
    const RunResult r = run_cli("expand --delta 0 --nmax 3 --ring jet-float --kmax 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3,6,0,10") != std::string::npos);  // small values render exactly
}

TEST_CASE("reruns with equal parameters are byte-identical and checksummed") {
    const std::string out1 = tmp_path("series_a.csv");
    const std::string out2 = tmp_path("series_b.csv");
    CHECK(run_cli("expand --delta 1 --nmax 12 --out " + out1).exit_code == 0);
    CHECK(run_cli("expand --delta 1 --nmax 12 --out " + out2).exit_code == 0);
    const std::string bytes1 = slurp(out1);
    CHECK(bytes1 == slurp(out2));

    const nlohmann::json manifest = nlohmann::json::parse(slurp(out1 + ".manifest.json"));
    CHECK(manifest["subcommand"] == "expand");
    CHECK(manifest["library_version"] == ppdt::kLibraryVersion);
    CHECK(manifest["parameters"]["delta"] == "1");
    CHECK(manifest["output_checksums"][out1] == ppdt::fnv1a64_hex(bytes1));

    // --json-manifest overrides the manifest location
    const std::string custom = tmp_path("custom_manifest.json");
    CHECK(run_cli("expand --delta 1 --nmax 12 --out " + out2 + " --json-manifest " + custom)
              .exit_code == 0);
    const nlohmann::json moved = nlohmann::json::parse(slurp(custom));
    CHECK(moved["subcommand"] == "expand");
}

TEST_CASE("oracle-check exit codes and negative control") {
    CHECK(run_cli("oracle-check --ncap 6 --deltas 0,1,3").exit_code == 0);
    CHECK(run_cli("oracle-check --ncap 0").exit_code == 0);  // trivially PASS

    const RunResult bad = run_cli("oracle-check --ncap 4 --corrupt-test-hook");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("first differing exponent") != std::string::npos);

    CHECK(run_cli("oracle-check --ncap 25").exit_code == 3);  // beyond the enumeration cap
}

TEST_CASE("invalid flags exit with 2") {
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("expand --no-such-flag").exit_code == 2);
    CHECK(run_cli("expand --ring marble").exit_code == 2);
    CHECK(run_cli("moments --nlist 4,5 --mode marble").exit_code == 2);
}

TEST_CASE("moments subcommand agrees across sources") {
    const RunResult jet = run_cli("moments --kmax 4 --nlist 2,3 --mode jet");
    const RunResult oracle = run_cli("moments --kmax 4 --nlist 2,3 --mode oracle");
    const RunResult laurent = run_cli("moments --kmax 4 --nlist 2,3 --mode laurent");
    CHECK(jet.exit_code == 0);
    CHECK(jet.out == oracle.out);
    CHECK(jet.out == laurent.out);
    CHECK(jet.out.find("n,k,raw_num,raw_den,normalized,gauss_ref,abs_error") == 0);
    CHECK(jet.out.find("2,2,2,3,") != std::string::npos);
    CHECK(jet.out.find("3,2,5,3,") != std::string::npos);
}

TEST_CASE("moments distribution table requires a pmf-carrying source") {
    CHECK(run_cli("moments --kmax 2 --nlist 3 --mode jet --dist-n 3").exit_code == 2);
    const RunResult r = run_cli("moments --kmax 2 --nlist 3 --mode oracle --dist-n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("s,prob_num,prob_den,std_s,cdf,normal_cdf") != std::string::npos);
    CHECK(r.out.find("-2,1,6,") != std::string::npos);
    CHECK(r.out.find("0,1,3,") != std::string::npos);  // 2/6 reduced at the boundary
}

TEST_CASE("asymptotics ratio walks towards 1 and log mode reaches 1e6") {
    const std::string out = tmp_path("asym.csv");
    CHECK(run_cli("asymptotics --nlist 25,100,400,1000000 --out " + out).exit_code == 0);
    const std::string csv = slurp(out);
    double r25 = 0, r100 = 0, r400 = 0;
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        long n;
        char c;
        std::istringstream row(line);
        row >> n >> c;
        std::string rest = line.substr(line.rfind(',') + 1);
        if (n == 25) r25 = std::stod(rest);
        if (n == 100) r100 = std::stod(rest);
        if (n == 400) r400 = std::stod(rest);
        if (n == 1000000) CHECK(rest.empty());  // exact column unavailable, log still finite
    }
    CHECK(std::abs(r400 - 1.0) < std::abs(r100 - 1.0));
    CHECK(std::abs(r100 - 1.0) < std::abs(r25 - 1.0));

    const nlohmann::json constants = nlohmann::json::parse(slurp(out + ".constants.json"));
    CHECK(std::abs(constants["mu_delta3"].get<double>() - 2.7497913072) < 1e-9);
    CHECK(std::abs(constants["sigma2"].get<double>() - 0.7464745274) < 1e-9);
}

TEST_CASE("constants dump is valid JSON with 15 significant digits") {
    const RunResult r = run_cli("constants");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["zeta3"].get<double>() - 1.2020569031595943) < 1e-14);
    CHECK(std::abs(j["trace_b"].get<double>() - 0.4309772693) < 1e-9);
    CHECK(std::abs(j["wright_exponent_rate"].get<double>() - 2.0094456609) < 1e-9);
}

TEST_CASE("sample emits config, records, and summary") {
    const std::string out = tmp_path("sample.csv");
    const RunResult r =
        run_cli("sample --n 64 --target 40 --seed 11 --threads 2 --out " + out);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out);
    CHECK(csv.find("worker,counter,size,stat,trace_proxy") != std::string::npos);
    CHECK(csv.find("# config:") != std::string::npos);
    CHECK(csv.find("\"m_max\":") != std::string::npos);
    CHECK(csv.find("# summary:") != std::string::npos);
    CHECK(csv.find("\"var_normalized_stat\":") != std::string::npos);

    long records = 0;
    std::istringstream lines(csv);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'w') continue;
        ++records;
        const auto last_comma = line.rfind(',');
        REQUIRE(last_comma != std::string::npos);
        // size column (third field) equals the target size under window 0
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');
        std::getline(row, field, ',');
        std::getline(row, field, ',');
        CHECK(std::stol(field) == 64);
    }
    CHECK(records == 40);

    // identical reruns produce identical bytes (worker count fixed)
    const std::string out2 = tmp_path("sample2.csv");
    CHECK(run_cli("sample --n 64 --target 40 --seed 11 --threads 2 --out " + out2).exit_code ==
          0);
    CHECK(csv == slurp(out2));
}

TEST_CASE("sample accepts a JSON config file") {
    const std::string cfg_path = tmp_path("cfg.json");
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"n": 32, "target_accepted": 10, "window": 1})";
    }
    const RunResult r = run_cli("sample --config " + cfg_path + " --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"window\":1") != std::string::npos);
    CHECK(r.out.find("approximate") != std::string::npos);  // windowed runs are labeled
    std::istringstream lines(r.out);
    std::string line;
    long records = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'w') continue;
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');
        std::getline(row, field, ',');
        std::getline(row, field, ',');
        const long size = std::stol(field);
        CHECK(std::labs(size - 32) <= 1);
        ++records;
    }
    CHECK(records == 10);
}

TEST_CASE("sample collapse exits with 4") {
    CHECK(run_cli("sample --n 50 --radius 0.25 --target 5 --max-attempts 5000").exit_code == 4);
}
