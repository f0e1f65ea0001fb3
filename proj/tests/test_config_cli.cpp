#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "qrepnet/config.hpp"
#include "qrepnet/errors.hpp"

using namespace qrepnet;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(QREPNET_CLI_PATH) + " " + args;
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kSmallGrid =
    "queue_lambda_mhz = 0.05, 1.2\n"
    "queue_gamma_mhz = 0.1\n"
    "queue_capacities = 1, 3\n"
    "des_served = 20000\n";

}  // namespace

TEST_CASE("defaults survive a round trip") {
    ExperimentConfig cfg;
    ExperimentConfig back = ExperimentConfig::parse_text(cfg.to_text());
    CHECK(back == cfg);
}

TEST_CASE("modified values survive a round trip") {
    ExperimentConfig cfg;
    cfg.light_speed_mps = 1.95e8;
    cfg.memory_time_constant_ms = 0.1 + 0.2;  // awkward binary fraction
    cfg.input_state = InputStateKind::minus;
    cfg.queue_lambda_mhz = {0.7};
    cfg.queue_capacities = {2, 4, 8};
    cfg.sweep_length_km = {33.3, 66.6};
    cfg.code_qubits = {5};
    cfg.decoder = DecoderKind::mwm;
    cfg.mapping = FlipMapping::bitflip;
    cfg.queue_backend = QueueBackend::des;
    cfg.fidelity_threshold = 0.3121;
    cfg.seed = 18446744073709551557ULL;  // needs all 64 bits
    cfg.trials = 123457;
    cfg.dwell_per_edge = false;
    cfg.doubled_swap_exponent = true;
    cfg.constraint_on_cost = true;
    ExperimentConfig back = ExperimentConfig::parse_text(cfg.to_text());
    CHECK(back == cfg);
}

TEST_CASE("parser accepts comments and reports bad keys with line numbers") {
    ExperimentConfig cfg = ExperimentConfig::parse_text(
        "# comment\n"
        "\n"
        "seed = 99\n"
        "  trials = 5000  \n");
    CHECK(cfg.seed == 99);
    CHECK(cfg.trials == 5000);

    CHECK_THROWS_AS(ExperimentConfig::parse_text("no_such_key = 1\n"), InvalidConfigError);
    CHECK_THROWS_AS(ExperimentConfig::parse_text("seed = 1\nseed = 2\n"), InvalidConfigError);
    CHECK_THROWS_AS(ExperimentConfig::parse_text("seed 1\n"), InvalidConfigError);
    CHECK_THROWS_AS(ExperimentConfig::parse_text("decoder = turbo\n"), InvalidConfigError);
    try {
        ExperimentConfig::parse_text("seed = 1\nbogus = 2\n");
        FAIL("expected InvalidConfigError");
    } catch (const InvalidConfigError& err) {
        CHECK(std::string(err.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("derived accessors") {
    ExperimentConfig cfg;
    cfg.memory_time_constant_ms = 2.5;
    CHECK(cfg.memory_time_constant_s() == 2.5e-3);
    cfg.input_state = InputStateKind::plus;
    DensityMatrix rho = cfg.make_input_state().density();
    CHECK(std::abs(rho(0, 1).real() - 0.5) < 1e-15);
    cfg.queue_backend = QueueBackend::des;
    cfg.des_served = 42000;
    PathOptions options = cfg.make_path_options(17);
    CHECK(options.backend == QueueBackend::des);
    CHECK(options.des_served == 42000);
    CHECK(options.des_seed == 17);
    cfg.dwell_per_edge = false;
    CHECK(cfg.make_path_options(1).dwell == DwellMode::once_per_path);
}

TEST_CASE("command line: schema, determinism and exit codes") {
    spit("cli_small.cfg", kSmallGrid);

    REQUIRE(run_cli("queue-wait --config cli_small.cfg --out cli_a.csv") == 0);
    REQUIRE(run_cli("queue-wait --config cli_small.cfg --out cli_b.csv") == 0);
    std::string a = slurp("cli_a.csv");
    CHECK(a == slurp("cli_b.csv"));
    CHECK(a.rfind("lambda_mhz,gamma_mhz,capacity,backend,mean_wait_s,blocking_probability,"
                  "wait_stderr_s\n",
                  0) == 0);
    // 2 lambdas x 1 gamma x 2 capacities x 3 backends + header
    int lines = 0;
    for (char ch : a) lines += ch == '\n';
    CHECK(lines == 13);

    // a different seed moves the simulated rows
    REQUIRE(run_cli("queue-wait --config cli_small.cfg --seed 777 --out cli_c.csv") == 0);
    CHECK(a != slurp("cli_c.csv"));

    // json mode emits a rows array
    REQUIRE(run_cli("queue-wait --config cli_small.cfg --format json --out cli_d.json") == 0);
    std::string json = slurp("cli_d.json");
    CHECK(json.front() == '{');
    CHECK(json.find("\"rows\"") != std::string::npos);

    // the default grid misses the fidelity constraint: exit code 2
    CHECK(run_cli("optimize --out cli_opt.csv 2> cli_opt.err") == 2);
    CHECK(slurp("cli_opt.err").find("no feasible") != std::string::npos);
    // relaxing the constraint flips it to success
    CHECK(run_cli("optimize --fidelity-threshold 0.25 --out cli_opt2.csv 2> /dev/null") == 0);

    // bad inputs exit 1
    CHECK(run_cli("queue-wait --config does_not_exist.cfg 2> /dev/null") == 1);
    spit("cli_bad.cfg", "unknown_key = 3\n");
    CHECK(run_cli("queue-wait --config cli_bad.cfg 2> /dev/null") == 1);
    CHECK(run_cli("no-such-command 2> /dev/null") == 1);

    // compatibility flags are accepted and change the numbers
    spit("cli_sweep.cfg",
         "sweep_length_km = 80\n"
         "sweep_edge_counts = 4\n"
         "sweep_capacities = 2\n");
    REQUIRE(run_cli("fidelity-sweep --config cli_sweep.cfg --out cli_s1.csv") == 0);
    REQUIRE(run_cli("fidelity-sweep --config cli_sweep.cfg --compat-eq13b-exponent "
                    "--out cli_s2.csv") == 0);
    CHECK(slurp("cli_s1.csv") != slurp("cli_s2.csv"));
    REQUIRE(run_cli("optimize --compat-literal-constraint --out cli_s3.csv 2> /dev/null") == 0);
}
