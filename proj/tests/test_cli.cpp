// End-to-end checks of the friction-switch binary: subcommand behavior,
// exit codes, and byte-level determinism of seeded runs.

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fswitch/capstan.hpp"
#include "fswitch/config.hpp"
#include "fswitch/csv_io.hpp"
#include "fswitch/switch_model.hpp"

#ifndef FSWITCH_CLI_PATH
#error "FSWITCH_CLI_PATH must point at the friction-switch binary"
#endif

using namespace fswitch;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("fswitch_cli_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

int run(const std::string& args, const fs::path& stdout_file = {}) {
    std::string cmd = std::string("\"") + FSWITCH_CLI_PATH + "\" " + args;
    if (!stdout_file.empty()) {
        cmd += " > \"" + stdout_file.string() + "\" 2>&1";
    } else {
        cmd += " > /dev/null 2>&1";
    }
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

// zero-noise pure-capstan config at a reduced sample rate to keep the
// trace files small
const char* kCapstanConfig = R"({
  "rig": {"sample_rate_hz": 50.0},
  "pins": {"occupied_grooves": [0, 3, 6], "label": "three_double"},
  "model": {"mu_low": 0.24, "mu_high": 0.24, "w": 0.0,
            "f_thr_N": 4.3, "f_r_lo_N": 0.0, "f_r_hi_N": 5.5, "alpha_deg": 63.89},
  "noise": {"force_sigma_N": 0.0, "settle_time_ms": 500.0},
  "seed": 2718
})";

std::vector<double> char_loads() {
    std::vector<double> loads;
    for (double load = 0.4; load <= 55.0 + 1e-9; load += 0.9) {
        loads.push_back(load);
    }
    return loads;
}

} // namespace

TEST_CASE("cli geometry reports the published spanned angle") {
    TempDir dir;
    const fs::path config = dir.path / "config.json";
    atomic_write_file(config, kCapstanConfig);
    const fs::path out = dir.path / "geometry.txt";
    CHECK(run("geometry --config \"" + config.string() + "\"", out) == 0);
    const std::string text = read_file(out);
    CHECK(text.find("35.76") != std::string::npos);
    CHECK(text.find("0.1150") != std::string::npos); // estimated weight for 3 pins
}

TEST_CASE("cli geometry rejects invalid configs with exit 2") {
    TempDir dir;
    const fs::path config = dir.path / "bad.json";
    atomic_write_file(config, R"({"pins": {"occupied_grooves": []}})");
    CHECK(run("geometry --config \"" + config.string() + "\"") == 2);

    atomic_write_file(config, R"({"rig": {"sample_rate_hz": "fast"}})");
    CHECK(run("geometry --config \"" + config.string() + "\"") == 2);

    CHECK(run("geometry --config \"" + (dir.path / "missing.json").string() + "\"") == 3);
    CHECK(run("geometry") == 2);           // missing required flag
    CHECK(run("spin --config x") == 2);    // unknown subcommand
}

TEST_CASE("cli simulate + extract round-trip with byte-identical reruns") {
    TempDir dir;
    const fs::path config = dir.path / "config.json";
    atomic_write_file(config, kCapstanConfig);

    const fs::path sim_a = dir.path / "sim_a";
    const fs::path sim_b = dir.path / "sim_b";
    REQUIRE(run("simulate --config \"" + config.string() + "\" --out \"" + sim_a.string() +
                "\"") == 0);
    REQUIRE(run("simulate --config \"" + config.string() + "\" --out \"" + sim_b.string() +
                "\"") == 0);

    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(sim_a)) {
        ++files;
        const auto name = entry.path().filename();
        CHECK(read_file(sim_a / name) == read_file(sim_b / name));
    }
    CHECK(files == 23); // 22 traces + manifest

    const fs::path curve_a = dir.path / "curve_a.csv";
    const fs::path curve_b = dir.path / "curve_b.csv";
    REQUIRE(run("extract \"" + sim_a.string() + "\" --out \"" + curve_a.string() + "\"") == 0);
    REQUIRE(run("extract \"" + sim_b.string() + "\" --out \"" + curve_b.string() + "\"") == 0);
    CHECK(read_file(curve_a) == read_file(curve_b));

    // extracted friction equals the injected capstan model and the manifest
    // ground truth at every load
    const auto curve = read_curve_csv(curve_a);
    const auto manifest = manifest_from_json(read_file(sim_a / "manifest.json"));
    REQUIRE(curve.samples.size() == 11);
    const CapstanContact contact{deg_to_rad(63.89), 0.24};
    for (const auto& s : curve.samples) {
        CHECK(s.friction_magnitude ==
              doctest::Approx(capstan_friction_magnitude(s.load_force, contact))
                  .epsilon(1e-9));
    }
    for (const auto& entry : manifest.traces) {
        double extracted = -1.0;
        for (const auto& s : curve.samples) {
            if (std::abs(s.load_force - entry.load_N) < 1e-9) {
                extracted = s.friction_magnitude;
            }
        }
        CHECK(extracted == doctest::Approx(entry.ground_truth_friction_N).epsilon(1e-9));
    }
}

TEST_CASE("cli extract failure modes") {
    TempDir dir;
    const fs::path empty = dir.path / "empty";
    fs::create_directories(empty);
    CHECK(run("extract \"" + empty.string() + "\" --out \"" +
              (dir.path / "c.csv").string() + "\"") == 4);
}

TEST_CASE("cli simulate reports unwritable output as an io error") {
    TempDir dir;
    const fs::path config = dir.path / "config.json";
    atomic_write_file(config, kCapstanConfig);
    const fs::path blocker = dir.path / "blocker";
    atomic_write_file(blocker, "not a directory\n");
    CHECK(run("simulate --config \"" + config.string() + "\" --out \"" +
              (blocker / "sim").string() + "\"") == 3);
}

TEST_CASE("cli fit, predict, and plot chain") {
    TempDir dir;
    const double alpha = deg_to_rad(63.89);
    const auto low = capstan_characteristic_curve(char_loads(), 0.05, alpha, "pins");
    const auto high = capstan_characteristic_curve(char_loads(), 0.24, alpha, "silicone");
    const SwitchModelParams truth{0.05, 0.24, 0.1, 4.3, {0.0, 5.5}, alpha};
    std::vector<double> device_loads;
    for (double load = 0.5; load <= 50.0 + 1e-9; load += 1.0) {
        device_loads.push_back(load);
    }
    auto device = switch_friction_curve(device_loads, low, high, truth);
    device.label = "device";

    const fs::path low_csv = dir.path / "low.csv";
    const fs::path high_csv = dir.path / "high.csv";
    const fs::path device_csv = dir.path / "device.csv";
    write_curve_csv(low_csv, low);
    write_curve_csv(high_csv, high);
    write_curve_csv(device_csv, device);

    const fs::path fit_json = dir.path / "fit.json";
    const std::string fit_cmd = "fit \"" + device_csv.string() + "\" \"" + low_csv.string() +
                                "\" \"" + high_csv.string() + "\" --out \"" +
                                fit_json.string() + "\"";
    REQUIRE(run(fit_cmd) == 0);
    const auto result = fit_result_from_json(read_file(fit_json));
    CHECK(result.converged);
    CHECK(result.params.threshold_force == doctest::Approx(4.3).epsilon(1e-5));
    CHECK(result.params.transition_width() == doctest::Approx(5.5).epsilon(1e-5));
    CHECK(result.params.weight == doctest::Approx(0.1).epsilon(1e-5));

    // reruns are byte-identical
    const fs::path fit2_json = dir.path / "fit2.json";
    REQUIRE(run("fit \"" + device_csv.string() + "\" \"" + low_csv.string() + "\" \"" +
                high_csv.string() + "\" --out \"" + fit2_json.string() + "\"") == 0);
    CHECK(read_file(fit_json) == read_file(fit2_json));

    const fs::path pred_csv = dir.path / "pred.csv";
    REQUIRE(run("predict \"" + fit_json.string() + "\" \"" + low_csv.string() + "\" \"" +
                high_csv.string() + "\" --loads 10,20,30 --out \"" + pred_csv.string() +
                "\"") == 0);
    const auto pred = read_curve_csv(pred_csv);
    REQUIRE(pred.samples.size() == 3);
    for (const auto& s : pred.samples) {
        CHECK(s.friction_magnitude ==
              doctest::Approx(switch_friction(s.load_force, low.friction_at(s.load_force),
                                              high.friction_at(s.load_force), truth))
                  .epsilon(1e-4));
    }

    // without --loads the prediction covers the low curve's loads
    const fs::path pred_all = dir.path / "pred_all.csv";
    REQUIRE(run("predict \"" + fit_json.string() + "\" \"" + low_csv.string() + "\" \"" +
                high_csv.string() + "\" --out \"" + pred_all.string() + "\"") == 0);
    CHECK(read_curve_csv(pred_all).samples.size() == low.samples.size());

    const fs::path svg = dir.path / "plot.svg";
    REQUIRE(run("plot \"" + device_csv.string() + "\" \"" + pred_csv.string() +
                "\" --out \"" + svg.string() + "\"") == 0);
    CHECK(read_file(svg).rfind("<svg", 0) == 0);
}

TEST_CASE("cli fit failure modes") {
    TempDir dir;
    const double alpha = deg_to_rad(63.89);
    const auto low = capstan_characteristic_curve(char_loads(), 0.05, alpha, "pins");
    const auto high = capstan_characteristic_curve({60.0, 70.0, 80.0}, 0.24, alpha, "sil");
    const SwitchModelParams params{0.05, 0.24, 0.1, 4.3, {0.0, 5.5}, alpha};
    auto device = capstan_characteristic_curve({1.0, 2.0, 3.0, 4.0, 5.0}, 0.1, alpha, "dev");

    const fs::path low_csv = dir.path / "low.csv";
    const fs::path high_csv = dir.path / "high.csv";
    const fs::path device_csv = dir.path / "device.csv";
    write_curve_csv(low_csv, low);
    write_curve_csv(high_csv, high);
    write_curve_csv(device_csv, device);

    // device loads are outside the high curve's domain
    CHECK(run("fit \"" + device_csv.string() + "\" \"" + low_csv.string() + "\" \"" +
              high_csv.string() + "\" --out \"" + (dir.path / "f.json").string() + "\"") == 5);

    // two samples cannot constrain three parameters
    auto tiny = capstan_characteristic_curve({1.0, 2.0}, 0.1, alpha, "tiny");
    write_curve_csv(device_csv, tiny);
    CHECK(run("fit \"" + device_csv.string() + "\" \"" + low_csv.string() + "\" \"" +
              low_csv.string() + "\" --out \"" + (dir.path / "f.json").string() + "\"") == 5);

    CHECK(run("fit missing.csv missing.csv missing.csv --out x.json") == 3);
}

TEST_CASE("cli sizing prints the advantage") {
    TempDir dir;
    const fs::path out = dir.path / "sizing.txt";
    CHECK(run("sizing 0.24 63.89", out) == 0);
    std::string text = read_file(out);
    CHECK(text.find("0.234803") != std::string::npos);
    CHECK(text.find("23.48 %") != std::string::npos);

    CHECK(run("sizing 0.05 63.89", out) == 0);
    text = read_file(out);
    CHECK(text.find("5.42 %") != std::string::npos);

    CHECK(run("sizing 0.0 90.0", out) == 0);
    text = read_file(out);
    CHECK(text.find("0.00 %") != std::string::npos);

    CHECK(run("sizing 0.24 0.0") == 2);
    CHECK(run("sizing -- -0.1 63.89") == 2);
}

TEST_CASE("cli plot failure modes") {
    TempDir dir;
    CHECK(run("plot \"" + (dir.path / "missing.csv").string() + "\" --out \"" +
              (dir.path / "p.svg").string() + "\"") == 3);

    const fs::path header_only = dir.path / "empty.csv";
    atomic_write_file(header_only, "load_N,friction_N,sigma_N,label\n");
    CHECK(run("plot \"" + header_only.string() + "\" --out \"" +
              (dir.path / "p.svg").string() + "\"") == 4);
}
