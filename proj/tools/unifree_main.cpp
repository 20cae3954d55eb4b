#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unifree/counting.hpp"
#include "unifree/errors.hpp"
#include "unifree/pipeline.hpp"
#include "unifree/version.hpp"

namespace {

using unifree::Config;
using unifree::Json;

constexpr int kExitOk = 0;
constexpr int kExitExpectMismatch = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

Config load_config(const std::string& path) {
    Config config;
    if (path.empty()) return config;
    std::ifstream in(path);
    if (!in) {
        throw unifree::input_error(unifree::errc::bad_argument,
                                   "cannot open config file " + path);
    }
    Json j = Json::parse(in);
    if (j.contains("cell_cap")) config.cell_cap = j.at("cell_cap").get<std::int64_t>();
    if (j.contains("orbit_cap")) config.orbit_cap = j.at("orbit_cap").get<std::int64_t>();
    if (j.contains("carry_state_cap")) {
        config.carry_state_cap = j.at("carry_state_cap").get<std::int64_t>();
    }
    if (j.contains("fourier_vanish_tol")) {
        config.fourier_vanish_tol = j.at("fourier_vanish_tol").get<double>();
    }
    if (j.contains("fourier_nonzero_tol")) {
        config.fourier_nonzero_tol = j.at("fourier_nonzero_tol").get<double>();
    }
    return config;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw unifree::input_error(unifree::errc::bad_argument,
                                   "cannot open output file " + path);
    }
    out << text;
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

// Shared state filled by CLI11 before the selected subcommand runs.
struct Args {
    std::int64_t base = 0;
    std::vector<std::int64_t> digits;
    std::int64_t slope = 0;
    std::vector<std::int64_t> offsets;
    std::vector<std::int64_t> seeds;
    std::int64_t level = 0;
    std::int64_t m = 0;
    std::int64_t max_m = 0;
    std::int64_t depth = 40;
    std::int64_t limit = 0;
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    bool normalize = false;
    std::string expect;
    std::string json_path;
    std::string csv_path;
    std::string config_path;
};

int run_unique(const Args& args) {
    Config config = load_config(args.config_path);
    unifree::DigitSystem ds = unifree::validate(args.base, args.digits);

    Json normalization;
    if (args.normalize) {
        unifree::NormalizationRecord rec = unifree::normalize(ds);
        normalization = Json{{"original", to_json(ds)},
                             {"shift", rec.shift},
                             {"scale", rec.scale}};
        ds = rec.core;
    }

    Json doc = unifree::unique_decision_document(ds, config);
    if (args.normalize) doc["input"]["normalization"] = normalization;
    write_text(args.json_path, doc.dump(2) + "\n");

    if (!args.expect.empty()) {
        std::string want = args.expect == "not-unique" ? "not_unique" : args.expect;
        if (doc["decision"].get<std::string>() != want) return kExitExpectMismatch;
    }
    return kExitOk;
}

int run_free(const Args& args) {
    Config config = load_config(args.config_path);
    unifree::FunctionSystem fs =
        unifree::make_function_system(args.slope, args.offsets, args.seeds);

    Json doc = unifree::free_decision_document(fs, config);
    write_text(args.json_path, doc.dump(2) + "\n");

    if (!args.expect.empty()) {
        std::string want = args.expect == "not-free" ? "not_free" : args.expect;
        if (doc["decision"].get<std::string>() != want) return kExitExpectMismatch;
    }
    return kExitOk;
}

int run_bseq(const Args& args) {
    Config config = load_config(args.config_path);
    unifree::DigitSystem ds = unifree::validate(args.base, args.digits);
    unifree::BSequence b = unifree::b_sequence(ds, args.level, config);
    std::string csv = "k,b\n";
    for (std::size_t k = 0; k < b.values.size(); ++k) {
        csv += std::to_string(k) + "," + b.values[k].str() + "\n";
    }
    write_text(args.csv_path, csv);
    return kExitOk;
}

int run_cascade(const Args& args) {
    Config config = load_config(args.config_path);
    unifree::DigitSystem ds = unifree::validate(args.base, args.digits);
    unifree::CascadeFunction f = unifree::cascade(ds, args.level, config);
    const double width = 1.0 / static_cast<double>(unifree::int_pow(ds.base, f.level));
    std::string csv = "left,height\n";
    for (std::size_t k = 0; k < f.heights.size(); ++k) {
        csv += format_double(static_cast<double>(k) * width) + "," +
               f.heights[k].str() + "\n";
    }
    write_text(args.csv_path, csv);
    return kExitOk;
}

int run_fourier(const Args& args) {
    unifree::DigitSystem ds = unifree::validate(args.base, args.digits);
    std::int64_t from = args.max_m > 0 ? 1 : args.m;
    std::int64_t to = args.max_m > 0 ? args.max_m : args.m;
    std::string csv = "m,re,im,abs\n";
    for (std::int64_t m = from; m <= to; ++m) {
        unifree::FourierEstimate e = unifree::fourier_probe(ds, m, args.depth);
        csv += std::to_string(m) + "," + format_double(e.value.real()) + "," +
               format_double(e.value.imag()) + "," +
               format_double(std::abs(e.value)) + "\n";
    }
    write_text(args.csv_path, csv);
    return kExitOk;
}

int run_density(const Args& args) {
    Config config = load_config(args.config_path);
    unifree::FunctionSystem fs =
        unifree::make_function_system(args.slope, args.offsets, args.seeds);
    unifree::DensityReport report = unifree::orbit_density(fs, args.limit, config);
    write_text(args.json_path, to_json(report).dump(2) + "\n");
    return kExitOk;
}

int run_composite(const Args& args) {
    unifree::DigitSystem ds = unifree::composite_family(args.n1, args.n2);
    write_text(args.json_path, to_json(ds).dump() + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision toolkit for digit-set uniqueness and affine semigroup freeness"};
    app.set_version_flag("--version", std::string(unifree::kToolVersion));
    app.require_subcommand(1);

    Args args;
    int (*action)(const Args&) = nullptr;

    auto add_digit_flags = [&](CLI::App* cmd) {
        cmd->add_option("--base", args.base, "number system base")->required();
        cmd->add_option("--digits", args.digits, "comma separated digit list")
            ->required()
            ->delimiter(',');
    };
    auto add_map_flags = [&](CLI::App* cmd) {
        cmd->add_option("--slope", args.slope, "common slope of the maps")->required();
        cmd->add_option("--offsets", args.offsets, "comma separated map offsets")
            ->required()
            ->delimiter(',');
        cmd->add_option("--seeds", args.seeds, "comma separated seed values")
            ->delimiter(',');
    };
    auto add_config_flag = [&](CLI::App* cmd) {
        cmd->add_option("--config", args.config_path,
                        "JSON file with resource caps and tolerances");
    };

    CLI::App* unique = app.add_subcommand("unique", "decide expansion uniqueness");
    add_digit_flags(unique);
    add_config_flag(unique);
    unique->add_flag("--normalize", args.normalize,
                     "shift and scale the digits to a core system first");
    unique->add_option("--expect", args.expect, "fail with exit 1 unless this decision")
        ->check(CLI::IsMember({"unique", "not-unique", "not_unique"}));
    unique->add_option("--json", args.json_path, "write the document here instead of stdout");
    unique->callback([&] { action = run_unique; });

    CLI::App* free_cmd = app.add_subcommand("free", "decide semigroup freeness");
    add_map_flags(free_cmd);
    add_config_flag(free_cmd);
    free_cmd->add_option("--expect", args.expect, "fail with exit 1 unless this decision")
        ->check(CLI::IsMember({"free", "not-free", "not_free"}));
    free_cmd->add_option("--json", args.json_path, "write the document here instead of stdout");
    free_cmd->callback([&] { action = run_free; });

    CLI::App* bseq = app.add_subcommand("bseq", "expansion counts b(k) on [0, base^level)");
    add_digit_flags(bseq);
    add_config_flag(bseq);
    bseq->add_option("--level", args.level, "subdivision level")->required();
    bseq->add_option("--csv", args.csv_path, "write CSV here instead of stdout");
    bseq->callback([&] { action = run_bseq; });

    CLI::App* cascade = app.add_subcommand("cascade", "cascade step function at a level");
    add_digit_flags(cascade);
    add_config_flag(cascade);
    cascade->add_option("--level", args.level, "cascade level")->required();
    cascade->add_option("--csv", args.csv_path, "write CSV here instead of stdout");
    cascade->callback([&] { action = run_cascade; });

    CLI::App* fourier = app.add_subcommand("fourier", "finite mask products at integer frequencies");
    add_digit_flags(fourier);
    fourier->add_option("--m", args.m, "single frequency to probe");
    fourier->add_option("--max-m", args.max_m, "sweep frequencies 1..max-m");
    fourier->add_option("--depth", args.depth, "number of mask factors");
    fourier->add_option("--csv", args.csv_path, "write CSV here instead of stdout");
    fourier->callback([&] { action = run_fourier; });

    CLI::App* density = app.add_subcommand("density", "orbit density within a window");
    add_map_flags(density);
    add_config_flag(density);
    density->add_option("--limit", args.limit, "window upper end T")->required();
    density->add_option("--json", args.json_path, "write the report here instead of stdout");
    density->callback([&] { action = run_density; });

    CLI::App* composite = app.add_subcommand("composite", "composite-base digit family");
    composite->add_option("--n1", args.n1, "first factor")->required();
    composite->add_option("--n2", args.n2, "second factor")->required();
    composite->add_option("--json", args.json_path, "write the system here instead of stdout");
    composite->callback([&] { action = run_composite; });

    try {
        app.parse(argc, argv);
        return action(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const unifree::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const unifree::input_error& e) {
        std::cerr << "input error [" << unifree::errc_name(e.code()) << "]: " << e.what()
                  << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
}
