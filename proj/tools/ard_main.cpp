// ard: approximate the rate-distortion behaviour of an individual byte
// object with an idealized block-sorting codelength compressor and a
// bi-objective genetic search, and pick minimal sufficient statistics for
// lossy compression and denoising.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "ard/codec.hpp"
#include "ard/experiment.hpp"
#include "ard/image.hpp"
#include "ard/oracle.hpp"
#include "ard/spheres.hpp"

namespace {

int cmd_oracle(const std::string& input_path, const std::string& metric_name,
               const std::string& side_path, const std::string& alphabet_mode,
               std::uint64_t limit, const std::string& out_path) {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + input_path);
    ard::Bytes x((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    ard::Bytes side;
    if (!side_path.empty()) {
        std::ifstream sin(side_path, std::ios::binary);
        if (!sin) throw std::runtime_error("cannot open " + side_path);
        side.assign((std::istreambuf_iterator<char>(sin)), std::istreambuf_iterator<char>());
    }

    std::vector<std::uint8_t> alphabet;
    if (alphabet_mode == "bytes") {
        alphabet.resize(256);
        for (int i = 0; i < 256; ++i) alphabet[i] = static_cast<std::uint8_t>(i);
    }  // "auto": leave empty, exhaustive_front uses the symbols of x

    const auto front = ard::exhaustive_front(x, ard::parse_metric(metric_name), side, alphabet,
                                             ard::OracleLimit{limit});

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        out = &file;
    }
    const ard::Metric metric = ard::parse_metric(metric_name);
    *out << "rate_bits,distortion,three_part_codelength_bits\n";
    char buf[64];
    for (const auto& p : front) {
        std::snprintf(buf, sizeof buf, "%.9g", p.rate_bits);
        *out << buf << ',';
        if (metric == ard::Metric::euclidean) {
            std::snprintf(buf, sizeof buf, "%.9g", ard::display_distortion(metric, p.distortion));
            *out << buf;
        } else {
            *out << p.distortion;
        }
        std::snprintf(buf, sizeof buf, "%.9g", p.three_part_bits);
        *out << ',' << buf << '\n';
    }
    return 0;
}

int cmd_sphere(const std::string& metric_name, std::int64_t n, std::int64_t a,
               std::uint32_t sigma_size) {
    const ard::Metric metric = ard::parse_metric(metric_name);
    ard::SphereLog result;
    switch (metric) {
        case ard::Metric::hamming: result = ard::log_hamming_sphere(n, a, sigma_size); break;
        case ard::Metric::euclidean: result = ard::log_euclid_sphere_bound(n, a); break;
        case ard::Metric::edit: result = ard::log_edit_sphere_bound(n, a, sigma_size); break;
    }
    std::printf("%.6f\n", result.log2_size);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algorithmic rate-distortion toolkit"};
    app.require_subcommand(1);

    // --- run ---------------------------------------------------------------
    ard::ExperimentSpec spec;
    std::string run_input, run_metric = "hamming", run_side, run_original, run_out;
    std::string run_alphabet = "bytes";
    std::uint32_t run_width = 0, run_height = 0;

    auto* run = app.add_subcommand("run", "approximate the rate-distortion function of an object");
    run->add_option("--input", run_input, "input object (raw bytes, or .pgm image)")->required();
    run->add_option("--metric", run_metric, "hamming|euclidean|edit")->required();
    run->add_option("--side-info", run_side, "shared side information file");
    run->add_option("--original", run_original, "noiseless original (controlled denoising)");
    run->add_option("--width", run_width, "image width for raw input");
    run->add_option("--height", run_height, "image height for raw input");
    run->add_option("--iterations", spec.config.max_iterations, "search iterations")->required();
    run->add_option("--seed", spec.config.seed, "random seed")->required();
    run->add_option("--out", run_out, "output directory")->required();
    run->add_option("--checkpoint-every", spec.config.checkpoint_every,
                    "write a checkpoint every K iterations (0 = off)");
    run->add_option("--offspring", spec.config.offspring_per_iteration,
                    "offspring generated per iteration");
    run->add_option("--alpha", spec.config.alpha, "selection sigmoid sharpness");
    run->add_option("--crossover-fraction", spec.config.crossover_fraction,
                    "fraction of offspring from crossover");
    run->add_option("--small-mutation-prob", spec.config.small_mutation_prob,
                    "probability of the single-position mutation path");
    run->add_option("--geometric-mean", spec.config.geometric_mean,
                    "mean of the geometric block length");
    run->add_option("--gaussian-sigma", spec.config.gaussian_sigma,
                    "sigma of the euclidean byte mutation");
    run->add_option("--stagnation", spec.config.stagnation_window,
                    "stop after K iterations without front change (0 = off)");
    run->add_option("--alphabet", run_alphabet,
                    "bytes = full byte alphabet, auto = symbols of the input");
    run->add_option("--side-info-cap", spec.side_info_cap, "side information byte cap");
    run->add_option("--wall-seconds", spec.config.max_wall_seconds,
                    "wall-clock budget in seconds (0 = off; breaks reproducibility)");

    // --- resume ------------------------------------------------------------
    std::string resume_checkpoint;
    std::uint64_t resume_iterations = 0;
    auto* resume = app.add_subcommand("resume", "continue an interrupted run");
    resume->add_option("--checkpoint", resume_checkpoint, "checkpoint file")->required();
    resume->add_option("--iterations", resume_iterations, "new total iteration budget");

    // --- oracle ------------------------------------------------------------
    std::string oracle_input, oracle_metric = "hamming", oracle_side, oracle_out;
    std::string oracle_alphabet = "auto";
    std::uint64_t oracle_limit = 1ull << 24;
    auto* oracle = app.add_subcommand("oracle", "exact Pareto front by exhaustive enumeration");
    oracle->add_option("--input", oracle_input, "input object")->required();
    oracle->add_option("--metric", oracle_metric, "hamming|euclidean|edit")->required();
    oracle->add_option("--alphabet", oracle_alphabet, "auto = symbols of the input, bytes = all 256");
    oracle->add_option("--side-info", oracle_side, "shared side information file");
    oracle->add_option("--limit", oracle_limit, "enumeration size limit");
    oracle->add_option("--out", oracle_out, "write CSV here instead of stdout");

    // --- sphere ------------------------------------------------------------
    std::string sphere_metric;
    std::int64_t sphere_n = 0, sphere_a = 0;
    std::uint32_t sphere_sigma = 2;
    auto* sphere = app.add_subcommand("sphere", "print the log2 distortion-sphere size");
    sphere->add_option("--metric", sphere_metric, "hamming|euclidean|edit")->required();
    sphere->add_option("--n", sphere_n, "dimension / string length")->required();
    sphere->add_option("--a", sphere_a, "radius (squared radius for euclidean)")->required();
    sphere->add_option("--sigma-size", sphere_sigma, "alphabet size (default 2)");

    // --- denoise-naive -----------------------------------------------------
    std::string denoise_in, denoise_out;
    auto* denoise = app.add_subcommand("denoise-naive",
                                       "invert pixels with >= 5 differing neighbours");
    denoise->add_option("--input", denoise_in, "monochrome PGM")->required();
    denoise->add_option("--out", denoise_out, "output PGM")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            spec.input_path = run_input;
            spec.metric = ard::parse_metric(run_metric);
            if (!run_side.empty()) spec.side_info_path = run_side;
            if (!run_original.empty()) spec.original_path = run_original;
            if (run_width > 0) spec.width = run_width;
            if (run_height > 0) spec.height = run_height;
            spec.out_dir = run_out;
            spec.restrict_alphabet_to_input = (run_alphabet == "auto");
            return ard::run_experiment(spec);
        }
        if (resume->parsed()) {
            return ard::resume_experiment(resume_checkpoint,
                                          resume_iterations > 0
                                              ? std::optional<std::uint64_t>(resume_iterations)
                                              : std::nullopt);
        }
        if (oracle->parsed())
            return cmd_oracle(oracle_input, oracle_metric, oracle_side, oracle_alphabet,
                              oracle_limit, oracle_out);
        if (sphere->parsed()) return cmd_sphere(sphere_metric, sphere_n, sphere_a, sphere_sigma);
        if (denoise->parsed()) {
            ard::save_pgm(ard::naive_denoise(ard::load_pgm(denoise_in)), denoise_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
