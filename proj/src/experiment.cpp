#include "ard/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "ard/codec.hpp"
#include "ard/image.hpp"
#include "ard/pareto.hpp"

namespace ard {

namespace {

using nlohmann::json;

Bytes read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

bool is_pgm(const std::filesystem::path& path) { return path.extension() == ".pgm"; }

struct LoadedObject {
    Bytes data;
    std::optional<std::uint32_t> width;
    std::optional<std::uint32_t> height;
};

LoadedObject load_object(const std::filesystem::path& path, std::optional<std::uint32_t> width,
                         std::optional<std::uint32_t> height) {
    LoadedObject object;
    if (is_pgm(path)) {
        const ImageGrid grid = load_pgm(path);
        object.data = grid.pixels;
        object.width = grid.width;
        object.height = grid.height;
    } else {
        object.data = read_file(path);
        object.width = width;
        object.height = height;
        if (width && height &&
            object.data.size() != static_cast<std::size_t>(*width) * *height)
            throw std::runtime_error("input size does not match --width x --height");
    }
    return object;
}

std::string format_bits(double bits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", bits);
    return buf;
}

std::string format_distortion(Metric metric, std::uint64_t raw) {
    if (metric == Metric::euclidean) return format_bits(display_distortion(metric, raw));
    return std::to_string(raw);
}

void write_front_csv(const std::filesystem::path& path, const std::vector<FrontPoint>& front,
                     Metric metric, bool with_original) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "rate_bits,distortion,three_part_codelength_bits";
    if (with_original) out << ",distortion_to_original";
    out << '\n';
    for (const FrontPoint& p : front) {
        out << format_bits(p.rate_bits) << ',' << format_distortion(metric, p.distortion) << ','
            << format_bits(p.three_part_bits);
        if (with_original) out << ',' << format_distortion(metric, *p.distortion_to_original);
        out << '\n';
    }
}

void write_point_report(const std::filesystem::path& path, const FrontPoint& point,
                        Metric metric) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "rate_bits: " << format_bits(point.rate_bits) << '\n'
        << "distortion: " << format_distortion(metric, point.distortion) << '\n'
        << "three_part_codelength_bits: " << format_bits(point.three_part_bits) << '\n';
    if (point.distortion_to_original)
        out << "distortion_to_original: " << format_distortion(metric, *point.distortion_to_original)
            << '\n';
    out << "payload_hex: " << (point.payload.empty() ? std::string("-") : to_hex(point.payload))
        << '\n';
}

void write_payload_files(const std::filesystem::path& dir, const std::vector<FrontPoint>& front,
                         std::optional<std::uint32_t> width, std::optional<std::uint32_t> height) {
    std::filesystem::create_directories(dir);
    char name[64];
    for (std::size_t i = 0; i < front.size(); ++i) {
        std::snprintf(name, sizeof name, "model_%04zu.bin", i);
        std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
        out.write(reinterpret_cast<const char*>(front[i].payload.data()),
                  static_cast<std::streamsize>(front[i].payload.size()));
        if (width && height &&
            front[i].payload.size() == static_cast<std::size_t>(*width) * *height) {
            std::snprintf(name, sizeof name, "model_%04zu.pgm", i);
            save_pgm(ImageGrid{*width, *height, front[i].payload}, dir / name);
        }
    }
}

struct PreparedExperiment {
    Bytes input;
    Bytes side_info;
    std::optional<Bytes> original;
    std::optional<std::uint32_t> width;
    std::optional<std::uint32_t> height;
    SearchConfig config;
};

PreparedExperiment prepare(const ExperimentSpec& spec) {
    PreparedExperiment prep;
    const LoadedObject input = load_object(spec.input_path, spec.width, spec.height);
    prep.input = input.data;
    prep.width = input.width;
    prep.height = input.height;
    if (prep.input.empty()) throw std::runtime_error("input object is empty");
    if (spec.metric == Metric::euclidean && !(prep.width && prep.height))
        throw std::runtime_error("euclidean distortion requires image input (PGM or --width/--height)");

    if (spec.side_info_path) {
        prep.side_info = read_file(*spec.side_info_path);
        if (prep.side_info.size() > spec.side_info_cap) {
            std::cerr << "note: side information truncated to " << spec.side_info_cap
                      << " bytes (raise --side-info-cap to keep more)\n";
            prep.side_info.resize(spec.side_info_cap);
        }
    }

    if (spec.original_path) {
        prep.original = load_object(*spec.original_path, spec.width, spec.height).data;
        if (spec.metric != Metric::edit && prep.original->size() != prep.input.size())
            throw std::runtime_error("original and input sizes differ");
    }

    prep.config = spec.config;
    if (spec.restrict_alphabet_to_input) {
        std::set<std::uint8_t> symbols(prep.input.begin(), prep.input.end());
        prep.config.alphabet.assign(symbols.begin(), symbols.end());
    }
    if (prep.config.checkpoint_every > 0 && prep.config.checkpoint_path.empty())
        prep.config.checkpoint_path = (spec.out_dir / "checkpoint.txt").string();
    return prep;
}

void write_outputs(const ExperimentSpec& spec, const PreparedExperiment& prep,
                   const RunResult& result) {
    const std::uint32_t sigma =
        prep.config.alphabet.empty() ? 256u : static_cast<std::uint32_t>(prep.config.alphabet.size());
    std::vector<FrontPoint> front =
        curves(result.pool, prep.input, spec.metric, prep.side_info,
               prep.original ? &*prep.original : nullptr, sigma);

    write_front_csv(spec.out_dir / "front.csv", front, spec.metric, prep.original.has_value());
    write_payload_files(spec.out_dir / "models", front, prep.width, prep.height);

    const FrontPoint mss = minimal_sufficient_statistic(front);
    write_point_report(spec.out_dir / "mss.txt", mss, spec.metric);
    if (prep.width && prep.height && mss.payload.size() == static_cast<std::size_t>(*prep.width) * *prep.height)
        save_pgm(ImageGrid{*prep.width, *prep.height, mss.payload}, spec.out_dir / "mss.pgm");

    if (prep.original) {
        const FrontPoint* best = nullptr;
        for (const FrontPoint& p : front)
            if (best == nullptr || *p.distortion_to_original < *best->distortion_to_original ||
                (*p.distortion_to_original == *best->distortion_to_original &&
                 p.rate_bits < best->rate_bits))
                best = &p;
        write_point_report(spec.out_dir / "best.txt", *best, spec.metric);
    }

    if (!spec.quiet)
        std::cout << "iterations: " << result.iterations << "\n"
                  << "front points: " << front.size() << "\n"
                  << "input codelength (bits): "
                  << format_bits(conditional_codelength(prep.input, prep.side_info)) << "\n"
                  << "mss rate (bits): " << format_bits(mss.rate_bits)
                  << ", three-part codelength (bits): " << format_bits(mss.three_part_bits) << "\n";
}

}  // namespace

void write_experiment_json(const ExperimentSpec& spec) {
    json j;
    j["input"] = std::filesystem::absolute(spec.input_path).string();
    j["metric"] = metric_name(spec.metric);
    j["side_info"] =
        spec.side_info_path ? json(std::filesystem::absolute(*spec.side_info_path).string()) : json();
    j["original"] =
        spec.original_path ? json(std::filesystem::absolute(*spec.original_path).string()) : json();
    j["width"] = spec.width ? json(*spec.width) : json();
    j["height"] = spec.height ? json(*spec.height) : json();
    j["side_info_cap"] = spec.side_info_cap;
    j["restrict_alphabet_to_input"] = spec.restrict_alphabet_to_input;
    const SearchConfig& c = spec.config;
    j["config"] = {{"alpha", c.alpha},
                   {"small_mutation_prob", c.small_mutation_prob},
                   {"geometric_mean", c.geometric_mean},
                   {"gaussian_sigma", c.gaussian_sigma},
                   {"offspring_per_iteration", c.offspring_per_iteration},
                   {"crossover_fraction", c.crossover_fraction},
                   {"seed", c.seed},
                   {"max_iterations", c.max_iterations},
                   {"checkpoint_every", c.checkpoint_every},
                   {"stagnation_window", c.stagnation_window}};
    std::ofstream out(spec.out_dir / "experiment.json", std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write experiment.json");
    out << j.dump(2) << '\n';
}

ExperimentSpec read_experiment_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    json j;
    in >> j;

    ExperimentSpec spec;
    spec.input_path = j.at("input").get<std::string>();
    spec.metric = parse_metric(j.at("metric").get<std::string>());
    if (!j.at("side_info").is_null()) spec.side_info_path = j.at("side_info").get<std::string>();
    if (!j.at("original").is_null()) spec.original_path = j.at("original").get<std::string>();
    if (!j.at("width").is_null()) spec.width = j.at("width").get<std::uint32_t>();
    if (!j.at("height").is_null()) spec.height = j.at("height").get<std::uint32_t>();
    spec.side_info_cap = j.at("side_info_cap").get<std::uint64_t>();
    spec.restrict_alphabet_to_input = j.at("restrict_alphabet_to_input").get<bool>();
    spec.out_dir = path.parent_path();

    const json& c = j.at("config");
    spec.config.alpha = c.at("alpha").get<double>();
    spec.config.small_mutation_prob = c.at("small_mutation_prob").get<double>();
    spec.config.geometric_mean = c.at("geometric_mean").get<double>();
    spec.config.gaussian_sigma = c.at("gaussian_sigma").get<double>();
    spec.config.offspring_per_iteration = c.at("offspring_per_iteration").get<std::uint32_t>();
    spec.config.crossover_fraction = c.at("crossover_fraction").get<double>();
    spec.config.seed = c.at("seed").get<std::uint64_t>();
    spec.config.max_iterations = c.at("max_iterations").get<std::uint64_t>();
    spec.config.checkpoint_every = c.at("checkpoint_every").get<std::uint64_t>();
    spec.config.stagnation_window = c.at("stagnation_window").get<std::uint64_t>();
    return spec;
}

int run_experiment(const ExperimentSpec& spec) {
    std::filesystem::create_directories(spec.out_dir);
    write_experiment_json(spec);

    const PreparedExperiment prep = prepare(spec);
    const RunResult result = run(prep.input, spec.metric, prep.side_info, prep.config);
    write_outputs(spec, prep, result);
    return 0;
}

int resume_experiment(const std::filesystem::path& checkpoint_path,
                      std::optional<std::uint64_t> iterations_override, bool quiet) {
    const std::filesystem::path out_dir = checkpoint_path.parent_path();
    ExperimentSpec spec = read_experiment_json(out_dir / "experiment.json");
    spec.quiet = quiet;
    if (iterations_override) spec.config.max_iterations = *iterations_override;

    const PreparedExperiment prep = prepare(spec);
    const Checkpoint checkpoint = read_checkpoint(checkpoint_path.string());
    if (checkpoint.seed != spec.config.seed)
        throw std::runtime_error("checkpoint seed differs from experiment.json");
    Pool pool = rebuild_pool(checkpoint, prep.input, spec.metric, prep.side_info);

    const RunResult result =
        run_from(std::move(pool), Rng::from_state_hex(checkpoint.rng_state_hex),
                 checkpoint.iteration, prep.input, spec.metric, prep.side_info, prep.config);
    write_outputs(spec, prep, result);
    return 0;
}

}  // namespace ard
