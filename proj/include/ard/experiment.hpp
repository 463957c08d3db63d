#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "ard/bytes.hpp"
#include "ard/distortion.hpp"
#include "ard/search.hpp"

namespace ard {

// A full rate-distortion experiment: one input object, one metric, optional
// side information, optional original object for controlled denoising
// evaluation, and the search tunables. Outputs land in out_dir:
//
//   front.csv        rate_bits,distortion,three_part_codelength_bits
//                    [,distortion_to_original]; rates strictly increasing,
//                    distortion non-increasing
//   mss.txt          the minimal sufficient statistic and its metrics
//   best.txt         (with --original) the front member closest to it
//   models/          one payload file per front point (.pgm too for images)
//   checkpoint.txt   resumable state, when checkpointing is on
//   experiment.json  the spec itself, read back by resume
struct ExperimentSpec {
    std::filesystem::path input_path;
    Metric metric = Metric::hamming;
    std::optional<std::filesystem::path> side_info_path;
    std::optional<std::filesystem::path> original_path;
    std::optional<std::uint32_t> width;
    std::optional<std::uint32_t> height;
    std::filesystem::path out_dir;
    std::uint64_t side_info_cap = 64 * 1024;
    bool restrict_alphabet_to_input = false;  // "auto" alphabet mode
    bool quiet = false;                       // suppress the stdout summary
    SearchConfig config;
};

int run_experiment(const ExperimentSpec& spec);

// Continue from a checkpoint; the experiment spec is read from
// experiment.json next to it. The iteration budget may be raised.
int resume_experiment(const std::filesystem::path& checkpoint_path,
                      std::optional<std::uint64_t> iterations_override = std::nullopt,
                      bool quiet = false);

void write_experiment_json(const ExperimentSpec& spec);
ExperimentSpec read_experiment_json(const std::filesystem::path& path);

}  // namespace ard
