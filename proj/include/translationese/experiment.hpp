#ifndef TRANSLATIONESE_EXPERIMENT_HPP
#define TRANSLATIONESE_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "translationese/cluster.hpp"
#include "translationese/featurize.hpp"
#include "translationese/svm.hpp"

namespace translationese {

// Everything one experiment run needs. Loaded from a JSON config file;
// individual fields may be overridden by command-line flags.
struct ExperimentConfig {
    std::string corpus_path;
    std::string analysis_lang;  // which side of the bitext to analyze
    std::string fw_path;        // families fw / contextual-fw
    std::string tagged_path;    // families pos-trigram / contextual-fw
    FeatureFamily family = FeatureFamily::FW;
    std::size_t chunk_target = 2000;
    std::size_t vocabulary_k = 1000;
    double C = 1.0;
    double tol = 1e-3;
    std::size_t folds = 10;
    std::size_t cluster_runs = 30;
    std::uint64_t seed = 0;
    std::vector<std::size_t> sweep_sizes;  // total chunk counts, ascending

    void validate() const;
};

// Strict parse: unknown keys and type mismatches are validation errors.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);

// Canonical JSON rendering (sorted keys), the hashing input for manifests.
std::string config_json(const ExperimentConfig& config);

std::uint64_t fnv1a(const std::string& data);

// Provenance sidecar written next to every output file: tool version,
// seed, config hash, and the config itself.
void write_manifest_file(const std::string& path, const std::string& config_json_text,
                         std::uint64_t seed);

// Percent rounding used in report tables: nearest, halves away from zero.
long long round_percent(double percent);

// corpus -> labeled sentences -> (optional tags) -> chunks -> vocabulary
// over the pooled chunks -> vectors -> class balancing.
struct PreparedVectors {
    std::string corpus_name;
    FeatureSpec spec;
    std::vector<FeatureVector> o_vectors;
    std::vector<FeatureVector> t_vectors;
};
PreparedVectors prepare_vectors(const ExperimentConfig& config);

struct SupervisedResult {
    std::string corpus_name;
    CvReport report;
    double accuracy_percent = 0.0;
    std::size_t chunks_per_class = 0;
};
SupervisedResult run_supervised(const ExperimentConfig& config);
// `corpus<TAB>family<TAB>rounded<TAB>unrounded-percent`
std::string supervised_row(const ExperimentConfig& config, const SupervisedResult& result);

struct UnsupervisedResult {
    std::string corpus_name;
    ClusterReport report;
    double accuracy_percent = 0.0;
    double sd_points = 0.0;
    std::size_t chunks_per_class = 0;
};
UnsupervisedResult run_unsupervised(const ExperimentConfig& config);
// `corpus<TAB>family<TAB>rounded<TAB>unrounded-percent<TAB>sd-points`
std::string unsupervised_row(const ExperimentConfig& config, const UnsupervisedResult& result);

struct SensitivityPoint {
    std::size_t size = 0;  // total chunks at this sweep point
    bool skipped = false;  // not enough chunks available
    double supervised_percent = 0.0;
    double unsupervised_percent = 0.0;
};
// One point per sweep size: subsample a balanced set of `size` chunks
// (seeded per point) and run both pipelines on it. Oversized points are
// skipped, not fatal.
std::vector<SensitivityPoint> run_sensitivity(const ExperimentConfig& config);
void write_sensitivity_tsv(std::ostream& out, const std::vector<SensitivityPoint>& points);

}  // namespace translationese

#endif
