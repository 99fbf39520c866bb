#include "translationese/experiment.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "translationese/errors.hpp"
#include "translationese/version.hpp"

namespace translationese {

using nlohmann::json;

void ExperimentConfig::validate() const {
    if (corpus_path.empty()) throw ValidationError("config: corpus path is required");
    if (!is_known_language(analysis_lang)) {
        throw ValidationError("config: unknown analysis language '" + analysis_lang + "'");
    }
    if (family_needs_fw_list(family) && fw_path.empty()) {
        throw ValidationError("config: family " + family_name(family) +
                              " requires a function-word list");
    }
    if (family_needs_tags(family) && tagged_path.empty()) {
        throw ValidationError("config: family " + family_name(family) + " requires tagged text");
    }
    if (chunk_target == 0) throw ValidationError("config: chunk_target must be positive");
    if (vocabulary_k == 0) throw ValidationError("config: vocabulary_k must be positive");
    if (!(C > 0)) throw ValidationError("config: C must be positive");
    if (!(tol > 0)) throw ValidationError("config: tol must be positive");
    if (folds < 2) throw ValidationError("config: folds must be at least 2");
    if (cluster_runs == 0) throw ValidationError("config: cluster_runs must be positive");
    for (std::size_t i = 0; i < sweep_sizes.size(); ++i) {
        if (sweep_sizes[i] == 0) throw ValidationError("config: sweep sizes must be positive");
        if (i > 0 && sweep_sizes[i] <= sweep_sizes[i - 1]) {
            throw ValidationError("config: sweep sizes must be ascending");
        }
    }
}

ExperimentConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("config must be a JSON object");

    ExperimentConfig config;
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "corpus") {
                config.corpus_path = value.get<std::string>();
            } else if (key == "analysis_lang") {
                config.analysis_lang = value.get<std::string>();
            } else if (key == "fw_list") {
                config.fw_path = value.get<std::string>();
            } else if (key == "tagged") {
                config.tagged_path = value.get<std::string>();
            } else if (key == "family") {
                config.family = family_from_name(value.get<std::string>());
            } else if (key == "chunk_target") {
                config.chunk_target = value.get<std::size_t>();
            } else if (key == "vocabulary_k") {
                config.vocabulary_k = value.get<std::size_t>();
            } else if (key == "C") {
                config.C = value.get<double>();
            } else if (key == "tol") {
                config.tol = value.get<double>();
            } else if (key == "folds") {
                config.folds = value.get<std::size_t>();
            } else if (key == "cluster_runs") {
                config.cluster_runs = value.get<std::size_t>();
            } else if (key == "seed") {
                config.seed = value.get<std::uint64_t>();
            } else if (key == "sweep_sizes") {
                config.sweep_sizes = value.get<std::vector<std::size_t>>();
            } else {
                throw ValidationError("config: unknown key '" + key + "'");
            }
        } catch (const json::exception& e) {
            throw ValidationError("config: bad value for '" + key + "': " + e.what());
        }
    }
    return config;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string config_json(const ExperimentConfig& config) {
    json doc;
    doc["corpus"] = config.corpus_path;
    doc["analysis_lang"] = config.analysis_lang;
    doc["fw_list"] = config.fw_path;
    doc["tagged"] = config.tagged_path;
    doc["family"] = family_name(config.family);
    doc["chunk_target"] = config.chunk_target;
    doc["vocabulary_k"] = config.vocabulary_k;
    doc["C"] = config.C;
    doc["tol"] = config.tol;
    doc["folds"] = config.folds;
    doc["cluster_runs"] = config.cluster_runs;
    doc["seed"] = config.seed;
    doc["sweep_sizes"] = config.sweep_sizes;
    return doc.dump(2);  // nlohmann keeps object keys sorted
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

void write_manifest_file(const std::string& path, const std::string& config_json_text,
                         std::uint64_t seed) {
    json manifest;
    manifest["tool"] = "translationese";
    manifest["version"] = kVersion;
    manifest["seed"] = seed;
    std::ostringstream hash;
    hash << std::hex << std::setfill('0') << std::setw(16) << fnv1a(config_json_text);
    manifest["config_hash"] = "fnv1a:" + hash.str();
    manifest["config"] = json::parse(config_json_text);
    std::ofstream out(path);
    if (!out) throw ResourceError("cannot write manifest: " + path);
    out << manifest.dump(2) << '\n';
}

long long round_percent(double percent) {
    return std::llround(percent);
}

PreparedVectors prepare_vectors(const ExperimentConfig& config) {
    config.validate();
    AlignedCorpus corpus = read_aligned_tsv_file(config.corpus_path);
    auto labeled = labeled_sentences_for_language(corpus, config.analysis_lang);
    if (!config.tagged_path.empty()) {
        attach_tags(labeled, read_tagged_file(config.tagged_path));
    }
    std::set<std::string> fw_list;
    if (!config.fw_path.empty()) fw_list = load_fw_list_file(config.fw_path);

    auto chunks = chunk_corpus(labeled, config.chunk_target);
    if (chunks.empty()) {
        throw ValidationError("no chunks at target " + std::to_string(config.chunk_target) +
                              "; corpus too small");
    }
    PreparedVectors prepared;
    prepared.corpus_name = corpus.name;
    prepared.spec = build_vocabulary(chunks, config.family, fw_list, config.vocabulary_k);
    auto vectors = vectorize(chunks, prepared.spec);
    for (auto& vec : vectors) {
        (vec.chunk_label == ChunkLabel::Original ? prepared.o_vectors : prepared.t_vectors)
            .push_back(std::move(vec));
    }
    if (prepared.o_vectors.empty() || prepared.t_vectors.empty()) {
        throw ValidationError("corpus yields chunks for only one class");
    }
    auto [o, t] = balance_classes(std::move(prepared.o_vectors), std::move(prepared.t_vectors),
                                  config.seed);
    prepared.o_vectors = std::move(o);
    prepared.t_vectors = std::move(t);
    return prepared;
}

namespace {

Dataset combined_dense(const PreparedVectors& prepared) {
    std::vector<FeatureVector> all = prepared.o_vectors;
    all.insert(all.end(), prepared.t_vectors.begin(), prepared.t_vectors.end());
    return to_dense(all, prepared.spec.vocabulary);
}

std::string percent_text(double percent) {
    std::ostringstream out;
    out << std::setprecision(17) << percent;
    return out.str();
}

}  // namespace

SupervisedResult run_supervised(const ExperimentConfig& config) {
    PreparedVectors prepared = prepare_vectors(config);
    SupervisedResult result;
    result.corpus_name = prepared.corpus_name;
    result.chunks_per_class = prepared.o_vectors.size();
    SmoConfig smo;
    smo.C = config.C;
    smo.tol = config.tol;
    result.report = cross_validate(combined_dense(prepared), config.folds, config.seed, smo);
    result.accuracy_percent = result.report.mean_accuracy * 100.0;
    return result;
}

std::string supervised_row(const ExperimentConfig& config, const SupervisedResult& result) {
    std::ostringstream row;
    row << result.corpus_name << '\t' << family_name(config.family) << '\t'
        << round_percent(result.accuracy_percent) << '\t' << percent_text(result.accuracy_percent);
    return row.str();
}

UnsupervisedResult run_unsupervised(const ExperimentConfig& config) {
    PreparedVectors prepared = prepare_vectors(config);
    UnsupervisedResult result;
    result.corpus_name = prepared.corpus_name;
    result.chunks_per_class = prepared.o_vectors.size();
    Dataset data = combined_dense(prepared);
    result.report = cluster_experiment(data.x, data.labels, config.cluster_runs, config.seed);
    result.accuracy_percent = result.report.mean_accuracy * 100.0;
    result.sd_points = result.report.sd * 100.0;
    return result;
}

std::string unsupervised_row(const ExperimentConfig& config, const UnsupervisedResult& result) {
    std::ostringstream row;
    row << result.corpus_name << '\t' << family_name(config.family) << '\t'
        << round_percent(result.accuracy_percent) << '\t' << percent_text(result.accuracy_percent)
        << '\t' << percent_text(result.sd_points);
    return row.str();
}

std::vector<SensitivityPoint> run_sensitivity(const ExperimentConfig& config) {
    if (config.sweep_sizes.empty()) {
        throw ValidationError("config: sensitivity needs sweep_sizes");
    }
    PreparedVectors prepared = prepare_vectors(config);
    SmoConfig smo;
    smo.C = config.C;
    smo.tol = config.tol;

    std::vector<SensitivityPoint> points;
    for (std::size_t size : config.sweep_sizes) {
        SensitivityPoint point;
        point.size = size;
        std::size_t per_class = size / 2;
        if (per_class == 0 || per_class > prepared.o_vectors.size() ||
            per_class > prepared.t_vectors.size() ||
            size < config.folds) {
            point.skipped = true;
            points.push_back(point);
            continue;
        }
        std::mt19937_64 gen(config.seed + size);
        auto o = sample_without_replacement(prepared.o_vectors, per_class, gen);
        auto t = sample_without_replacement(prepared.t_vectors, per_class, gen);
        std::vector<FeatureVector> all = std::move(o);
        all.insert(all.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
        Dataset data = to_dense(all, prepared.spec.vocabulary);

        CvReport cv = cross_validate(data, config.folds, config.seed, smo);
        point.supervised_percent = cv.mean_accuracy * 100.0;
        ClusterReport cl = cluster_experiment(data.x, data.labels, config.cluster_runs, config.seed);
        point.unsupervised_percent = cl.mean_accuracy * 100.0;
        points.push_back(point);
    }
    return points;
}

void write_sensitivity_tsv(std::ostream& out, const std::vector<SensitivityPoint>& points) {
    out << "chunks\tsupervised\tunsupervised\tsupervised_rounded\tunsupervised_rounded\n";
    for (const auto& point : points) {
        if (point.skipped) {
            out << point.size << "\tskipped\tskipped\t-\t-\n";
            continue;
        }
        out << point.size << '\t' << percent_text(point.supervised_percent) << '\t'
            << percent_text(point.unsupervised_percent) << '\t'
            << round_percent(point.supervised_percent) << '\t'
            << round_percent(point.unsupervised_percent) << '\n';
    }
}

}  // namespace translationese
