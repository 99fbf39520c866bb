#ifndef TRANSLATIONESE_SVM_HPP
#define TRANSLATIONESE_SVM_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "translationese/corpus.hpp"
#include "translationese/errors.hpp"
#include "translationese/featurize.hpp"
#include "translationese/rng.hpp"

namespace translationese {

struct SmoConfig {
    double C = 1.0;
    double tol = 1e-3;
    std::size_t max_iter = 1000000;
    bool record_objective = false;
};

// Linear classifier f(x) = w.x + bias; positive side is T. alphas and
// labels are training-time diagnostics (they expose the KKT state) and are
// not persisted.
struct SvmModel {
    std::vector<std::string> vocabulary;  // empty when trained on raw dense data
    std::vector<double> weights;
    double bias = 0.0;
    double C = 1.0;

    std::size_t iterations = 0;
    double duality_gap = 0.0;
    bool degenerate = false;  // single-class training set

    std::vector<double> alphas;
    std::vector<int> labels;
    std::vector<double> objective_history;  // dual objective per step, when recorded
};

// Dense design matrix. Labels map O -> -1, T -> +1.
struct Dataset {
    std::vector<std::vector<double>> x;
    std::vector<ChunkLabel> labels;
};

Dataset to_dense(const std::vector<FeatureVector>& vectors,
                 const std::vector<std::string>& vocabulary);

// Sequential minimal optimization on the soft-margin dual, maximal
// violating pair selection, linear kernel. Converges when the optimality
// gap b_low - b_up drops to 2*tol. A single-class input yields the
// degenerate constant model.
SvmModel train_smo(const Dataset& data, const SmoConfig& cfg = {});
SvmModel train_smo(const std::vector<FeatureVector>& vectors,
                   const std::vector<std::string>& vocabulary, const SmoConfig& cfg = {});

// Dual objective of the model's alphas on its training data.
double dual_objective(const SvmModel& model, const Dataset& data);

struct Prediction {
    ChunkLabel label = ChunkLabel::Original;
    double margin = 0.0;  // w.x + bias
};

// Margin 0 resolves to O.
Prediction predict(const SvmModel& model, const std::vector<double>& x);
Prediction predict(const SvmModel& model, const FeatureVector& vec);

struct CvReport {
    std::vector<double> fold_accuracies;
    double mean_accuracy = 0.0;
    // confusion totals over all held-out folds
    std::size_t o_as_o = 0;
    std::size_t o_as_t = 0;
    std::size_t t_as_o = 0;
    std::size_t t_as_t = 0;

    std::size_t total() const { return o_as_o + o_as_t + t_as_o + t_as_t; }

    bool operator==(const CvReport&) const = default;
};

// Stratified k-fold cross-validation with seeded shuffling: per-class
// index lists are shuffled and dealt round-robin, so fold class counts
// differ by at most one.
CvReport cross_validate(const Dataset& data, std::size_t folds, std::uint64_t seed,
                        const SmoConfig& cfg = {});

void write_cv_report_tsv(std::ostream& out, const CvReport& report);
std::string format_cv_summary(const CvReport& report);

// Uniformly subsamples the larger class down to the smaller one's size.
// The kept items stay reproducible for a fixed seed.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> balance_classes(std::vector<T> o_items,
                                                          std::vector<T> t_items,
                                                          std::uint64_t seed) {
    if (o_items.empty() || t_items.empty()) {
        throw ValidationError("both classes must be non-empty");
    }
    std::mt19937_64 gen(seed);
    if (o_items.size() > t_items.size()) {
        o_items = sample_without_replacement(std::move(o_items), t_items.size(), gen);
    } else if (t_items.size() > o_items.size()) {
        t_items = sample_without_replacement(std::move(t_items), o_items.size(), gen);
    }
    return {std::move(o_items), std::move(t_items)};
}

// Versioned flat-file model persistence (vocabulary, weights, bias, C,
// training meta; alphas are not stored).
void save_model(std::ostream& out, const SvmModel& model);
void save_model_file(const std::string& path, const SvmModel& model);
SvmModel load_model(std::istream& in);
SvmModel load_model_file(const std::string& path);

}  // namespace translationese

#endif
