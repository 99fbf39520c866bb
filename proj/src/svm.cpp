#include "translationese/svm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace translationese {

Dataset to_dense(const std::vector<FeatureVector>& vectors,
                 const std::vector<std::string>& vocabulary) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vocabulary.size(); ++i) index[vocabulary[i]] = i;
    if (index.size() != vocabulary.size()) {
        throw ValidationError("vocabulary has duplicate keys");
    }
    Dataset data;
    data.x.reserve(vectors.size());
    data.labels.reserve(vectors.size());
    for (const auto& vec : vectors) {
        std::vector<double> row(vocabulary.size(), 0.0);
        for (const auto& [key, value] : vec.values) {
            auto it = index.find(key);
            if (it == index.end()) {
                throw ValidationError("feature key '" + key + "' is not in the vocabulary");
            }
            row[it->second] = value;
        }
        data.x.push_back(std::move(row));
        data.labels.push_back(vec.chunk_label);
    }
    return data;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

// SMO state on the dual problem, maximal violating pair selection.
struct SmoSolver {
    const std::vector<std::vector<double>>& x;
    const std::vector<int>& y;
    const SmoConfig& cfg;

    std::size_t n;
    std::vector<double> alpha;
    std::vector<double> f;  // f_i = sum_j alpha_j y_j K_ij - y_i
    std::vector<std::vector<double>> kernel_rows;
    std::size_t steps = 0;
    std::vector<double> objective_history;

    SmoSolver(const std::vector<std::vector<double>>& x_, const std::vector<int>& y_,
              const SmoConfig& cfg_)
        : x(x_), y(y_), cfg(cfg_), n(x_.size()), alpha(n, 0.0), f(n), kernel_rows(n) {
        for (std::size_t i = 0; i < n; ++i) f[i] = -y[i];
    }

    const std::vector<double>& row(std::size_t i) {
        auto& r = kernel_rows[i];
        if (r.empty()) {
            r.resize(n);
            for (std::size_t j = 0; j < n; ++j) r[j] = dot(x[i], x[j]);
        }
        return r;
    }

    bool in_up_set(std::size_t i) const {
        return (alpha[i] > 0 && alpha[i] < cfg.C) || (y[i] > 0 && alpha[i] <= 0) ||
               (y[i] < 0 && alpha[i] >= cfg.C);
    }

    bool in_low_set(std::size_t i) const {
        return (alpha[i] > 0 && alpha[i] < cfg.C) || (y[i] > 0 && alpha[i] >= cfg.C) ||
               (y[i] < 0 && alpha[i] <= 0);
    }

    // min f over the up set and max f over the low set; the most violating
    // pair witnesses the optimality gap b_low - b_up.
    void extremes(double& b_up, std::size_t& i_up, double& b_low, std::size_t& i_low) const {
        b_up = std::numeric_limits<double>::infinity();
        b_low = -std::numeric_limits<double>::infinity();
        i_up = n;
        i_low = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (in_up_set(i) && f[i] < b_up) {
                b_up = f[i];
                i_up = i;
            }
            if (in_low_set(i) && f[i] > b_low) {
                b_low = f[i];
                i_low = i;
            }
        }
    }

    double dual_value() const {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sum += alpha[i] - 0.5 * alpha[i] * y[i] * (f[i] + y[i]);
        }
        return sum;
    }

    bool take_step(std::size_t i1, std::size_t i2) {
        if (i1 == i2) return false;
        double alph1 = alpha[i1];
        double alph2 = alpha[i2];
        int y1 = y[i1];
        int y2 = y[i2];
        double s = y1 * y2;

        double L, H;
        if (y1 != y2) {
            L = std::max(0.0, alph2 - alph1);
            H = std::min(cfg.C, cfg.C + alph2 - alph1);
        } else {
            L = std::max(0.0, alph1 + alph2 - cfg.C);
            H = std::min(cfg.C, alph1 + alph2);
        }
        if (L >= H) return false;

        const auto& k1 = row(i1);
        const auto& k2 = row(i2);
        double eta = k1[i1] + k2[i2] - 2.0 * k1[i2];
        double a2;
        if (eta > 1e-12) {
            a2 = alph2 + y2 * (f[i1] - f[i2]) / eta;
            a2 = std::clamp(a2, L, H);
        } else {
            // flat direction: the dual is linear along the constraint line
            double slope = y2 * (f[i1] - f[i2]);
            if (slope > 1e-12) {
                a2 = H;
            } else if (slope < -1e-12) {
                a2 = L;
            } else {
                return false;
            }
        }
        // land exactly on the box bounds: a stray ulp would misclassify the
        // point for the up/low sets and poison the bias estimate
        const double snap = 1e-12 * std::max(1.0, cfg.C);
        if (a2 < snap) {
            a2 = 0.0;
        } else if (a2 > cfg.C - snap) {
            a2 = cfg.C;
        }
        if (std::abs(a2 - alph2) < 1e-12 * (a2 + alph2 + 1e-12)) return false;

        double a1 = alph1 + s * (alph2 - a2);
        if (a1 < snap) {
            a1 = 0.0;
        } else if (a1 > cfg.C - snap) {
            a1 = cfg.C;
        }
        a1 = std::clamp(a1, 0.0, cfg.C);

        double d1 = y1 * (a1 - alph1);
        double d2 = y2 * (a2 - alph2);
        for (std::size_t j = 0; j < n; ++j) f[j] += d1 * k1[j] + d2 * k2[j];
        alpha[i1] = a1;
        alpha[i2] = a2;
        ++steps;
        if (cfg.record_objective) objective_history.push_back(dual_value());
        return true;
    }

    // Pairs the given extreme point with every other candidate once the
    // extreme pair itself cannot move.
    bool fallback(std::size_t pivot) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < n; ++i) {
                bool bound = alpha[i] <= 0 || alpha[i] >= cfg.C;
                if (pass == 0 && bound) continue;
                if (pass == 1 && !bound) continue;
                if (take_step(pivot, i)) return true;
            }
        }
        return false;
    }
};

double hinge_primal(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                    const std::vector<double>& w, double b, double C) {
    double value = 0.5 * dot(w, w);
    for (std::size_t i = 0; i < x.size(); ++i) {
        value += C * std::max(0.0, 1.0 - y[i] * (dot(w, x[i]) + b));
    }
    return value;
}

}  // namespace

SvmModel train_smo(const Dataset& data, const SmoConfig& cfg) {
    if (data.x.size() != data.labels.size()) {
        throw ValidationError("design matrix and label list sizes differ");
    }
    if (data.x.empty()) throw ValidationError("empty training set");
    if (!(cfg.C > 0)) throw ValidationError("C must be positive");
    if (!(cfg.tol > 0)) throw ValidationError("tol must be positive");
    const std::size_t dim = data.x.front().size();
    for (const auto& row : data.x) {
        if (row.size() != dim) throw ValidationError("ragged design matrix");
        for (double v : row) {
            if (!std::isfinite(v)) throw ValidationError("non-finite feature value");
        }
    }

    std::vector<int> y(data.labels.size());
    bool has_o = false, has_t = false;
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
        y[i] = data.labels[i] == ChunkLabel::Translated ? 1 : -1;
        (y[i] > 0 ? has_t : has_o) = true;
    }

    SvmModel model;
    model.C = cfg.C;
    model.labels = y;

    if (!has_o || !has_t) {
        // single-class data: constant classifier on the observed label
        model.weights.assign(dim, 0.0);
        model.bias = has_t ? 1.0 : -1.0;
        model.degenerate = true;
        model.alphas.assign(data.x.size(), 0.0);
        return model;
    }

    SmoSolver solver(data.x, y, cfg);
    double b_up, b_low;
    std::size_t i_up, i_low;
    while (solver.steps < cfg.max_iter) {
        solver.extremes(b_up, i_up, b_low, i_low);
        if (i_up >= solver.n || i_low >= solver.n) break;
        if (b_low <= b_up + 2.0 * cfg.tol) break;
        if (solver.take_step(i_up, i_low)) continue;
        if (solver.fallback(i_low)) continue;
        if (solver.fallback(i_up)) continue;
        break;  // numerically stuck: no pair can move
    }
    solver.extremes(b_up, i_up, b_low, i_low);

    model.iterations = solver.steps;
    model.alphas = solver.alpha;
    model.objective_history = std::move(solver.objective_history);

    model.weights.assign(dim, 0.0);
    for (std::size_t i = 0; i < solver.n; ++i) {
        if (solver.alpha[i] == 0.0) continue;
        double scale = solver.alpha[i] * y[i];
        for (std::size_t d = 0; d < dim; ++d) model.weights[d] += scale * data.x[i][d];
    }
    if (i_up >= solver.n) {
        model.bias = -b_low;
    } else if (i_low >= solver.n) {
        model.bias = -b_up;
    } else {
        model.bias = -(b_up + b_low) / 2.0;
    }

    double dual = solver.dual_value();
    model.duality_gap = hinge_primal(data.x, y, model.weights, model.bias, cfg.C) - dual;
    return model;
}

SvmModel train_smo(const std::vector<FeatureVector>& vectors,
                   const std::vector<std::string>& vocabulary, const SmoConfig& cfg) {
    SvmModel model = train_smo(to_dense(vectors, vocabulary), cfg);
    model.vocabulary = vocabulary;
    return model;
}

double dual_objective(const SvmModel& model, const Dataset& data) {
    if (model.alphas.size() != data.x.size()) {
        throw ValidationError("model alphas do not match the dataset");
    }
    const std::size_t dim = data.x.empty() ? 0 : data.x.front().size();
    std::vector<double> w(dim, 0.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < data.x.size(); ++i) {
        int yi = data.labels[i] == ChunkLabel::Translated ? 1 : -1;
        sum += model.alphas[i];
        double scale = model.alphas[i] * yi;
        for (std::size_t d = 0; d < dim; ++d) w[d] += scale * data.x[i][d];
    }
    return sum - 0.5 * dot(w, w);
}

Prediction predict(const SvmModel& model, const std::vector<double>& x) {
    if (x.size() != model.weights.size()) {
        throw ValidationError("feature dimension " + std::to_string(x.size()) +
                              " does not match model dimension " +
                              std::to_string(model.weights.size()));
    }
    Prediction p;
    p.margin = dot(model.weights, x) + model.bias;
    p.label = p.margin > 0 ? ChunkLabel::Translated : ChunkLabel::Original;
    return p;
}

Prediction predict(const SvmModel& model, const FeatureVector& vec) {
    if (model.vocabulary.empty()) {
        throw ValidationError("model carries no vocabulary; predict on dense vectors");
    }
    Dataset single = to_dense({vec}, model.vocabulary);
    return predict(model, single.x.front());
}

CvReport cross_validate(const Dataset& data, std::size_t folds, std::uint64_t seed,
                        const SmoConfig& cfg) {
    if (folds < 2) throw ValidationError("cross-validation needs at least 2 folds");
    if (data.x.size() < folds) {
        throw ValidationError("too few examples (" + std::to_string(data.x.size()) + ") for " +
                              std::to_string(folds) + " folds");
    }

    std::vector<std::size_t> o_idx, t_idx;
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
        (data.labels[i] == ChunkLabel::Original ? o_idx : t_idx).push_back(i);
    }
    std::mt19937_64 gen(seed);
    seeded_shuffle(o_idx, gen);
    seeded_shuffle(t_idx, gen);

    // Per-class round-robin keeps fold class counts within one of each
    // other; the T class deals from the last fold backwards so sparse
    // classes do not pile onto the same folds.
    std::vector<std::vector<std::size_t>> fold_members(folds);
    for (std::size_t i = 0; i < o_idx.size(); ++i) {
        fold_members[i % folds].push_back(o_idx[i]);
    }
    for (std::size_t i = 0; i < t_idx.size(); ++i) {
        fold_members[folds - 1 - (i % folds)].push_back(t_idx[i]);
    }

    CvReport report;
    for (std::size_t f = 0; f < folds; ++f) {
        std::vector<char> held(data.x.size(), 0);
        for (std::size_t i : fold_members[f]) held[i] = 1;

        Dataset train;
        for (std::size_t i = 0; i < data.x.size(); ++i) {
            if (held[i]) continue;
            train.x.push_back(data.x[i]);
            train.labels.push_back(data.labels[i]);
        }
        SvmModel model = train_smo(train, cfg);

        std::size_t correct = 0;
        for (std::size_t i : fold_members[f]) {
            Prediction p = predict(model, data.x[i]);
            bool truth_t = data.labels[i] == ChunkLabel::Translated;
            bool pred_t = p.label == ChunkLabel::Translated;
            if (truth_t == pred_t) ++correct;
            if (truth_t) {
                ++(pred_t ? report.t_as_t : report.t_as_o);
            } else {
                ++(pred_t ? report.o_as_t : report.o_as_o);
            }
        }
        report.fold_accuracies.push_back(
            fold_members[f].empty() ? 0.0 : static_cast<double>(correct) / fold_members[f].size());
    }

    double sum = 0.0;
    for (double a : report.fold_accuracies) sum += a;
    report.mean_accuracy = sum / report.fold_accuracies.size();
    return report;
}

void write_cv_report_tsv(std::ostream& out, const CvReport& report) {
    std::ostringstream fmt;
    fmt << std::setprecision(17);
    auto value = [&fmt](double v) {
        fmt.str("");
        fmt << v;
        return fmt.str();
    };
    for (std::size_t i = 0; i < report.fold_accuracies.size(); ++i) {
        out << "fold_accuracy\t" << (i + 1) << '\t' << value(report.fold_accuracies[i]) << '\n';
    }
    out << "mean_accuracy\t-\t" << value(report.mean_accuracy) << '\n';
    out << "confusion\to_as_o\t" << report.o_as_o << '\n';
    out << "confusion\to_as_t\t" << report.o_as_t << '\n';
    out << "confusion\tt_as_o\t" << report.t_as_o << '\n';
    out << "confusion\tt_as_t\t" << report.t_as_t << '\n';
}

std::string format_cv_summary(const CvReport& report) {
    double lo = 1.0, hi = 0.0;
    for (double a : report.fold_accuracies) {
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    if (report.fold_accuracies.empty()) lo = hi = 0.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%zu-fold cross-validation: mean accuracy %.2f%% (folds %.2f%%..%.2f%%)\n"
                  "confusion: O->O %zu, O->T %zu, T->O %zu, T->T %zu\n",
                  report.fold_accuracies.size(), report.mean_accuracy * 100.0, lo * 100.0,
                  hi * 100.0, report.o_as_o, report.o_as_t, report.t_as_o, report.t_as_t);
    return buf;
}

void save_model(std::ostream& out, const SvmModel& model) {
    if (!model.vocabulary.empty() && model.vocabulary.size() != model.weights.size()) {
        throw ValidationError("model vocabulary and weight sizes differ");
    }
    out << "translationese-svm 1\n";
    std::ostringstream fmt;
    fmt << std::setprecision(17);
    auto value = [&fmt](double v) {
        fmt.str("");
        fmt << v;
        return fmt.str();
    };
    out << "C\t" << value(model.C) << '\n';
    out << "bias\t" << value(model.bias) << '\n';
    out << "iterations\t" << model.iterations << '\n';
    out << "duality_gap\t" << value(model.duality_gap) << '\n';
    out << "degenerate\t" << (model.degenerate ? 1 : 0) << '\n';
    out << "dim\t" << model.weights.size() << '\n';
    for (std::size_t i = 0; i < model.weights.size(); ++i) {
        out << (model.vocabulary.empty() ? std::to_string(i) : model.vocabulary[i]) << '\t'
            << value(model.weights[i]) << '\n';
    }
}

void save_model_file(const std::string& path, const SvmModel& model) {
    std::ofstream out(path);
    if (!out) throw ResourceError("cannot write model file: " + path);
    save_model(out, model);
}

SvmModel load_model(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty model file", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "translationese-svm 1") {
        throw ValidationError("unsupported model header: " + line);
    }

    SvmModel model;
    std::size_t dim = 0;
    bool have_dim = false;
    std::size_t lineno = 1;
    auto next_field = [&](const std::string& name) {
        if (!std::getline(in, line)) throw ParseError("model file truncated", lineno + 1);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tab = line.find('\t');
        if (tab == std::string::npos || line.substr(0, tab) != name) {
            throw ParseError("expected field '" + name + "'", lineno);
        }
        return line.substr(tab + 1);
    };
    try {
        model.C = std::stod(next_field("C"));
        model.bias = std::stod(next_field("bias"));
        model.iterations = std::stoull(next_field("iterations"));
        model.duality_gap = std::stod(next_field("duality_gap"));
        model.degenerate = next_field("degenerate") == "1";
        dim = std::stoull(next_field("dim"));
        have_dim = true;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed numeric field", lineno);
    } catch (const std::out_of_range&) {
        throw ParseError("numeric field out of range", lineno);
    }
    if (!have_dim) throw ParseError("missing dim field", lineno);

    for (std::size_t i = 0; i < dim; ++i) {
        if (!std::getline(in, line)) throw ParseError("model file truncated", lineno + 1);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError("expected `key<TAB>weight`", lineno);
        model.vocabulary.push_back(line.substr(0, tab));
        try {
            model.weights.push_back(std::stod(line.substr(tab + 1)));
        } catch (const std::exception&) {
            throw ParseError("bad weight value", lineno);
        }
    }
    return model;
}

SvmModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open model file: " + path);
    return load_model(in);
}

}  // namespace translationese
