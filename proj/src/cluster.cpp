#include "translationese/cluster.hpp"

#include <cmath>
#include <random>

#include "translationese/errors.hpp"
#include "translationese/rng.hpp"

namespace translationese {

namespace {

std::vector<std::vector<double>> l2_normalize(const std::vector<std::vector<double>>& vectors) {
    std::vector<std::vector<double>> out = vectors;
    for (auto& row : out) {
        double norm = 0.0;
        for (double v : row) norm += v * v;
        norm = std::sqrt(norm);
        if (norm > 0.0) {
            for (double& v : row) v /= norm;
        }
    }
    return out;
}

double sq_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

}  // namespace

ClusterRun kmeans2(const std::vector<std::vector<double>>& vectors, std::uint64_t seed,
                   std::size_t max_iter) {
    if (vectors.size() < 2) throw ValidationError("clustering needs at least 2 vectors");
    if (max_iter == 0) throw ValidationError("max_iter must be positive");
    const std::size_t dim = vectors.front().size();
    for (const auto& row : vectors) {
        if (row.size() != dim) throw ValidationError("ragged vector list");
        for (double v : row) {
            if (!std::isfinite(v)) throw ValidationError("non-finite vector value");
        }
    }

    const auto points = l2_normalize(vectors);
    const std::size_t n = points.size();

    ClusterRun run;
    run.seed = seed;

    std::mt19937_64 gen(seed);
    std::size_t first = static_cast<std::size_t>(bounded_uint(gen, n));
    std::vector<std::size_t> distinct;
    for (std::size_t i = 0; i < n; ++i) {
        if (points[i] != points[first]) distinct.push_back(i);
    }
    if (distinct.empty()) {
        run.degenerate = true;
        run.assignments.assign(n, 0);
        run.centroids[0] = points[first];
        run.centroids[1] = points[first];
        run.inertia = 0.0;
        for (const auto& p : points) run.inertia += sq_distance(p, points[first]);
        run.inertia_history.push_back(run.inertia);
        return run;
    }
    std::size_t second = distinct[static_cast<std::size_t>(bounded_uint(gen, distinct.size()))];

    run.centroids[0] = points[first];
    run.centroids[1] = points[second];
    run.assignments.assign(n, 0);

    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        bool changed = false;
        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d0 = sq_distance(points[i], run.centroids[0]);
            double d1 = sq_distance(points[i], run.centroids[1]);
            int cluster = d1 < d0 ? 1 : 0;  // tie goes to cluster 0
            inertia += cluster == 1 ? d1 : d0;
            if (cluster != run.assignments[i]) {
                run.assignments[i] = cluster;
                changed = true;
            }
        }
        run.inertia_history.push_back(inertia);
        run.inertia = inertia;
        run.iterations = iter + 1;
        if (!changed) break;

        for (int c = 0; c < 2; ++c) {
            std::vector<double> mean(dim, 0.0);
            std::size_t count = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (run.assignments[i] != c) continue;
                ++count;
                for (std::size_t d = 0; d < dim; ++d) mean[d] += points[i][d];
            }
            if (count == 0) continue;  // empty cluster keeps its centroid
            for (double& v : mean) v /= count;
            run.centroids[c] = std::move(mean);
        }
    }
    return run;
}

double assignment_accuracy(const std::vector<int>& assignments,
                           const std::vector<ChunkLabel>& labels) {
    if (assignments.size() != labels.size()) {
        throw ValidationError("assignment and label lists differ in length");
    }
    if (assignments.empty()) throw ValidationError("nothing to score");
    std::size_t direct = 0;  // cluster 0 = O, cluster 1 = T
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        bool is_t = labels[i] == ChunkLabel::Translated;
        if ((assignments[i] == 1) == is_t) ++direct;
    }
    std::size_t best = std::max(direct, assignments.size() - direct);
    return static_cast<double>(best) / assignments.size();
}

ClusterReport cluster_experiment(const std::vector<std::vector<double>>& vectors,
                                 const std::vector<ChunkLabel>& labels, std::size_t runs,
                                 std::uint64_t base_seed) {
    if (runs == 0) throw ValidationError("need at least one run");
    if (vectors.size() != labels.size()) {
        throw ValidationError("vector and label lists differ in length");
    }
    ClusterReport report;
    for (std::size_t r = 0; r < runs; ++r) {
        ClusterRun run = kmeans2(vectors, base_seed + r);
        run.accuracy = assignment_accuracy(run.assignments, labels);
        report.accuracies.push_back(run.accuracy);
    }
    double sum = 0.0;
    for (double a : report.accuracies) sum += a;
    report.mean_accuracy = sum / runs;
    double var = 0.0;
    for (double a : report.accuracies) {
        double d = a - report.mean_accuracy;
        var += d * d;
    }
    report.sd = std::sqrt(var / runs);
    return report;
}

}  // namespace translationese
