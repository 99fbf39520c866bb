#ifndef TRANSLATIONESE_CLUSTER_HPP
#define TRANSLATIONESE_CLUSTER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "translationese/corpus.hpp"

namespace translationese {

struct ClusterRun {
    std::vector<int> assignments;  // 0 or 1 per vector
    std::uint64_t seed = 0;
    std::size_t iterations = 0;
    double accuracy = 0.0;  // filled by cluster_experiment
    bool degenerate = false;
    double inertia = 0.0;
    std::vector<double> inertia_history;  // one entry per assignment pass
    std::array<std::vector<double>, 2> centroids;
};

// Lloyd's algorithm with k = 2 on L2 row-normalized copies of the input,
// squared Euclidean distance, two distinct data points as the seeded
// initial centroids. Distance ties assign to cluster 0; an emptied cluster
// keeps its previous centroid. When every vector is identical there is
// nothing to split: one cluster, flagged degenerate.
ClusterRun kmeans2(const std::vector<std::vector<double>>& vectors, std::uint64_t seed,
                   std::size_t max_iter = 300);

// Fraction correct under the better of the two cluster-to-label mappings.
double assignment_accuracy(const std::vector<int>& assignments,
                           const std::vector<ChunkLabel>& labels);

struct ClusterReport {
    std::vector<double> accuracies;
    double mean_accuracy = 0.0;
    double sd = 0.0;  // population standard deviation
};

// Repeats kmeans2 with seeds base_seed .. base_seed + runs - 1 and scores
// each run against the labels.
ClusterReport cluster_experiment(const std::vector<std::vector<double>>& vectors,
                                 const std::vector<ChunkLabel>& labels, std::size_t runs = 30,
                                 std::uint64_t base_seed = 0);

}  // namespace translationese

#endif
