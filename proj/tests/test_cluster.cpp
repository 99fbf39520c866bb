#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "support/cluster_oracles.hpp"
#include "translationese/cluster.hpp"
#include "translationese/errors.hpp"
#include "translationese/rng.hpp"

using namespace translationese;

namespace {

double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * ((gen() >> 11) * 0x1.0p-53);
}

// two tight groups near orthogonal directions, unmistakable after row
// normalization
std::pair<std::vector<std::vector<double>>, std::vector<ChunkLabel>> planted_blobs(
    std::mt19937_64& gen, std::size_t per_class, double spread) {
    std::vector<std::vector<double>> vectors;
    std::vector<ChunkLabel> labels;
    for (std::size_t i = 0; i < per_class; ++i) {
        vectors.push_back({1.0 + uniform(gen, -spread, spread), uniform(gen, -spread, spread)});
        labels.push_back(ChunkLabel::Original);
        vectors.push_back({uniform(gen, -spread, spread), 1.0 + uniform(gen, -spread, spread)});
        labels.push_back(ChunkLabel::Translated);
    }
    return {vectors, labels};
}

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
    return sum;
}

}  // namespace

TEST_CASE("well-separated groups are recovered from any seed") {
    std::mt19937_64 gen(301);
    auto [vectors, labels] = planted_blobs(gen, 6, 0.05);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto run = kmeans2(vectors, seed);
        CHECK_FALSE(run.degenerate);
        CHECK(assignment_accuracy(run.assignments, labels) == 1.0);
    }
}

TEST_CASE("identical points collapse to one degenerate cluster") {
    std::vector<std::vector<double>> same = {{2.0, 2.0}, {2.0, 2.0}, {2.0, 2.0}, {2.0, 2.0}};
    auto run = kmeans2(same, 9);
    CHECK(run.degenerate);
    CHECK(run.assignments == std::vector<int>{0, 0, 0, 0});
    CHECK(run.inertia == doctest::Approx(0.0));
    CHECK(run.centroids[0] == run.centroids[1]);

    std::vector<ChunkLabel> labels = {ChunkLabel::Original, ChunkLabel::Original,
                                      ChunkLabel::Translated, ChunkLabel::Translated};
    CHECK(assignment_accuracy(run.assignments, labels) == 0.5);

    // points equal only up to rounding after normalization are not special:
    // an ordinary run happens on the residual noise and stays in bounds
    std::vector<std::vector<double>> rays = {{1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}, {4.0, 4.0}};
    auto noisy = kmeans2(rays, 9);
    CHECK(noisy.inertia <= 1e-20);
    double acc = assignment_accuracy(noisy.assignments, labels);
    CHECK(acc >= 0.5);
    CHECK(acc <= 1.0);
}

TEST_CASE("kmeans validates its input") {
    CHECK_THROWS_WITH_AS(kmeans2({{1.0}}, 0), "clustering needs at least 2 vectors",
                         ValidationError);
    CHECK_THROWS_WITH_AS(kmeans2({{1.0}, {2.0}}, 0, 0), "max_iter must be positive",
                         ValidationError);
    CHECK_THROWS_WITH_AS(kmeans2({{1.0, 2.0}, {3.0}}, 0), "ragged vector list", ValidationError);
    CHECK_THROWS_AS(kmeans2({{1.0}, {std::numeric_limits<double>::quiet_NaN()}}, 0),
                    ValidationError);
}

TEST_CASE("final inertia never beats the exhaustive partition minimum") {
    std::mt19937_64 gen(302);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 4 + bounded_uint(gen, 5);
        std::vector<std::vector<double>> vectors;
        for (std::size_t i = 0; i < n; ++i) {
            vectors.push_back({uniform(gen, -2.0, 2.0), uniform(gen, -2.0, 2.0)});
        }
        double floor = oracles::exhaustive_min_inertia(vectors);
        auto run = kmeans2(vectors, trial);
        CHECK(run.inertia >= floor - 1e-9);
        REQUIRE(!run.inertia_history.empty());
        CHECK(run.inertia == run.inertia_history.back());
        for (std::size_t i = 1; i < run.inertia_history.size(); ++i) {
            CHECK(run.inertia_history[i] <= run.inertia_history[i - 1] + 1e-12);
        }
    }
}

TEST_CASE("separated groups reach the global optimum") {
    std::mt19937_64 gen(303);
    auto [vectors, labels] = planted_blobs(gen, 3, 0.05);
    double floor = oracles::exhaustive_min_inertia(vectors);
    auto run = kmeans2(vectors, 4);
    CHECK(run.inertia >= floor - 1e-9);
    CHECK(run.inertia <= floor + 1e-9);
}

TEST_CASE("converged assignments are stable against their centroids") {
    std::mt19937_64 gen(304);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 4 + bounded_uint(gen, 5);
        std::vector<std::vector<double>> vectors;
        for (std::size_t i = 0; i < n; ++i) {
            vectors.push_back(
                {uniform(gen, -2.0, 2.0), uniform(gen, -2.0, 2.0), uniform(gen, -2.0, 2.0)});
        }
        auto run = kmeans2(vectors, 1000 + trial);
        REQUIRE(run.iterations < 300);  // tiny inputs always converge
        auto points = oracles::l2_rows(vectors);
        for (std::size_t i = 0; i < points.size(); ++i) {
            double d0 = sq_dist(points[i], run.centroids[0]);
            double d1 = sq_dist(points[i], run.centroids[1]);
            double own = run.assignments[i] == 1 ? d1 : d0;
            CHECK(own <= std::min(d0, d1) + 1e-12);
            if (d0 == d1) CHECK(run.assignments[i] == 0);
        }
    }
}

TEST_CASE("assignment accuracy takes the better of the two mappings") {
    std::vector<ChunkLabel> labels = {ChunkLabel::Original, ChunkLabel::Original,
                                      ChunkLabel::Translated, ChunkLabel::Translated};
    CHECK(assignment_accuracy({0, 0, 1, 1}, labels) == 1.0);
    CHECK(assignment_accuracy({1, 1, 0, 0}, labels) == 1.0);
    CHECK(assignment_accuracy({0, 1, 0, 1}, labels) == 0.5);
    CHECK(assignment_accuracy({0, 0, 0, 1}, labels) == 0.75);

    CHECK_THROWS_WITH_AS(assignment_accuracy({0, 1}, labels),
                         "assignment and label lists differ in length", ValidationError);
    CHECK_THROWS_WITH_AS(assignment_accuracy({}, {}), "nothing to score", ValidationError);
}

TEST_CASE("assignment accuracy matches the two-permutation oracle") {
    std::mt19937_64 gen(305);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + bounded_uint(gen, 20);
        std::vector<int> assignments;
        std::vector<ChunkLabel> labels;
        for (std::size_t i = 0; i < n; ++i) {
            assignments.push_back(static_cast<int>(bounded_uint(gen, 2)));
            labels.push_back(bounded_uint(gen, 2) ? ChunkLabel::Translated
                                                  : ChunkLabel::Original);
        }
        std::size_t direct = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool is_t = labels[i] == ChunkLabel::Translated;
            if ((assignments[i] == 1) == is_t) ++direct;
        }
        double want = static_cast<double>(std::max(direct, n - direct)) / n;
        CHECK(assignment_accuracy(assignments, labels) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("repeated runs report mean and population spread") {
    std::mt19937_64 gen(306);
    std::vector<std::vector<double>> vectors;
    std::vector<ChunkLabel> labels;
    for (int i = 0; i < 10; ++i) {
        vectors.push_back({uniform(gen, -1.0, 1.0), uniform(gen, -1.0, 1.0)});
        labels.push_back(i % 2 ? ChunkLabel::Translated : ChunkLabel::Original);
    }
    auto report = cluster_experiment(vectors, labels, 12, 42);
    REQUIRE(report.accuracies.size() == 12);
    double lo = *std::min_element(report.accuracies.begin(), report.accuracies.end());
    double hi = *std::max_element(report.accuracies.begin(), report.accuracies.end());
    CHECK(report.mean_accuracy >= lo);
    CHECK(report.mean_accuracy <= hi);

    double mean = 0.0;
    for (double a : report.accuracies) mean += a;
    mean /= report.accuracies.size();
    double var = 0.0;
    for (double a : report.accuracies) var += (a - mean) * (a - mean);
    CHECK(report.mean_accuracy == doctest::Approx(mean).epsilon(1e-12));
    CHECK(report.sd ==
          doctest::Approx(std::sqrt(var / report.accuracies.size())).epsilon(1e-12));
    CHECK(report.sd >= 0.0);
}

TEST_CASE("the experiment walks consecutive seeds from its base") {
    std::mt19937_64 gen(307);
    std::vector<std::vector<double>> vectors;
    std::vector<ChunkLabel> labels;
    for (int i = 0; i < 8; ++i) {
        vectors.push_back({uniform(gen, -1.0, 1.0), uniform(gen, -1.0, 1.0)});
        labels.push_back(i % 2 ? ChunkLabel::Translated : ChunkLabel::Original);
    }
    auto report = cluster_experiment(vectors, labels, 6, 100);
    auto rerun = cluster_experiment(vectors, labels, 6, 100);
    CHECK(report.accuracies == rerun.accuracies);
    CHECK(report.mean_accuracy == rerun.mean_accuracy);
    CHECK(report.sd == rerun.sd);

    for (std::size_t r = 0; r < 6; ++r) {
        auto single = cluster_experiment(vectors, labels, 1, 100 + r);
        CHECK(single.accuracies[0] == report.accuracies[r]);
    }

    CHECK_THROWS_WITH_AS(cluster_experiment(vectors, labels, 0, 0), "need at least one run",
                         ValidationError);
    labels.pop_back();
    CHECK_THROWS_WITH_AS(cluster_experiment(vectors, labels, 2, 0),
                         "vector and label lists differ in length", ValidationError);
}
