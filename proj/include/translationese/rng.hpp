#ifndef TRANSLATIONESE_RNG_HPP
#define TRANSLATIONESE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace translationese {

// Unbiased draw from [0, n) via rejection. std::uniform_int_distribution is
// implementation-defined; results here must be bit-identical everywhere.
inline std::uint64_t bounded_uint(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t value;
    do {
        value = gen();
    } while (value >= limit);
    return value % n;
}

template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& gen) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(bounded_uint(gen, i));
        std::swap(items[i - 1], items[j]);
    }
}

// Uniform k-subset, returned in draw order.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> items, std::size_t k,
                                          std::mt19937_64& gen) {
    seeded_shuffle(items, gen);
    if (items.size() > k) items.resize(k);
    return items;
}

}  // namespace translationese

#endif
