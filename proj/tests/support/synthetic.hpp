// Synthetic bitext generator: class T's token stream carries a planted
// multiplicative shift on half of the function-word probabilities, class O
// uses the base distribution. Strong enough to separate, noisy enough to
// exercise the full pipeline.
#ifndef TESTS_SUPPORT_SYNTHETIC_HPP
#define TESTS_SUPPORT_SYNTHETIC_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "translationese/corpus.hpp"
#include "translationese/rng.hpp"

namespace synthetic {

// 53-bit uniform in [0, 1); avoids the implementation-defined
// std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

struct Spec {
    std::size_t chunks_per_class = 100;
    std::size_t chunk_target = 2000;
    std::size_t sentence_tokens = 10;
    double shift = 1.5;  // multiplier on the planted FW in class T
    std::uint64_t seed = 42;
};

inline constexpr std::size_t kFwCount = 40;
inline constexpr std::size_t kPlantedFwCount = 20;
inline constexpr std::size_t kContentWords = 200;
inline constexpr double kBaseFwProb = 0.45 / kFwCount;

inline std::string fw_word(std::size_t i) {
    return "fw" + std::string(i < 10 ? "0" : "") + std::to_string(i);
}

inline const std::set<std::string>& fw_list() {
    static const std::set<std::string> words = [] {
        std::set<std::string> s;
        for (std::size_t i = 0; i < kFwCount; ++i) s.insert(fw_word(i));
        return s;
    }();
    return words;
}

inline std::string fw_file_text() {
    std::string text = "# synthetic function words\n";
    for (const auto& word : fw_list()) text += word + "\n";
    return text;
}

// One token from the class distribution: each FW i has probability
// kBaseFwProb (times `shift` for planted i in class T), the rest of the
// mass is spread uniformly over content words.
inline std::string draw_token(std::mt19937_64& gen, bool translated, double shift) {
    double u = uniform01(gen);
    for (std::size_t i = 0; i < kFwCount; ++i) {
        double p = kBaseFwProb * (translated && i < kPlantedFwCount ? shift : 1.0);
        if (u < p) return fw_word(i);
        u -= p;
    }
    std::uint64_t w = translationese::bounded_uint(gen, kContentWords);
    return "w" + std::to_string(w);
}

inline translationese::Sentence draw_sentence(std::mt19937_64& gen, bool translated,
                                              const Spec& spec) {
    translationese::Sentence sentence;
    for (std::size_t t = 0; t < spec.sentence_tokens; ++t) {
        sentence.push_back({draw_token(gen, translated, spec.shift), "X"});
    }
    return sentence;
}

// The "en" side carries the generated text; label comes from the
// direction (en->fr = original, fr->en = translated). The other side is a
// one-token stand-in. Sentence counts are sized so the greedy chunker
// yields exactly chunks_per_class chunks per label.
inline translationese::AlignedCorpus make_corpus(const Spec& spec) {
    std::mt19937_64 gen(spec.seed);
    translationese::AlignedCorpus corpus;
    corpus.name = "synthetic";
    const std::size_t per_chunk =
        (spec.chunk_target + spec.sentence_tokens - 1) / spec.sentence_tokens;
    const std::size_t per_class = per_chunk * spec.chunks_per_class;
    const translationese::Sentence dummy = {{"x", ""}};
    for (std::size_t i = 0; i < per_class; ++i) {
        corpus.pairs.push_back(
            {draw_sentence(gen, false, spec), dummy, {"en", "fr"}});
    }
    for (std::size_t i = 0; i < per_class; ++i) {
        corpus.pairs.push_back(
            {dummy, draw_sentence(gen, true, spec), {"fr", "en"}});
    }
    return corpus;
}

}  // namespace synthetic

#endif
