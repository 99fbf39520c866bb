// Seeded random-input builders shared by the unit and acceptance tests.
#ifndef TESTS_SUPPORT_GENERATORS_HPP
#define TESTS_SUPPORT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "translationese/corpus.hpp"
#include "translationese/ingest.hpp"
#include "translationese/rng.hpp"

namespace testgen {

// Word alphabet mixing 1-, 2-, 3-, and 4-byte UTF-8 sequences.
inline const std::vector<std::string>& letters() {
    static const std::vector<std::string> pieces = {
        "a", "b", "c", "d", "e", "s", "t", "\xc3\xa9" /* é */,
        "\xc3\xbc" /* ü */, "\xe6\x97\xa5" /* 日 */, "\xf0\x9f\x98\x80" /* 😀 */};
    return pieces;
}

inline std::string random_word(std::mt19937_64& gen, std::size_t max_letters = 8) {
    std::size_t n = 1 + translationese::bounded_uint(gen, max_letters);
    std::string word;
    for (std::size_t i = 0; i < n; ++i) {
        word += letters()[translationese::bounded_uint(gen, letters().size())];
    }
    return word;
}

inline translationese::Sentence random_sentence(std::mt19937_64& gen,
                                                std::size_t max_words = 6) {
    translationese::Sentence s;
    std::size_t n = 1 + translationese::bounded_uint(gen, max_words);
    for (std::size_t i = 0; i < n; ++i) s.push_back({random_word(gen), ""});
    return s;
}

inline std::vector<translationese::Sentence> random_sentences(std::mt19937_64& gen,
                                                              std::size_t count) {
    std::vector<translationese::Sentence> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_sentence(gen));
    return out;
}

// A sentence-merged subtitle timeline: non-decreasing start and end
// times, gaps biased small so the synchronization threshold actually
// bites. Texts are "<tag>1".."<tag>n" so conservation checks can track
// every frame.
inline translationese::SubtitleDocument random_timeline(std::mt19937_64& gen,
                                                        std::size_t max_frames,
                                                        const std::string& tag) {
    translationese::SubtitleDocument doc;
    doc.lang = "en";
    std::size_t n = translationese::bounded_uint(gen, max_frames + 1);
    std::int64_t start = 0, end = 0;
    for (std::size_t i = 0; i < n; ++i) {
        translationese::SubtitleFrame frame;
        frame.index = static_cast<int>(i + 1);
        start += translationese::bounded_uint(gen, 400);
        std::int64_t gap = translationese::bounded_uint(gen, 2) == 0
                               ? static_cast<std::int64_t>(translationese::bounded_uint(gen, 600))
                               : static_cast<std::int64_t>(translationese::bounded_uint(gen, 4000));
        end = std::max(start, end + gap);
        frame.start_ms = start;
        frame.end_ms = end;
        frame.text = tag + std::to_string(i + 1);
        doc.frames.push_back(frame);
    }
    return doc;
}

}  // namespace testgen

#endif
