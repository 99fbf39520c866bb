#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "support/generators.hpp"
#include "translationese/errors.hpp"
#include "translationese/featurize.hpp"
#include "translationese/rng.hpp"

using namespace translationese;

namespace {

Sentence words(const std::vector<std::string>& surfaces, const std::string& tag = "X") {
    Sentence s;
    for (const auto& w : surfaces) s.push_back({w, tag});
    return s;
}

Sentence repeated(const std::string& surface, std::size_t n, const std::string& tag = "X") {
    return Sentence(n, Token{surface, tag});
}

Chunk chunk_of(std::vector<Sentence> sentences, ChunkLabel label = ChunkLabel::Original) {
    Chunk c;
    c.label = label;
    c.sentences = std::move(sentences);
    for (const auto& s : c.sentences) c.token_count += s.size();
    return c;
}

std::string lower_copy(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// Re-chunks with an index walk instead of the production accumulate loop.
std::vector<std::vector<std::size_t>> oracle_chunk_indices(const std::vector<Sentence>& sentences,
                                                           std::size_t target) {
    std::vector<std::size_t> nonempty;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (!sentences[i].empty()) nonempty.push_back(i);
    }
    std::vector<std::vector<std::size_t>> groups;
    std::size_t at = 0;
    while (at < nonempty.size()) {
        std::vector<std::size_t> group;
        std::size_t tokens = 0;
        while (at < nonempty.size() && tokens < target) {
            group.push_back(nonempty[at]);
            tokens += sentences[nonempty[at]].size();
            ++at;
        }
        if (tokens >= target || tokens * 4 >= target * 3) groups.push_back(group);
    }
    return groups;
}

std::mt19937_64 seeded(std::uint64_t seed) { return std::mt19937_64(seed); }

Sentence random_tagged_sentence(std::mt19937_64& gen, std::size_t max_words,
                                const std::vector<std::string>& pool,
                                const std::vector<std::string>& tags) {
    Sentence s;
    std::size_t n = 1 + bounded_uint(gen, max_words);
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back({pool[bounded_uint(gen, pool.size())], tags[bounded_uint(gen, tags.size())]});
    }
    return s;
}

}  // namespace

TEST_CASE("greedy chunking emits whole-sentence chunks at the target") {
    std::vector<Sentence> sentences(10, repeated("w", 600));
    auto chunks = chunk_stream(sentences, ChunkLabel::Original, 2000);
    REQUIRE(chunks.size() == 2);
    for (const auto& c : chunks) {
        CHECK(c.sentences.size() == 4);
        CHECK(c.token_count == 2400);
        CHECK(c.label == ChunkLabel::Original);
    }
}

TEST_CASE("a stream below the target yields nothing") {
    std::vector<Sentence> sentences = {repeated("w", 100)};
    CHECK(chunk_stream(sentences, ChunkLabel::Translated, 2000).empty());
}

TEST_CASE("a trailing partial chunk survives at three quarters of the target") {
    std::vector<Sentence> sentences = {repeated("a", 1000), repeated("b", 1000),
                                       repeated("c", 1600)};
    auto chunks = chunk_stream(sentences, ChunkLabel::Original, 2000);
    REQUIRE(chunks.size() == 2);
    CHECK(chunks[0].token_count == 2000);
    CHECK(chunks[1].token_count == 1600);
    CHECK(chunks[1].sentences.size() == 1);

    // exactly 3/4 is kept, one token less is not
    std::vector<Sentence> at_edge = {repeated("a", 2000), repeated("b", 1500)};
    CHECK(chunk_stream(at_edge, ChunkLabel::Original, 2000).size() == 2);
    std::vector<Sentence> below = {repeated("a", 2000), repeated("b", 1499)};
    CHECK(chunk_stream(below, ChunkLabel::Original, 2000).size() == 1);
}

TEST_CASE("empty sentences are skipped and a zero target is rejected") {
    std::vector<Sentence> sentences = {Sentence{}, repeated("a", 2000), Sentence{}};
    auto chunks = chunk_stream(sentences, ChunkLabel::Original, 2000);
    REQUIRE(chunks.size() == 1);
    CHECK(chunks[0].sentences.size() == 1);
    CHECK_THROWS_AS(chunk_stream(sentences, ChunkLabel::Original, 0), ValidationError);
}

TEST_CASE("chunking matches an index-walk oracle on random streams") {
    auto gen = seeded(101);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t target = 5 + bounded_uint(gen, 40);
        std::vector<Sentence> sentences;
        std::size_t n = bounded_uint(gen, 30);
        for (std::size_t i = 0; i < n; ++i) {
            if (bounded_uint(gen, 10) == 0) {
                sentences.push_back({});
            } else {
                sentences.push_back(repeated("w" + std::to_string(i), 1 + bounded_uint(gen, 12)));
            }
        }
        auto got = chunk_stream(sentences, ChunkLabel::Translated, target);
        auto want = oracle_chunk_indices(sentences, target);
        REQUIRE(got.size() == want.size());
        for (std::size_t c = 0; c < got.size(); ++c) {
            REQUIRE(got[c].sentences.size() == want[c].size());
            std::size_t tokens = 0;
            for (std::size_t s = 0; s < want[c].size(); ++s) {
                CHECK(got[c].sentences[s] == sentences[want[c][s]]);
                tokens += sentences[want[c][s]].size();
            }
            CHECK(got[c].token_count == tokens);
            // every non-trailing chunk straddles the target by less than its last sentence
            if (c + 1 < got.size() || tokens >= target) {
                CHECK(tokens >= target);
                CHECK(tokens - got[c].sentences.back().size() < target);
            }
        }
    }
}

TEST_CASE("chunk_corpus separates labels and keeps O chunks first") {
    std::vector<std::pair<Sentence, ChunkLabel>> stream;
    auto gen = seeded(102);
    for (int i = 0; i < 40; ++i) {
        ChunkLabel label = bounded_uint(gen, 2) ? ChunkLabel::Original : ChunkLabel::Translated;
        stream.emplace_back(repeated("s" + std::to_string(i), 3 + bounded_uint(gen, 5)), label);
    }
    auto chunks = chunk_corpus(stream, 10);

    std::vector<Sentence> o_stream, t_stream;
    for (const auto& [sentence, label] : stream) {
        (label == ChunkLabel::Original ? o_stream : t_stream).push_back(sentence);
    }
    auto o_chunks = chunk_stream(o_stream, ChunkLabel::Original, 10);
    auto t_chunks = chunk_stream(t_stream, ChunkLabel::Translated, 10);
    REQUIRE(chunks.size() == o_chunks.size() + t_chunks.size());
    for (std::size_t i = 0; i < o_chunks.size(); ++i) {
        CHECK(chunks[i].sentences == o_chunks[i].sentences);
        CHECK(chunks[i].label == ChunkLabel::Original);
    }
    for (std::size_t i = 0; i < t_chunks.size(); ++i) {
        CHECK(chunks[o_chunks.size() + i].sentences == t_chunks[i].sentences);
        CHECK(chunks[o_chunks.size() + i].label == ChunkLabel::Translated);
    }
}

TEST_CASE("function-word frequencies are counts over the chunk token total") {
    Sentence s = repeated("filler", 95);
    for (int i = 0; i < 5; ++i) s.push_back({i % 2 ? "The" : "the", "DT"});
    auto chunk = chunk_of({s});
    REQUIRE(chunk.token_count == 100);
    auto vec = extract_fw(chunk, {"the"});
    REQUIRE(vec.values.size() == 1);
    CHECK(vec.values.at("the") == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(vec.chunk_label == ChunkLabel::Original);
}

TEST_CASE("absent function words produce no entries") {
    auto chunk = chunk_of({words({"alpha", "beta", "gamma"})});
    CHECK(extract_fw(chunk, {"the", "of"}).values.empty());
    CHECK_THROWS_WITH_AS(extract_fw(chunk, {}), "function-word list is empty", ValidationError);
}

TEST_CASE("function-word extraction matches a direct recount") {
    auto gen = seeded(103);
    std::set<std::string> fw = {"the", "of", "and", "a"};
    std::vector<std::string> pool = {"the", "The", "THE", "of", "and", "a", "cat", "dog", "ran"};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Sentence> sentences;
        std::size_t n = 1 + bounded_uint(gen, 6);
        for (std::size_t i = 0; i < n; ++i) {
            sentences.push_back(random_tagged_sentence(gen, 9, pool, {"X"}));
        }
        auto chunk = chunk_of(std::move(sentences));
        auto vec = extract_fw(chunk, fw);
        std::map<std::string, std::size_t> counts;
        for (const auto& s : chunk.sentences) {
            for (const auto& t : s) {
                auto low = lower_copy(t.surface);
                if (fw.count(low)) ++counts[low];
            }
        }
        REQUIRE(vec.values.size() == counts.size());
        for (const auto& [key, count] : counts) {
            CHECK(vec.values.at(key) ==
                  doctest::Approx(double(count) / chunk.token_count).epsilon(1e-12));
            // normalized values recover integer counts exactly
            double scaled = vec.values.at(key) * chunk.token_count;
            CHECK(std::abs(scaled - std::round(scaled)) < 1e-9);
        }
    }
}

TEST_CASE("tag trigrams slide inside one sentence") {
    Sentence s = {{"it", "PP"}, {"has", "VHZ"}, {"gone", "VBN"}};
    auto counts = extract_pos_trigrams(chunk_of({s}));
    REQUIRE(counts.size() == 1);
    CHECK(counts.at("PP_VHZ_VBN") == 1);

    CHECK(extract_pos_trigrams(chunk_of({words({"a", "b"})})).empty());

    // four tagged tokens split 2+2 across sentences yield nothing
    auto split = chunk_of({words({"a", "b"}), words({"c", "d"})});
    CHECK(extract_pos_trigrams(split).empty());
}

TEST_CASE("an untagged token is reported with its position") {
    Sentence s = {{"it", "PP"}, {"x", ""}, {"gone", "VBN"}};
    CHECK_THROWS_WITH_AS(extract_pos_trigrams(chunk_of({s})),
                         "untagged token 'x' (sentence 1, token 2)", ValidationError);
}

TEST_CASE("tag trigram counts match window enumeration") {
    auto gen = seeded(104);
    std::vector<std::string> pool = {"w1", "w2", "w3"};
    std::vector<std::string> tags = {"NN", "VB", "DT", "JJ"};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Sentence> sentences;
        std::size_t n = 1 + bounded_uint(gen, 5);
        std::size_t windows = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sentences.push_back(random_tagged_sentence(gen, 7, pool, tags));
            std::size_t len = sentences.back().size();
            if (len >= 3) windows += len - 2;
        }
        auto chunk = chunk_of(std::move(sentences));
        auto counts = extract_pos_trigrams(chunk);
        std::map<std::string, std::size_t> want;
        for (const auto& s : chunk.sentences) {
            for (std::size_t i = 0; i + 2 < s.size(); ++i) {
                ++want[s[i].tag + "_" + s[i + 1].tag + "_" + s[i + 2].tag];
            }
        }
        CHECK(counts == want);
        std::size_t total = 0;
        for (const auto& [key, count] : counts) total += count;
        CHECK(total == windows);
    }
}

TEST_CASE("positional tokens name five slots of long sentences") {
    Sentence s = words({"The", "cat", "sat", "on", "the", "mat", "."});
    auto counts = extract_positional_tokens(chunk_of({s}));
    std::map<std::string, std::size_t> want = {{"first:the", 1},     {"second:cat", 1},
                                               {"third:sat", 1},     {"penultimate:mat", 1},
                                               {"last:.", 1}};
    CHECK(counts == want);

    CHECK(extract_positional_tokens(chunk_of({words({"a", "b", "c", "d"})})).empty());

    Sentence five = words({"a", "b", "c", "d", "e"});
    auto exact = extract_positional_tokens(chunk_of({five, five}));
    CHECK(exact.at("first:a") == 2);
    CHECK(exact.at("penultimate:d") == 2);
    CHECK(exact.at("last:e") == 2);
}

TEST_CASE("positional tokens match direct indexing") {
    auto gen = seeded(105);
    std::vector<std::string> pool = {"x", "y", "z", "Q"};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Sentence> sentences;
        std::size_t n = 1 + bounded_uint(gen, 6);
        for (std::size_t i = 0; i < n; ++i) {
            sentences.push_back(random_tagged_sentence(gen, 9, pool, {"X"}));
        }
        auto chunk = chunk_of(std::move(sentences));
        std::map<std::string, std::size_t> want;
        for (const auto& s : chunk.sentences) {
            if (s.size() < 5) continue;
            ++want["first:" + lower_copy(s[0].surface)];
            ++want["second:" + lower_copy(s[1].surface)];
            ++want["third:" + lower_copy(s[2].surface)];
            ++want["penultimate:" + lower_copy(s[s.size() - 2].surface)];
            ++want["last:" + lower_copy(s[s.size() - 1].surface)];
        }
        CHECK(extract_positional_tokens(chunk) == want);
    }
}

TEST_CASE("contextual trigrams keep windows with at least two function words") {
    std::set<std::string> fw = {"the", "of", "i", "have", "been"};

    Sentence mixed = {{"The", "DT"}, {"cat", "NN"}, {"of", "IN"}};
    auto counts = extract_contextual_fw(chunk_of({mixed}), fw);
    REQUIRE(counts.size() == 1);
    CHECK(counts.at("the_NN_of") == 1);

    Sentence none = {{"big", "JJ"}, {"red", "JJ"}, {"dog", "NN"}};
    CHECK(extract_contextual_fw(chunk_of({none}), fw).empty());

    // all-FW windows never consult tags
    Sentence all_fw = {{"I", ""}, {"have", ""}, {"been", ""}};
    auto pure = extract_contextual_fw(chunk_of({all_fw}), fw);
    REQUIRE(pure.size() == 1);
    CHECK(pure.at("i_have_been") == 1);

    // a non-FW element inside a window must carry a tag
    Sentence bad = {{"the", ""}, {"cat", ""}, {"of", ""}};
    CHECK_THROWS_WITH_AS(extract_contextual_fw(chunk_of({bad}), fw),
                         "untagged token 'cat' (sentence 1, token 2)", ValidationError);

    CHECK_THROWS_AS(extract_contextual_fw(chunk_of({mixed}), {}), ValidationError);
}

TEST_CASE("contextual trigram counts match window enumeration") {
    auto gen = seeded(106);
    std::set<std::string> fw = {"the", "of", "and"};
    std::vector<std::string> pool = {"the", "of", "and", "The", "cat", "dog"};
    std::vector<std::string> tags = {"NN", "VB"};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Sentence> sentences;
        std::size_t n = 1 + bounded_uint(gen, 5);
        for (std::size_t i = 0; i < n; ++i) {
            sentences.push_back(random_tagged_sentence(gen, 8, pool, tags));
        }
        auto chunk = chunk_of(std::move(sentences));
        std::map<std::string, std::size_t> want;
        for (const auto& s : chunk.sentences) {
            for (std::size_t i = 0; i + 2 < s.size(); ++i) {
                int fw_count = 0;
                std::string key;
                for (std::size_t k = 0; k < 3; ++k) {
                    auto low = lower_copy(s[i + k].surface);
                    if (fw.count(low)) {
                        key += low;
                        ++fw_count;
                    } else {
                        key += s[i + k].tag;
                    }
                    if (k < 2) key += "_";
                }
                if (fw_count >= 2) ++want[key];
            }
        }
        CHECK(extract_contextual_fw(chunk, fw) == want);
    }
}

TEST_CASE("family_counts dispatches and scales FW frequencies back to counts") {
    Sentence s = repeated("filler", 18);
    s.push_back({"the", "DT"});
    s.push_back({"the", "DT"});
    auto chunk = chunk_of({s});
    auto counts = family_counts(chunk, FeatureFamily::FW, {"the"});
    REQUIRE(counts.size() == 1);
    CHECK(counts.at("the") == 2);
    CHECK(family_counts(chunk, FeatureFamily::PosTrigram, {}) == extract_pos_trigrams(chunk));
    CHECK(family_counts(chunk, FeatureFamily::PositionalToken, {}) ==
          extract_positional_tokens(chunk));
    CHECK(family_counts(chunk, FeatureFamily::ContextualFW, {"the"}) ==
          extract_contextual_fw(chunk, {"the"}));
}

TEST_CASE("family names round-trip and declare their needs") {
    for (auto family : {FeatureFamily::FW, FeatureFamily::PosTrigram,
                        FeatureFamily::PositionalToken, FeatureFamily::ContextualFW}) {
        CHECK(family_from_name(family_name(family)) == family);
    }
    CHECK(family_name(FeatureFamily::FW) == "fw");
    CHECK(family_name(FeatureFamily::PosTrigram) == "pos-trigram");
    CHECK(family_needs_fw_list(FeatureFamily::FW));
    CHECK_FALSE(family_needs_fw_list(FeatureFamily::PosTrigram));
    CHECK_FALSE(family_needs_fw_list(FeatureFamily::PositionalToken));
    CHECK(family_needs_fw_list(FeatureFamily::ContextualFW));
    CHECK_FALSE(family_needs_tags(FeatureFamily::FW));
    CHECK(family_needs_tags(FeatureFamily::PosTrigram));
    CHECK_THROWS_AS(family_from_name("bigram"), ValidationError);
}

TEST_CASE("rank_keys orders by count then key") {
    FeatureCounts counts = {{"a", 5}, {"b", 5}};
    CHECK(rank_keys(counts, 1) == std::vector<std::string>{"a"});

    FeatureCounts uneven = {{"a", 1}, {"b", 3}};
    CHECK(rank_keys(uneven, 2) == std::vector<std::string>{"b", "a"});
    CHECK(rank_keys(uneven, 10) == std::vector<std::string>{"b", "a"});
    CHECK_THROWS_AS(rank_keys(uneven, 0), ValidationError);
}

TEST_CASE("rank_keys matches a sort oracle under heavy ties") {
    auto gen = seeded(107);
    for (int trial = 0; trial < 100; ++trial) {
        FeatureCounts counts;
        std::size_t n = bounded_uint(gen, 25);
        for (std::size_t i = 0; i < n; ++i) {
            counts["k" + std::to_string(bounded_uint(gen, 30))] = 1 + bounded_uint(gen, 4);
        }
        std::size_t k = 1 + bounded_uint(gen, 12);
        std::vector<std::pair<std::string, std::size_t>> entries(counts.begin(), counts.end());
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            return a.second != b.second ? a.second > b.second : a.first < b.first;
        });
        std::vector<std::string> want;
        for (std::size_t i = 0; i < entries.size() && i < k; ++i) want.push_back(entries[i].first);
        CHECK(rank_keys(counts, k) == want);
    }
}

TEST_CASE("the FW vocabulary is the sorted list itself") {
    auto chunk = chunk_of({words({"only", "content", "words"})});
    auto spec = build_vocabulary({chunk}, FeatureFamily::FW, {"of", "and", "the"}, 2);
    CHECK(spec.vocabulary == std::vector<std::string>{"and", "of", "the"});
    CHECK(spec.fw_list == std::set<std::string>{"of", "and", "the"});
    CHECK_THROWS_AS(build_vocabulary({chunk}, FeatureFamily::FW, {}, 2), ValidationError);
}

TEST_CASE("ranked vocabularies pool counts across chunks") {
    auto trig_one = chunk_of({words({"x", "x", "x"}, "A")});
    auto trig_two = chunk_of({words({"y", "y", "y"}, "B"), words({"y", "y", "y"}, "B")});
    // alone, chunk one would rank A_A_A first; pooling lets chunk two outvote it
    CHECK(build_vocabulary({trig_one}, FeatureFamily::PosTrigram, {}, 1).vocabulary ==
          std::vector<std::string>{"A_A_A"});
    CHECK(build_vocabulary({trig_one, trig_two}, FeatureFamily::PosTrigram, {}, 1).vocabulary ==
          std::vector<std::string>{"B_B_B"});
}

TEST_CASE("vocabulary building is chunk-order invariant") {
    auto gen = seeded(108);
    std::vector<std::string> pool = {"p", "q", "r", "s", "t"};
    std::vector<std::string> tags = {"N", "V", "D"};
    std::vector<Chunk> chunks;
    for (int i = 0; i < 12; ++i) {
        std::vector<Sentence> sentences;
        for (int j = 0; j < 3; ++j) sentences.push_back(random_tagged_sentence(gen, 8, pool, tags));
        chunks.push_back(chunk_of(std::move(sentences)));
    }
    auto base = build_vocabulary(chunks, FeatureFamily::PosTrigram, {}, 5);
    for (int trial = 0; trial < 20; ++trial) {
        auto shuffled = chunks;
        seeded_shuffle(shuffled, gen);
        CHECK(build_vocabulary(shuffled, FeatureFamily::PosTrigram, {}, 5) == base);
    }
}

TEST_CASE("vectorize divides restricted counts by chunk size") {
    Sentence s = repeated("pad", 1990);
    for (int i = 0; i < 10; ++i) s.push_back({"x", "X"});
    auto chunk = chunk_of({s}, ChunkLabel::Translated);
    REQUIRE(chunk.token_count == 2000);

    FeatureSpec spec;
    spec.family = FeatureFamily::PositionalToken;
    spec.vocabulary = {"first:pad", "last:x", "unseen:key"};
    auto vectors = vectorize({chunk}, spec);
    REQUIRE(vectors.size() == 1);
    CHECK(vectors[0].chunk_label == ChunkLabel::Translated);
    CHECK(vectors[0].values.at("first:pad") == doctest::Approx(1.0 / 2000).epsilon(1e-12));
    CHECK(vectors[0].values.at("last:x") == doctest::Approx(0.0005).epsilon(1e-12));
    // out-of-vocabulary keys and absent vocabulary keys are both dropped
    CHECK(vectors[0].values.count("unseen:key") == 0);
    CHECK(vectors[0].values.count("second:pad") == 0);
}

TEST_CASE("vectorize validates its spec and chunks") {
    auto chunk = chunk_of({words({"a", "b", "c"})});
    FeatureSpec no_fw;
    no_fw.family = FeatureFamily::ContextualFW;
    no_fw.vocabulary = {"k"};
    CHECK_THROWS_WITH_AS(vectorize({chunk}, no_fw),
                         "feature spec for family contextual-fw lacks its function-word list",
                         ValidationError);

    FeatureSpec dup;
    dup.family = FeatureFamily::PosTrigram;
    dup.vocabulary = {"A_A_A", "A_A_A"};
    CHECK_THROWS_WITH_AS(vectorize({chunk}, dup), "feature spec vocabulary has duplicate keys",
                         ValidationError);

    FeatureSpec ok;
    ok.family = FeatureFamily::PositionalToken;
    ok.vocabulary = {"first:a"};
    Chunk empty;
    empty.label = ChunkLabel::Original;
    CHECK_THROWS_WITH_AS(vectorize({empty}, ok), "chunk has no tokens", ValidationError);
}

TEST_CASE("function-word lists parse comments and case") {
    std::istringstream in("# leading comment\nThe\n  of  # trailing\n\nAND\n");
    auto fw = load_fw_list(in);
    CHECK(fw == std::set<std::string>{"the", "of", "and"});

    std::istringstream empty("# nothing here\n\n");
    CHECK_THROWS_WITH_AS(load_fw_list(empty), "function-word list is empty", ValidationError);
    CHECK_THROWS_AS(load_fw_list_file("/nonexistent/fw.txt"), ResourceError);
}

TEST_CASE("feature matrices serialize with zeros materialized") {
    std::vector<std::string> vocabulary = {"a", "b"};
    FeatureVector one;
    one.chunk_label = ChunkLabel::Original;
    one.values = {{"a", 0.25}};
    FeatureVector two;
    two.chunk_label = ChunkLabel::Translated;
    two.values = {{"a", 0.5}, {"b", 0.125}};
    std::ostringstream out;
    write_feature_matrix(out, vocabulary, {one, two});
    CHECK(out.str() == "a\tb\nO\t0.25\t0\nT\t0.5\t0.125\n");
}

TEST_CASE("feature matrices round-trip sparsely") {
    auto gen = seeded(109);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t width = 1 + bounded_uint(gen, 6);
        std::vector<std::string> vocabulary;
        for (std::size_t i = 0; i < width; ++i) vocabulary.push_back("f" + std::to_string(i));
        std::vector<FeatureVector> vectors;
        std::size_t rows = bounded_uint(gen, 8);
        for (std::size_t r = 0; r < rows; ++r) {
            FeatureVector vec;
            vec.chunk_label = bounded_uint(gen, 2) ? ChunkLabel::Original : ChunkLabel::Translated;
            for (const auto& key : vocabulary) {
                if (bounded_uint(gen, 3) == 0) {
                    vec.values[key] = (1.0 + bounded_uint(gen, 1000)) / 4096.0;
                }
            }
            vectors.push_back(std::move(vec));
        }
        std::ostringstream out;
        write_feature_matrix(out, vocabulary, vectors);
        std::istringstream in(out.str());
        auto [voc, read] = read_feature_matrix(in);
        CHECK(voc == vocabulary);
        CHECK(read == vectors);
    }
}

TEST_CASE("feature matrix parse errors carry line numbers") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_feature_matrix(empty), ParseError);

    std::istringstream short_row("a\tb\nO\t0.5\n");
    try {
        read_feature_matrix(short_row);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()) == "expected 3 columns, got 2 (line 2)");
    }

    std::istringstream bad_label("a\nQ\t0.5\n");
    CHECK_THROWS_AS(read_feature_matrix(bad_label), ParseError);

    std::istringstream bad_value("a\nO\tnope\n");
    try {
        read_feature_matrix(bad_value);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()) == "bad value 'nope' (line 2)");
    }
}
