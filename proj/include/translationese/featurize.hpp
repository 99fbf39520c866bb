#ifndef TRANSLATIONESE_FEATURIZE_HPP
#define TRANSLATIONESE_FEATURIZE_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "translationese/corpus.hpp"

namespace translationese {

enum class FeatureFamily { FW, PosTrigram, PositionalToken, ContextualFW };

std::string family_name(FeatureFamily family);          // "fw", "pos-trigram", ...
FeatureFamily family_from_name(const std::string& name);
bool family_needs_fw_list(FeatureFamily family);
bool family_needs_tags(FeatureFamily family);

// A feature space: the family, its ordered key vocabulary, and the
// function-word list when the family consults one. For the FW family the
// vocabulary is the whole (sorted) FW list; the other families rank keys
// by dataset frequency and keep the top k.
struct FeatureSpec {
    FeatureFamily family = FeatureFamily::FW;
    std::vector<std::string> vocabulary;
    std::set<std::string> fw_list;

    bool operator==(const FeatureSpec&) const = default;
};

// Sparse normalized feature values for one chunk: count / token_count,
// zero entries omitted.
struct FeatureVector {
    std::map<std::string, double> values;
    ChunkLabel chunk_label = ChunkLabel::Original;

    bool operator==(const FeatureVector&) const = default;
};

// Greedy chunker over one label's sentence stream: accumulate whole
// sentences until the running token count reaches `target`, emit, repeat.
// The trailing partial chunk is kept only at >= 3/4 of target.
std::vector<Chunk> chunk_stream(const std::vector<Sentence>& sentences, ChunkLabel label,
                                std::size_t target = 2000);

// Splits a labeled stream into its O and T substreams (input order kept)
// and chunks each; O chunks precede T chunks in the result.
std::vector<Chunk> chunk_corpus(const std::vector<std::pair<Sentence, ChunkLabel>>& sentences,
                                std::size_t target = 2000);

using FeatureCounts = std::map<std::string, std::size_t>;

// Case-insensitive function-word frequencies, already normalized by the
// chunk's token count. Keys are the lowercase FW forms.
FeatureVector extract_fw(const Chunk& chunk, const std::set<std::string>& fw_list);

// Tag trigrams from a window of 3 sliding inside each sentence, keyed
// TAG1_TAG2_TAG3. Every token must be tagged.
FeatureCounts extract_pos_trigrams(const Chunk& chunk);

// first:/second:/third:/penultimate:/last: + lowercase token, for
// sentences of at least 5 tokens.
FeatureCounts extract_positional_tokens(const Chunk& chunk);

// Token trigrams where each element is the lowercase word if it is a
// function word, else its POS tag; kept only when at least 2 of the 3
// elements are function words. Tags are consulted (and required) only for
// non-FW elements.
FeatureCounts extract_contextual_fw(const Chunk& chunk, const std::set<std::string>& fw_list);

// Raw counts for any family; the normalized extract_fw values times
// token_count for FW.
FeatureCounts family_counts(const Chunk& chunk, FeatureFamily family,
                            const std::set<std::string>& fw_list);

// Top-k keys by count, descending, ties broken by key order.
std::vector<std::string> rank_keys(const FeatureCounts& counts, std::size_t k);

// Builds the feature space for `family` over the full chunk list (both
// classes pooled).
FeatureSpec build_vocabulary(const std::vector<Chunk>& chunks, FeatureFamily family,
                             const std::set<std::string>& fw_list, std::size_t k = 1000);

// Per chunk: family counts restricted to spec.vocabulary, divided by the
// chunk's token count.
std::vector<FeatureVector> vectorize(const std::vector<Chunk>& chunks, const FeatureSpec& spec);

// One lowercase word per line; `#` starts a comment; blank lines ignored.
std::set<std::string> load_fw_list(std::istream& in);
std::set<std::string> load_fw_list_file(const std::string& path);

// Header line of tab-separated feature keys, then one `label<TAB>v1...`
// row per vector with zeros materialized.
void write_feature_matrix(std::ostream& out, const std::vector<std::string>& vocabulary,
                          const std::vector<FeatureVector>& vectors);
std::pair<std::vector<std::string>, std::vector<FeatureVector>> read_feature_matrix(
    std::istream& in);

}  // namespace translationese

#endif
