#ifndef TRANSLATIONESE_EUROPARL_HPP
#define TRANSLATIONESE_EUROPARL_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "translationese/corpus.hpp"

namespace translationese {

// A monolingual reference corpus: utterance text in `lang`, each carrying
// the language the utterance was originally spoken in. Keys are stored
// whitespace-normalized; the first occurrence of a duplicate key wins.
struct MonolingualCorpus {
    std::string lang;
    std::unordered_map<std::string, std::string> original_lang_by_text;
};

// Reads `utterance<TAB>original-language` lines.
MonolingualCorpus read_monolingual_tsv(std::istream& in, const std::string& lang);
MonolingualCorpus read_monolingual_file(const std::string& path, const std::string& lang);

// A bilingual pair plus the original-language tags collected for it from
// the reference corpora. The pair's direction is provisional (it names the
// two sides) until filter_by_consistency settles it.
struct AnnotatedPair {
    BitextPair pair;
    std::vector<std::string> annotations;

    bool operator==(const AnnotatedPair&) const = default;
};

// Trims and collapses internal whitespace runs to single spaces.
std::string normalize_whitespace(const std::string& text);

// Looks each pair up in every reference corpus, matching the pair's side
// in that corpus's language by exact text after whitespace normalization.
// A corpus in a language the pair does not carry contributes nothing, as
// does a missing key.
std::vector<AnnotatedPair> propagate_annotations(const std::vector<BitextPair>& pairs,
                                                 const std::vector<MonolingualCorpus>& references);

struct ConsistencyReport {
    std::size_t input_pairs = 0;
    std::size_t kept = 0;
    std::size_t dropped_incomplete = 0;
    std::size_t dropped_inconsistent = 0;
    std::size_t dropped_foreign = 0;

    double inconsistent_fraction() const;
};

// Keeps only pairs attested by all `required_annotations` references with
// one unanimous tag. The tag fixes the direction: if it names the target
// side the pair is swapped so that src is the original. A unanimous tag
// naming neither side drops the pair (original in a third language).
std::vector<BitextPair> filter_by_consistency(const std::vector<AnnotatedPair>& pairs,
                                              std::size_t required_annotations = 5,
                                              ConsistencyReport* report = nullptr);

struct CommentReport {
    std::size_t input_pairs = 0;
    std::size_t removed = 0;

    double removed_fraction() const;
};

// Drops pairs where either side, once trimmed, is a whole-line
// parenthetical like "(Applause)". Internal parentheses are untouched.
std::vector<BitextPair> strip_comments(const std::vector<BitextPair>& pairs,
                                       CommentReport* report = nullptr);

}  // namespace translationese

#endif
