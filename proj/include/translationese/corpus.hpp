#ifndef TRANSLATIONESE_CORPUS_HPP
#define TRANSLATIONESE_CORPUS_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace translationese {

// A single pre-tokenized token. `tag` is empty when no POS annotation has
// been attached. The toolkit never re-tokenizes: tokens come from
// whitespace-delimited input.
struct Token {
    std::string surface;
    std::string tag;

    bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;
using Paragraph = std::vector<Sentence>;

// Language codes accepted in translation directions. Lowercase ISO-639-1.
const std::set<std::string>& known_languages();
bool is_known_language(const std::string& code);

// Direction of translation: source_lang is the language the text was
// originally produced in, target_lang the language it was translated into.
struct TranslationDirection {
    std::string source_lang;
    std::string target_lang;

    // Parses "fr->en". Rejects unknown languages and identical sides.
    static TranslationDirection parse(const std::string& text);
    std::string str() const { return source_lang + "->" + target_lang; }
    TranslationDirection reversed() const { return {target_lang, source_lang}; }
    void validate() const;

    bool operator==(const TranslationDirection&) const = default;
    bool operator<(const TranslationDirection& o) const {
        return std::pair(source_lang, target_lang) < std::pair(o.source_lang, o.target_lang);
    }
};

// One aligned sentence pair. `src` holds the sentence in
// direction.source_lang (the original), `tgt` its translation.
struct BitextPair {
    Sentence src;
    Sentence tgt;
    TranslationDirection direction;

    bool operator==(const BitextPair&) const = default;
};

struct AlignedCorpus {
    std::string name;
    std::vector<BitextPair> pairs;
    std::map<std::string, std::string> provenance;

    bool operator==(const AlignedCorpus&) const = default;
};

// Classification label of a text unit: original writing vs. translation.
enum class ChunkLabel { Original, Translated };

char label_char(ChunkLabel label);
ChunkLabel label_from_char(char c);

// A ~target-sized block of same-label text. Sentence boundaries are kept:
// feature windows never cross them.
struct Chunk {
    std::vector<Sentence> sentences;
    ChunkLabel label = ChunkLabel::Original;
    std::size_t token_count = 0;

    bool operator==(const Chunk&) const = default;
};

struct CorpusStats {
    std::map<TranslationDirection, std::size_t> sentences_by_direction;
    std::map<std::string, std::size_t> tokens_by_lang;
    std::map<std::string, std::size_t> types_by_lang;

    std::size_t total_sentences() const;

    bool operator==(const CorpusStats&) const = default;
};

// Splits pre-tokenized text on whitespace runs. Never empty tokens.
Sentence tokenize(const std::string& text);
std::string sentence_text(const Sentence& s);

// Sentence/token/type counts over a corpus. Sentences are tallied per
// direction; tokens and types per language side. Types are case-sensitive
// distinct surface forms. Throws ValidationError on an empty corpus.
CorpusStats corpus_stats(const AlignedCorpus& corpus);

// O iff `lang` is the original language of the pair.
ChunkLabel side_label(const TranslationDirection& direction, const std::string& lang);

// The `lang` side of every pair, labeled O/T by side_label. Pairs are
// required to carry `lang` on exactly one side.
std::vector<std::pair<Sentence, ChunkLabel>> labeled_sentences_for_language(
    const AlignedCorpus& corpus, const std::string& lang);

// Copies POS tags from `tagged` onto `sentences`, position by position.
// Surfaces must match exactly; throws ValidationError otherwise.
void attach_tags(std::vector<std::pair<Sentence, ChunkLabel>>& sentences,
                 const std::vector<Sentence>& tagged);

// -- Aligned corpus file: one pair per line, `src<TAB>tgt<TAB>direction`.
//    Internal tabs in sentence text are impossible by construction and
//    rejected on read.
AlignedCorpus read_aligned_tsv(std::istream& in, const std::string& name);
AlignedCorpus read_aligned_tsv_file(const std::string& path);
void write_aligned_tsv(std::ostream& out, const AlignedCorpus& corpus);
void write_aligned_tsv_file(const std::string& path, const AlignedCorpus& corpus);

// -- Tagged text file: one `token<TAB>TAG` per line, blank line between
//    sentences.
std::vector<Sentence> read_tagged(std::istream& in);
std::vector<Sentence> read_tagged_file(const std::string& path);
void write_tagged(std::ostream& out, const std::vector<Sentence>& sentences);

void write_stats_tsv(std::ostream& out, const std::string& corpus_name, const CorpusStats& stats);

}  // namespace translationese

#endif
