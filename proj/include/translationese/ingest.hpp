#ifndef TRANSLATIONESE_INGEST_HPP
#define TRANSLATIONESE_INGEST_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "translationese/corpus.hpp"

namespace translationese {

struct SubtitleFrame {
    int index = 0;
    std::int64_t start_ms = 0;
    std::int64_t end_ms = 0;
    std::string text;

    bool operator==(const SubtitleFrame&) const = default;
};

// Frames are ordered by strictly increasing index and non-decreasing start
// time. Overlapping display intervals are allowed.
struct SubtitleDocument {
    std::vector<SubtitleFrame> frames;
    std::string lang;

    bool operator==(const SubtitleDocument&) const = default;
};

// Options controlling sentence-boundary detection at the end of a frame.
// A frame ends a sentence when, after trailing whitespace and closing
// quotes/parens are skipped, its text ends with one of `terminators` and
// the final word is not in `abbreviation_exceptions` (lowercase, ships
// empty).
struct SentenceMergeOptions {
    std::vector<std::string> terminators = {".", "!", "?", "…"};
    std::vector<std::string> closers = {"\"", "'", "”", "’", ")", "]", "»"};
    std::set<std::string> abbreviation_exceptions;
};

// Parses SubRip text. Each well-formed block (index line, time line
// `HH:MM:SS,mmm --> HH:MM:SS,mmm`, one or more text lines, blank-line
// terminator) becomes one frame; multi-line text is joined with single
// spaces. Hours may have 2+ digits; the millisecond separator may be `,`
// or `.`.
SubtitleDocument parse_srt(const std::string& raw, const std::string& lang);
std::string serialize_srt(const SubtitleDocument& doc);

// Concatenates consecutive frames until a sentence terminator is reached,
// so that every output frame (except possibly the last) ends on a sentence
// boundary. Output text is space-joined; start/end times span the merged
// run.
SubtitleDocument merge_frames_to_sentences(const SubtitleDocument& doc,
                                           const SentenceMergeOptions& options = {});

bool ends_sentence(const std::string& text, const SentenceMergeOptions& options = {});

// Splits a book at lines fully matching any of the given patterns
// (ECMAScript regular expressions). The preamble before the first title is
// discarded and title lines are excluded from chapter bodies. With no
// match, throws ValidationError unless `whole_book_fallback` is set, in
// which case the whole book is one chapter.
std::vector<std::string> segment_chapters(const std::string& book,
                                          const std::vector<std::string>& title_patterns,
                                          bool whole_book_fallback = false);

const std::vector<std::string>& default_chapter_patterns();

// Splits chapter text on runs of two or more newlines. Single newlines
// inside a paragraph become spaces; empty paragraphs are dropped.
std::vector<std::string> split_paragraphs(const std::string& chapter);

enum class HansardLineType { Speech, Date, SpeakerName, OtherMetadata };

struct HansardRecord {
    HansardLineType line_type = HansardLineType::Speech;
    std::string src_text;
    std::string tgt_text;

    bool operator==(const HansardRecord&) const = default;
};

// Provider label -> line type. Unknown labels are a validation error.
using HansardLabelMap = std::map<std::string, HansardLineType>;
const HansardLabelMap& default_hansard_labels();

// Reads `line_type<TAB>src<TAB>tgt` records.
std::vector<HansardRecord> parse_hansard_tsv(std::istream& in,
                                             const HansardLabelMap& labels = default_hansard_labels());
std::vector<HansardRecord> parse_hansard_file(const std::string& path,
                                              const HansardLabelMap& labels = default_hansard_labels());

// Keeps speech records only, in order, as sentence pairs with the given
// direction.
std::vector<BitextPair> filter_hansard(const std::vector<HansardRecord>& records,
                                       const TranslationDirection& direction);

}  // namespace translationese

#endif
