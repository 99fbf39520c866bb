#ifndef TRANSLATIONESE_ALIGN_HPP
#define TRANSLATIONESE_ALIGN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "translationese/corpus.hpp"
#include "translationese/ingest.hpp"

namespace translationese {

enum class BeadKind { OneOne, OneZero, ZeroOne, TwoOne, OneTwo, TwoTwo };

constexpr std::array<BeadKind, 6> all_bead_kinds = {
    BeadKind::OneOne, BeadKind::OneZero, BeadKind::ZeroOne,
    BeadKind::TwoOne, BeadKind::OneTwo, BeadKind::TwoTwo,
};

// How many source/target sentences a bead of this kind consumes.
std::size_t bead_src_count(BeadKind kind);
std::size_t bead_tgt_count(BeadKind kind);
std::string bead_kind_name(BeadKind kind);  // "1-1", "2-1", ...

// One alignment unit: src_count sentences starting at src_begin matched to
// tgt_count sentences starting at tgt_begin. A sequence of beads tiles both
// sides without gaps or overlaps.
struct Bead {
    std::size_t src_begin = 0;
    std::size_t src_count = 0;
    std::size_t tgt_begin = 0;
    std::size_t tgt_count = 0;
    BeadKind kind = BeadKind::OneOne;

    bool operator==(const Bead&) const = default;
};

// Bead priors and length-model constants. The stock priors are the
// published ones; 2-1 and 1-2 each take half of the combined 0.089 mass.
// A kind with prior <= 0 is disabled. delta_ms drives the subtitle
// paragraph synchronization threshold.
struct AlignerConfig {
    std::array<double, 6> priors = {0.89, 0.0099, 0.0099, 0.0445, 0.0445, 0.011};

    double c = 1.0;    // expected target chars per source char
    double s2 = 6.8;   // variance of the per-character length difference
    std::int64_t delta_ms = 500;

    double prior(BeadKind kind) const { return priors[static_cast<std::size_t>(kind)]; }

    // Enabled priors must sum to 1 within 2%; c, s2, delta_ms positive.
    void validate() const;
};

std::size_t utf8_codepoints(const std::string& text);

// Codepoints of all surfaces plus one separating space per gap.
std::size_t sentence_length(const Sentence& sentence);

// -ln(prior) - ln(length-match probability) for a bead covering src_len
// and tgt_len characters. The probability is the two-sided normal tail of
// the discrepancy statistic, floored at 1e-12.
double bead_cost(BeadKind kind, std::size_t src_len, std::size_t tgt_len,
                 const AlignerConfig& cfg);

// Minimum-cost tiling of src against tgt under cfg. Deterministic: cost
// ties resolve toward the kind listed first in all_bead_kinds.
std::vector<Bead> gale_church_align(const std::vector<Sentence>& src,
                                    const std::vector<Sentence>& tgt,
                                    const AlignerConfig& cfg = {});

double alignment_cost(const std::vector<Bead>& beads, const std::vector<Sentence>& src,
                      const std::vector<Sentence>& tgt, const AlignerConfig& cfg = {});

// Runs the DP once per paragraph pair and concatenates the results with
// bead indices shifted to whole-document sentence positions. Requires
// equal paragraph counts.
std::vector<Bead> align_paragraph_wise(const std::vector<Paragraph>& src_doc,
                                       const std::vector<Paragraph>& tgt_doc,
                                       const AlignerConfig& cfg = {});

// One synchronized paragraph pair; an exhausted side leaves its text empty.
struct SubtitleParagraphPair {
    std::string left;
    std::string right;

    bool operator==(const SubtitleParagraphPair&) const = default;
};

// Synchronizes two sentence-merged subtitle documents by frame end time:
// starting from the current frame on each side, the side whose end time
// trails is extended until the end times agree within delta_ms or a side
// has no next frame, then the accumulated texts are emitted as one pair.
// Remaining frames of an unmatched side come out one per (half-empty)
// pair, in order.
std::vector<SubtitleParagraphPair> subtitle_paragraph_align(const SubtitleDocument& left,
                                                            const SubtitleDocument& right,
                                                            const AlignerConfig& cfg = {});

struct OneToOneReport {
    std::size_t total_beads = 0;
    std::size_t kept = 0;

    double discarded_fraction() const;
};

// Keeps 1-1 beads only, as sentence pairs in the given direction.
std::vector<BitextPair> filter_one_to_one(const std::vector<Bead>& beads,
                                          const std::vector<Sentence>& src,
                                          const std::vector<Sentence>& tgt,
                                          const TranslationDirection& direction,
                                          OneToOneReport* report = nullptr);

}  // namespace translationese

#endif
