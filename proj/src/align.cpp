#include "translationese/align.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "translationese/errors.hpp"

namespace translationese {

std::size_t bead_src_count(BeadKind kind) {
    switch (kind) {
        case BeadKind::OneOne: return 1;
        case BeadKind::OneZero: return 1;
        case BeadKind::ZeroOne: return 0;
        case BeadKind::TwoOne: return 2;
        case BeadKind::OneTwo: return 1;
        case BeadKind::TwoTwo: return 2;
    }
    return 0;
}

std::size_t bead_tgt_count(BeadKind kind) {
    switch (kind) {
        case BeadKind::OneOne: return 1;
        case BeadKind::OneZero: return 0;
        case BeadKind::ZeroOne: return 1;
        case BeadKind::TwoOne: return 1;
        case BeadKind::OneTwo: return 2;
        case BeadKind::TwoTwo: return 2;
    }
    return 0;
}

std::string bead_kind_name(BeadKind kind) {
    return std::to_string(bead_src_count(kind)) + "-" + std::to_string(bead_tgt_count(kind));
}

void AlignerConfig::validate() const {
    double sum = 0.0;
    for (BeadKind kind : all_bead_kinds) {
        double p = prior(kind);
        if (p > 0) sum += p;
    }
    if (sum <= 0) throw ValidationError("all bead kinds disabled");
    if (std::abs(sum - 1.0) > 0.02) {
        throw ValidationError("enabled bead priors sum to " + std::to_string(sum) +
                              ", expected 1 within 2%");
    }
    if (!(c > 0)) throw ValidationError("length-model c must be positive");
    if (!(s2 > 0)) throw ValidationError("length-model s2 must be positive");
    if (delta_ms <= 0) throw ValidationError("delta_ms must be positive");
}

std::size_t utf8_codepoints(const std::string& text) {
    std::size_t n = 0;
    for (unsigned char c : text) {
        if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
}

std::size_t sentence_length(const Sentence& sentence) {
    std::size_t n = 0;
    for (const auto& token : sentence) n += utf8_codepoints(token.surface);
    if (sentence.size() > 1) n += sentence.size() - 1;
    return n;
}

double bead_cost(BeadKind kind, std::size_t src_len, std::size_t tgt_len,
                 const AlignerConfig& cfg) {
    double prior = cfg.prior(kind);
    if (prior <= 0) return std::numeric_limits<double>::infinity();

    double tail = 1.0;
    if (src_len != 0 || tgt_len != 0) {
        double l1 = static_cast<double>(src_len);
        double l2 = static_cast<double>(tgt_len);
        double mean = (l1 + l2 / cfg.c) / 2.0;
        double z = (cfg.c * l1 - l2) / std::sqrt(cfg.s2 * mean);
        tail = std::erfc(std::abs(z) / std::sqrt(2.0));
    }
    return -std::log(prior) - std::log(std::max(tail, 1e-12));
}

namespace {

std::vector<std::size_t> length_prefix(const std::vector<Sentence>& sentences) {
    std::vector<std::size_t> prefix(sentences.size() + 1, 0);
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        prefix[i + 1] = prefix[i] + sentence_length(sentences[i]);
    }
    return prefix;
}

}  // namespace

std::vector<Bead> gale_church_align(const std::vector<Sentence>& src,
                                    const std::vector<Sentence>& tgt,
                                    const AlignerConfig& cfg) {
    cfg.validate();
    const std::size_t m = src.size();
    const std::size_t n = tgt.size();
    const auto src_prefix = length_prefix(src);
    const auto tgt_prefix = length_prefix(tgt);

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cost((m + 1) * (n + 1), inf);
    std::vector<signed char> back((m + 1) * (n + 1), -1);
    auto at = [n](std::size_t i, std::size_t j) { return i * (n + 1) + j; };
    cost[at(0, 0)] = 0.0;

    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            if (i == 0 && j == 0) continue;
            double best = inf;
            signed char best_kind = -1;
            for (std::size_t k = 0; k < all_bead_kinds.size(); ++k) {
                BeadKind kind = all_bead_kinds[k];
                if (cfg.prior(kind) <= 0) continue;
                std::size_t di = bead_src_count(kind);
                std::size_t dj = bead_tgt_count(kind);
                if (di > i || dj > j) continue;
                double prev = cost[at(i - di, j - dj)];
                if (prev == inf) continue;
                double total = prev + bead_cost(kind, src_prefix[i] - src_prefix[i - di],
                                                tgt_prefix[j] - tgt_prefix[j - dj], cfg);
                if (total < best) {
                    best = total;
                    best_kind = static_cast<signed char>(k);
                }
            }
            cost[at(i, j)] = best;
            back[at(i, j)] = best_kind;
        }
    }

    if (cost[at(m, n)] == inf) {
        throw ValidationError("no alignment exists under the enabled bead kinds");
    }

    std::vector<Bead> beads;
    std::size_t i = m, j = n;
    while (i != 0 || j != 0) {
        BeadKind kind = all_bead_kinds[static_cast<std::size_t>(back[at(i, j)])];
        Bead bead;
        bead.kind = kind;
        bead.src_count = bead_src_count(kind);
        bead.tgt_count = bead_tgt_count(kind);
        i -= bead.src_count;
        j -= bead.tgt_count;
        bead.src_begin = i;
        bead.tgt_begin = j;
        beads.push_back(bead);
    }
    std::reverse(beads.begin(), beads.end());
    return beads;
}

double alignment_cost(const std::vector<Bead>& beads, const std::vector<Sentence>& src,
                      const std::vector<Sentence>& tgt, const AlignerConfig& cfg) {
    const auto src_prefix = length_prefix(src);
    const auto tgt_prefix = length_prefix(tgt);
    double total = 0.0;
    for (const auto& bead : beads) {
        total += bead_cost(bead.kind,
                           src_prefix[bead.src_begin + bead.src_count] - src_prefix[bead.src_begin],
                           tgt_prefix[bead.tgt_begin + bead.tgt_count] - tgt_prefix[bead.tgt_begin],
                           cfg);
    }
    return total;
}

std::vector<Bead> align_paragraph_wise(const std::vector<Paragraph>& src_doc,
                                       const std::vector<Paragraph>& tgt_doc,
                                       const AlignerConfig& cfg) {
    if (src_doc.size() != tgt_doc.size()) {
        throw ValidationError("paragraph counts differ (" + std::to_string(src_doc.size()) +
                              " vs " + std::to_string(tgt_doc.size()) +
                              "); run paragraph alignment first");
    }
    std::vector<Bead> out;
    std::size_t src_offset = 0;
    std::size_t tgt_offset = 0;
    for (std::size_t p = 0; p < src_doc.size(); ++p) {
        auto beads = gale_church_align(src_doc[p], tgt_doc[p], cfg);
        for (auto& bead : beads) {
            bead.src_begin += src_offset;
            bead.tgt_begin += tgt_offset;
            out.push_back(bead);
        }
        src_offset += src_doc[p].size();
        tgt_offset += tgt_doc[p].size();
    }
    return out;
}

std::vector<SubtitleParagraphPair> subtitle_paragraph_align(const SubtitleDocument& left,
                                                            const SubtitleDocument& right,
                                                            const AlignerConfig& cfg) {
    cfg.validate();
    const auto& L = left.frames;
    const auto& R = right.frames;
    std::vector<SubtitleParagraphPair> out;

    std::size_t i = 0, j = 0;
    while (true) {
        if (i >= L.size() && j >= R.size()) break;
        if (i >= L.size()) {
            for (; j < R.size(); ++j) out.push_back({"", R[j].text});
            break;
        }
        if (j >= R.size()) {
            for (; i < L.size(); ++i) out.push_back({L[i].text, ""});
            break;
        }
        std::string l_text = L[i].text;
        std::int64_t l_end = L[i].end_ms;
        std::string r_text = R[j].text;
        std::int64_t r_end = R[j].end_ms;
        while (std::llabs(l_end - r_end) > cfg.delta_ms && i + 1 < L.size() && j + 1 < R.size()) {
            if (l_end > r_end) {
                ++j;
                r_text += ' ';
                r_text += R[j].text;
                r_end = R[j].end_ms;
            } else {
                ++i;
                l_text += ' ';
                l_text += L[i].text;
                l_end = L[i].end_ms;
            }
        }
        out.push_back({std::move(l_text), std::move(r_text)});
        ++i;
        ++j;
    }
    return out;
}

double OneToOneReport::discarded_fraction() const {
    return total_beads == 0 ? 0.0 : 1.0 - static_cast<double>(kept) / total_beads;
}

std::vector<BitextPair> filter_one_to_one(const std::vector<Bead>& beads,
                                          const std::vector<Sentence>& src,
                                          const std::vector<Sentence>& tgt,
                                          const TranslationDirection& direction,
                                          OneToOneReport* report) {
    direction.validate();
    OneToOneReport local;
    local.total_beads = beads.size();
    std::vector<BitextPair> out;
    for (const auto& bead : beads) {
        if (bead.kind != BeadKind::OneOne) continue;
        if (bead.src_begin >= src.size() || bead.tgt_begin >= tgt.size()) {
            throw ValidationError("bead indexes past the end of its sentence list");
        }
        ++local.kept;
        out.push_back({src[bead.src_begin], tgt[bead.tgt_begin], direction});
    }
    if (report) *report = local;
    return out;
}

}  // namespace translationese
