#include "translationese/europarl.hpp"

#include <cctype>
#include <fstream>
#include <istream>

#include "translationese/errors.hpp"

namespace translationese {

std::string normalize_whitespace(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!out.empty()) pending_space = true;
        } else {
            if (pending_space) out += ' ';
            pending_space = false;
            out += c;
        }
    }
    return out;
}

MonolingualCorpus read_monolingual_tsv(std::istream& in, const std::string& lang) {
    if (!is_known_language(lang)) {
        throw ValidationError("unknown language code: " + lang);
    }
    MonolingualCorpus corpus;
    corpus.lang = lang;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto tab = line.rfind('\t');
        if (tab == std::string::npos) {
            throw ParseError("expected `utterance<TAB>original-language`", lineno);
        }
        std::string text = normalize_whitespace(line.substr(0, tab));
        std::string tag = line.substr(tab + 1);
        if (text.empty()) throw ParseError("empty utterance", lineno);
        if (!is_known_language(tag)) {
            throw ParseError("unknown original-language tag '" + tag + "'", lineno);
        }
        corpus.original_lang_by_text.emplace(std::move(text), std::move(tag));
    }
    return corpus;
}

MonolingualCorpus read_monolingual_file(const std::string& path, const std::string& lang) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open monolingual corpus: " + path);
    return read_monolingual_tsv(in, lang);
}

std::vector<AnnotatedPair> propagate_annotations(const std::vector<BitextPair>& pairs,
                                                 const std::vector<MonolingualCorpus>& references) {
    std::vector<AnnotatedPair> out;
    out.reserve(pairs.size());
    for (const auto& pair : pairs) {
        AnnotatedPair annotated;
        annotated.pair = pair;
        for (const auto& reference : references) {
            const Sentence* side = nullptr;
            if (reference.lang == pair.direction.source_lang) {
                side = &pair.src;
            } else if (reference.lang == pair.direction.target_lang) {
                side = &pair.tgt;
            } else {
                continue;
            }
            auto it = reference.original_lang_by_text.find(
                normalize_whitespace(sentence_text(*side)));
            if (it != reference.original_lang_by_text.end()) {
                annotated.annotations.push_back(it->second);
            }
        }
        out.push_back(std::move(annotated));
    }
    return out;
}

double ConsistencyReport::inconsistent_fraction() const {
    return input_pairs == 0 ? 0.0 : static_cast<double>(dropped_inconsistent) / input_pairs;
}

std::vector<BitextPair> filter_by_consistency(const std::vector<AnnotatedPair>& pairs,
                                              std::size_t required_annotations,
                                              ConsistencyReport* report) {
    if (required_annotations == 0) {
        throw ValidationError("required_annotations must be positive");
    }
    ConsistencyReport local;
    local.input_pairs = pairs.size();
    std::vector<BitextPair> out;
    for (const auto& annotated : pairs) {
        if (annotated.annotations.size() != required_annotations) {
            ++local.dropped_incomplete;
            continue;
        }
        const std::string& tag = annotated.annotations.front();
        bool unanimous = true;
        for (const auto& a : annotated.annotations) {
            if (a != tag) {
                unanimous = false;
                break;
            }
        }
        if (!unanimous) {
            ++local.dropped_inconsistent;
            continue;
        }
        BitextPair pair = annotated.pair;
        if (tag == pair.direction.source_lang) {
            // already oriented original-first
        } else if (tag == pair.direction.target_lang) {
            std::swap(pair.src, pair.tgt);
            pair.direction = pair.direction.reversed();
        } else {
            ++local.dropped_foreign;
            continue;
        }
        ++local.kept;
        out.push_back(std::move(pair));
    }
    if (report) *report = local;
    return out;
}

double CommentReport::removed_fraction() const {
    return input_pairs == 0 ? 0.0 : static_cast<double>(removed) / input_pairs;
}

namespace {

bool is_whole_line_comment(const Sentence& side) {
    std::string text = normalize_whitespace(sentence_text(side));
    return text.size() >= 2 && text.front() == '(' && text.back() == ')';
}

}  // namespace

std::vector<BitextPair> strip_comments(const std::vector<BitextPair>& pairs,
                                       CommentReport* report) {
    CommentReport local;
    local.input_pairs = pairs.size();
    std::vector<BitextPair> out;
    for (const auto& pair : pairs) {
        if (is_whole_line_comment(pair.src) || is_whole_line_comment(pair.tgt)) {
            ++local.removed;
            continue;
        }
        out.push_back(pair);
    }
    if (report) *report = local;
    return out;
}

}  // namespace translationese
