#include "translationese/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "translationese/errors.hpp"

namespace translationese {

const std::set<std::string>& known_languages() {
    static const std::set<std::string> langs = {"en", "fr", "de", "it", "es"};
    return langs;
}

bool is_known_language(const std::string& code) {
    return known_languages().count(code) > 0;
}

TranslationDirection TranslationDirection::parse(const std::string& text) {
    auto pos = text.find("->");
    if (pos == std::string::npos) {
        throw ValidationError("bad direction '" + text + "', expected e.g. 'fr->en'");
    }
    TranslationDirection d{text.substr(0, pos), text.substr(pos + 2)};
    d.validate();
    return d;
}

void TranslationDirection::validate() const {
    if (source_lang == target_lang) {
        throw ValidationError("direction source and target must differ: " + str());
    }
    for (const auto& lang : {source_lang, target_lang}) {
        if (!is_known_language(lang)) {
            throw ValidationError("unknown language code '" + lang + "'");
        }
    }
}

char label_char(ChunkLabel label) {
    return label == ChunkLabel::Original ? 'O' : 'T';
}

ChunkLabel label_from_char(char c) {
    if (c == 'O') return ChunkLabel::Original;
    if (c == 'T') return ChunkLabel::Translated;
    throw ValidationError(std::string("unknown chunk label '") + c + "'");
}

Sentence tokenize(const std::string& text) {
    Sentence out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) out.push_back(Token{text.substr(start, i - start), ""});
    }
    return out;
}

std::string sentence_text(const Sentence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += s[i].surface;
    }
    return out;
}

std::size_t CorpusStats::total_sentences() const {
    std::size_t total = 0;
    for (const auto& [dir, n] : sentences_by_direction) total += n;
    return total;
}

CorpusStats corpus_stats(const AlignedCorpus& corpus) {
    if (corpus.pairs.empty()) {
        throw ValidationError("corpus_stats: corpus '" + corpus.name + "' is empty");
    }
    CorpusStats stats;
    std::map<std::string, std::unordered_set<std::string>> types;
    for (const auto& pair : corpus.pairs) {
        stats.sentences_by_direction[pair.direction] += 1;
        const struct { const Sentence* s; const std::string* lang; } sides[2] = {
            {&pair.src, &pair.direction.source_lang},
            {&pair.tgt, &pair.direction.target_lang},
        };
        for (const auto& side : sides) {
            auto& token_count = stats.tokens_by_lang[*side.lang];
            auto& type_set = types[*side.lang];
            for (const auto& token : *side.s) {
                ++token_count;
                type_set.insert(token.surface);
            }
        }
    }
    for (const auto& [lang, set] : types) stats.types_by_lang[lang] = set.size();
    return stats;
}

ChunkLabel side_label(const TranslationDirection& direction, const std::string& lang) {
    if (direction.source_lang == lang) return ChunkLabel::Original;
    if (direction.target_lang == lang) return ChunkLabel::Translated;
    throw ValidationError("language '" + lang + "' is neither side of " + direction.str());
}

std::vector<std::pair<Sentence, ChunkLabel>> labeled_sentences_for_language(
    const AlignedCorpus& corpus, const std::string& lang) {
    std::vector<std::pair<Sentence, ChunkLabel>> out;
    out.reserve(corpus.pairs.size());
    for (const auto& pair : corpus.pairs) {
        if (pair.direction.source_lang == lang) {
            out.emplace_back(pair.src, ChunkLabel::Original);
        } else if (pair.direction.target_lang == lang) {
            out.emplace_back(pair.tgt, ChunkLabel::Translated);
        } else {
            throw ValidationError("corpus '" + corpus.name + "' has a pair with direction " +
                                  pair.direction.str() + "; no '" + lang + "' side");
        }
    }
    return out;
}

void attach_tags(std::vector<std::pair<Sentence, ChunkLabel>>& sentences,
                 const std::vector<Sentence>& tagged) {
    if (sentences.size() != tagged.size()) {
        throw ValidationError("tagged text has " + std::to_string(tagged.size()) +
                              " sentences, corpus side has " + std::to_string(sentences.size()));
    }
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        auto& plain = sentences[i].first;
        const auto& tags = tagged[i];
        if (plain.size() != tags.size()) {
            throw ValidationError("sentence " + std::to_string(i + 1) + ": token count mismatch (" +
                                  std::to_string(plain.size()) + " vs " +
                                  std::to_string(tags.size()) + ")");
        }
        for (std::size_t t = 0; t < plain.size(); ++t) {
            if (plain[t].surface != tags[t].surface) {
                throw ValidationError("sentence " + std::to_string(i + 1) + ", token " +
                                      std::to_string(t + 1) + ": surface mismatch ('" +
                                      plain[t].surface + "' vs '" + tags[t].surface + "')");
            }
            plain[t].tag = tags[t].tag;
        }
    }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find('\t', start);
        if (pos == std::string::npos) {
            cols.push_back(line.substr(start));
            return cols;
        }
        cols.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

void check_no_tabs(const Sentence& s, const char* which) {
    for (const auto& token : s) {
        if (token.surface.find('\t') != std::string::npos ||
            token.surface.find('\n') != std::string::npos) {
            throw ValidationError(std::string("tab or newline inside a ") + which + " token");
        }
    }
}

}  // namespace

AlignedCorpus read_aligned_tsv(std::istream& in, const std::string& name) {
    AlignedCorpus corpus;
    corpus.name = name;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cols = split_tabs(line);
        if (cols.size() != 3) {
            throw ParseError("expected 3 tab-separated columns, got " +
                                 std::to_string(cols.size()),
                             lineno);
        }
        BitextPair pair;
        pair.src = tokenize(cols[0]);
        pair.tgt = tokenize(cols[1]);
        try {
            pair.direction = TranslationDirection::parse(cols[2]);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), lineno);
        }
        if (pair.src.empty() || pair.tgt.empty()) {
            throw ParseError("empty sentence side", lineno);
        }
        corpus.pairs.push_back(std::move(pair));
    }
    return corpus;
}

AlignedCorpus read_aligned_tsv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open corpus file: " + path);
    auto slash = path.find_last_of('/');
    std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = stem.find_last_of('.');
    if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
    auto corpus = read_aligned_tsv(in, stem);
    corpus.provenance["source_path"] = path;
    return corpus;
}

void write_aligned_tsv(std::ostream& out, const AlignedCorpus& corpus) {
    for (const auto& pair : corpus.pairs) {
        check_no_tabs(pair.src, "source");
        check_no_tabs(pair.tgt, "target");
        out << sentence_text(pair.src) << '\t' << sentence_text(pair.tgt) << '\t'
            << pair.direction.str() << '\n';
    }
}

void write_aligned_tsv_file(const std::string& path, const AlignedCorpus& corpus) {
    std::ofstream out(path);
    if (!out) throw ResourceError("cannot write corpus file: " + path);
    write_aligned_tsv(out, corpus);
}

std::vector<Sentence> read_tagged(std::istream& in) {
    std::vector<Sentence> out;
    Sentence current;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
            continue;
        }
        auto cols = split_tabs(line);
        if (cols.size() != 2 || cols[0].empty()) {
            throw ParseError("expected `token<TAB>TAG`", lineno);
        }
        current.push_back(Token{cols[0], cols[1]});
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

std::vector<Sentence> read_tagged_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open tagged file: " + path);
    return read_tagged(in);
}

void write_tagged(std::ostream& out, const std::vector<Sentence>& sentences) {
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (i) out << '\n';
        for (const auto& token : sentences[i]) {
            out << token.surface << '\t' << token.tag << '\n';
        }
    }
}

void write_stats_tsv(std::ostream& out, const std::string& corpus_name, const CorpusStats& stats) {
    out << "corpus\tmetric\tkey\tvalue\n";
    for (const auto& [dir, n] : stats.sentences_by_direction) {
        out << corpus_name << "\tsentences\t" << dir.str() << '\t' << n << '\n';
    }
    out << corpus_name << "\tsentences\ttotal\t" << stats.total_sentences() << '\n';
    for (const auto& [lang, n] : stats.tokens_by_lang) {
        out << corpus_name << "\ttokens\t" << lang << '\t' << n << '\n';
    }
    for (const auto& [lang, n] : stats.types_by_lang) {
        out << corpus_name << "\ttypes\t" << lang << '\t' << n << '\n';
    }
}

}  // namespace translationese
