#include "translationese/featurize.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "translationese/errors.hpp"

namespace translationese {

namespace {

std::string ascii_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

std::string family_name(FeatureFamily family) {
    switch (family) {
        case FeatureFamily::FW: return "fw";
        case FeatureFamily::PosTrigram: return "pos-trigram";
        case FeatureFamily::PositionalToken: return "positional-token";
        case FeatureFamily::ContextualFW: return "contextual-fw";
    }
    return "";
}

FeatureFamily family_from_name(const std::string& name) {
    for (FeatureFamily family : {FeatureFamily::FW, FeatureFamily::PosTrigram,
                                 FeatureFamily::PositionalToken, FeatureFamily::ContextualFW}) {
        if (family_name(family) == name) return family;
    }
    throw ValidationError("unknown feature family: " + name);
}

bool family_needs_fw_list(FeatureFamily family) {
    return family == FeatureFamily::FW || family == FeatureFamily::ContextualFW;
}

bool family_needs_tags(FeatureFamily family) {
    return family == FeatureFamily::PosTrigram || family == FeatureFamily::ContextualFW;
}

std::vector<Chunk> chunk_stream(const std::vector<Sentence>& sentences, ChunkLabel label,
                                std::size_t target) {
    if (target == 0) throw ValidationError("chunk target must be positive");
    std::vector<Chunk> chunks;
    Chunk current;
    current.label = label;
    for (const auto& sentence : sentences) {
        if (sentence.empty()) continue;
        current.sentences.push_back(sentence);
        current.token_count += sentence.size();
        if (current.token_count >= target) {
            chunks.push_back(std::move(current));
            current = Chunk{};
            current.label = label;
        }
    }
    // trailing partial chunk survives at >= 75% of target
    if (current.token_count * 4 >= target * 3 && current.token_count > 0) {
        chunks.push_back(std::move(current));
    }
    return chunks;
}

std::vector<Chunk> chunk_corpus(const std::vector<std::pair<Sentence, ChunkLabel>>& sentences,
                                std::size_t target) {
    std::vector<Sentence> originals;
    std::vector<Sentence> translations;
    for (const auto& [sentence, label] : sentences) {
        (label == ChunkLabel::Original ? originals : translations).push_back(sentence);
    }
    auto chunks = chunk_stream(originals, ChunkLabel::Original, target);
    auto t_chunks = chunk_stream(translations, ChunkLabel::Translated, target);
    chunks.insert(chunks.end(), std::make_move_iterator(t_chunks.begin()),
                  std::make_move_iterator(t_chunks.end()));
    return chunks;
}

namespace {

FeatureCounts count_fw(const Chunk& chunk, const std::set<std::string>& fw_list) {
    if (fw_list.empty()) throw ValidationError("function-word list is empty");
    FeatureCounts counts;
    for (const auto& sentence : chunk.sentences) {
        for (const auto& token : sentence) {
            std::string lower = ascii_lower(token.surface);
            if (fw_list.count(lower)) ++counts[lower];
        }
    }
    return counts;
}

const std::string& require_tag(const Token& token, std::size_t sentence_idx, std::size_t pos) {
    if (token.tag.empty()) {
        throw ValidationError("untagged token '" + token.surface + "' (sentence " +
                              std::to_string(sentence_idx + 1) + ", token " +
                              std::to_string(pos + 1) + ")");
    }
    return token.tag;
}

}  // namespace

FeatureVector extract_fw(const Chunk& chunk, const std::set<std::string>& fw_list) {
    if (chunk.token_count == 0) throw ValidationError("chunk has no tokens");
    FeatureVector vec;
    vec.chunk_label = chunk.label;
    for (const auto& [word, count] : count_fw(chunk, fw_list)) {
        vec.values[word] = static_cast<double>(count) / chunk.token_count;
    }
    return vec;
}

FeatureCounts extract_pos_trigrams(const Chunk& chunk) {
    FeatureCounts counts;
    for (std::size_t s = 0; s < chunk.sentences.size(); ++s) {
        const auto& sentence = chunk.sentences[s];
        if (sentence.size() < 3) continue;
        for (std::size_t i = 0; i + 3 <= sentence.size(); ++i) {
            ++counts[require_tag(sentence[i], s, i) + "_" +
                     require_tag(sentence[i + 1], s, i + 1) + "_" +
                     require_tag(sentence[i + 2], s, i + 2)];
        }
    }
    return counts;
}

FeatureCounts extract_positional_tokens(const Chunk& chunk) {
    FeatureCounts counts;
    for (const auto& sentence : chunk.sentences) {
        if (sentence.size() < 5) continue;
        ++counts["first:" + ascii_lower(sentence.front().surface)];
        ++counts["second:" + ascii_lower(sentence[1].surface)];
        ++counts["third:" + ascii_lower(sentence[2].surface)];
        ++counts["penultimate:" + ascii_lower(sentence[sentence.size() - 2].surface)];
        ++counts["last:" + ascii_lower(sentence.back().surface)];
    }
    return counts;
}

FeatureCounts extract_contextual_fw(const Chunk& chunk, const std::set<std::string>& fw_list) {
    if (fw_list.empty()) throw ValidationError("function-word list is empty");
    FeatureCounts counts;
    for (std::size_t s = 0; s < chunk.sentences.size(); ++s) {
        const auto& sentence = chunk.sentences[s];
        if (sentence.size() < 3) continue;
        for (std::size_t i = 0; i + 3 <= sentence.size(); ++i) {
            int fw_elements = 0;
            std::string rendered[3];
            for (std::size_t k = 0; k < 3; ++k) {
                std::string lower = ascii_lower(sentence[i + k].surface);
                if (fw_list.count(lower)) {
                    rendered[k] = std::move(lower);
                    ++fw_elements;
                } else {
                    rendered[k] = require_tag(sentence[i + k], s, i + k);
                }
            }
            if (fw_elements >= 2) {
                ++counts[rendered[0] + "_" + rendered[1] + "_" + rendered[2]];
            }
        }
    }
    return counts;
}

FeatureCounts family_counts(const Chunk& chunk, FeatureFamily family,
                            const std::set<std::string>& fw_list) {
    switch (family) {
        case FeatureFamily::FW: return count_fw(chunk, fw_list);
        case FeatureFamily::PosTrigram: return extract_pos_trigrams(chunk);
        case FeatureFamily::PositionalToken: return extract_positional_tokens(chunk);
        case FeatureFamily::ContextualFW: return extract_contextual_fw(chunk, fw_list);
    }
    throw ValidationError("unknown feature family");
}

std::vector<std::string> rank_keys(const FeatureCounts& counts, std::size_t k) {
    if (k == 0) throw ValidationError("vocabulary size must be positive");
    std::vector<std::pair<std::string, std::size_t>> entries(counts.begin(), counts.end());
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (entries.size() > k) entries.resize(k);
    std::vector<std::string> keys;
    keys.reserve(entries.size());
    for (auto& [key, count] : entries) keys.push_back(std::move(key));
    return keys;
}

FeatureSpec build_vocabulary(const std::vector<Chunk>& chunks, FeatureFamily family,
                             const std::set<std::string>& fw_list, std::size_t k) {
    FeatureSpec spec;
    spec.family = family;
    if (family_needs_fw_list(family)) {
        if (fw_list.empty()) throw ValidationError("function-word list is empty");
        spec.fw_list = fw_list;
    }
    if (family == FeatureFamily::FW) {
        spec.vocabulary.assign(fw_list.begin(), fw_list.end());
        return spec;
    }
    FeatureCounts totals;
    for (const auto& chunk : chunks) {
        for (const auto& [key, count] : family_counts(chunk, family, fw_list)) {
            totals[key] += count;
        }
    }
    spec.vocabulary = rank_keys(totals, k);
    return spec;
}

std::vector<FeatureVector> vectorize(const std::vector<Chunk>& chunks, const FeatureSpec& spec) {
    if (family_needs_fw_list(spec.family) && spec.fw_list.empty()) {
        throw ValidationError("feature spec for family " + family_name(spec.family) +
                              " lacks its function-word list");
    }
    std::set<std::string> vocabulary(spec.vocabulary.begin(), spec.vocabulary.end());
    if (vocabulary.size() != spec.vocabulary.size()) {
        throw ValidationError("feature spec vocabulary has duplicate keys");
    }
    std::vector<FeatureVector> out;
    out.reserve(chunks.size());
    for (const auto& chunk : chunks) {
        if (chunk.token_count == 0) throw ValidationError("chunk has no tokens");
        FeatureVector vec;
        vec.chunk_label = chunk.label;
        for (const auto& [key, count] : family_counts(chunk, spec.family, spec.fw_list)) {
            if (vocabulary.count(key)) {
                vec.values[key] = static_cast<double>(count) / chunk.token_count;
            }
        }
        out.push_back(std::move(vec));
    }
    return out;
}

std::set<std::string> load_fw_list(std::istream& in) {
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string word = trim(line);
        if (word.empty()) continue;
        words.insert(ascii_lower(word));
    }
    if (words.empty()) throw ValidationError("function-word list is empty");
    return words;
}

std::set<std::string> load_fw_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open function-word list: " + path);
    return load_fw_list(in);
}

void write_feature_matrix(std::ostream& out, const std::vector<std::string>& vocabulary,
                          const std::vector<FeatureVector>& vectors) {
    std::ostringstream fmt;
    fmt << std::setprecision(17);
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
        if (i) out << '\t';
        out << vocabulary[i];
    }
    out << '\n';
    for (const auto& vec : vectors) {
        out << label_char(vec.chunk_label);
        for (const auto& key : vocabulary) {
            auto it = vec.values.find(key);
            fmt.str("");
            fmt << (it == vec.values.end() ? 0.0 : it->second);
            out << '\t' << fmt.str();
        }
        out << '\n';
    }
}

std::pair<std::vector<std::string>, std::vector<FeatureVector>> read_feature_matrix(
    std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty feature matrix", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> vocabulary;
    {
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '\t') {
                vocabulary.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
    }
    std::vector<FeatureVector> vectors;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '\t') {
                cells.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (cells.size() != vocabulary.size() + 1) {
            throw ParseError("expected " + std::to_string(vocabulary.size() + 1) + " columns, got " +
                             std::to_string(cells.size()), lineno);
        }
        if (cells[0].size() != 1) throw ParseError("bad label '" + cells[0] + "'", lineno);
        FeatureVector vec;
        try {
            vec.chunk_label = label_from_char(cells[0][0]);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), lineno);
        }
        for (std::size_t i = 0; i < vocabulary.size(); ++i) {
            double value = 0.0;
            try {
                value = std::stod(cells[i + 1]);
            } catch (const std::exception&) {
                throw ParseError("bad value '" + cells[i + 1] + "'", lineno);
            }
            if (value != 0.0) vec.values[vocabulary[i]] = value;
        }
        vectors.push_back(std::move(vec));
    }
    return {vocabulary, vectors};
}

}  // namespace translationese
