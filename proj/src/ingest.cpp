#include "translationese/ingest.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <regex>
#include <sstream>

#include "translationese/errors.hpp"

namespace translationese {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// `HH:MM:SS,mmm` with 2+ hour digits and `,` or `.` before milliseconds.
std::int64_t parse_timestamp(const std::string& text, std::size_t lineno) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ':') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 3) throw ParseError("bad timestamp '" + text + "'", lineno);
    auto sep = parts[2].find_first_of(",.");
    if (sep == std::string::npos) throw ParseError("missing millisecond part in '" + text + "'", lineno);
    std::string secs = parts[2].substr(0, sep);
    std::string millis = parts[2].substr(sep + 1);
    if (parts[0].size() < 2 || !all_digits(parts[0]) || parts[1].size() != 2 ||
        !all_digits(parts[1]) || secs.size() != 2 || !all_digits(secs) || millis.size() != 3 ||
        !all_digits(millis)) {
        throw ParseError("bad timestamp '" + text + "'", lineno);
    }
    std::int64_t h = std::stoll(parts[0]);
    std::int64_t m = std::stoll(parts[1]);
    std::int64_t s = std::stoll(secs);
    std::int64_t ms = std::stoll(millis);
    if (m >= 60 || s >= 60) throw ParseError("bad timestamp '" + text + "'", lineno);
    return ((h * 60 + m) * 60 + s) * 1000 + ms;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string ascii_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

SubtitleDocument parse_srt(const std::string& raw, const std::string& lang) {
    SubtitleDocument doc;
    doc.lang = lang;

    std::vector<std::string> lines;
    {
        std::string line;
        std::istringstream in(raw);
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
    }

    std::size_t i = 0;
    int last_index = 0;
    std::int64_t last_start = -1;
    while (i < lines.size()) {
        if (trim(lines[i]).empty()) {
            ++i;
            continue;
        }
        SubtitleFrame frame;
        std::string index_line = trim(lines[i]);
        if (!all_digits(index_line)) {
            throw ParseError("expected frame index, got '" + lines[i] + "'", i + 1);
        }
        frame.index = std::stoi(index_line);
        ++i;

        if (i >= lines.size()) throw ParseError("missing time line", i + 1);
        std::size_t time_lineno = i + 1;
        const std::string& time_line = lines[i];
        auto arrow = time_line.find("-->");
        if (arrow == std::string::npos) {
            throw ParseError("malformed time line '" + time_line + "'", time_lineno);
        }
        frame.start_ms = parse_timestamp(trim(time_line.substr(0, arrow)), time_lineno);
        frame.end_ms = parse_timestamp(trim(time_line.substr(arrow + 3)), time_lineno);
        if (frame.start_ms > frame.end_ms) {
            throw ParseError("frame end time precedes start time", time_lineno);
        }
        ++i;

        std::string text;
        std::size_t text_lines = 0;
        while (i < lines.size() && !trim(lines[i]).empty()) {
            if (text_lines) text += ' ';
            text += lines[i];
            ++text_lines;
            ++i;
        }
        if (text_lines == 0) {
            throw ParseError("frame " + std::to_string(frame.index) + " has no text", i + 1);
        }
        frame.text = text;

        if (!doc.frames.empty()) {
            if (frame.index <= last_index) {
                throw ValidationError("frame indices out of order: " + std::to_string(frame.index) +
                                      " after " + std::to_string(last_index));
            }
            if (frame.start_ms < last_start) {
                throw ValidationError("frame " + std::to_string(frame.index) +
                                      " starts before its predecessor");
            }
        }
        last_index = frame.index;
        last_start = frame.start_ms;
        doc.frames.push_back(std::move(frame));
    }
    return doc;
}

std::string serialize_srt(const SubtitleDocument& doc) {
    std::string out;
    char buf[64];
    for (const auto& frame : doc.frames) {
        auto fmt = [&buf](std::int64_t ms) {
            std::int64_t h = ms / 3600000;
            std::int64_t m = (ms / 60000) % 60;
            std::int64_t s = (ms / 1000) % 60;
            std::int64_t r = ms % 1000;
            std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld,%03lld",
                          static_cast<long long>(h), static_cast<long long>(m),
                          static_cast<long long>(s), static_cast<long long>(r));
            return std::string(buf);
        };
        out += std::to_string(frame.index);
        out += '\n';
        out += fmt(frame.start_ms) + " --> " + fmt(frame.end_ms);
        out += '\n';
        out += frame.text;
        out += "\n\n";
    }
    return out;
}

bool ends_sentence(const std::string& text, const SentenceMergeOptions& options) {
    std::string t = trim(text);
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (const auto& closer : options.closers) {
            if (ends_with(t, closer)) {
                t.resize(t.size() - closer.size());
                stripped = true;
            }
        }
    }
    for (const auto& term : options.terminators) {
        if (!ends_with(t, term)) continue;
        if (!options.abbreviation_exceptions.empty()) {
            auto space = t.find_last_of(" \t");
            std::string word = ascii_lower(space == std::string::npos ? t : t.substr(space + 1));
            if (options.abbreviation_exceptions.count(word)) return false;
        }
        return true;
    }
    return false;
}

SubtitleDocument merge_frames_to_sentences(const SubtitleDocument& doc,
                                           const SentenceMergeOptions& options) {
    SubtitleDocument out;
    out.lang = doc.lang;
    SubtitleFrame current;
    bool open = false;
    for (const auto& frame : doc.frames) {
        if (!open) {
            current = frame;
            open = true;
        } else {
            current.text += ' ';
            current.text += frame.text;
            current.end_ms = frame.end_ms;
        }
        if (ends_sentence(frame.text, options)) {
            current.index = static_cast<int>(out.frames.size()) + 1;
            out.frames.push_back(current);
            open = false;
        }
    }
    if (open) {
        current.index = static_cast<int>(out.frames.size()) + 1;
        out.frames.push_back(current);
    }
    return out;
}

const std::vector<std::string>& default_chapter_patterns() {
    static const std::vector<std::string> patterns = {
        R"(\s*(?:CHAPTER|Chapter)\s+\S.*)",
        R"(\s*[IVXLCDM]+\.?\s*)",
    };
    return patterns;
}

std::vector<std::string> segment_chapters(const std::string& book,
                                          const std::vector<std::string>& title_patterns,
                                          bool whole_book_fallback) {
    if (title_patterns.empty()) {
        throw ValidationError("segment_chapters: at least one title pattern is required");
    }
    std::vector<std::regex> patterns;
    patterns.reserve(title_patterns.size());
    for (const auto& p : title_patterns) {
        try {
            patterns.emplace_back(p);
        } catch (const std::regex_error& e) {
            throw ValidationError("bad chapter title pattern '" + p + "': " + e.what());
        }
    }

    std::vector<std::string> chapters;
    std::string current;
    bool in_chapter = false;
    std::istringstream in(book);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool is_title = false;
        for (const auto& re : patterns) {
            if (std::regex_match(line, re)) {
                is_title = true;
                break;
            }
        }
        if (is_title) {
            if (in_chapter) chapters.push_back(current);
            current.clear();
            in_chapter = true;
        } else if (in_chapter) {
            current += line;
            current += '\n';
        }
    }
    if (in_chapter) chapters.push_back(current);

    if (chapters.empty()) {
        if (whole_book_fallback) return {book};
        throw ValidationError("no chapters found");
    }
    return chapters;
}

std::vector<std::string> split_paragraphs(const std::string& chapter) {
    std::vector<std::string> out;
    std::string paragraph;
    auto flush = [&] {
        std::string t = trim(paragraph);
        if (!t.empty()) out.push_back(std::move(t));
        paragraph.clear();
    };

    std::size_t i = 0;
    while (i < chapter.size()) {
        char c = chapter[i];
        if (c == '\r') {
            ++i;
            continue;
        }
        if (c == '\n') {
            std::size_t run = 0;
            while (i < chapter.size() && (chapter[i] == '\n' || chapter[i] == '\r')) {
                if (chapter[i] == '\n') ++run;
                ++i;
            }
            if (run >= 2) {
                flush();
            } else if (!paragraph.empty()) {
                paragraph += ' ';
            }
            continue;
        }
        paragraph += c;
        ++i;
    }
    flush();
    return out;
}

const HansardLabelMap& default_hansard_labels() {
    static const HansardLabelMap labels = {
        {"speech", HansardLineType::Speech},
        {"date", HansardLineType::Date},
        {"speaker-name", HansardLineType::SpeakerName},
        {"other-metadata", HansardLineType::OtherMetadata},
    };
    return labels;
}

std::vector<HansardRecord> parse_hansard_tsv(std::istream& in, const HansardLabelMap& labels) {
    std::vector<HansardRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto first = line.find('\t');
        auto second = first == std::string::npos ? first : line.find('\t', first + 1);
        if (second == std::string::npos) {
            throw ParseError("expected `line_type<TAB>src<TAB>tgt`", lineno);
        }
        std::string label = line.substr(0, first);
        auto it = labels.find(label);
        if (it == labels.end()) {
            throw ValidationError("unknown line type label '" + label + "' (line " +
                                  std::to_string(lineno) + ")");
        }
        HansardRecord record;
        record.line_type = it->second;
        record.src_text = line.substr(first + 1, second - first - 1);
        record.tgt_text = line.substr(second + 1);
        out.push_back(std::move(record));
    }
    return out;
}

std::vector<HansardRecord> parse_hansard_file(const std::string& path, const HansardLabelMap& labels) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open hansard file: " + path);
    return parse_hansard_tsv(in, labels);
}

std::vector<BitextPair> filter_hansard(const std::vector<HansardRecord>& records,
                                       const TranslationDirection& direction) {
    direction.validate();
    std::vector<BitextPair> out;
    for (const auto& record : records) {
        if (record.line_type != HansardLineType::Speech) continue;
        BitextPair pair;
        pair.src = tokenize(record.src_text);
        pair.tgt = tokenize(record.tgt_text);
        pair.direction = direction;
        if (pair.src.empty() || pair.tgt.empty()) {
            throw ValidationError("speech record with an empty side");
        }
        out.push_back(std::move(pair));
    }
    return out;
}

}  // namespace translationese
