// Command-line surface over the corpus construction and translation
// direction pipeline. One subcommand per pipeline stage; see README.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "translationese/align.hpp"
#include "translationese/cluster.hpp"
#include "translationese/corpus.hpp"
#include "translationese/errors.hpp"
#include "translationese/europarl.hpp"
#include "translationese/experiment.hpp"
#include "translationese/featurize.hpp"
#include "translationese/ingest.hpp"
#include "translationese/svm.hpp"
#include "translationese/version.hpp"

namespace t9e = translationese;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw t9e::ResourceError("cannot open input: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void diag(const std::string& key, const std::string& value) {
    std::cerr << key << '=' << value << '\n';
}

void diag(const std::string& key, std::size_t value) { diag(key, std::to_string(value)); }

void diag(const std::string& key, double value) {
    std::ostringstream out;
    out << value;
    diag(key, out.str());
}

// Writes `content` to `path` (stdout when empty or "-") and drops a
// provenance manifest next to file outputs.
void emit(const std::string& path, const std::string& content, const json& params,
          std::uint64_t seed) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw t9e::ResourceError("cannot write output: " + path);
    out << content;
    t9e::write_manifest_file(path + ".manifest.json", params.dump(2), seed);
}

// -- chunk files: `#chunk<TAB>label<TAB>token_count` header per chunk,
//    then `token<TAB>tag` lines with a blank line closing each sentence.

std::string render_chunks(const std::vector<t9e::Chunk>& chunks) {
    std::ostringstream out;
    for (const auto& chunk : chunks) {
        out << "#chunk\t" << t9e::label_char(chunk.label) << '\t' << chunk.token_count << '\n';
        for (const auto& sentence : chunk.sentences) {
            for (const auto& token : sentence) {
                out << token.surface << '\t' << token.tag << '\n';
            }
            out << '\n';
        }
    }
    return out.str();
}

std::vector<t9e::Chunk> read_chunks_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw t9e::ResourceError("cannot open chunks file: " + path);
    std::vector<t9e::Chunk> chunks;
    t9e::Sentence sentence;
    std::string line;
    std::size_t lineno = 0;
    std::size_t declared = 0;
    auto close_sentence = [&] {
        if (sentence.empty()) return;
        if (chunks.empty()) throw t9e::ParseError("token line before any #chunk header", lineno);
        chunks.back().sentences.push_back(std::move(sentence));
        chunks.back().token_count += chunks.back().sentences.back().size();
        sentence.clear();
    };
    auto check_count = [&] {
        if (!chunks.empty() && chunks.back().token_count != declared) {
            throw t9e::ParseError("chunk declares " + std::to_string(declared) +
                                      " tokens but carries " +
                                      std::to_string(chunks.back().token_count),
                                  lineno);
        }
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("#chunk\t", 0) == 0) {
            close_sentence();
            check_count();
            auto second = line.find('\t', 7);
            if (second == std::string::npos || second != 8) {
                throw t9e::ParseError("bad #chunk header", lineno);
            }
            t9e::Chunk chunk;
            chunk.label = t9e::label_from_char(line[7]);
            try {
                declared = std::stoull(line.substr(second + 1));
            } catch (const std::exception&) {
                throw t9e::ParseError("bad token count in #chunk header", lineno);
            }
            chunks.push_back(std::move(chunk));
            continue;
        }
        if (line.empty()) {
            close_sentence();
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw t9e::ParseError("expected `token<TAB>tag`", lineno);
        }
        sentence.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    close_sentence();
    check_count();
    if (chunks.empty()) throw t9e::ValidationError("chunks file is empty: " + path);
    return chunks;
}

// -- sentence files for the aligner: one tokenized sentence per line,
//    blank lines separate paragraphs.

std::vector<t9e::Paragraph> read_sentence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw t9e::ResourceError("cannot open sentence file: " + path);
    std::vector<t9e::Paragraph> paragraphs;
    t9e::Paragraph current;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        t9e::Sentence sentence = t9e::tokenize(line);
        if (sentence.empty()) {
            if (!current.empty()) paragraphs.push_back(std::move(current));
            current.clear();
            continue;
        }
        current.push_back(std::move(sentence));
    }
    if (!current.empty()) paragraphs.push_back(std::move(current));
    return paragraphs;
}

std::string render_aligned(const std::vector<t9e::BitextPair>& pairs, const std::string& name) {
    t9e::AlignedCorpus corpus;
    corpus.name = name;
    corpus.pairs = pairs;
    std::ostringstream out;
    t9e::write_aligned_tsv(out, corpus);
    return out.str();
}

struct ConfigFlags {
    std::string config_path;
    std::string corpus, lang, fw, tagged, family, sizes;
    std::size_t target = 0, k = 0, folds = 0, runs = 0;
    double c_value = 0.0, tol = 0.0;
    std::uint64_t seed = 0;
    bool has_sizes = false;

    void add_to(CLI::App* sub, bool with_sizes) {
        has_sizes = with_sizes;
        sub->add_option("--config", config_path, "JSON experiment config");
        sub->add_option("--corpus", corpus, "aligned corpus TSV");
        sub->add_option("--lang", lang, "language side to analyze");
        sub->add_option("--fw-list", fw, "function-word list file");
        sub->add_option("--tagged", tagged, "POS-tagged text for the analyzed side");
        sub->add_option("--family", family, "fw | pos-trigram | positional-token | contextual-fw");
        sub->add_option("--target", target, "chunk size in tokens");
        sub->add_option("--k", k, "vocabulary size for ranked families");
        sub->add_option("--C", c_value, "SVM soft-margin C");
        sub->add_option("--tol", tol, "SMO KKT tolerance");
        sub->add_option("--folds", folds, "cross-validation folds");
        sub->add_option("--runs", runs, "clustering restarts");
        sub->add_option("--seed", seed, "random seed");
        if (with_sizes) {
            sub->add_option("--sizes", sizes, "comma-separated sweep sizes (total chunks)");
        }
    }

    t9e::ExperimentConfig resolve(const CLI::App* sub) const {
        t9e::ExperimentConfig config;
        if (sub->count("--config")) config = t9e::load_config_file(config_path);
        if (sub->count("--corpus")) config.corpus_path = corpus;
        if (sub->count("--lang")) config.analysis_lang = lang;
        if (sub->count("--fw-list")) config.fw_path = fw;
        if (sub->count("--tagged")) config.tagged_path = tagged;
        if (sub->count("--family")) config.family = t9e::family_from_name(family);
        if (sub->count("--target")) config.chunk_target = target;
        if (sub->count("--k")) config.vocabulary_k = k;
        if (sub->count("--C")) config.C = c_value;
        if (sub->count("--tol")) config.tol = tol;
        if (sub->count("--folds")) config.folds = folds;
        if (sub->count("--runs")) config.cluster_runs = runs;
        if (sub->count("--seed")) config.seed = seed;
        if (has_sizes && sub->count("--sizes")) {
            config.sweep_sizes.clear();
            std::istringstream in(sizes);
            std::string item;
            while (std::getline(in, item, ',')) {
                if (item.empty()) continue;
                try {
                    config.sweep_sizes.push_back(std::stoull(item));
                } catch (const std::exception&) {
                    throw t9e::ValidationError("bad sweep size '" + item + "'");
                }
            }
        }
        config.validate();
        return config;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"corpus construction and translation-direction identification toolkit"};
    app.set_version_flag("--version", std::string(t9e::kVersion));
    app.require_subcommand(1);

    // ---- ingest
    auto* ingest = app.add_subcommand("ingest", "convert raw inputs to pipeline formats");
    ingest->require_subcommand(1);

    struct {
        std::string in, out, lang = "en";
        bool merge = false;
    } srt_args;
    auto* ingest_srt = ingest->add_subcommand("srt", "parse subtitles, optionally sentence-merge");
    ingest_srt->add_option("--in", srt_args.in)->required();
    ingest_srt->add_option("--lang", srt_args.lang);
    ingest_srt->add_flag("--merge", srt_args.merge, "concatenate frames to sentence boundaries");
    ingest_srt->add_option("-o,--out", srt_args.out);
    ingest_srt->callback([&] {
        t9e::SubtitleDocument doc = t9e::parse_srt(slurp(srt_args.in), srt_args.lang);
        diag("frames_in", doc.frames.size());
        if (srt_args.merge) doc = t9e::merge_frames_to_sentences(doc);
        diag("frames_out", doc.frames.size());
        json params = {{"command", "ingest srt"}, {"in", srt_args.in},
                       {"lang", srt_args.lang},  {"merge", srt_args.merge}};
        emit(srt_args.out, t9e::serialize_srt(doc), params, 0);
    });

    struct {
        std::string in, out;
        std::vector<std::string> patterns;
        bool fallback = false;
    } book_args;
    auto* ingest_book = ingest->add_subcommand("book", "split a book into chapter paragraphs");
    ingest_book->add_option("--in", book_args.in)->required();
    ingest_book->add_option("--pattern", book_args.patterns, "chapter title regex (repeatable)");
    ingest_book->add_flag("--whole-book-fallback", book_args.fallback,
                          "treat the whole book as one chapter when no title matches");
    ingest_book->add_option("-o,--out", book_args.out);
    ingest_book->callback([&] {
        const auto& patterns =
            book_args.patterns.empty() ? t9e::default_chapter_patterns() : book_args.patterns;
        auto chapters = t9e::segment_chapters(slurp(book_args.in), patterns, book_args.fallback);
        diag("chapters", chapters.size());
        std::ostringstream out;
        std::size_t paragraphs = 0;
        for (std::size_t i = 0; i < chapters.size(); ++i) {
            if (i) out << '\n';
            for (const auto& paragraph : t9e::split_paragraphs(chapters[i])) {
                out << paragraph << '\n';
                ++paragraphs;
            }
        }
        diag("paragraphs", paragraphs);
        json params = {{"command", "ingest book"},
                       {"in", book_args.in},
                       {"patterns", book_args.patterns},
                       {"whole_book_fallback", book_args.fallback}};
        emit(book_args.out, out.str(), params, 0);
    });

    struct {
        std::string in, out, direction;
    } hansard_args;
    auto* ingest_hansard = ingest->add_subcommand("hansard", "keep speech lines as bitext");
    ingest_hansard->add_option("--in", hansard_args.in)->required();
    ingest_hansard->add_option("--direction", hansard_args.direction, "e.g. en->fr")->required();
    ingest_hansard->add_option("-o,--out", hansard_args.out);
    ingest_hansard->callback([&] {
        auto records = t9e::parse_hansard_file(hansard_args.in);
        auto direction = t9e::TranslationDirection::parse(hansard_args.direction);
        auto pairs = t9e::filter_hansard(records, direction);
        diag("records_in", records.size());
        diag("speech_kept", pairs.size());
        if (!records.empty()) {
            diag("eliminated_fraction",
                 1.0 - static_cast<double>(pairs.size()) / records.size());
        }
        json params = {{"command", "ingest hansard"},
                       {"in", hansard_args.in},
                       {"direction", hansard_args.direction}};
        emit(hansard_args.out, render_aligned(pairs, "hansard"), params, 0);
    });

    // ---- align
    auto* align = app.add_subcommand("align", "sentence and subtitle alignment");
    align->require_subcommand(1);

    struct {
        std::string src, tgt, out, direction;
    } gale_args;
    auto* align_gale = align->add_subcommand(
        "gale", "length-based DP sentence alignment, paragraph by paragraph");
    align_gale->add_option("--src", gale_args.src, "source side, one sentence per line")
        ->required();
    align_gale->add_option("--tgt", gale_args.tgt)->required();
    align_gale->add_option("--direction", gale_args.direction)->required();
    align_gale->add_option("-o,--out", gale_args.out);
    align_gale->callback([&] {
        auto src_doc = read_sentence_file(gale_args.src);
        auto tgt_doc = read_sentence_file(gale_args.tgt);
        auto direction = t9e::TranslationDirection::parse(gale_args.direction);
        auto beads = t9e::align_paragraph_wise(src_doc, tgt_doc, {});
        std::vector<t9e::Sentence> src_flat, tgt_flat;
        for (const auto& p : src_doc) src_flat.insert(src_flat.end(), p.begin(), p.end());
        for (const auto& p : tgt_doc) tgt_flat.insert(tgt_flat.end(), p.begin(), p.end());
        t9e::OneToOneReport report;
        auto pairs = t9e::filter_one_to_one(beads, src_flat, tgt_flat, direction, &report);
        diag("beads", report.total_beads);
        diag("one_to_one", report.kept);
        diag("discarded_fraction", report.discarded_fraction());
        json params = {{"command", "align gale"},
                       {"src", gale_args.src},
                       {"tgt", gale_args.tgt},
                       {"direction", gale_args.direction}};
        emit(gale_args.out, render_aligned(pairs, "aligned"), params, 0);
    });

    struct {
        std::string left, right, out, direction;
        std::int64_t delta_ms = 500;
    } sub_args;
    auto* align_subtitles =
        align->add_subcommand("subtitles", "synchronize two subtitle files by frame end time");
    align_subtitles->add_option("--left", sub_args.left, "source-language .srt")->required();
    align_subtitles->add_option("--right", sub_args.right, "target-language .srt")->required();
    align_subtitles->add_option("--direction", sub_args.direction)->required();
    align_subtitles->add_option("--delta-ms", sub_args.delta_ms, "end-time tolerance");
    align_subtitles->add_option("-o,--out", sub_args.out);
    align_subtitles->callback([&] {
        auto direction = t9e::TranslationDirection::parse(sub_args.direction);
        t9e::AlignerConfig cfg;
        cfg.delta_ms = sub_args.delta_ms;
        auto left = t9e::merge_frames_to_sentences(t9e::parse_srt(slurp(sub_args.left), ""));
        auto right = t9e::merge_frames_to_sentences(t9e::parse_srt(slurp(sub_args.right), ""));
        auto paragraphs = t9e::subtitle_paragraph_align(left, right, cfg);
        std::vector<t9e::BitextPair> pairs;
        std::size_t unpaired_left = 0, unpaired_right = 0;
        for (const auto& pp : paragraphs) {
            if (pp.left.empty()) {
                ++unpaired_right;
            } else if (pp.right.empty()) {
                ++unpaired_left;
            } else {
                pairs.push_back({t9e::tokenize(pp.left), t9e::tokenize(pp.right), direction});
            }
        }
        diag("paragraph_pairs", pairs.size());
        diag("unpaired_left", unpaired_left);
        diag("unpaired_right", unpaired_right);
        json params = {{"command", "align subtitles"}, {"left", sub_args.left},
                       {"right", sub_args.right},      {"direction", sub_args.direction},
                       {"delta_ms", sub_args.delta_ms}};
        emit(sub_args.out, render_aligned(pairs, "subtitles"), params, 0);
    });

    // ---- europarl-filter
    struct {
        std::string bitext, out;
        std::vector<std::string> refs;
        std::size_t required = 0;
    } eur_args;
    auto* eur = app.add_subcommand(
        "europarl-filter", "keep pairs whose original language is unanimously attested");
    eur->add_option("--bitext", eur_args.bitext, "aligned TSV with provisional directions")
        ->required();
    eur->add_option("--ref", eur_args.refs, "lang=path monolingual reference (repeatable)")
        ->required();
    eur->add_option("--required", eur_args.required,
                    "annotations required to keep a pair (default: number of refs)");
    eur->add_option("-o,--out", eur_args.out);
    eur->callback([&] {
        t9e::AlignedCorpus corpus = t9e::read_aligned_tsv_file(eur_args.bitext);
        std::vector<t9e::MonolingualCorpus> references;
        for (const auto& spec : eur_args.refs) {
            auto eq = spec.find('=');
            if (eq == std::string::npos) {
                throw t9e::ValidationError("--ref expects lang=path, got '" + spec + "'");
            }
            references.push_back(
                t9e::read_monolingual_file(spec.substr(eq + 1), spec.substr(0, eq)));
        }
        std::size_t required = eur_args.required ? eur_args.required : references.size();
        auto annotated = t9e::propagate_annotations(corpus.pairs, references);
        t9e::ConsistencyReport consistency;
        auto consistent = t9e::filter_by_consistency(annotated, required, &consistency);
        t9e::CommentReport comments;
        auto kept = t9e::strip_comments(consistent, &comments);
        diag("input_pairs", consistency.input_pairs);
        diag("dropped_incomplete", consistency.dropped_incomplete);
        diag("dropped_inconsistent", consistency.dropped_inconsistent);
        diag("inconsistent_fraction", consistency.inconsistent_fraction());
        diag("dropped_foreign", consistency.dropped_foreign);
        diag("comment_pairs_removed", comments.removed);
        diag("comment_fraction", comments.removed_fraction());
        diag("kept", kept.size());
        json params = {{"command", "europarl-filter"},
                       {"bitext", eur_args.bitext},
                       {"refs", eur_args.refs},
                       {"required", required}};
        emit(eur_args.out, render_aligned(kept, corpus.name + "-filtered"), params, 0);
    });

    // ---- chunk
    struct {
        std::string corpus, lang, tagged, out;
        std::size_t target = 2000;
    } chunk_args;
    auto* chunk = app.add_subcommand("chunk", "cut one language side into ~target-token chunks");
    chunk->add_option("--corpus", chunk_args.corpus)->required();
    chunk->add_option("--lang", chunk_args.lang)->required();
    chunk->add_option("--tagged", chunk_args.tagged, "POS-tagged text for the analyzed side");
    chunk->add_option("--target", chunk_args.target);
    chunk->add_option("-o,--out", chunk_args.out);
    chunk->callback([&] {
        auto corpus = t9e::read_aligned_tsv_file(chunk_args.corpus);
        auto labeled = t9e::labeled_sentences_for_language(corpus, chunk_args.lang);
        if (!chunk_args.tagged.empty()) {
            t9e::attach_tags(labeled, t9e::read_tagged_file(chunk_args.tagged));
        }
        auto chunks = t9e::chunk_corpus(labeled, chunk_args.target);
        std::size_t o_count = 0;
        for (const auto& c : chunks) {
            if (c.label == t9e::ChunkLabel::Original) ++o_count;
        }
        diag("chunks", chunks.size());
        diag("o_chunks", o_count);
        diag("t_chunks", chunks.size() - o_count);
        json params = {{"command", "chunk"},
                       {"corpus", chunk_args.corpus},
                       {"lang", chunk_args.lang},
                       {"tagged", chunk_args.tagged},
                       {"target", chunk_args.target}};
        emit(chunk_args.out, render_chunks(chunks), params, 0);
    });

    // ---- features
    struct {
        std::string chunks, fw, family = "fw", out;
        std::size_t k = 1000;
    } feat_args;
    auto* features = app.add_subcommand("features", "extract a feature matrix from chunks");
    features->add_option("--chunks", feat_args.chunks, "file produced by `chunk`")->required();
    features->add_option("--family", feat_args.family,
                         "fw | pos-trigram | positional-token | contextual-fw");
    features->add_option("--fw-list", feat_args.fw);
    features->add_option("--k", feat_args.k, "vocabulary size for ranked families");
    features->add_option("-o,--out", feat_args.out);
    features->callback([&] {
        auto family = t9e::family_from_name(feat_args.family);
        std::set<std::string> fw_list;
        if (t9e::family_needs_fw_list(family)) {
            if (feat_args.fw.empty()) {
                throw t9e::ValidationError("family " + feat_args.family +
                                           " requires --fw-list");
            }
            fw_list = t9e::load_fw_list_file(feat_args.fw);
        }
        auto chunks = read_chunks_file(feat_args.chunks);
        auto spec = t9e::build_vocabulary(chunks, family, fw_list, feat_args.k);
        auto vectors = t9e::vectorize(chunks, spec);
        diag("chunks", chunks.size());
        diag("vocabulary", spec.vocabulary.size());
        std::ostringstream out;
        t9e::write_feature_matrix(out, spec.vocabulary, vectors);
        json params = {{"command", "features"},
                       {"chunks", feat_args.chunks},
                       {"family", feat_args.family},
                       {"fw_list", feat_args.fw},
                       {"k", feat_args.k}};
        emit(feat_args.out, out.str(), params, 0);
    });

    // ---- supervised / unsupervised / sensitivity
    ConfigFlags sup_flags;
    std::string sup_out;
    auto* supervised =
        app.add_subcommand("supervised", "ten-fold cross-validated SVM identification");
    sup_flags.add_to(supervised, false);
    supervised->add_option("-o,--out", sup_out);
    supervised->callback([&] {
        auto config = sup_flags.resolve(supervised);
        auto result = t9e::run_supervised(config);
        std::cerr << t9e::format_cv_summary(result.report);
        diag("chunks_per_class", result.chunks_per_class);
        diag("accuracy_percent", result.accuracy_percent);
        diag("row", t9e::supervised_row(config, result));
        std::ostringstream out;
        t9e::write_cv_report_tsv(out, result.report);
        out << "accuracy_percent\t-\t" << result.accuracy_percent << '\n';
        out << "accuracy_rounded\t-\t" << t9e::round_percent(result.accuracy_percent) << '\n';
        out << "corpus\t-\t" << result.corpus_name << '\n';
        out << "family\t-\t" << t9e::family_name(config.family) << '\n';
        out << "chunks_per_class\t-\t" << result.chunks_per_class << '\n';
        emit(sup_out, out.str(), json::parse(t9e::config_json(config)), config.seed);
    });

    ConfigFlags uns_flags;
    std::string uns_out;
    auto* unsupervised =
        app.add_subcommand("unsupervised", "2-way clustering with restart averaging");
    uns_flags.add_to(unsupervised, false);
    unsupervised->add_option("-o,--out", uns_out);
    unsupervised->callback([&] {
        auto config = uns_flags.resolve(unsupervised);
        auto result = t9e::run_unsupervised(config);
        diag("chunks_per_class", result.chunks_per_class);
        diag("accuracy_percent", result.accuracy_percent);
        diag("sd_points", result.sd_points);
        diag("row", t9e::unsupervised_row(config, result));
        std::ostringstream out;
        for (std::size_t i = 0; i < result.report.accuracies.size(); ++i) {
            out << "run_accuracy\t" << (i + 1) << '\t' << result.report.accuracies[i] << '\n';
        }
        out << "mean_accuracy\t-\t" << result.report.mean_accuracy << '\n';
        out << "sd\t-\t" << result.report.sd << '\n';
        out << "accuracy_percent\t-\t" << result.accuracy_percent << '\n';
        out << "accuracy_rounded\t-\t" << t9e::round_percent(result.accuracy_percent) << '\n';
        out << "sd_points\t-\t" << result.sd_points << '\n';
        out << "corpus\t-\t" << result.corpus_name << '\n';
        out << "family\t-\t" << t9e::family_name(config.family) << '\n';
        out << "chunks_per_class\t-\t" << result.chunks_per_class << '\n';
        emit(uns_out, out.str(), json::parse(t9e::config_json(config)), config.seed);
    });

    ConfigFlags sen_flags;
    std::string sen_out;
    auto* sensitivity =
        app.add_subcommand("sensitivity", "accuracy as a function of available chunks");
    sen_flags.add_to(sensitivity, true);
    sensitivity->add_option("-o,--out", sen_out);
    sensitivity->callback([&] {
        auto config = sen_flags.resolve(sensitivity);
        auto points = t9e::run_sensitivity(config);
        for (const auto& point : points) {
            if (point.skipped) {
                std::cerr << "warning: sweep size " << point.size
                          << " exceeds the available chunks, skipped\n";
            }
        }
        diag("points", points.size());
        std::ostringstream out;
        t9e::write_sensitivity_tsv(out, points);
        emit(sen_out, out.str(), json::parse(t9e::config_json(config)), config.seed);
    });

    // ---- stats
    struct {
        std::string corpus, out;
    } stats_args;
    auto* stats = app.add_subcommand("stats", "sentence/token/type counts of an aligned corpus");
    stats->add_option("--corpus", stats_args.corpus)->required();
    stats->add_option("-o,--out", stats_args.out);
    stats->callback([&] {
        auto corpus = t9e::read_aligned_tsv_file(stats_args.corpus);
        auto counts = t9e::corpus_stats(corpus);
        diag("pairs", corpus.pairs.size());
        std::ostringstream out;
        t9e::write_stats_tsv(out, corpus.name, counts);
        json params = {{"command", "stats"}, {"corpus", stats_args.corpus}};
        emit(stats_args.out, out.str(), params, 0);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const t9e::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
