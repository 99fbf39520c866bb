// pybind11 surface over the core library. Streams become strings here;
// in-place C++ mutators return modified copies instead.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <utility>

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

namespace py = pybind11;
namespace t9e = translationese;

namespace {

template <typename F>
std::string to_string_via(F&& write) {
    std::ostringstream out;
    write(out);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "corpus construction and translation-direction identification toolkit";
    m.attr("__version__") = t9e::kVersion;

    py::register_exception<t9e::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<t9e::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<t9e::ResourceError>(m, "ResourceError", PyExc_OSError);

    // ---- corpus types
    py::class_<t9e::Token>(m, "Token")
        .def(py::init<>())
        .def(py::init([](std::string surface, std::string tag) {
                 return t9e::Token{std::move(surface), std::move(tag)};
             }),
             py::arg("surface"), py::arg("tag") = "")
        .def_readwrite("surface", &t9e::Token::surface)
        .def_readwrite("tag", &t9e::Token::tag)
        .def("__eq__", [](const t9e::Token& a, const t9e::Token& b) { return a == b; })
        .def("__hash__",
             [](const t9e::Token& t) { return py::hash(py::make_tuple(t.surface, t.tag)); })
        .def("__repr__", [](const t9e::Token& t) {
            return "Token(" + py::cast<std::string>(py::repr(py::cast(t.surface))) +
                   (t.tag.empty() ? std::string() : ", " + t.tag) + ")";
        });

    py::class_<t9e::TranslationDirection>(m, "TranslationDirection")
        .def(py::init([](const std::string& text) {
                 return t9e::TranslationDirection::parse(text);
             }),
             py::arg("text"))
        .def_static("parse", &t9e::TranslationDirection::parse)
        .def_readwrite("source_lang", &t9e::TranslationDirection::source_lang)
        .def_readwrite("target_lang", &t9e::TranslationDirection::target_lang)
        .def("reversed", &t9e::TranslationDirection::reversed)
        .def("validate", &t9e::TranslationDirection::validate)
        .def("__str__", &t9e::TranslationDirection::str)
        .def("__repr__",
             [](const t9e::TranslationDirection& d) {
                 return "TranslationDirection('" + d.str() + "')";
             })
        .def("__eq__", [](const t9e::TranslationDirection& a,
                          const t9e::TranslationDirection& b) { return a == b; })
        .def("__lt__", [](const t9e::TranslationDirection& a,
                          const t9e::TranslationDirection& b) { return a < b; })
        .def("__hash__",
             [](const t9e::TranslationDirection& d) { return py::hash(py::cast(d.str())); });

    py::class_<t9e::BitextPair>(m, "BitextPair")
        .def(py::init<>())
        .def(py::init([](t9e::Sentence src, t9e::Sentence tgt, t9e::TranslationDirection dir) {
                 return t9e::BitextPair{std::move(src), std::move(tgt), std::move(dir)};
             }),
             py::arg("src"), py::arg("tgt"), py::arg("direction"))
        .def_readwrite("src", &t9e::BitextPair::src)
        .def_readwrite("tgt", &t9e::BitextPair::tgt)
        .def_readwrite("direction", &t9e::BitextPair::direction)
        .def("__eq__",
             [](const t9e::BitextPair& a, const t9e::BitextPair& b) { return a == b; });

    py::class_<t9e::AlignedCorpus>(m, "AlignedCorpus")
        .def(py::init<>())
        .def_readwrite("name", &t9e::AlignedCorpus::name)
        .def_readwrite("pairs", &t9e::AlignedCorpus::pairs)
        .def_readwrite("provenance", &t9e::AlignedCorpus::provenance);

    py::enum_<t9e::ChunkLabel>(m, "ChunkLabel")
        .value("Original", t9e::ChunkLabel::Original)
        .value("Translated", t9e::ChunkLabel::Translated);

    py::class_<t9e::Chunk>(m, "Chunk")
        .def(py::init<>())
        .def_readwrite("sentences", &t9e::Chunk::sentences)
        .def_readwrite("label", &t9e::Chunk::label)
        .def_readwrite("token_count", &t9e::Chunk::token_count);

    py::class_<t9e::CorpusStats>(m, "CorpusStats")
        .def_readwrite("sentences_by_direction", &t9e::CorpusStats::sentences_by_direction)
        .def_readwrite("tokens_by_lang", &t9e::CorpusStats::tokens_by_lang)
        .def_readwrite("types_by_lang", &t9e::CorpusStats::types_by_lang)
        .def("total_sentences", &t9e::CorpusStats::total_sentences);

    m.def("known_languages",
          [] { return std::vector<std::string>(t9e::known_languages().begin(),
                                               t9e::known_languages().end()); });
    m.def("is_known_language", &t9e::is_known_language, py::arg("code"));
    m.def("tokenize", &t9e::tokenize, py::arg("text"));
    m.def("sentence_text", &t9e::sentence_text, py::arg("sentence"));
    m.def("corpus_stats", &t9e::corpus_stats, py::arg("corpus"));
    m.def("side_label", &t9e::side_label, py::arg("direction"), py::arg("lang"));
    m.def("label_char", &t9e::label_char, py::arg("label"));
    m.def("label_from_char", &t9e::label_from_char, py::arg("c"));
    m.def("labeled_sentences_for_language", &t9e::labeled_sentences_for_language,
          py::arg("corpus"), py::arg("lang"));
    m.def(
        "attach_tags",
        [](std::vector<std::pair<t9e::Sentence, t9e::ChunkLabel>> sentences,
           const std::vector<t9e::Sentence>& tagged) {
            t9e::attach_tags(sentences, tagged);
            return sentences;
        },
        py::arg("sentences"), py::arg("tagged"), "Returns the sentences with tags attached.");

    m.def(
        "read_aligned_tsv",
        [](const std::string& text, const std::string& name) {
            std::istringstream in(text);
            return t9e::read_aligned_tsv(in, name);
        },
        py::arg("text"), py::arg("name"));
    m.def("read_aligned_tsv_file", &t9e::read_aligned_tsv_file, py::arg("path"));
    m.def("write_aligned_tsv", [](const t9e::AlignedCorpus& corpus) {
        return to_string_via([&](std::ostream& out) { t9e::write_aligned_tsv(out, corpus); });
    });
    m.def("write_aligned_tsv_file", &t9e::write_aligned_tsv_file, py::arg("path"),
          py::arg("corpus"));
    m.def("read_tagged", [](const std::string& text) {
        std::istringstream in(text);
        return t9e::read_tagged(in);
    });
    m.def("read_tagged_file", &t9e::read_tagged_file, py::arg("path"));
    m.def("write_tagged", [](const std::vector<t9e::Sentence>& sentences) {
        return to_string_via([&](std::ostream& out) { t9e::write_tagged(out, sentences); });
    });
    m.def("write_stats_tsv",
          [](const std::string& corpus_name, const t9e::CorpusStats& stats) {
              return to_string_via(
                  [&](std::ostream& out) { t9e::write_stats_tsv(out, corpus_name, stats); });
          });

    // ---- ingest
    py::class_<t9e::SubtitleFrame>(m, "SubtitleFrame")
        .def(py::init<>())
        .def(py::init([](int index, std::int64_t start_ms, std::int64_t end_ms,
                         std::string text) {
                 return t9e::SubtitleFrame{index, start_ms, end_ms, std::move(text)};
             }),
             py::arg("index"), py::arg("start_ms"), py::arg("end_ms"), py::arg("text"))
        .def_readwrite("index", &t9e::SubtitleFrame::index)
        .def_readwrite("start_ms", &t9e::SubtitleFrame::start_ms)
        .def_readwrite("end_ms", &t9e::SubtitleFrame::end_ms)
        .def_readwrite("text", &t9e::SubtitleFrame::text)
        .def("__eq__",
             [](const t9e::SubtitleFrame& a, const t9e::SubtitleFrame& b) { return a == b; });

    py::class_<t9e::SubtitleDocument>(m, "SubtitleDocument")
        .def(py::init<>())
        .def_readwrite("frames", &t9e::SubtitleDocument::frames)
        .def_readwrite("lang", &t9e::SubtitleDocument::lang);

    py::class_<t9e::SentenceMergeOptions>(m, "SentenceMergeOptions")
        .def(py::init<>())
        .def_readwrite("terminators", &t9e::SentenceMergeOptions::terminators)
        .def_readwrite("closers", &t9e::SentenceMergeOptions::closers)
        .def_readwrite("abbreviation_exceptions",
                       &t9e::SentenceMergeOptions::abbreviation_exceptions);

    m.def("parse_srt", &t9e::parse_srt, py::arg("raw"), py::arg("lang"));
    m.def("serialize_srt", &t9e::serialize_srt, py::arg("doc"));
    m.def("merge_frames_to_sentences", &t9e::merge_frames_to_sentences, py::arg("doc"),
          py::arg("options") = t9e::SentenceMergeOptions{});
    m.def("ends_sentence", &t9e::ends_sentence, py::arg("text"),
          py::arg("options") = t9e::SentenceMergeOptions{});
    m.def("segment_chapters", &t9e::segment_chapters, py::arg("book"),
          py::arg("title_patterns"), py::arg("whole_book_fallback") = false);
    m.def("default_chapter_patterns",
          [] { return t9e::default_chapter_patterns(); });
    m.def("split_paragraphs", &t9e::split_paragraphs, py::arg("chapter"));

    py::enum_<t9e::HansardLineType>(m, "HansardLineType")
        .value("Speech", t9e::HansardLineType::Speech)
        .value("Date", t9e::HansardLineType::Date)
        .value("SpeakerName", t9e::HansardLineType::SpeakerName)
        .value("OtherMetadata", t9e::HansardLineType::OtherMetadata);

    py::class_<t9e::HansardRecord>(m, "HansardRecord")
        .def(py::init<>())
        .def_readwrite("line_type", &t9e::HansardRecord::line_type)
        .def_readwrite("src_text", &t9e::HansardRecord::src_text)
        .def_readwrite("tgt_text", &t9e::HansardRecord::tgt_text);

    m.def("parse_hansard_tsv", [](const std::string& text) {
        std::istringstream in(text);
        return t9e::parse_hansard_tsv(in);
    });
    m.def("parse_hansard_file",
          [](const std::string& path) { return t9e::parse_hansard_file(path); });
    m.def("filter_hansard", &t9e::filter_hansard, py::arg("records"), py::arg("direction"));

    // ---- europarl filtering
    py::class_<t9e::MonolingualCorpus>(m, "MonolingualCorpus")
        .def(py::init<>())
        .def_readwrite("lang", &t9e::MonolingualCorpus::lang)
        .def_readwrite("original_lang_by_text", &t9e::MonolingualCorpus::original_lang_by_text);

    py::class_<t9e::AnnotatedPair>(m, "AnnotatedPair")
        .def(py::init<>())
        .def_readwrite("pair", &t9e::AnnotatedPair::pair)
        .def_readwrite("annotations", &t9e::AnnotatedPair::annotations);

    py::class_<t9e::ConsistencyReport>(m, "ConsistencyReport")
        .def(py::init<>())
        .def_readwrite("input_pairs", &t9e::ConsistencyReport::input_pairs)
        .def_readwrite("kept", &t9e::ConsistencyReport::kept)
        .def_readwrite("dropped_incomplete", &t9e::ConsistencyReport::dropped_incomplete)
        .def_readwrite("dropped_inconsistent", &t9e::ConsistencyReport::dropped_inconsistent)
        .def_readwrite("dropped_foreign", &t9e::ConsistencyReport::dropped_foreign)
        .def("inconsistent_fraction", &t9e::ConsistencyReport::inconsistent_fraction);

    py::class_<t9e::CommentReport>(m, "CommentReport")
        .def(py::init<>())
        .def_readwrite("input_pairs", &t9e::CommentReport::input_pairs)
        .def_readwrite("removed", &t9e::CommentReport::removed)
        .def("removed_fraction", &t9e::CommentReport::removed_fraction);

    m.def("normalize_whitespace", &t9e::normalize_whitespace, py::arg("text"));
    m.def(
        "read_monolingual_tsv",
        [](const std::string& text, const std::string& lang) {
            std::istringstream in(text);
            return t9e::read_monolingual_tsv(in, lang);
        },
        py::arg("text"), py::arg("lang"));
    m.def("read_monolingual_file", &t9e::read_monolingual_file, py::arg("path"),
          py::arg("lang"));
    m.def("propagate_annotations", &t9e::propagate_annotations, py::arg("pairs"),
          py::arg("references"));
    m.def(
        "filter_by_consistency",
        [](const std::vector<t9e::AnnotatedPair>& pairs, std::size_t required_annotations) {
            t9e::ConsistencyReport report;
            auto kept = t9e::filter_by_consistency(pairs, required_annotations, &report);
            return std::make_pair(std::move(kept), report);
        },
        py::arg("pairs"), py::arg("required_annotations") = 5,
        "Returns (kept_pairs, ConsistencyReport).");
    m.def(
        "strip_comments",
        [](const std::vector<t9e::BitextPair>& pairs) {
            t9e::CommentReport report;
            auto kept = t9e::strip_comments(pairs, &report);
            return std::make_pair(std::move(kept), report);
        },
        py::arg("pairs"), "Returns (kept_pairs, CommentReport).");

    // ---- alignment
    py::enum_<t9e::BeadKind>(m, "BeadKind")
        .value("OneOne", t9e::BeadKind::OneOne)
        .value("OneZero", t9e::BeadKind::OneZero)
        .value("ZeroOne", t9e::BeadKind::ZeroOne)
        .value("TwoOne", t9e::BeadKind::TwoOne)
        .value("OneTwo", t9e::BeadKind::OneTwo)
        .value("TwoTwo", t9e::BeadKind::TwoTwo);

    py::class_<t9e::Bead>(m, "Bead")
        .def(py::init<>())
        .def_readwrite("src_begin", &t9e::Bead::src_begin)
        .def_readwrite("src_count", &t9e::Bead::src_count)
        .def_readwrite("tgt_begin", &t9e::Bead::tgt_begin)
        .def_readwrite("tgt_count", &t9e::Bead::tgt_count)
        .def_readwrite("kind", &t9e::Bead::kind)
        .def("__eq__", [](const t9e::Bead& a, const t9e::Bead& b) { return a == b; })
        .def("__repr__", [](const t9e::Bead& b) {
            return "Bead(" + t9e::bead_kind_name(b.kind) + " @" + std::to_string(b.src_begin) +
                   "," + std::to_string(b.tgt_begin) + ")";
        });

    py::class_<t9e::AlignerConfig>(m, "AlignerConfig")
        .def(py::init<>())
        .def_readwrite("priors", &t9e::AlignerConfig::priors)
        .def_readwrite("c", &t9e::AlignerConfig::c)
        .def_readwrite("s2", &t9e::AlignerConfig::s2)
        .def_readwrite("delta_ms", &t9e::AlignerConfig::delta_ms)
        .def("prior", &t9e::AlignerConfig::prior, py::arg("kind"))
        .def("validate", &t9e::AlignerConfig::validate);

    py::class_<t9e::SubtitleParagraphPair>(m, "SubtitleParagraphPair")
        .def(py::init<>())
        .def_readwrite("left", &t9e::SubtitleParagraphPair::left)
        .def_readwrite("right", &t9e::SubtitleParagraphPair::right)
        .def("__eq__", [](const t9e::SubtitleParagraphPair& a,
                          const t9e::SubtitleParagraphPair& b) { return a == b; });

    py::class_<t9e::OneToOneReport>(m, "OneToOneReport")
        .def(py::init<>())
        .def_readwrite("total_beads", &t9e::OneToOneReport::total_beads)
        .def_readwrite("kept", &t9e::OneToOneReport::kept)
        .def("discarded_fraction", &t9e::OneToOneReport::discarded_fraction);

    m.def("bead_src_count", &t9e::bead_src_count, py::arg("kind"));
    m.def("bead_tgt_count", &t9e::bead_tgt_count, py::arg("kind"));
    m.def("bead_kind_name", &t9e::bead_kind_name, py::arg("kind"));
    m.def("utf8_codepoints", &t9e::utf8_codepoints, py::arg("text"));
    m.def("sentence_length", &t9e::sentence_length, py::arg("sentence"));
    m.def("bead_cost", &t9e::bead_cost, py::arg("kind"), py::arg("src_len"),
          py::arg("tgt_len"), py::arg("cfg") = t9e::AlignerConfig{});
    m.def("gale_church_align", &t9e::gale_church_align, py::arg("src"), py::arg("tgt"),
          py::arg("cfg") = t9e::AlignerConfig{});
    m.def("alignment_cost", &t9e::alignment_cost, py::arg("beads"), py::arg("src"),
          py::arg("tgt"), py::arg("cfg") = t9e::AlignerConfig{});
    m.def("align_paragraph_wise", &t9e::align_paragraph_wise, py::arg("src_doc"),
          py::arg("tgt_doc"), py::arg("cfg") = t9e::AlignerConfig{});
    m.def("subtitle_paragraph_align", &t9e::subtitle_paragraph_align, py::arg("left"),
          py::arg("right"), py::arg("cfg") = t9e::AlignerConfig{});
    m.def(
        "filter_one_to_one",
        [](const std::vector<t9e::Bead>& beads, const std::vector<t9e::Sentence>& src,
           const std::vector<t9e::Sentence>& tgt, const t9e::TranslationDirection& direction) {
            t9e::OneToOneReport report;
            auto pairs = t9e::filter_one_to_one(beads, src, tgt, direction, &report);
            return std::make_pair(std::move(pairs), report);
        },
        py::arg("beads"), py::arg("src"), py::arg("tgt"), py::arg("direction"),
        "Returns (pairs, OneToOneReport).");

    // ---- features
    py::enum_<t9e::FeatureFamily>(m, "FeatureFamily")
        .value("FW", t9e::FeatureFamily::FW)
        .value("PosTrigram", t9e::FeatureFamily::PosTrigram)
        .value("PositionalToken", t9e::FeatureFamily::PositionalToken)
        .value("ContextualFW", t9e::FeatureFamily::ContextualFW);

    py::class_<t9e::FeatureSpec>(m, "FeatureSpec")
        .def(py::init<>())
        .def_readwrite("family", &t9e::FeatureSpec::family)
        .def_readwrite("vocabulary", &t9e::FeatureSpec::vocabulary)
        .def_readwrite("fw_list", &t9e::FeatureSpec::fw_list);

    py::class_<t9e::FeatureVector>(m, "FeatureVector")
        .def(py::init<>())
        .def_readwrite("values", &t9e::FeatureVector::values)
        .def_readwrite("chunk_label", &t9e::FeatureVector::chunk_label)
        .def("__eq__",
             [](const t9e::FeatureVector& a, const t9e::FeatureVector& b) { return a == b; });

    m.def("family_name", &t9e::family_name, py::arg("family"));
    m.def("family_from_name", &t9e::family_from_name, py::arg("name"));
    m.def("family_needs_fw_list", &t9e::family_needs_fw_list, py::arg("family"));
    m.def("family_needs_tags", &t9e::family_needs_tags, py::arg("family"));
    m.def("chunk_stream", &t9e::chunk_stream, py::arg("sentences"), py::arg("label"),
          py::arg("target") = 2000);
    m.def("chunk_corpus", &t9e::chunk_corpus, py::arg("sentences"), py::arg("target") = 2000);
    m.def("extract_fw", &t9e::extract_fw, py::arg("chunk"), py::arg("fw_list"));
    m.def("extract_pos_trigrams", &t9e::extract_pos_trigrams, py::arg("chunk"));
    m.def("extract_positional_tokens", &t9e::extract_positional_tokens, py::arg("chunk"));
    m.def("extract_contextual_fw", &t9e::extract_contextual_fw, py::arg("chunk"),
          py::arg("fw_list"));
    m.def("family_counts", &t9e::family_counts, py::arg("chunk"), py::arg("family"),
          py::arg("fw_list"));
    m.def("rank_keys", &t9e::rank_keys, py::arg("counts"), py::arg("k"));
    m.def("build_vocabulary", &t9e::build_vocabulary, py::arg("chunks"), py::arg("family"),
          py::arg("fw_list"), py::arg("k") = 1000);
    m.def("vectorize", &t9e::vectorize, py::arg("chunks"), py::arg("spec"));
    m.def("load_fw_list", [](const std::string& text) {
        std::istringstream in(text);
        return t9e::load_fw_list(in);
    });
    m.def("load_fw_list_file", &t9e::load_fw_list_file, py::arg("path"));
    m.def("write_feature_matrix",
          [](const std::vector<std::string>& vocabulary,
             const std::vector<t9e::FeatureVector>& vectors) {
              return to_string_via([&](std::ostream& out) {
                  t9e::write_feature_matrix(out, vocabulary, vectors);
              });
          });
    m.def("read_feature_matrix", [](const std::string& text) {
        std::istringstream in(text);
        return t9e::read_feature_matrix(in);
    });

    // ---- svm
    py::class_<t9e::SmoConfig>(m, "SmoConfig")
        .def(py::init<>())
        .def_readwrite("C", &t9e::SmoConfig::C)
        .def_readwrite("tol", &t9e::SmoConfig::tol)
        .def_readwrite("max_iter", &t9e::SmoConfig::max_iter)
        .def_readwrite("record_objective", &t9e::SmoConfig::record_objective);

    py::class_<t9e::SvmModel>(m, "SvmModel")
        .def(py::init<>())
        .def_readwrite("vocabulary", &t9e::SvmModel::vocabulary)
        .def_readwrite("weights", &t9e::SvmModel::weights)
        .def_readwrite("bias", &t9e::SvmModel::bias)
        .def_readwrite("C", &t9e::SvmModel::C)
        .def_readwrite("iterations", &t9e::SvmModel::iterations)
        .def_readwrite("duality_gap", &t9e::SvmModel::duality_gap)
        .def_readwrite("degenerate", &t9e::SvmModel::degenerate)
        .def_readwrite("alphas", &t9e::SvmModel::alphas)
        .def_readwrite("labels", &t9e::SvmModel::labels)
        .def_readwrite("objective_history", &t9e::SvmModel::objective_history);

    py::class_<t9e::Dataset>(m, "Dataset")
        .def(py::init<>())
        .def(py::init([](std::vector<std::vector<double>> x,
                         std::vector<t9e::ChunkLabel> labels) {
                 return t9e::Dataset{std::move(x), std::move(labels)};
             }),
             py::arg("x"), py::arg("labels"))
        .def_readwrite("x", &t9e::Dataset::x)
        .def_readwrite("labels", &t9e::Dataset::labels);

    py::class_<t9e::Prediction>(m, "Prediction")
        .def_readwrite("label", &t9e::Prediction::label)
        .def_readwrite("margin", &t9e::Prediction::margin);

    py::class_<t9e::CvReport>(m, "CvReport")
        .def(py::init<>())
        .def_readwrite("fold_accuracies", &t9e::CvReport::fold_accuracies)
        .def_readwrite("mean_accuracy", &t9e::CvReport::mean_accuracy)
        .def_readwrite("o_as_o", &t9e::CvReport::o_as_o)
        .def_readwrite("o_as_t", &t9e::CvReport::o_as_t)
        .def_readwrite("t_as_o", &t9e::CvReport::t_as_o)
        .def_readwrite("t_as_t", &t9e::CvReport::t_as_t)
        .def("total", &t9e::CvReport::total);

    m.def("to_dense", &t9e::to_dense, py::arg("vectors"), py::arg("vocabulary"));
    m.def("train_smo",
          py::overload_cast<const t9e::Dataset&, const t9e::SmoConfig&>(&t9e::train_smo),
          py::arg("data"), py::arg("cfg") = t9e::SmoConfig{});
    m.def("train_smo",
          py::overload_cast<const std::vector<t9e::FeatureVector>&,
                            const std::vector<std::string>&, const t9e::SmoConfig&>(
              &t9e::train_smo),
          py::arg("vectors"), py::arg("vocabulary"), py::arg("cfg") = t9e::SmoConfig{});
    m.def("dual_objective", &t9e::dual_objective, py::arg("model"), py::arg("data"));
    m.def("predict",
          py::overload_cast<const t9e::SvmModel&, const std::vector<double>&>(&t9e::predict),
          py::arg("model"), py::arg("x"));
    m.def("predict",
          py::overload_cast<const t9e::SvmModel&, const t9e::FeatureVector&>(&t9e::predict),
          py::arg("model"), py::arg("vec"));
    m.def("cross_validate", &t9e::cross_validate, py::arg("data"), py::arg("folds"),
          py::arg("seed"), py::arg("cfg") = t9e::SmoConfig{});
    m.def("write_cv_report_tsv", [](const t9e::CvReport& report) {
        return to_string_via([&](std::ostream& out) { t9e::write_cv_report_tsv(out, report); });
    });
    m.def("format_cv_summary", &t9e::format_cv_summary, py::arg("report"));
    m.def(
        "balance_classes",
        [](std::vector<t9e::FeatureVector> o_items, std::vector<t9e::FeatureVector> t_items,
           std::uint64_t seed) {
            return t9e::balance_classes(std::move(o_items), std::move(t_items), seed);
        },
        py::arg("o_items"), py::arg("t_items"), py::arg("seed"));
    m.def("save_model", [](const t9e::SvmModel& model) {
        return to_string_via([&](std::ostream& out) { t9e::save_model(out, model); });
    });
    m.def("save_model_file", &t9e::save_model_file, py::arg("path"), py::arg("model"));
    m.def("load_model", [](const std::string& text) {
        std::istringstream in(text);
        return t9e::load_model(in);
    });
    m.def("load_model_file", &t9e::load_model_file, py::arg("path"));

    // ---- clustering
    py::class_<t9e::ClusterRun>(m, "ClusterRun")
        .def(py::init<>())
        .def_readwrite("assignments", &t9e::ClusterRun::assignments)
        .def_readwrite("seed", &t9e::ClusterRun::seed)
        .def_readwrite("iterations", &t9e::ClusterRun::iterations)
        .def_readwrite("accuracy", &t9e::ClusterRun::accuracy)
        .def_readwrite("degenerate", &t9e::ClusterRun::degenerate)
        .def_readwrite("inertia", &t9e::ClusterRun::inertia)
        .def_readwrite("inertia_history", &t9e::ClusterRun::inertia_history)
        .def_readwrite("centroids", &t9e::ClusterRun::centroids);

    py::class_<t9e::ClusterReport>(m, "ClusterReport")
        .def(py::init<>())
        .def_readwrite("accuracies", &t9e::ClusterReport::accuracies)
        .def_readwrite("mean_accuracy", &t9e::ClusterReport::mean_accuracy)
        .def_readwrite("sd", &t9e::ClusterReport::sd);

    m.def("kmeans2", &t9e::kmeans2, py::arg("vectors"), py::arg("seed"),
          py::arg("max_iter") = 300);
    m.def("assignment_accuracy", &t9e::assignment_accuracy, py::arg("assignments"),
          py::arg("labels"));
    m.def("cluster_experiment", &t9e::cluster_experiment, py::arg("vectors"),
          py::arg("labels"), py::arg("runs") = 30, py::arg("base_seed") = 0);

    // ---- experiment orchestration
    py::class_<t9e::ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("corpus_path", &t9e::ExperimentConfig::corpus_path)
        .def_readwrite("analysis_lang", &t9e::ExperimentConfig::analysis_lang)
        .def_readwrite("fw_path", &t9e::ExperimentConfig::fw_path)
        .def_readwrite("tagged_path", &t9e::ExperimentConfig::tagged_path)
        .def_readwrite("family", &t9e::ExperimentConfig::family)
        .def_readwrite("chunk_target", &t9e::ExperimentConfig::chunk_target)
        .def_readwrite("vocabulary_k", &t9e::ExperimentConfig::vocabulary_k)
        .def_readwrite("C", &t9e::ExperimentConfig::C)
        .def_readwrite("tol", &t9e::ExperimentConfig::tol)
        .def_readwrite("folds", &t9e::ExperimentConfig::folds)
        .def_readwrite("cluster_runs", &t9e::ExperimentConfig::cluster_runs)
        .def_readwrite("seed", &t9e::ExperimentConfig::seed)
        .def_readwrite("sweep_sizes", &t9e::ExperimentConfig::sweep_sizes)
        .def("validate", &t9e::ExperimentConfig::validate);

    py::class_<t9e::PreparedVectors>(m, "PreparedVectors")
        .def_readwrite("corpus_name", &t9e::PreparedVectors::corpus_name)
        .def_readwrite("spec", &t9e::PreparedVectors::spec)
        .def_readwrite("o_vectors", &t9e::PreparedVectors::o_vectors)
        .def_readwrite("t_vectors", &t9e::PreparedVectors::t_vectors);

    py::class_<t9e::SupervisedResult>(m, "SupervisedResult")
        .def_readwrite("corpus_name", &t9e::SupervisedResult::corpus_name)
        .def_readwrite("report", &t9e::SupervisedResult::report)
        .def_readwrite("accuracy_percent", &t9e::SupervisedResult::accuracy_percent)
        .def_readwrite("chunks_per_class", &t9e::SupervisedResult::chunks_per_class);

    py::class_<t9e::UnsupervisedResult>(m, "UnsupervisedResult")
        .def_readwrite("corpus_name", &t9e::UnsupervisedResult::corpus_name)
        .def_readwrite("report", &t9e::UnsupervisedResult::report)
        .def_readwrite("accuracy_percent", &t9e::UnsupervisedResult::accuracy_percent)
        .def_readwrite("sd_points", &t9e::UnsupervisedResult::sd_points)
        .def_readwrite("chunks_per_class", &t9e::UnsupervisedResult::chunks_per_class);

    py::class_<t9e::SensitivityPoint>(m, "SensitivityPoint")
        .def_readwrite("size", &t9e::SensitivityPoint::size)
        .def_readwrite("skipped", &t9e::SensitivityPoint::skipped)
        .def_readwrite("supervised_percent", &t9e::SensitivityPoint::supervised_percent)
        .def_readwrite("unsupervised_percent", &t9e::SensitivityPoint::unsupervised_percent);

    m.def("parse_config", &t9e::parse_config, py::arg("json_text"));
    m.def("load_config_file", &t9e::load_config_file, py::arg("path"));
    m.def("config_json", &t9e::config_json, py::arg("config"));
    m.def("fnv1a", &t9e::fnv1a, py::arg("data"));
    m.def("write_manifest_file", &t9e::write_manifest_file, py::arg("path"),
          py::arg("config_json_text"), py::arg("seed"));
    m.def("round_percent", &t9e::round_percent, py::arg("percent"));
    m.def("prepare_vectors", &t9e::prepare_vectors, py::arg("config"));
    m.def("run_supervised", &t9e::run_supervised, py::arg("config"));
    m.def("supervised_row", &t9e::supervised_row, py::arg("config"), py::arg("result"));
    m.def("run_unsupervised", &t9e::run_unsupervised, py::arg("config"));
    m.def("unsupervised_row", &t9e::unsupervised_row, py::arg("config"), py::arg("result"));
    m.def("run_sensitivity", &t9e::run_sensitivity, py::arg("config"));
    m.def("write_sensitivity_tsv", [](const std::vector<t9e::SensitivityPoint>& points) {
        return to_string_via(
            [&](std::ostream& out) { t9e::write_sensitivity_tsv(out, points); });
    });
}
