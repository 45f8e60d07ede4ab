#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tokequity/demographics/demographics.hpp"
#include "tokequity/demographics/income.hpp"
#include "tokequity/error.hpp"
#include "tokequity/impact/bands.hpp"
#include "tokequity/impact/flops.hpp"
#include "tokequity/judge/parse.hpp"
#include "tokequity/judge/prompts.hpp"
#include "tokequity/premium/corpus.hpp"
#include "tokequity/premium/premium.hpp"
#include "tokequity/tokenizer/bpe.hpp"
#include "tokequity/tokenizer/manifest.hpp"

namespace py = pybind11;
using namespace tokequity;

namespace {

std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kDataGap: return "data_gap";
    case ErrorKind::kTransport: return "transport";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

py::dict record_dict(const premium::PremiumRecord& r) {
  py::dict d;
  d["language"] = r.language;
  d["tokenizer"] = r.tokenizer;
  d["total_tokens_lang"] = r.total_tokens_lang;
  d["total_tokens_eng"] = r.total_tokens_eng;
  d["premium"] = r.premium;
  d["per_sentence_premiums"] = r.per_sentence_premiums;
  return d;
}

// Text arrives as str (UTF-8) or bytes; either way the tokenizer sees raw bytes.
std::string as_bytes(const py::object& text) { return text.cast<std::string>(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tokequity native core";

  // Owned for the life of the process, like any extension's exception type.
  static PyObject* error_type =
      PyErr_NewException("tokequity._core.TokequityError", PyExc_RuntimeError, nullptr);
  m.attr("TokequityError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(error_type)(e.what());
      err.attr("kind") = std::string(kind_name(e.kind()));
      PyErr_SetObject(error_type, err.ptr());
    }
  });

  using tokenizer::Vocabulary;
  py::class_<Vocabulary>(m, "Vocabulary")
      .def_static(
          "from_manifest",
          [](const std::filesystem::path& p) { return tokenizer::load_from_manifest(p); },
          py::arg("path"))
      .def_property_readonly("name", &Vocabulary::name)
      .def_property_readonly("pattern", &Vocabulary::pattern)
      .def_property_readonly("merge_count", &Vocabulary::merge_count)
      .def_property_readonly("special_tokens", &Vocabulary::special_tokens)
      .def(
          "encode",
          [](const Vocabulary& v, const py::object& text, bool allow_special) {
            auto s = as_bytes(text);
            py::gil_scoped_release nogil;
            return tokenizer::encode(s, v, {.allow_special = allow_special}).ids;
          },
          py::arg("text"), py::arg("allow_special") = false)
      .def(
          "decode",
          [](const Vocabulary& v, const std::vector<tokenizer::Rank>& ids) {
            return py::bytes(tokenizer::decode(ids, v));
          },
          py::arg("ids"))
      .def(
          "pretokenize",
          [](const Vocabulary& v, const std::string& text) {
            return tokenizer::pretokenize(text, v);
          },
          py::arg("text"))
      .def(
          "count_tokens",
          [](const Vocabulary& v, const std::vector<std::string>& sentences, unsigned threads) {
            py::gil_scoped_release nogil;
            return tokenizer::count_tokens(sentences, v, threads).per_sentence;
          },
          py::arg("sentences"), py::arg("threads") = 1)
      .def("__repr__", [](const Vocabulary& v) {
        return "<Vocabulary " + v.name() + " (" + std::to_string(v.merge_count()) + " ranks)>";
      });

  using premium::ParallelCorpus;
  py::class_<ParallelCorpus>(m, "ParallelCorpus")
      .def(py::init<std::map<std::string, std::vector<std::string>>>(), py::arg("languages"))
      .def_property_readonly("languages", [](const ParallelCorpus& c) {
        std::vector<std::string> out;
        for (const auto& [code, _] : c.languages()) out.push_back(code);
        return out;
      })
      .def("sentences", &ParallelCorpus::sentences, py::arg("code"))
      .def("resolve", &ParallelCorpus::resolve, py::arg("code"))
      .def_property_readonly("fingerprint", &ParallelCorpus::fingerprint)
      .def("__len__", &ParallelCorpus::size);

  m.def("load_flores", &premium::load_flores, py::arg("dir"), py::arg("split") = "dev",
        py::arg("only") = std::vector<std::string>{});
  m.def("premium_pair", &premium::premium_pair, py::arg("corpus_a"), py::arg("corpus_b"),
        py::arg("vocabulary"), py::arg("threads") = 1);
  m.def(
      "premium_vs_english",
      [](const ParallelCorpus& c, const std::string& lang, const Vocabulary& v,
         unsigned threads) {
        return record_dict(premium::premium_vs_english(c, lang, v, premium::kEnglish, threads));
      },
      py::arg("corpus"), py::arg("language"), py::arg("vocabulary"), py::arg("threads") = 1);
  m.def(
      "all_premiums",
      [](const ParallelCorpus& c, const Vocabulary& v, unsigned threads) {
        py::list out;
        for (const auto& r : premium::all_premiums(c, v, premium::kEnglish, threads)) {
          out.append(record_dict(r));
        }
        return out;
      },
      py::arg("corpus"), py::arg("vocabulary"), py::arg("threads") = 1);
  m.def("premium_change", &premium::premium_change, py::arg("p_old"), py::arg("p_new"));

  m.def("total_speakers", &demographics::total_speakers, py::arg("adjusted"));
  m.def("weighted_gdp", &demographics::weighted_gdp, py::arg("adjusted"), py::arg("gdp"));
  m.def(
      "income_vector",
      [](const std::map<std::string, double>& adjusted,
         const std::map<std::string, std::string>& classes) {
        std::map<std::string, demographics::IncomeClass> parsed;
        for (const auto& [country, name] : classes) {
          auto c = demographics::parse_income_class(name);
          if (!c) throw ValidationError(country + ": unknown income class '" + name + "'");
          parsed[country] = *c;
        }
        return demographics::income_vector(adjusted, parsed);
      },
      py::arg("adjusted"), py::arg("classes"));
  m.def(
      "classify_wealth",
      [](double w) {
        return std::string(demographics::income_class_name(demographics::classify_wealth(w)));
      },
      py::arg("weighted_gdp"));

  m.def(
      "band_label", [](double p) { return std::string(impact::band_of(p).label); },
      py::arg("premium"));
  m.def(
      "inference_flops",
      [](double p, double d) { return impact::inference_flops(p, d).flops; }, py::arg("params"),
      py::arg("tokens"));
  m.def("fragmentation_multiplier", &impact::fragmentation_multiplier, py::arg("premium"));

  m.def("parse_translation", &judge::parse_translation, py::arg("response"));
  m.def(
      "parse_binary",
      [](const std::string& r) { return std::string(judge::binary_name(judge::parse_binary(r))); },
      py::arg("response"));
  m.def(
      "parse_scale",
      [](const std::string& r) { return std::string(judge::scale_name(judge::parse_scale(r))); },
      py::arg("response"));
  m.attr("TRANSLATE_PROMPT") = std::string(judge::kTranslatePrompt);
  m.attr("SCALE_PROMPT") = std::string(judge::kScalePrompt);
}
