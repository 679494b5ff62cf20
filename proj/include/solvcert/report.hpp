#ifndef SOLVCERT_REPORT_HPP
#define SOLVCERT_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "solvcert/algebra.hpp"
#include "solvcert/certifier.hpp"
#include "solvcert/deroracle.hpp"
#include "solvcert/parser.hpp"

namespace solvcert {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct RunOptions {
  SearchConfig search;
  OracleLimits limits;
  bool run_certifier = true;
  /// nullopt: run the oracle iff the algebra fits under the limits.
  std::optional<bool> oracle;
  bool timing = false;
};

namespace detail {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class F>
Json input_json(const IdealPresentation<F>& p) {
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(g.to_string(p.names));
  return Json{{"field", p.field.characteristic()},
              {"vars", p.names},
              {"lowey_cap", optional_json(p.power_cap)},
              {"generators", gens}};
}

inline Json invariants_json(const Invariants& inv) {
  return Json{{"dim_A", optional_json(inv.dim_A)},
              {"n", inv.n},
              {"lowey", inv.lowey},
              {"dim_W", inv.dim_W},
              {"min_degree", inv.min_degree},
              {"min_generators", optional_json(inv.min_generators)},
              {"homogeneous", inv.homogeneous},
              {"radical_filtration", optional_json(inv.radical_filtration)},
              {"W", inv.W.empty() && inv.dim_W ? Json(nullptr) : Json(inv.W)}};
}

inline Json rules_json(const std::vector<RuleFiring>& rules) {
  Json out = Json::array();
  for (const auto& r : rules) {
    Json j{{"tag", to_string(r.tag)},
           {"polarity", to_string(r.polarity)},
           {"witness", r.witness},
           {"rationale", r.rationale}};
    if (r.source) j["source"] = to_string(*r.source);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace detail

/// Runs certifier and oracle as requested and assembles the report document.
/// Throws InputError subclasses for bad input or exceeded limits and
/// ConflictError when rules disagree.
template <class F>
Json run_document(const IdealPresentation<F>& p, const RunOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  auto ap = validate_admissible(p);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["input"] = detail::input_json(p);
  doc["invariants"] = nullptr;
  doc["verdict"] = nullptr;
  doc["rules"] = nullptr;
  doc["oracle"] = nullptr;

  std::optional<CertReport> rep;
  std::vector<std::string> notes;
  if (opt.run_certifier) {
    rep = certify(ap, opt.search);
    notes = rep->notes;
    doc["invariants"] = detail::invariants_json(rep->invariants);
    doc["rules"] = detail::rules_json(rep->rules);
  }

  bool want_oracle = opt.oracle.value_or(true);
  if (want_oracle) {
    try {
      auto o = run_oracle(ap, opt.limits);
      Json oj{{"der_dim", o.der_dim}, {"series", o.series.dims}, {"solvable", o.series.solvable}, {"cross_check", nullptr}};
      if (rep) {
        auto cc = cross_check(rep->verdict, o, ap.field().characteristic());
        oj["cross_check"] = Json{{"status", to_string(cc.status)}, {"annotation", cc.annotation}};
      }
      doc["oracle"] = oj;
    } catch (const TooLargeError& e) {
      if (opt.oracle.has_value()) throw;
      notes.push_back(std::string("oracle skipped: ") + e.what());
    }
  }

  if (rep) {
    Json adv = nullptr;
    if (rep->advisory) adv = Json{{"predicts_solvable", rep->advisory->predicts_solvable}, {"note", rep->advisory->note}};
    doc["verdict"] = Json{{"status", to_string(rep->verdict)},
                          {"rank_bound", rep->rank_bound},
                          {"nilpotency_annotation", detail::optional_json(rep->nilpotency_annotation)},
                          {"notes", notes},
                          {"advisory", adv}};
  }
  doc["seed"] = opt.search.seed;
  if (opt.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc["timing_ms"] = ms;
  } else {
    doc["timing_ms"] = nullptr;
  }
  return doc;
}

/// Dispatches on the characteristic declared in the file.
inline Json run_source(const PresentationSource& src, const RunOptions& opt) {
  if (src.field.characteristic == 0) return run_document(build_presentation(src, RationalField{}), opt);
  return run_document(build_presentation(src, PrimeField(src.field.characteristic)), opt);
}

/// Human-readable rendering of a report document.
inline std::string render_text(const Json& doc) {
  std::string out;
  const auto& in = doc["input"];
  out += "field " + std::to_string(in["field"].get<std::uint64_t>()) + ", vars";
  for (const auto& v : in["vars"]) out += " " + v.get<std::string>();
  if (!in["lowey_cap"].is_null()) out += ", lowey cap " + std::to_string(in["lowey_cap"].get<std::uint32_t>());
  out += "\n";
  for (const auto& g : in["generators"]) out += "  gen " + g.get<std::string>() + "\n";
  if (!doc["invariants"].is_null()) {
    const auto& inv = doc["invariants"];
    out += "invariants: n=" + inv["n"].dump() + " lowey=" + inv["lowey"].dump() + " dim_A=" + inv["dim_A"].dump() +
           " d=" + inv["min_degree"].dump() + " dim_W=" + inv["dim_W"].dump() + " m=" + inv["min_generators"].dump() +
           " homogeneous=" + inv["homogeneous"].dump() + "\n";
    if (!inv["radical_filtration"].is_null()) out += "radical filtration: " + inv["radical_filtration"].dump() + "\n";
  }
  if (!doc["verdict"].is_null()) {
    const auto& v = doc["verdict"];
    out += "verdict: " + v["status"].get<std::string>() + " (rank bound " + v["rank_bound"].dump() + ")\n";
    for (const auto& r : doc["rules"])
      out += "  " + r["tag"].get<std::string>() + " [" + r["polarity"].get<std::string>() + "] " +
             r["witness"].get<std::string>() + "\n";
    if (!v["nilpotency_annotation"].is_null()) out += "  note: " + v["nilpotency_annotation"].get<std::string>() + "\n";
    for (const auto& n : v["notes"]) out += "  note: " + n.get<std::string>() + "\n";
    if (!v["advisory"].is_null()) out += "  advisory: " + v["advisory"]["note"].get<std::string>() + "\n";
  }
  if (!doc["oracle"].is_null()) {
    const auto& o = doc["oracle"];
    out += "oracle: dim Der(A)=" + o["der_dim"].dump() + " series=" + o["series"].dump() +
           " solvable=" + o["solvable"].dump();
    if (!o["cross_check"].is_null()) out += " cross_check=" + o["cross_check"]["status"].get<std::string>();
    out += "\n";
  }
  return out;
}

}  // namespace solvcert

#endif  // SOLVCERT_REPORT_HPP
