#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nilrep/basis.hpp"
#include "nilrep/collect.hpp"
#include "nilrep/matrep.hpp"
#include "nilrep/multpoly.hpp"
#include "nilrep/polynomial.hpp"
#include "nilrep/presentation.hpp"

namespace nilrep {

// All reports use ordered_json so keys keep insertion order and two runs with
// the same inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

inline std::string int_to_string(const Int& v) { return v.str(); }

inline Json presentation_json(const NilpotentPresentation& p,
                              const std::string& source) {
  Json j;
  j["source"] = source;
  j["n"] = p.n;
  j["generators"] = p.names;
  return j;
}

// A polynomial is emitted both as display text and as structured terms, with
// coefficients as exact "p/q" strings, so consumers never re-derive rationals
// from floating point.
inline Json poly_json(const Polynomial& f) {
  Json j;
  j["text"] = poly_to_string(f);
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t;
    t["coef"] = rat_to_string(c);
    t["monomial"] = m;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

// ---------------------------------------------------------------------------
// collect
// ---------------------------------------------------------------------------

inline Json collect_report(const NilpotentPresentation& p,
                           const std::string& source,
                           const std::string& word_text,
                           const ExponentVector& e) {
  Json j;
  j["command"] = "collect";
  j["presentation"] = presentation_json(p, source);
  j["word"] = word_text;
  Json exps = Json::array();
  for (const Int& v : e) exps.push_back(int_to_string(v));
  j["exponents"] = std::move(exps);
  j["normal_form"] = word_to_string(p, word_from_exponents(e));
  return j;
}

inline std::string collect_text(const ExponentVector& e) {
  return exponents_to_string(e);
}

// ---------------------------------------------------------------------------
// polys
// ---------------------------------------------------------------------------

inline Json polys_report(const NilpotentPresentation& p,
                         const std::string& source,
                         const std::vector<ActionPolys>& all) {
  Json j;
  j["command"] = "polys";
  j["presentation"] = presentation_json(p, source);
  Json actions = Json::array();
  for (const ActionPolys& aps : all) {
    Json a;
    a["generator"] = p.names[aps.gen];
    Json polys = Json::array();
    for (const Polynomial& f : aps.polys) polys.push_back(poly_json(f));
    a["coordinate_maps"] = std::move(polys);
    actions.push_back(std::move(a));
  }
  j["actions"] = std::move(actions);
  QbarCounts qc = qbar_term_count(p, all);
  j["max_correction_terms"] = qc.m_hat;
  return j;
}

inline std::string polys_text(const NilpotentPresentation& p,
                              const std::vector<ActionPolys>& all) {
  std::string out;
  for (const ActionPolys& aps : all) {
    out += "action of " + p.names[aps.gen] +
           " (coordinates after right multiplication by " + p.names[aps.gen] +
           "^-1):\n";
    for (int i = 0; i < (int)aps.polys.size(); i++)
      out += "  " + p.names[i] + " -> " + poly_to_string(aps.polys[i]) + "\n";
  }
  QbarCounts qc = qbar_term_count(p, all);
  out += "max correction terms: " + std::to_string(qc.m_hat) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// basis
// ---------------------------------------------------------------------------

inline Json basis_report(const NilpotentPresentation& p,
                         const std::string& source,
                         const std::string& algorithm, const PolyBasis& B,
                         bool with_counts) {
  Json j;
  j["command"] = "basis";
  j["presentation"] = presentation_json(p, source);
  j["algorithm"] = algorithm;
  j["dimension"] = B.dim();
  Json elems = Json::array();
  for (const Polynomial& f : B.elems) elems.push_back(poly_json(f));
  j["basis"] = std::move(elems);
  if (with_counts) {
    j["insert_count"] = B.insert_count;
    j["reduction_steps"] = B.reduction_steps;
  }
  return j;
}

inline std::string basis_text(const PolyBasis& B, bool with_counts) {
  std::string out = "dimension: " + std::to_string(B.dim()) + "\n";
  out += "basis:\n";
  for (const Polynomial& f : B.elems) out += "  " + poly_to_string(f) + "\n";
  if (with_counts) {
    out += "insert_count: " + std::to_string(B.insert_count) + "\n";
    out += "reduction_steps: " + std::to_string(B.reduction_steps) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// rep
// ---------------------------------------------------------------------------

inline Json rep_report(const NilpotentPresentation& p,
                       const std::string& source,
                       const std::string& algorithm, const MatrixRep& rep) {
  Json j;
  j["command"] = "rep";
  j["presentation"] = presentation_json(p, source);
  j["algorithm"] = algorithm;
  j["dimension"] = rep.dim;
  Json basis = Json::array();
  for (const Polynomial& f : rep.basis_order) basis.push_back(poly_to_string(f));
  j["basis"] = std::move(basis);
  Json mats = Json::array();
  for (int g = 0; g < (int)rep.mats.size(); g++) {
    Json m;
    m["generator"] = p.names[g];
    Json rows = Json::array();
    for (int r = 0; r < rep.dim; r++) {
      Json row = Json::array();
      for (int c = 0; c < rep.dim; c++)
        row.push_back(rat_to_string(rep.mats[g].at(r, c)));
      rows.push_back(std::move(row));
    }
    m["rows"] = std::move(rows);
    mats.push_back(std::move(m));
  }
  j["matrices"] = std::move(mats);
  return j;
}

inline std::string matrix_text(const Matrix& m) {
  // Column-aligned rows, entries as exact rational strings.
  std::vector<std::size_t> width(m.d, 0);
  for (int c = 0; c < m.d; c++)
    for (int r = 0; r < m.d; r++)
      width[c] = std::max(width[c], rat_to_string(m.at(r, c)).size());
  std::string out;
  for (int r = 0; r < m.d; r++) {
    out += "  [";
    for (int c = 0; c < m.d; c++) {
      std::string s = rat_to_string(m.at(r, c));
      out += std::string(width[c] - s.size(), ' ') + s;
      if (c + 1 < m.d) out += "  ";
    }
    out += "]\n";
  }
  return out;
}

inline std::string rep_text(const NilpotentPresentation& p,
                            const MatrixRep& rep) {
  std::string out = "dimension: " + std::to_string(rep.dim) + "\n";
  out += "basis:\n";
  for (const Polynomial& f : rep.basis_order)
    out += "  " + poly_to_string(f) + "\n";
  for (int g = 0; g < (int)rep.mats.size(); g++) {
    out += p.names[g] + " ->\n";
    out += matrix_text(rep.mats[g]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

inline Json verify_report(const NilpotentPresentation& p,
                          const std::string& source, long trials,
                          std::uint64_t seed, int max_len, long box,
                          const AssociativityReport& assoc,
                          const RelationCheck& rels,
                          const FaithfulnessCheck& faith,
                          const UnitriangularCheck& shape, bool nilpotent) {
  Json j;
  j["command"] = "verify";
  j["presentation"] = presentation_json(p, source);
  j["trials"] = trials;
  j["seed"] = seed;
  j["max_word_length"] = max_len;
  j["exponent_box"] = box;
  Json a;
  a["trials"] = assoc.trials;
  a["failures"] = assoc.failures;
  if (!assoc.first_counterexample.empty())
    a["first_counterexample"] = assoc.first_counterexample;
  j["associativity"] = std::move(a);
  Json r;
  r["checked"] = rels.checked;
  r["failures"] = rels.failures;
  if (!rels.first_failure.empty()) r["first_failure"] = rels.first_failure;
  j["relations"] = std::move(r);
  Json f;
  f["trials"] = faith.trials;
  f["hom_failures"] = faith.hom_failures;
  f["faith_failures"] = faith.faith_failures;
  if (!faith.first_failure.empty()) f["first_failure"] = faith.first_failure;
  j["sampling"] = std::move(f);
  Json u;
  u["integral"] = shape.integral;
  u["lower_unitriangular"] = shape.lower_as_produced;
  u["upper_unitriangular_reversed"] = shape.upper_reversed;
  j["shape"] = std::move(u);
  j["nilpotent_generators"] = nilpotent;
  j["passed"] = assoc.passed() && rels.passed() && faith.passed() &&
                shape.passed() && nilpotent;
  return j;
}

inline std::string verify_text(const Json& report) {
  auto flag = [](bool ok) { return ok ? std::string("ok") : std::string("FAIL"); };
  const Json& a = report["associativity"];
  const Json& r = report["relations"];
  const Json& f = report["sampling"];
  const Json& u = report["shape"];
  std::string out;
  out += "associativity: " + flag(a["failures"] == 0) + " (" +
         std::to_string((long)a["trials"]) + " trials)\n";
  out += "relations:     " + flag(r["failures"] == 0) + " (" +
         std::to_string((long)r["checked"]) + " checked)\n";
  out += "homomorphism:  " + flag(f["hom_failures"] == 0) + " (" +
         std::to_string((long)f["trials"]) + " word pairs)\n";
  out += "faithfulness:  " + flag(f["faith_failures"] == 0) + " (" +
         std::to_string((long)f["trials"]) + " words)\n";
  out += "integral:      " + flag((bool)u["integral"]) + "\n";
  std::string shape_note = (bool)u["lower_unitriangular"]
                               ? " (lower in produced order)"
                               : ((bool)u["upper_unitriangular_reversed"]
                                      ? " (upper in reversed order)"
                                      : "");
  out += "unitriangular: " +
         flag((bool)u["lower_unitriangular"] ||
              (bool)u["upper_unitriangular_reversed"]) +
         shape_note + "\n";
  out += "nilpotent:     " + flag((bool)report["nilpotent_generators"]) + "\n";
  out += std::string("overall:       ") +
         ((bool)report["passed"] ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace nilrep
