#pragma once

// Stable JSON shapes for the CLI. Integers that do not fit in int64 are
// written as decimal strings; readers accept both forms.

#include <string>

#include <json.hpp>

#include "truncweyl/charring.hpp"
#include "truncweyl/cvengine.hpp"
#include "truncweyl/laurent.hpp"
#include "truncweyl/partition.hpp"
#include "truncweyl/poset.hpp"

namespace truncweyl {

using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long>());
  throw InvalidArgument("expected an integer");
}

// Weights of rank one are plain integers, otherwise coordinate arrays.
inline Json to_json(const DominantWeight& w) {
  if (w.rank() == 1) return Json(w[0]);
  return Json(w.coords());
}

inline Json to_json(const Weight& w) { return Json(w); }

inline DominantWeight weight_from_json(const Json& j) {
  if (j.is_number_integer()) return DominantWeight(std::vector<int>{j.get<int>()});
  return DominantWeight(j.get<std::vector<int>>());
}

// {"exponent": coefficient}, exponents ascending.
inline Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.coeffs()) out[std::to_string(e)] = to_json(c);
  return out;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) p.add_term(std::stol(k), bigint_from_json(v));
  return p;
}

inline Json to_json(const Partition& xi) { return Json(xi.parts()); }

inline Json to_json(const FormalCharacter& ch) {
  Json out = Json::array();
  for (const auto& [w, m] : ch.entries()) out.push_back({{"weight", w}, {"mult", to_json(m)}});
  return out;
}

inline Json to_json(const RootSystem& rs, const GradedCharacter& gc, const std::string& label) {
  Json pieces = Json::array();
  for (const auto& [deg, piece] : gc.pieces()) {
    Json iso = Json::array();
    for (const auto& [w, m] : piece) iso.push_back({{"highest_weight", to_json(w)}, {"mult", to_json(m)}});
    pieces.push_back({{"degree", deg}, {"isotypic", iso}});
  }
  return {{"module", label}, {"graded_pieces", pieces}, {"dim_series", to_json(graded_dim_series(rs, gc))}};
}

inline Json to_json(const GradedCharacter& gc, const std::string& label) { return to_json(sl2(), gc, label); }

inline GradedCharacter graded_character_from_json(const Json& j) {
  GradedCharacter gc;
  for (const auto& piece : j.at("graded_pieces"))
    for (const auto& iso : piece.at("isotypic"))
      gc.add(piece.at("degree").get<int>(), weight_from_json(iso.at("highest_weight")),
             bigint_from_json(iso.at("mult")));
  return gc;
}

inline Json to_json(const FlagMultiplicities& fm) {
  Json entries = Json::array();
  // Largest mu first, matching the table output.
  for (auto it = fm.entries.rbegin(); it != fm.entries.rend(); ++it)
    entries.push_back({{"mu", it->first}, {"poly", to_json(it->second)}, {"text", it->second.to_string()}});
  return {{"level", fm.level}, {"entries", entries}};
}

inline FlagMultiplicities flags_from_json(const Json& j) {
  FlagMultiplicities fm;
  fm.level = j.at("level").get<int>();
  for (const auto& e : j.at("entries")) fm.add(e.at("mu").get<int>(), laurent_from_json(e.at("poly")));
  return fm;
}

inline Json to_json(const TupleOrbit& o) {
  Json reps = Json::array();
  for (const auto& w : o.representative.entries) reps.push_back(to_json(w));
  return {{"representative", reps}, {"orbit_size", to_json(o.size)}};
}

}  // namespace truncweyl
