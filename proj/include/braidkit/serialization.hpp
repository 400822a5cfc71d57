#pragma once

#include <nlohmann/json.hpp>
#include <limits>
#include <string>
#include <vector>

#include "braidkit/alexander.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/families.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/twisted_torus.hpp"

// JSON encodings of the public value types. All objects use fixed key
// names so emitted documents are stable across runs:
//
//   braid        {"strands": n, "word": [+-i, ...]}
//   normal form  {"strands": n, "inf": k, "factors": [[images 1..n], ...]}
//   polynomial   {"min_degree": m, "coeffs": [c0, c1, ...]}
//   knot         {"p": .., "q": .., "r": .., "n": ..}
//   report       {"claim", "params", "status", "witness", "elapsed_ms", "notes"}

namespace braidkit {

using Json = nlohmann::ordered_json;

class JsonFormatError : public Error {
 public:
  using Error::Error;
};

namespace detail {
inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <class T>
T integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw JsonFormatError(std::string("key '") + key + "' must be an integer");
  return v.get<T>();
}
}  // namespace detail

inline Json to_json(const BraidWord& w) {
  return Json{{"strands", w.strands()}, {"word", std::vector<int>(w.codes().begin(), w.codes().end())}};
}

inline BraidWord braid_from_json(const Json& j) {
  const int strands = detail::integer_field<int>(j, "strands");
  const Json& word = detail::field(j, "word");
  if (!word.is_array()) throw JsonFormatError("'word' must be an array");
  std::vector<int> codes;
  codes.reserve(word.size());
  for (const auto& c : word) {
    if (!c.is_number_integer()) throw JsonFormatError("letters must be integers");
    codes.push_back(c.get<int>());
  }
  return BraidWord(strands, std::move(codes));
}

inline Json to_json(const NormalForm& nf) {
  Json factors = Json::array();
  for (const auto& f : nf.factors) {
    std::vector<int> images;
    for (int v : f.perm().images()) images.push_back(v + 1);
    factors.push_back(images);
  }
  return Json{{"strands", nf.strands}, {"inf", nf.inf}, {"factors", factors}};
}

inline NormalForm normal_form_from_json(const Json& j) {
  NormalForm nf;
  nf.strands = detail::integer_field<int>(j, "strands");
  nf.inf = detail::integer_field<long>(j, "inf");
  for (const auto& f : detail::field(j, "factors")) {
    std::vector<int> images;
    for (const auto& v : f) images.push_back(v.get<int>() - 1);
    if (static_cast<int>(images.size()) != nf.strands) throw JsonFormatError("factor length != strands");
    nf.factors.emplace_back(Permutation(std::move(images)));
  }
  return nf;
}

namespace detail {
inline Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

inline BigInt big_from_json(const Json& v) {
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_string()) return BigInt(v.get<std::string>());
  throw JsonFormatError("coefficient must be an integer or a decimal string");
}
}  // namespace detail

inline Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(detail::big_to_json(c));
  return Json{{"min_degree", p.min_degree()}, {"coeffs", coeffs}};
}

inline LaurentPoly poly_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : detail::field(j, "coeffs")) coeffs.push_back(detail::big_from_json(c));
  return LaurentPoly(std::move(coeffs), detail::integer_field<long>(j, "min_degree"));
}

inline Json to_json(const TwistedTorusKnot& k) { return Json{{"p", k.p}, {"q", k.q}, {"r", k.r}, {"n", k.n}}; }

inline TwistedTorusKnot knot_from_json(const Json& j) {
  return {detail::integer_field<long>(j, "p"), detail::integer_field<long>(j, "q"),
          detail::integer_field<long>(j, "r"), detail::integer_field<long>(j, "n")};
}

inline Json to_json(const Classification& c) {
  Json seifert = nullptr;
  if (c.seifert_h)
    seifert = Json{{"k", c.seifert_h->k}, {"base", "disk"},
                   {"multiplicities", {c.seifert_h->data.a1, c.seifert_h->data.a2}}};
  return Json{{"primitive_H", c.primitive_h},
              {"primitive_Hprime", c.primitive_h_prime},
              {"seifert_H", seifert},
              {"verdict", to_string(c.verdict)}};
}

inline Json to_json(const SurgeryResult& s) {
  Json out{{"slope", s.slope}, {"kind", to_string(s.kind)}};
  if (s.kind == SurgeryKind::sfs_s2)
    out["multiplicities"] = {s.multiplicities[0], s.multiplicities[1], s.multiplicities[2]};
  return out;
}

inline Json to_json(const VerificationReport& r, bool with_timing = true) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return Json{{"claim", r.claim},
              {"params", params},
              {"status", to_string(r.status)},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
              {"elapsed_ms", with_timing ? r.elapsed.count() / 1000.0 : 0.0},
              {"notes", r.notes}};
}

}  // namespace braidkit
