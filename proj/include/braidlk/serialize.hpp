#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidlk/invariant.hpp"
#include "braidlk/moves.hpp"
#include "braidlk/verify.hpp"

namespace braidlk {

using Json = nlohmann::ordered_json;

/// {"X": {"j": coeff, ...}, "Y": {...}} with string integer keys in canonical
/// order; axes without terms are omitted and mean zero.
inline Json fav_to_json(const FreeAbelianValue& v) {
  Json x = Json::object(), y = Json::object();
  for (const auto& [key, coeff] : v.terms())
    (key.axis == Axis::x ? x : y)[std::to_string(key.j)] = coeff;
  Json out = Json::object();
  if (!x.empty()) out["X"] = std::move(x);
  if (!y.empty()) out["Y"] = std::move(y);
  return out;
}

/// Canonical-order sum like "X_-2 + 2X_2 - 2X_1 - X_0"; the zero value is "0".
inline std::string fav_to_human(const FreeAbelianValue& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [key, coeff] : v.terms()) {
    const std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (out.empty())
      out += coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    if (mag != 1) out += std::to_string(mag);
    out += key.axis == Axis::x ? "X_" : "Y_";
    out += std::to_string(key.j);
  }
  return out;
}

/// One trace line: {"step":1,"move":"braid@5:LU","word":"...","G":3}; the G
/// key is present only when the step carries an annotation.
inline Json trace_step_json(int step_number, const MoveTrace::Step& step) {
  Json line = Json::object();
  line["step"] = step_number;
  line["move"] = move_to_string(step.move);
  line["word"] = format_word(step.word);
  if (step.g) line["G"] = *step.g;
  return line;
}

inline Json check_rows_to_json(const std::vector<CheckResult>& rows) {
  Json arr = Json::array();
  for (const CheckResult& r : rows)
    arr.push_back(Json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return arr;
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// Generic check table: header "check,pass,detail".
inline std::string check_rows_to_csv(const std::vector<CheckResult>& rows) {
  std::string out = "check,pass,detail\n";
  for (const CheckResult& r : rows)
    out += csv_escape(r.name) + "," + (r.pass ? "true" : "false") + "," +
           csv_escape(r.detail) + "\n";
  return out;
}

/// The family sweep table: header "k,len,G,4k2,pass"; G is the a_k value.
inline std::string family_rows_to_csv(const std::vector<FamilyRow>& rows) {
  std::string out = "k,len,G,4k2,pass\n";
  for (const FamilyRow& r : rows)
    out += std::to_string(r.k) + "," + std::to_string(r.len) + "," +
           std::to_string(r.g_a) + "," + std::to_string(r.expected) + "," +
           (r.pass ? "true" : "false") + "\n";
  return out;
}

inline Json family_rows_to_json(const std::vector<FamilyRow>& rows) {
  Json arr = Json::array();
  for (const FamilyRow& r : rows)
    arr.push_back(Json{{"k", r.k},
                       {"len", r.len},
                       {"G_a", r.g_a},
                       {"G_b", r.g_b},
                       {"expected", r.expected},
                       {"pass", r.pass}});
  return arr;
}

}  // namespace braidlk
