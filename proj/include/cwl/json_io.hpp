// Copyright 2026 The CWL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CWL_JSON_IO_HPP
#define CWL_JSON_IO_HPP

#include <cstdio>
#include <string>

#include <json.hpp>

#include "cwl/classify.hpp"
#include "cwl/cycles.hpp"
#include "cwl/filter_bank.hpp"
#include "cwl/transfer.hpp"

namespace cwl {

inline constexpr const char* kSchema = "cwl/1";

/// Stable float formatting: 17 significant digits, byte-identical re-runs.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline nlohmann::json to_json(const FilterBank& bank) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : bank.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& [n, a] : row)
      r.push_back({{"n", n}, {"re", a.real()}, {"im", a.imag()}});
    rows.push_back(r);
  }
  return {{"scale", bank.scale}, {"genus", bank.genus}, {"rows", rows}};
}

inline FilterBank filter_bank_from_json(const nlohmann::json& j) {
  FilterBank bank;
  bank.scale = j.at("scale").get<int>();
  bank.genus = j.at("genus").get<int>();
  for (const auto& row : j.at("rows")) {
    CoeffMap r;
    for (const auto& term : row)
      r[term.at("n").get<int>()] =
          Complex(term.at("re").get<double>(), term.value("im", 0.0));
    prune(r);
    bank.rows.push_back(std::move(r));
  }
  if (bank.scale < 2 || bank.rows.size() != std::size_t(bank.scale))
    throw std::invalid_argument("filter_bank_from_json: need one row per subband");
  return bank;
}

inline nlohmann::json to_json(const SpectrumReport& rep) {
  nlohmann::json eig = nlohmann::json::array();
  for (const auto& cl : rep.eigenvalues)
    eig.push_back({{"re", cl.value.real()},
                   {"im", cl.value.imag()},
                   {"mult", cl.multiplicity}});
  return {{"eigenvalues", eig},
          {"fixed_space_dim", rep.fixed_space_dim},
          {"peripheral_group_order", rep.peripheral_group_order}};
}

inline nlohmann::json to_json(const RepresentationClassification& cls) {
  nlohmann::json j = {{"irreducible", cls.irreducible},
                      {"commutant_dim", cls.commutant_dim},
                      {"peripheral_group_order", cls.peripheral_group_order}};
  if (cls.num_irreducible_summands)
    j["num_irreducible_summands"] = *cls.num_irreducible_summands;
  else
    j["num_irreducible_summands"] = "undetermined";
  if (cls.uhf_summands)
    j["uhf_summands"] = *cls.uhf_summands;
  else
    j["uhf_summands"] = "undetermined";
  return j;
}

/// Zero angles are reported in turns (fractions of 2 pi); cycle members as
/// exact fractions num/den.
inline nlohmann::json to_json(const CycleSet& cs) {
  nlohmann::json zeros = nlohmann::json::array();
  for (const Complex& z : cs.zeros) {
    double t = std::arg(z) / (2.0 * M_PI);
    if (t < 0.0) t += 1.0;
    zeros.push_back(t);
  }
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& cyc : cs.cycles) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& [num, den] : cyc.turns)
      members.push_back({{"num", num}, {"den", den}});
    cycles.push_back({{"length", cyc.turns.size()},
                      {"trivial", cyc.trivial()},
                      {"members_turns", members}});
  }
  nlohmann::json borderline = nlohmann::json::array();
  for (const Complex& z : cs.borderline)
    borderline.push_back({{"re", z.real()}, {"im", z.imag()}});
  return {{"zeros_turns", zeros},
          {"cycles", cycles},
          {"contains_nontrivial", cs.contains_nontrivial},
          {"borderline_roots", borderline}};
}

inline nlohmann::json to_json(const ValidationReport& rep) {
  return {{"row_orthonormality", rep.row_orthonormality},
          {"cross_row", rep.cross_row},
          {"normalization", rep.normalization},
          {"max_residual", rep.max_residual()}};
}

inline nlohmann::json trig_poly_to_json(const CoeffMap& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [n, c] : p)
    j[std::to_string(n)] = {c.real(), c.imag()};
  return j;
}

inline CoeffMap trig_poly_from_json(const nlohmann::json& j) {
  CoeffMap p;
  for (auto it = j.begin(); it != j.end(); ++it)
    p[std::stoi(it.key())] = Complex(it.value().at(0), it.value().at(1));
  prune(p);
  return p;
}

}  // namespace cwl

#endif  // CWL_JSON_IO_HPP
