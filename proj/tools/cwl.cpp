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
//
// Command-line driver: classify, sweep, cascade, subband, intertwine.
// Exit codes: 0 success, 2 invalid input or filter, 3 I/O failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cwl/cascade.hpp"
#include "cwl/classify.hpp"
#include "cwl/cycles.hpp"
#include "cwl/json_io.hpp"
#include "cwl/subband.hpp"
#include "cwl/transfer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decimal input within 1e-7 of a quarter turn snaps to the exact multiple
/// of pi/2, so truncated approximations of the singular points (e.g.
/// "1.5707963") classify like the singular points themselves.
double snap_quarter_turns(double v) {
  for (int k = 0; k <= 4; ++k) {
    const double exact = double(k) * (M_PI / 2.0);
    if (std::abs(v - exact) < 1e-7) return exact;
  }
  return v;
}

/// Parses an angle given either in radians ("1.5707963") or symbolically as a
/// fraction of pi ("pi", "7pi/6", "-pi/6", "0.5pi"), keeping the singular
/// points exact in floating point.
double parse_angle(const std::string& text) {
  const auto pos = text.find("pi");
  if (pos == std::string::npos) {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad angle: " + text);
    return snap_quarter_turns(value);
  }
  const std::string head = text.substr(0, pos);
  const std::string tail = text.substr(pos + 2);
  double num = 1.0;
  if (head == "-")
    num = -1.0;
  else if (!head.empty())
    num = std::stod(head);
  double den = 1.0;
  if (!tail.empty()) {
    if (tail[0] != '/') throw std::invalid_argument("bad angle: " + text);
    den = std::stod(tail.substr(1));
  }
  return num * M_PI / den;
}

std::string fmt(double x) { return cwl::format_double(x); }

struct FilterChoice {
  std::string theta_text;
  bool use_haar = false;
  std::string coeffs_path;

  /// Resolves to a bank; optionally reports the angle it came from.
  cwl::FilterBank resolve(std::optional<double>* theta_out = nullptr) const {
    if (use_haar) return cwl::haar();
    if (!coeffs_path.empty()) {
      std::ifstream in(coeffs_path);
      if (!in) throw IoError("cannot open " + coeffs_path);
      nlohmann::json j;
      try {
        in >> j;
        return cwl::filter_bank_from_json(j);
      } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad coefficient file: ") + e.what());
      }
    }
    if (theta_text.empty())
      throw std::invalid_argument("specify --theta, --haar, or --coeffs");
    const double theta = cwl::ThetaPoint(parse_angle(theta_text)).theta;
    if (theta_out) *theta_out = theta;
    return cwl::from_theta(theta);
  }

  void add_options(CLI::App* cmd) {
    cmd->add_option("--theta", theta_text, "angle in radians or a pi-fraction like 7pi/6");
    cmd->add_flag("--haar", use_haar, "use the Haar bank");
    cmd->add_option("--coeffs", coeffs_path, "JSON coefficient file");
  }
};

void write_text(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << body;
  if (!out.good()) throw IoError("write failed: " + path);
}

void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty())
    std::cout << body;
  else
    write_text(out_path, body);
}

int run_classify(const FilterChoice& choice, const std::string& out_path, double tol,
                 std::optional<long> seed, bool as_csv) {
  std::optional<double> theta;
  const cwl::FilterBank bank = choice.resolve(&theta);
  const cwl::ValidationReport val = cwl::validate(bank);
  nlohmann::json doc{{"schema", cwl::kSchema}};
  if (theta) doc["theta"] = *theta;
  if (seed) doc["seed"] = *seed;
  doc["filter"] = cwl::to_json(bank);
  doc["validation"] = cwl::to_json(val);
  if (!val.ok(tol)) {
    doc["error"] = "invalid filter: residuals exceed tolerance";
    doc["tolerance"] = tol;
    emit(out_path, doc.dump(2) + "\n");
    return kExitInvalid;
  }
  const cwl::IsometrySystem sys = cwl::build_V(bank);
  const auto rep = cwl::spectrum(cwl::build_sigma(sys));
  const auto cls = cwl::classify(bank);
  const bool tight = cwl::frame_classify(bank) == cwl::FrameStatus::tight_frame_only;
  if (as_csv) {
    std::ostringstream csv;
    csv << "theta,commutant_dim,peripheral_k,frame_status,irreducible\n";
    csv << (theta ? fmt(*theta) : std::string("n/a")) << ',' << cls.commutant_dim << ','
        << cls.peripheral_group_order << ','
        << (tight ? "tight_frame_only" : "orthonormal_basis") << ','
        << (cls.irreducible ? 1 : 0) << '\n';
    emit(out_path, csv.str());
    return kExitOk;
  }
  doc["spectrum"] = cwl::to_json(rep);
  doc["classification"] = cwl::to_json(cls);
  doc["frame"] = tight ? "tight_frame_only" : "orthonormal_basis";
  doc["cycles"] = cwl::to_json(
      cwl::find_cycles(cwl::circle_zeros(bank.rows[0]),
                       std::max(1, bank.support_max() - bank.support_min())));
  emit(out_path, doc.dump(2) + "\n");
  return kExitOk;
}

int run_sweep(int grid, std::vector<double> range, const std::string& out_path,
              bool as_json) {
  if (grid < 2) throw std::invalid_argument("sweep: --grid must be >= 2");
  double lo = 0.0, hi = 2.0 * M_PI;
  if (!range.empty()) {
    if (range.size() != 2) throw std::invalid_argument("sweep: --range needs two values");
    lo = range[0];
    hi = range[1];
    if (!(hi > lo)) throw std::invalid_argument("sweep: empty range");
  }
  std::ostringstream csv;
  nlohmann::json rows = nlohmann::json::array();
  csv << "theta,commutant_dim,peripheral_k,frame_status,eigenvalues\n";
  for (int k = 0; k < grid; ++k) {
    const double theta = lo + (hi - lo) * (double(k) / double(grid));
    const cwl::FilterBank bank = cwl::from_theta(theta);
    const auto rep = cwl::spectrum(cwl::build_sigma(cwl::build_V(bank)));
    const auto frame = cwl::frame_classify(bank);
    const char* status = frame == cwl::FrameStatus::tight_frame_only
                             ? "tight_frame_only"
                             : "orthonormal_basis";
    if (as_json) {
      rows.push_back({{"theta", theta},
                      {"commutant_dim", rep.fixed_space_dim},
                      {"peripheral_k", rep.peripheral_group_order},
                      {"frame_status", status},
                      {"spectrum", cwl::to_json(rep)}});
      continue;
    }
    csv << fmt(theta) << ',' << rep.fixed_space_dim << ',' << rep.peripheral_group_order
        << ',' << status << ',';
    for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) {
      const auto& cl = rep.eigenvalues[i];
      if (i) csv << ';';
      csv << fmt(cl.value.real()) << ':' << fmt(cl.value.imag()) << ':'
          << cl.multiplicity;
    }
    csv << '\n';
  }
  if (as_json) {
    const nlohmann::json doc{{"schema", cwl::kSchema}, {"rows", rows}};
    emit(out_path, doc.dump(2) + "\n");
  } else {
    emit(out_path, csv.str());
  }
  return kExitOk;
}

int run_cascade(const FilterChoice& choice, int level, int iters, bool mirror,
                const std::string& out_path, std::optional<long> seed) {
  std::optional<double> theta;
  const cwl::FilterBank bank = choice.resolve(&theta);
  if (!cwl::validate(bank).ok(1e-9))
    throw std::invalid_argument("cascade: invalid filter");
  cwl::CascadeResult res = cwl::cascade_father(bank, iters, level);
  res = cwl::cascade_mother(bank, res);

  std::ostringstream csv;
  csv << "# level=" << level << " iterations=" << iters << " theta="
      << (theta ? fmt(*theta) : std::string("n/a")) << "\n";
  csv << "x,phi,psi\n";
  const double h = res.step();
  for (long i = 0; i < res.phi.size(); ++i)
    csv << fmt(double(i) * h) << ',' << fmt(res.phi[i]) << ',' << fmt(res.psi[i]) << '\n';

  nlohmann::json meta{{"schema", cwl::kSchema},
                      {"level", level},
                      {"iterations", iters},
                      {"support", res.support},
                      {"integral_phi", res.integral_phi()}};
  if (theta) meta["theta"] = *theta;
  if (seed) meta["seed"] = *seed;
  if (mirror) {
    const auto mir = cwl::mirror_check(bank, level, iters);
    meta["mirror"] = {{"father_dev", mir.father_dev}, {"mother_dev", mir.mother_dev}};
  }
  if (out_path.empty()) {
    std::cout << csv.str();
    std::cout << meta.dump(2) << "\n";
  } else {
    write_text(out_path, csv.str());
    write_text(out_path + ".json", meta.dump(2) + "\n");
  }
  return kExitOk;
}

cwl::Signal read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  cwl::Signal x;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("index", 0) == 0) continue;
    std::istringstream row(line);
    std::string tok;
    int idx = 0;
    double re = 0.0, im = 0.0;
    try {
      if (!std::getline(row, tok, ',')) throw std::invalid_argument("short row");
      idx = std::stoi(tok);
      if (!std::getline(row, tok, ',')) throw std::invalid_argument("short row");
      re = std::stod(tok);
      if (std::getline(row, tok, ',')) im = std::stod(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("subband: cannot parse signal row: " + line);
    }
    x[idx] = cwl::Complex(re, im);
  }
  cwl::prune(x);
  return x;
}

int run_subband(const FilterChoice& choice, const std::string& signal_path,
                bool roundtrip, const std::string& out_prefix) {
  const cwl::FilterBank bank = choice.resolve();
  if (!cwl::validate(bank).ok(1e-9))
    throw std::invalid_argument("subband: invalid filter");
  const cwl::Signal x = read_signal_csv(signal_path);
  const auto bands = cwl::subband_analyze(bank, x);
  for (std::size_t j = 0; j < bands.size(); ++j) {
    std::ostringstream csv;
    csv << "index,re,im\n";
    for (const auto& [n, v] : bands[j])
      csv << n << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
    if (out_prefix.empty())
      std::cout << "# band " << j << "\n" << csv.str();
    else
      write_text(out_prefix + "_band" + std::to_string(j) + ".csv", csv.str());
  }
  if (roundtrip) {
    const cwl::Signal back = cwl::subband_synthesize(bank, bands);
    cwl::Signal diff = back;
    cwl::add_scaled(diff, cwl::Complex(-1.0, 0.0), x);
    double worst = 0.0;
    for (const auto& [n, v] : diff) worst = std::max(worst, std::abs(v));
    std::cout << "max_reconstruction_error=" << fmt(worst) << "\n";
  }
  return kExitOk;
}

int run_intertwine(const std::string& theta_a, const std::string& theta_b,
                   const std::string& out_path) {
  const double ta = cwl::ThetaPoint(parse_angle(theta_a)).theta;
  const double tb = cwl::ThetaPoint(parse_angle(theta_b)).theta;
  const cwl::FilterBank a = cwl::from_theta(ta), b = cwl::from_theta(tb);
  const Eigen::MatrixXcd basis = cwl::intertwiner_fixed_basis(a, b);
  const int n = cwl::build_V(a).dim();
  nlohmann::json mats = nlohmann::json::array();
  for (int c = 0; c < basis.cols(); ++c) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < n; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int cc = 0; cc < n; ++cc) {
        const cwl::Complex v = basis(n * r + cc, c);
        row.push_back({{"re", v.real()}, {"im", v.imag()}});
      }
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  const nlohmann::json doc{{"schema", cwl::kSchema},
                           {"theta_a", ta},
                           {"theta_b", tb},
                           {"dim", int(basis.cols())},
                           {"basis", mats}};
  emit(out_path, doc.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compactly supported wavelet filter banks and their Cuntz-algebra "
               "representations"};
  app.require_subcommand(1);

  std::string out_path;
  double tol = 1e-9;
  std::optional<long> seed;
  app.add_option("--out", out_path, "output path (stdout when omitted)");
  app.add_option("--tol", tol, "filter acceptance tolerance");
  long seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "seed recorded in reports");
  bool want_json = false, want_csv = false;
  auto* json_flag = app.add_flag("--json", want_json, "JSON output where applicable");
  app.add_flag("--csv", want_csv, "CSV output where applicable")->excludes(json_flag);

  FilterChoice classify_choice, cascade_choice, subband_choice;

  auto* cmd_classify = app.add_subcommand("classify", "classify one filter bank");
  cmd_classify->fallthrough();
  classify_choice.add_options(cmd_classify);

  auto* cmd_sweep = app.add_subcommand("sweep", "classification sweep over the circle");
  cmd_sweep->fallthrough();
  int grid = 0;
  std::vector<double> range;
  cmd_sweep->add_option("--grid", grid, "number of grid points")->required();
  cmd_sweep->add_option("--range", range, "angle range [a, b)")->expected(2);

  auto* cmd_cascade = app.add_subcommand("cascade", "scaling/mother function samples");
  cmd_cascade->fallthrough();
  int level = 8, iters = 10;
  bool mirror = false;
  cascade_choice.add_options(cmd_cascade);
  cmd_cascade->add_option("--level", level, "dyadic grid level L");
  cmd_cascade->add_option("--iters", iters, "cascade iterations");
  cmd_cascade->add_flag("--mirror", mirror, "also report mirror deviations");

  auto* cmd_subband = app.add_subcommand("subband", "analyze/reconstruct a signal");
  cmd_subband->fallthrough();
  std::string signal_path;
  bool roundtrip = false;
  subband_choice.add_options(cmd_subband);
  cmd_subband->add_option("--signal", signal_path, "input CSV (index,re,im)")->required();
  cmd_subband->add_flag("--roundtrip", roundtrip, "print the reconstruction error");

  auto* cmd_intertwine = app.add_subcommand("intertwine", "intertwiner space of two angles");
  cmd_intertwine->fallthrough();
  std::string theta_a, theta_b;
  cmd_intertwine->add_option("--theta-a", theta_a, "first angle")->required();
  cmd_intertwine->add_option("--theta-b", theta_b, "second angle")->required();

  CLI11_PARSE(app, argc, argv);
  if (seed_opt->count() > 0) seed = seed_value;

  try {
    if (cmd_classify->parsed())
      return run_classify(classify_choice, out_path, tol, seed, want_csv);
    if (cmd_sweep->parsed()) return run_sweep(grid, range, out_path, want_json);
    if (cmd_cascade->parsed())
      return run_cascade(cascade_choice, level, iters, mirror, out_path, seed);
    if (cmd_subband->parsed())
      return run_subband(subband_choice, signal_path, roundtrip, out_path);
    if (cmd_intertwine->parsed()) return run_intertwine(theta_a, theta_b, out_path);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
