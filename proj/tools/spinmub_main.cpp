// spinmub: spin-1 mutually unbiased bases toolkit.
//
// Subcommands cover MUB construction/verification, spin statistics and
// squeezing reports, unitary evolution, the twisting Hadamard, seeded
// projective measurement, state preparation, tomography, a qutrit QKD sift,
// higher-spin Fourier-state statistics, and plot data.
//
// Exit codes: 0 success, 1 numerical-validation failure (e.g. malformed
// state file), 2 usage error.

#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinmub/json_io.hpp"
#include "spinmub/mub.hpp"
#include "spinmub/protocol.hpp"
#include "spinmub/sampler.hpp"
#include "spinmub/spin_algebra.hpp"
#include "spinmub/squeezing.hpp"

namespace {

using spinmub::Json;

enum class Format { json, csv, pretty };

void add_format_option(CLI::App* cmd, Format& fmt) {
  cmd->add_option("--format", fmt, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}},
          CLI::ignore_case));
}

std::string scalar_text(const Json& v) { return v.dump(); }

void emit_pretty(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const std::string name = prefix.empty() ? key : prefix + "." + key;
      emit_pretty(value, name, os);
    }
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    int idx = 0;
    for (const Json& item : j) {
      emit_pretty(item, prefix + "[" + std::to_string(idx++) + "]", os);
    }
  } else if (j.is_array()) {
    os << prefix << ": ";
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << scalar_text(j[i]);
    os << "\n";
  } else {
    os << prefix << ": " << scalar_text(j) << "\n";
  }
}

void emit_csv(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const std::string name = prefix.empty() ? key : prefix + "." + key;
      emit_csv(value, name, os);
    }
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    int idx = 0;
    for (const Json& item : j) {
      emit_csv(item, prefix + "[" + std::to_string(idx++) + "]", os);
    }
  } else if (j.is_array()) {
    os << prefix;
    for (const Json& v : j) os << "," << scalar_text(v);
    os << "\n";
  } else {
    os << prefix << "," << scalar_text(j) << "\n";
  }
}

void emit(const Json& j, Format fmt) {
  switch (fmt) {
    case Format::json:
      std::cout << j.dump(2) << "\n";
      break;
    case Format::pretty:
      emit_pretty(j, "", std::cout);
      break;
    case Format::csv:
      emit_csv(j, "", std::cout);
      break;
  }
}

spinmub::Direction parse_axis(const std::string& text) {
  if (text == "x") return spinmub::Direction::x_axis();
  if (text == "y") return spinmub::Direction::y_axis();
  if (text == "z") return spinmub::Direction::z_axis();
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      parts.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw std::invalid_argument("axis component is not a number: " + cell);
    }
  }
  if (parts.size() == 2) return spinmub::Direction::polar(parts[0], parts[1]);
  if (parts.size() == 3) return {parts[0], parts[1], parts[2]};
  throw std::invalid_argument(
      "axis must be x|y|z, \"theta,phi\" (2 values) or \"nx,ny,nz\" (3 values)");
}

spinmub::MubSet pick_set(const std::string& which, double phi) {
  return which == "generated" ? spinmub::generated_mub_set(phi) : spinmub::standard_mubs3();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-1 mutually unbiased bases toolkit"};
  app.require_subcommand(1);

  // mubs show|verify
  auto* mubs = app.add_subcommand("mubs", "construct or verify MUB sets");
  mubs->require_subcommand(1);
  std::string mub_set_name = "standard";
  double mub_phi = 0.0;
  double mub_tol = 1e-10;
  Format mub_fmt = Format::json;
  auto* mubs_show = mubs->add_subcommand("show", "print the MUB set");
  auto* mubs_verify = mubs->add_subcommand("verify", "unbiasedness/orthonormality report");
  for (CLI::App* sub : {mubs_show, mubs_verify}) {
    sub->add_option("--set", mub_set_name, "standard|generated")
        ->check(CLI::IsMember({"standard", "generated"}));
    sub->add_option("--phi", mub_phi, "twisting-Hadamard angle (generated set)");
    add_format_option(sub, mub_fmt);
  }
  mubs_verify->add_option("--tol", mub_tol, "unbiasedness tolerance")
      ->check(CLI::PositiveNumber);

  // stats
  auto* stats = app.add_subcommand("stats", "mean spin and covariance of a state");
  std::string stats_state_file;
  double stats_alpha = 0.0;
  std::string stats_kind = "polarized";
  Format stats_fmt = Format::json;
  auto* stats_file_opt = stats->add_option("--state", stats_state_file, "state JSON file");
  auto* stats_alpha_opt = stats->add_option("--alpha", stats_alpha, "family parameter");
  stats->add_option("--kind", stats_kind, "polarized|unpolarized")
      ->check(CLI::IsMember({"polarized", "unpolarized"}));
  stats_file_opt->excludes(stats_alpha_opt);
  add_format_option(stats, stats_fmt);

  // squeeze
  auto* squeeze = app.add_subcommand("squeeze", "transverse-variance extremum report");
  std::string squeeze_state_file;
  Format squeeze_fmt = Format::json;
  squeeze->add_option("--state", squeeze_state_file, "state JSON file")->required();
  add_format_option(squeeze, squeeze_fmt);

  // evolve
  auto* evolve = app.add_subcommand("evolve", "apply exp(-i t S_n) or exp(-i t S_n^2)");
  std::string evolve_axis = "z";
  std::string evolve_kind;
  double evolve_t = 0.0;
  std::string evolve_state_file;
  Format evolve_fmt = Format::json;
  evolve->add_option("--axis", evolve_axis, "x|y|z or theta,phi or nx,ny,nz");
  evolve->add_option("--kind", evolve_kind, "rot|twist")
      ->required()
      ->check(CLI::IsMember({"rot", "twist"}));
  evolve->add_option("--t", evolve_t, "angle or twisting time")->required();
  evolve->add_option("--state", evolve_state_file, "state JSON file")->required();
  add_format_option(evolve, evolve_fmt);

  // hadamard
  auto* hadamard = app.add_subcommand("hadamard", "twisting Hadamard matrix");
  double hadamard_phi = 0.0;
  Format hadamard_fmt = Format::json;
  hadamard->add_option("--phi", hadamard_phi, "tetrahedral axis angle");
  add_format_option(hadamard, hadamard_fmt);

  // prepare
  auto* prepare_cmd = app.add_subcommand("prepare", "pulse circuit for one MUB vector");
  int prep_basis = 0, prep_index = 0;
  double prep_phi = 0.0;
  Format prep_fmt = Format::json;
  prepare_cmd->add_option("--basis", prep_basis, "basis index")->required()->check(CLI::Range(0, 3));
  prepare_cmd->add_option("--index", prep_index, "vector index")->required()->check(CLI::Range(0, 2));
  prepare_cmd->add_option("--phi", prep_phi, "tetrahedral axis angle");
  add_format_option(prepare_cmd, prep_fmt);

  // measure
  auto* measure_cmd = app.add_subcommand("measure", "seeded projective measurement");
  int meas_basis = 0;
  std::string meas_state_file;
  long long meas_shots = 0;
  std::uint64_t meas_seed = 0;
  double meas_phi = 0.0;
  Format meas_fmt = Format::json;
  measure_cmd->add_option("--basis", meas_basis, "basis index")->required()->check(CLI::Range(0, 3));
  measure_cmd->add_option("--state", meas_state_file, "state JSON file")->required();
  measure_cmd->add_option("--shots", meas_shots, "number of shots")
      ->required()
      ->check(CLI::Range(1LL, static_cast<long long>(1) << 40));
  measure_cmd->add_option("--seed", meas_seed, "RNG seed");
  measure_cmd->add_option("--phi", meas_phi, "tetrahedral axis angle");
  add_format_option(measure_cmd, meas_fmt);

  // tomography
  auto* tomo = app.add_subcommand("tomography", "reconstruct a density matrix");
  std::string tomo_counts_file, tomo_probs_file;
  double tomo_phi = 0.0;
  std::string tomo_set_name = "generated";
  Format tomo_fmt = Format::json;
  auto* tomo_counts_opt = tomo->add_option("--counts", tomo_counts_file, "counts JSON file");
  auto* tomo_probs_opt = tomo->add_option("--probs", tomo_probs_file, "4x3 probability CSV");
  tomo_counts_opt->excludes(tomo_probs_opt);
  tomo->add_option("--set", tomo_set_name, "standard|generated")
      ->check(CLI::IsMember({"standard", "generated"}));
  tomo->add_option("--phi", tomo_phi, "tetrahedral axis angle (generated set)");
  add_format_option(tomo, tomo_fmt);

  // qkd
  auto* qkd = app.add_subcommand("qkd", "qutrit key-distribution sift");
  long long qkd_rounds = 0;
  int qkd_bases = 2;
  std::uint64_t qkd_seed = 0;
  double qkd_phi = 0.0, qkd_noise = 0.0;
  Format qkd_fmt = Format::json;
  qkd->add_option("--rounds", qkd_rounds, "number of rounds")
      ->required()
      ->check(CLI::Range(1LL, static_cast<long long>(1) << 40));
  qkd->add_option("--bases", qkd_bases, "2|4")->check(CLI::IsMember({2, 4}));
  qkd->add_option("--seed", qkd_seed, "RNG seed");
  qkd->add_option("--phi", qkd_phi, "tetrahedral axis angle");
  qkd->add_option("--noise", qkd_noise, "depolarizing probability")
      ->check(CLI::Range(0.0, 1.0));
  add_format_option(qkd, qkd_fmt);

  // higher-spin
  auto* higher = app.add_subcommand("higher-spin", "flat Fourier-state statistics");
  int higher_d = 0;
  Format higher_fmt = Format::json;
  higher->add_option("--d", higher_d, "Hilbert-space dimension")
      ->required()
      ->check(CLI::Range(2, 1001));
  add_format_option(higher, higher_fmt);

  // fig1-data
  auto* fig1 = app.add_subcommand("fig1-data",
                                  "mean spins and squeezing ellipses of the three "
                                  "nontrivial standard bases (CSV)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const spinmub::SpinQuantum spin1 = spinmub::SpinQuantum::of(1.0);

    if (mubs_show->parsed()) {
      emit(spinmub::to_json(pick_set(mub_set_name, mub_phi)), mub_fmt);
    } else if (mubs_verify->parsed()) {
      const spinmub::MubSet set = pick_set(mub_set_name, mub_phi);
      emit(spinmub::to_json(spinmub::mub_set_valid(set, mub_tol)), mub_fmt);
    } else if (stats->parsed()) {
      std::optional<spinmub::StateVector> state;
      if (!stats_state_file.empty()) {
        state = spinmub::load_state_file(stats_state_file);
      } else if (stats_alpha_opt->count() > 0) {
        const auto kind = stats_kind == "polarized" ? spinmub::AlphaKind::polarized
                                                    : spinmub::AlphaKind::unpolarized;
        state = spinmub::alpha_state(kind, stats_alpha);
      } else {
        std::cerr << "stats requires --state or --alpha\n";
        return 2;
      }
      const auto sq = spinmub::SpinQuantum::from_dim(static_cast<int>(state->dim()));
      emit(spinmub::to_json(spinmub::spin_stats(*state, sq)), stats_fmt);
    } else if (squeeze->parsed()) {
      const spinmub::StateVector state = spinmub::load_state_file(squeeze_state_file);
      const auto sq = spinmub::SpinQuantum::from_dim(static_cast<int>(state.dim()));
      emit(spinmub::to_json(spinmub::squeezing_report(state, sq)), squeeze_fmt);
    } else if (evolve->parsed()) {
      const spinmub::StateVector state = spinmub::load_state_file(evolve_state_file);
      const auto sq = spinmub::SpinQuantum::from_dim(static_cast<int>(state.dim()));
      const spinmub::SpinOperators ops = spinmub::spin_operators(sq);
      const spinmub::Direction axis = parse_axis(evolve_axis);
      const spinmub::Operator u = evolve_kind == "rot"
                                      ? spinmub::rotation(ops, axis, evolve_t)
                                      : spinmub::twisting(ops, axis, evolve_t);
      emit(spinmub::to_json(spinmub::apply(u, state)), evolve_fmt);
    } else if (hadamard->parsed()) {
      const spinmub::Operator h = spinmub::twisting_hadamard(hadamard_phi);
      const spinmub::FourierCompletion fc = spinmub::fourier_completion(hadamard_phi);
      emit(Json{{"phi", hadamard_phi},
                {"matrix", spinmub::to_json(h.mat)},
                {"fourier_completion",
                 Json{{"twist_time", fc.twist_time},
                      {"rotation_angle", fc.rotation_angle},
                      {"residual", fc.residual}}}},
           hadamard_fmt);
    } else if (prepare_cmd->parsed()) {
      const spinmub::Preparation prep = spinmub::prepare(prep_basis, prep_index, prep_phi);
      emit(Json{{"basis", prep_basis},
                {"index", prep_index},
                {"phi", prep_phi},
                {"state", spinmub::to_json(prep.state)},
                {"circuit", spinmub::to_json(prep.circuit)}},
           prep_fmt);
    } else if (measure_cmd->parsed()) {
      const spinmub::StateVector state = spinmub::load_state_file(meas_state_file);
      const spinmub::Counts counts =
          spinmub::measure(state, meas_basis, meas_phi, meas_shots, meas_seed);
      emit(spinmub::to_json(counts, meas_basis), meas_fmt);
    } else if (tomo->parsed()) {
      std::array<std::array<double, 3>, 4> probs;
      if (!tomo_counts_file.empty()) {
        probs = spinmub::probabilities_from_counts_file(tomo_counts_file);
      } else if (!tomo_probs_file.empty()) {
        probs = spinmub::probabilities_from_csv_file(tomo_probs_file);
      } else {
        std::cerr << "tomography requires --counts or --probs\n";
        return 2;
      }
      const spinmub::MubSet set = pick_set(tomo_set_name, tomo_phi);
      emit(spinmub::to_json(spinmub::tomography(probs, set)), tomo_fmt);
    } else if (qkd->parsed()) {
      emit(spinmub::to_json(spinmub::qkd_sift(qkd_rounds, qkd_bases, qkd_phi, qkd_seed,
                                              qkd_noise)),
           qkd_fmt);
    } else if (higher->parsed()) {
      emit(spinmub::to_json(spinmub::fourier_state_stats(higher_d)), higher_fmt);
    } else if (fig1->parsed()) {
      // One row per (basis, vector) of the three nontrivial standard bases:
      // mean-spin xy coordinates, transverse-variance extrema, and the tilt
      // of the minimum-variance axis out of the xy plane, wrapped to
      // (-pi/2, pi/2]. The in-plane reference is mean x z-hat, which makes
      // the tilt 0 for the Fourier basis and -+(1/2)arctan(sqrt 6) for the
      // two twisted bases.
      const spinmub::MubSet set = spinmub::standard_mubs3();
      std::cout << "basis,vector,mean_x,mean_y,var_min,var_max,tilt_rad\n";
      for (int b = 1; b <= 3; ++b) {
        for (int k = 0; k < 3; ++k) {
          const spinmub::StateVector& v =
              set.bases[static_cast<std::size_t>(b)].vectors[static_cast<std::size_t>(k)];
          const spinmub::SqueezingReport rep = spinmub::squeezing_report(v, spin1);
          const spinmub::Vec3 m = rep.mean / rep.mean.norm();
          const spinmub::Vec3 e1 = m.cross(spinmub::Vec3::UnitZ()).normalized();
          const spinmub::Vec3 dir = rep.min_direction.vec();
          double tilt = std::atan2(dir.dot(spinmub::Vec3::UnitZ()), dir.dot(e1));
          if (tilt > std::numbers::pi / 2) tilt -= std::numbers::pi;
          if (tilt <= -std::numbers::pi / 2) tilt += std::numbers::pi;
          std::cout << b << "," << k << "," << Json(rep.mean.x()).dump() << ","
                    << Json(rep.mean.y()).dump() << "," << Json(rep.min_variance).dump() << ","
                    << Json(rep.max_transverse_variance).dump() << "," << Json(tilt).dump()
                    << "\n";
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
