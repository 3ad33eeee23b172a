#include "spinmub/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinmub {

Json to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const CVector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(to_json(v(i)));
  return j;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json to_json(const StateVector& s) { return to_json(s.vec()); }

Json to_json(const Basis& b) {
  Json vectors = Json::array();
  for (const StateVector& v : b.vectors) vectors.push_back(to_json(v));
  return Json{{"dim", b.dim}, {"vectors", std::move(vectors)}, {"label", b.label}};
}

Json to_json(const MubSet& set) {
  Json bases = Json::array();
  for (const Basis& b : set.bases) bases.push_back(to_json(b));
  return Json{{"dim", set.dim}, {"bases", std::move(bases)}};
}

Json to_json(const UnbiasednessReport& rep) {
  return Json{{"max_deviation", rep.max_deviation},
              {"max_orthonormality_deviation", rep.max_orthonormality_deviation},
              {"worst_pair",
               Json{{"basis_a", rep.worst_pair[0]},
                    {"vector_j", rep.worst_pair[1]},
                    {"basis_b", rep.worst_pair[2]},
                    {"vector_k", rep.worst_pair[3]}}},
              {"tol", rep.tol},
              {"pass", rep.pass}};
}

Json to_json(const SpinStats& st) {
  Json cov = Json::array();
  for (int r = 0; r < 3; ++r) {
    cov.push_back(Json::array({st.covariance(r, 0), st.covariance(r, 1), st.covariance(r, 2)}));
  }
  return Json{{"mean", to_json(st.mean)},
              {"length", st.length},
              {"variances", Json{{"x", st.var_x}, {"y", st.var_y}, {"z", st.var_z}}},
              {"covariance", std::move(cov)}};
}

Json to_json(const SqueezingReport& rep) {
  return Json{{"mean", to_json(rep.mean)},
              {"min_variance", rep.min_variance},
              {"max_transverse_variance", rep.max_transverse_variance},
              {"min_direction", to_json(rep.min_direction.vec())},
              {"threshold", rep.threshold},
              {"squeezed", rep.squeezed},
              {"degenerate_mean", rep.degenerate_mean}};
}

Json to_json(const Counts& counts, int basis_index) {
  return Json{{"shots", counts.shots},
              {"seed", counts.seed},
              {"counts", Json{{"basis_" + std::to_string(basis_index), counts.outcomes}}}};
}

Json to_json(const Circuit& c) {
  Json pulses = Json::array();
  for (const Pulse& p : c.pulses) {
    const char* kind = p.kind == PulseKind::rotation
                           ? "rotation"
                           : (p.kind == PulseKind::twisting ? "twisting" : "fixed-unitary");
    pulses.push_back(Json{{"kind", kind},
                          {"axis", to_json(p.axis.vec())},
                          {"duration", p.duration}});
  }
  return pulses;
}

Json to_json(const Tomography& t) {
  Json ev = Json::array();
  for (Eigen::Index i = 0; i < t.eigenvalues.size(); ++i) ev.push_back(t.eigenvalues(i));
  return Json{{"rho", to_json(t.rho_raw)},
              {"eigenvalues", std::move(ev)},
              {"negative_eigenvalues", t.negative},
              {"rho_projected", to_json(t.rho_projected)}};
}

Json to_json(const QkdResult& r) {
  return Json{{"rounds", r.rounds},
              {"bases", r.n_bases},
              {"sifted", r.sifted},
              {"errors", r.errors},
              {"sifted_fraction", r.sifted_fraction},
              {"qber", r.qber},
              {"alice_basis_hist", r.alice_basis_hist},
              {"bob_basis_hist", r.bob_basis_hist}};
}

Json to_json(const FourierStateStats& fs) {
  return Json{{"d", fs.d},
              {"s", fs.s},
              {"mean_x", fs.mean_x},
              {"var_z", fs.var_z},
              {"var_y", fs.var_y},
              {"coherent_bound", fs.coherent_bound},
              {"squeeze_threshold", fs.squeeze_threshold}};
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("complex value must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector cvector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("state must be a nonempty JSON array of [re, im] pairs");
  }
  CVector v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const Json& c : j) v(i++) = complex_from_json(c);
  return v;
}

namespace {

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

StateVector load_state_file(const std::string& path) {
  return StateVector::normalized(cvector_from_json(parse_file(path)));
}

std::array<std::array<double, 3>, 4> probabilities_from_counts_file(const std::string& path) {
  const Json j = parse_file(path);
  if (!j.contains("counts") || !j["counts"].is_object()) {
    throw std::invalid_argument("counts file must contain a \"counts\" object");
  }
  std::array<std::array<double, 3>, 4> probs{};
  for (int b = 0; b < 4; ++b) {
    const std::string key = "basis_" + std::to_string(b);
    if (!j["counts"].contains(key)) {
      throw std::invalid_argument("counts file missing key \"" + key + "\"");
    }
    const Json& row = j["counts"][key];
    if (!row.is_array() || row.size() != 3) {
      throw std::invalid_argument("counts row \"" + key + "\" must have 3 entries");
    }
    double total = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double c = row[static_cast<std::size_t>(k)].get<double>();
      if (c < 0) throw std::invalid_argument("negative count in \"" + key + "\"");
      probs[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)] = c;
      total += c;
    }
    if (total <= 0) throw std::invalid_argument("empty counts row \"" + key + "\"");
    for (int k = 0; k < 3; ++k) {
      probs[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)] /= total;
    }
  }
  return probs;
}

std::array<std::array<double, 3>, 4> probabilities_from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::array<std::array<double, 3>, 4> probs{};
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (row >= 4) throw std::invalid_argument("probability table must have exactly 4 rows");
    std::stringstream ss(line);
    std::string cell;
    int col = 0;
    while (std::getline(ss, cell, ',')) {
      if (col >= 3) throw std::invalid_argument("probability row must have exactly 3 columns");
      try {
        probs[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = std::stod(cell);
      } catch (const std::exception&) {
        throw std::invalid_argument("probability table cell is not a number: " + cell);
      }
      ++col;
    }
    if (col != 3) throw std::invalid_argument("probability row must have exactly 3 columns");
    ++row;
  }
  if (row != 4) throw std::invalid_argument("probability table must have exactly 4 rows");
  return probs;
}

}  // namespace spinmub
