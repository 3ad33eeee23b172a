#pragma once

#include <string>

#include <json.hpp>

#include "spinmub/mub.hpp"
#include "spinmub/protocol.hpp"
#include "spinmub/sampler.hpp"
#include "spinmub/squeezing.hpp"
#include "spinmub/types.hpp"

namespace spinmub {

// Complex numbers serialize as [re, im]; states as arrays of such pairs in
// descending-m order; Basis as {"dim", "label", "vectors"}. Keys keep
// insertion order so identical inputs give byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const Complex& c);
Json to_json(const CVector& v);
Json to_json(const Matrix& m);
Json to_json(const Vec3& v);
Json to_json(const StateVector& s);
Json to_json(const Basis& b);
Json to_json(const MubSet& set);
Json to_json(const UnbiasednessReport& rep);
Json to_json(const SpinStats& st);
Json to_json(const SqueezingReport& rep);
Json to_json(const Counts& counts, int basis_index);
Json to_json(const Circuit& c);
Json to_json(const Tomography& t);
Json to_json(const QkdResult& r);
Json to_json(const FourierStateStats& fs);

Complex complex_from_json(const Json& j);
CVector cvector_from_json(const Json& j);

/// Reads a state file: JSON array of [re, im] pairs, descending m. Throws
/// std::invalid_argument naming the violated invariant (wrong shape, or norm
/// off unit by more than 1e-6).
StateVector load_state_file(const std::string& path);

/// Counts file for tomography: {"shots": N, "seed": S,
/// "counts": {"basis_0": [n,n,n], ..., "basis_3": [n,n,n]}}.
std::array<std::array<double, 3>, 4> probabilities_from_counts_file(const std::string& path);

/// Probability table: CSV, 4 rows x 3 columns.
std::array<std::array<double, 3>, 4> probabilities_from_csv_file(const std::string& path);

}  // namespace spinmub
