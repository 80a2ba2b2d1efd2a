#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

/// Polystable type xi = (d^1..d^s; z_1..z_s): summand dimension vectors with
/// multiplicities.
struct PolystableType {
  std::vector<DimensionVector> parts;
  std::vector<int> multiplicities;

  /// sum_k z_k d^k
  DimensionVector total(std::size_t vertex_count) const {
    DimensionVector sum(vertex_count);
    for (std::size_t k = 0; k < parts.size(); ++k) sum = sum + parts[k].scaled(multiplicities.at(k));
    return sum;
  }
};

struct LocalQuiverDatum {
  Quiver quiver;
  DimensionVector d;
  DimensionVector n;
};

/// Q_xi has one vertex per summand and delta_kl - <d^k, d^l> arrows k -> l;
/// d_xi = (z_k), n_xi = (n . d^k).
inline LocalQuiverDatum local_quiver(const Quiver& q, const DimensionVector& n, const PolystableType& xi) {
  q.check_vector(n);
  const std::size_t s = xi.parts.size();
  if (s == 0) throw InputError("polystable type needs at least one summand");
  if (xi.multiplicities.size() != s) throw InputError("polystable type needs one multiplicity per summand");
  for (std::size_t k = 0; k < s; ++k) {
    q.check_vector(xi.parts[k]);
    if (xi.parts[k].is_zero()) throw InputError("polystable summands must be non-zero");
    if (xi.multiplicities[k] <= 0) throw InputError("multiplicities must be positive");
  }
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t k = 0; k < s; ++k) names.push_back(std::to_string(k + 1));
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t l = 0; l < s; ++l) {
      const long count = (k == l ? 1 : 0) - euler_form(q, xi.parts[k], xi.parts[l]);
      if (count < 0)
        throw InfeasibleTypeError("negative arrow count " + std::to_string(count) + " from summand " +
                                  std::to_string(k + 1) + " to " + std::to_string(l + 1));
      for (long c = 0; c < count; ++c) arrows.emplace_back(k, l);
    }
  }
  std::vector<int> dz(xi.multiplicities.begin(), xi.multiplicities.end());
  std::vector<int> nz;
  for (const auto& part : xi.parts) nz.push_back(static_cast<int>(dot(n, part)));
  return {Quiver(std::move(names), arrows), DimensionVector(std::move(dz)), DimensionVector(std::move(nz))};
}

}  // namespace qmod
