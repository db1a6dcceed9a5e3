// Copyright 2026 The Apollon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APOLLON_CONTRACTION_HPP
#define APOLLON_CONTRACTION_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "apollon/apollonian.hpp"

namespace apollon {

/// The optimal contraction coefficient tanh(delta/4); 0 at 0, 1 at
/// +infinity.
double birkhoff_coefficient(double delta);

/// Hilbert distance of s1,s2 in K=(a1,a2) relative to J=(0,inf):
/// d_J = |log(s2/s1)|.
double j_metric(double s1, double s2);

/// d_K(s1,s2) = |log [s1,s2;a1,a2]| on the interval K=(a1,a2); a2 may be
/// +infinity, in which case the factors involving a2 drop to 1.
double hilbert_1d(double a1, double a2, double s1, double s2);

enum class DeltaProvenance { closed_form, sampled_lower_bound };

/// Nested proper subsets U in V together with delta = diam_V(U).
///
/// Closed-form deltas exist for the calibrated family: concentric balls
/// B(0,rho) in B(0,R), directly or after a stored conformal map, with
/// delta = 2 log((R+rho)/(R-rho)) and tanh(delta/4) = rho/R.  Anything
/// else carries a sampled lower bound which cannot certify contraction.
class NestedPair {
 public:
  static NestedPair concentric(Eigen::Index dim, double rho, double R);
  /// The image of a concentric pair under m; delta is invariant.
  static NestedPair transformed(const ConformalMap& m, double rho, double R);
  /// General nesting; delta is the max pairwise d_V over the given sample
  /// points of U, flagged as a lower bound.  Validates V^c subset of U^c.
  static NestedPair with_sampled_delta(Domain inner, Domain outer,
                                       const std::vector<ExtendedPoint>& samples);

  const Domain& inner() const { return inner_; }   // U
  const Domain& outer() const { return outer_; }   // V
  double delta() const { return delta_; }
  DeltaProvenance provenance() const { return provenance_; }
  /// Stored map for the transformed family (identity for plain concentric).
  const std::optional<ConformalMap>& base_map() const { return base_map_; }
  std::optional<double> base_rho() const { return base_rho_; }
  std::optional<double> base_R() const { return base_R_; }

 private:
  NestedPair(Domain inner, Domain outer, double delta, DeltaProvenance prov);

  Domain inner_;
  Domain outer_;
  double delta_;
  DeltaProvenance provenance_;
  std::optional<ConformalMap> base_map_;
  std::optional<double> base_rho_;
  std::optional<double> base_R_;
};

/// diam_V(U) and how it was obtained.
std::pair<double, DeltaProvenance> diameter(const NestedPair& np);

struct ContractionReport {
  std::size_t pairs_evaluated = 0;
  std::size_t pairs_skipped = 0;  // d_U = 0, excluded from ratios
  double max_ratio = 0.0;
  std::size_t argmax_index = 0;
  double bound = 0.0;  // tanh(delta/4)
  double margin = 0.0; // bound - max_ratio
  bool pass = false;
};

using PointPair = std::pair<ExtendedPoint, ExtendedPoint>;

/// Checks d_V <= tanh(delta/4) d_U + tol over the sample pairs.  Requires
/// closed-form delta; sampled lower bounds cannot certify the bound side.
ContractionReport verify_ucp(const NestedPair& np,
                             const std::vector<PointPair>& pairs,
                             double tol = 1e-9);

struct BirkhoffGridResult {
  double max_ratio = 0.0;   // max d_J/d_K over distinct grid pairs
  double argmax_s = 0.0;    // diagonal argmax of the infinitesimal ratio
  double bound = 0.0;       // tanh(log(a2/a1)/4)
};

/// m x m grid check of Birkhoff's inequality on K=(a1,a2) in J=(0,inf).
BirkhoffGridResult birkhoff_grid_check(double a1, double a2, int m);

/// Whether m(V) lies inside U (open containment; tangency of the open
/// image to an obstacle boundary is allowed).  V must be representable as
/// a ball-type region.
bool in_gamma(const ConformalMap& m, const NestedPair& np);

/// Checks d_V(m v1, m v2) <= tanh(delta/4) d_V(v1,v2) + tol on pairs in V.
ContractionReport lipschitz_report(const ConformalMap& m,
                                   const NestedPair& np,
                                   const std::vector<PointPair>& pairs,
                                   double tol = 1e-9);

/// Deterministic sample pairs in U for a concentric or transformed nesting.
/// A fraction of the pairs is concentrated near the ball center, where the
/// contraction bound is tight.
std::vector<PointPair> sample_nesting_pairs(const NestedPair& np,
                                            std::size_t count,
                                            std::uint64_t seed,
                                            double near_center_fraction = 0.2);

}  // namespace apollon

#endif  // APOLLON_CONTRACTION_HPP
