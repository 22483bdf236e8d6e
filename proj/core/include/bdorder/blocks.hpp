// Copyright 2026 The bdorder Authors
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

#ifndef BDORDER_BLOCKS_HPP_
#define BDORDER_BLOCKS_HPP_

// Linkage classes, the antichain semisimplicity certificate, defect-1 block
// data and the orbit decomposition of the parameters.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdorder/combinatorics.hpp"
#include "bdorder/corder.hpp"
#include "bdorder/exactmath.hpp"

namespace bdorder {

/// Classes of the transitive closure of "c_lambda - c_mu is an integer".
/// This is only the necessary condition for lying in one block.
struct LinkagePartition {
  std::vector<Multipartition> labels;
  // Indices into `labels`; classes ordered by their smallest index.
  std::vector<std::vector<std::size_t>> classes;

  bool all_singletons() const;
};

LinkagePartition linkage_partition(const ParameterSet& params);

enum class SemisimplicityVerdict { kSemisimple, kNotDecided };

struct SemisimplicityResult {
  SemisimplicityVerdict verdict;
  // The order poset; an antichain when the verdict is semisimple.
  OrderPoset certificate;
  // A comparable pair when not decided.
  std::optional<std::pair<Multipartition, Multipartition>> witness;
};

std::string to_string(SemisimplicityVerdict v);

SemisimplicityResult semisimplicity_check(const ParameterSet& params);

/// [Delta(chi_i) : L(chi_j)] for a defect-1 block chi_1 < ... < chi_size.
struct DecompositionMatrix {
  std::vector<std::vector<BigInt>> entries;

  std::size_t size() const { return entries.size(); }
  std::string to_tsv() const;
};

/// Delta_1 = L_1 and Delta_i = L_i + L_{i-1}: the inverse of the alternating
/// sums [L(chi_i)] = sum_{j<=i} (-1)^{i+j} [Delta(chi_j)].
DecompositionMatrix defect1_decomposition_matrix(int size);

/// The alternating-sum matrix itself: entry (i, j) = (-1)^{i+j} for j <= i.
std::vector<std::vector<BigInt>> alternating_sum_matrix(int size);

enum class Defect1Verdict { kDefectOnePrincipal, kNotDefectOne };

struct Defect1Check {
  Defect1Verdict verdict;
  int multiplicity;
};

std::string to_string(Defect1Verdict v);

/// Phi_r divides the Poincare polynomial exactly once.
Defect1Check defect1_coxeter_check(const std::vector<int>& degrees, int r);

/// Sorts a block ascending in the order; throws DomainError when some pair
/// is incomparable.
std::vector<Multipartition> sort_block(std::vector<Multipartition> block,
                                       const ParameterSet& params,
                                       OrderConvention convention = OrderConvention::kCategoryO);

/// Graded dimension of L(chi_index) in a defect-1 block:
/// sum_{i<=index} (-1)^{index-i} dim(chi_i) t^{c'_i} / (1 - t)^n, with the
/// block sorted by the order first. Parameters must all be rational; the
/// defect-1 hypothesis itself is the caller's responsibility.
GradedSeries simple_dimension_series(const std::vector<Multipartition>& block, int index,
                                     const ParameterSet& params, int truncation,
                                     OrderConvention convention = OrderConvention::kCategoryO);

/// Classes of {0, ..., d-1} under r ~ r' when h'_r' - h'_r - a h is an
/// integer for some |a| <= n, where h'_r = h_r + r/d is the logarithm of the
/// Hecke parameter x_r.
struct OrbitDecomposition {
  std::vector<std::vector<int>> classes;
  std::vector<std::optional<Rational>> exponents;  // h'_r, when h_r is assigned
};

OrbitDecomposition orbit_decomposition(const ParameterSet& params);

/// Shape-independence of D(alpha, beta) = d (c_alpha / s + c_beta / (d-s))
/// - c_{alpha u beta} and monotonicity of the glued order.
struct OrbitProbeLevel {
  int m = 0;
  bool shape_independent = true;
  std::optional<LinearForm> value;   // D(m) when shape independent
  LinearForm literal_display;        // d (n-m)(h_0 - h_s) + m (n-m)
  LinearForm expected;               // d (n-m)(h_0 - h_s) + d m (n-m) h
  std::optional<std::pair<Multipartition, Multipartition>> counterexample;  // two unions with different D
};

struct OrbitProbeReport {
  int d = 0;
  int s = 0;
  int n = 0;
  std::vector<OrbitProbeLevel> levels;
  std::vector<ParameterSet> samples;
  std::size_t monotonicity_checks = 0;
  std::size_t monotonicity_violations = 0;
  std::optional<std::string> first_violation;

  bool shape_independent() const;
  bool matches_literal_display() const;
  bool matches_expected() const;
};

OrbitProbeReport orbit_c_identity_probe(int d, int s, int n);

/// Joins alpha in P(s, m) and beta in P(d-s, n-m) into a d-multipartition.
Multipartition glue(const Multipartition& alpha, const Multipartition& beta);

}  // namespace bdorder

#endif  // BDORDER_BLOCKS_HPP_
