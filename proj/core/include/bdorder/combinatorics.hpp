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

#ifndef BDORDER_COMBINATORICS_HPP_
#define BDORDER_COMBINATORICS_HPP_

// Partitions and multipartitions: the labels of Irr(B_n(d)). Multipartitions
// are written `[3,1|2|]` for ((3,1),(2),empty).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace bdorder {

/// A partition in canonical form: positive, non-increasing parts.
class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; anything else out of order is rejected.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  // 1-based row access; rows past the end are 0.
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  // Comma-separated parts, empty string for the empty partition.
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition transpose(const Partition& p);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Partition> enumerate_partitions(int n);

class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  Multipartition(std::initializer_list<Partition> components)
      : Multipartition(std::vector<Partition>(components)) {}

  int d() const { return static_cast<int>(components_.size()); }
  int size() const;
  // 1-based component access, matching lambda^{(r)}.
  const Partition& component(int r) const { return components_.at(r - 1); }
  const std::vector<Partition>& components() const { return components_; }

  std::string to_string() const;
  static Multipartition parse(std::string_view text);

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> components_;
};

/// The trivial label ((n), empty, ..., empty).
Multipartition trivial_multipartition(int d, int n);

/// All d-multipartitions of n. Component 1 runs through partitions of sizes
/// n, n-1, ..., 0 (reverse-lex within each size); later components vary
/// fastest.
std::vector<Multipartition> enumerate_multipartitions(int d, int n);

/// Per-component sums of the b and d cell statistics.
struct BDStatistic {
  std::vector<std::int64_t> b_sums;
  std::vector<std::int64_t> d_sums;
  // sum over all components of (b - d).
  std::int64_t total() const;
};

BDStatistic bd_statistic(const Multipartition& lambda);

/// lambda is dominated by mu (partial-sum order). Throws DomainError when
/// d or n differ.
bool dominates(const Multipartition& lambda, const Multipartition& mu);

/// Which structural case of the dominance cover law produced a cover.
enum class CoverCase {
  kMoveAcrossComponents,  // (a): a final 1 of component s moves to row 1 of s+1
  kAdjacentRows,          // (b): one box from row i to row i+1
  kEqualRows,             // (c): rows i < i' equalized, one box apart
};

std::string_view to_string(CoverCase c);

struct Cover {
  Multipartition lambda;
  CoverCase kind;
};

/// Every lambda covered by mu in the dominance order, generated directly
/// from the three structural cases. Duplicate-free, in generation order.
std::vector<Cover> dominance_covers(const Multipartition& mu);

}  // namespace bdorder

#endif  // BDORDER_COMBINATORICS_HPP_
