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

#ifndef BDORDER_CORDER_HPP_
#define BDORDER_CORDER_HPP_

// The c-function of B_n(d) as a linear form in h, h_0, ..., h_{d-1} and the
// highest-weight order it induces on multipartitions.
//
// Conventions: h = h_{H_1,0}, h_{H_1,1} = 0, h_r = h_{H_0,r}. Reflection data:
// the H_0 class has n hyperplanes with |W_H| = d (absent when d = 1), the
// H_1 class has d n(n-1)/2 hyperplanes with |W_H| = 2 (absent when n = 1).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdorder/combinatorics.hpp"
#include "bdorder/exactmath.hpp"

namespace bdorder {

/// d, n and a value for each of h, h_0, ..., h_{d-1}; nullopt means symbolic.
class ParameterSet {
 public:
  ParameterSet(int d, int n, std::optional<Rational> h,
               std::vector<std::optional<Rational>> h_r);
  static ParameterSet symbolic(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::optional<Rational>& h() const { return h_; }
  const std::optional<Rational>& h_r(int r) const { return h_r_.at(r); }
  const std::vector<std::optional<Rational>>& h_values() const { return h_r_; }

  bool all_rational() const;
  bool all_symbolic() const;
  std::optional<Rational> value(Variable v) const;

  ParameterSet with_h(std::optional<Rational> h) const;
  ParameterSet with_h_r(int r, std::optional<Rational> value) const;

  // `d=2 n=3 h=-1 h_0=0 h_1=sym`
  std::string to_string() const;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

 private:
  int d_;
  int n_;
  std::optional<Rational> h_;
  std::vector<std::optional<Rational>> h_r_;
};

/// d * sum_{2<=r<=d} |lambda^(r)| (h_{r-1} - h_0)
///   - d (n(n-1)/2 + sum (b - d)) h.
/// `first_variable` renames h_r to h_{r + first_variable}, for embedding a
/// smaller wreath product's form into a larger parameter space.
LinearForm c_form(const Multipartition& lambda, int first_variable = 0);

/// sum_{(H,j)} n_{H,j}(chi) h_{H,j} from the reflection data and the
/// closed-form restriction multiplicities.
LinearForm c_form_from_multiplicities(const Multipartition& lambda);

/// c minus its value on the trivial label; zero exactly on the trivial label.
LinearForm c_prime_form(const Multipartition& lambda);

/// The form with every assigned parameter substituted.
LinearForm evaluate(const LinearForm& form, const ParameterSet& params);

enum class OrderConvention {
  // chi > chi' iff c_chi' - c_chi is a positive integer.
  kCategoryO,
  // chi > chi' iff c_chi' - c_chi is a positive rational.
  kCoarseLinear,
};

enum class Comparison { kGreater, kLess, kIncomparable, kEqualLabel };

std::string to_string(OrderConvention c);
std::string to_string(Comparison c);

/// How lambda sits relative to mu.
Comparison compare(const Multipartition& lambda, const Multipartition& mu,
                   const ParameterSet& params,
                   OrderConvention convention = OrderConvention::kCategoryO);

/// A strict partial order on a labelled set, stored transitively closed.
class OrderPoset {
 public:
  // `less` pairs (i, j) mean labels[i] < labels[j]. Throws DomainError if
  // the closure has a cycle.
  OrderPoset(std::vector<Multipartition> labels,
             const std::vector<std::pair<std::size_t, std::size_t>>& less);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Multipartition>& labels() const { return labels_; }
  bool less(std::size_t i, std::size_t j) const { return less_[i * size() + j]; }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }
  std::optional<std::size_t> index_of(const Multipartition& label) const;

  // All strict relations (i, j), lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> relations() const;
  // Cover relations only.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
  bool is_antichain() const;
  bool is_chain() const;

  // Graphviz digraph of the Hasse diagram, edges pointing upwards.
  std::string to_dot(const std::string& header_comment = {}) const;
  // {"labels": [...], "less": [[i, j], ...]}, keys sorted.
  std::string to_json() const;
  static OrderPoset from_json(const std::string& text);

  friend bool operator==(const OrderPoset&, const OrderPoset&) = default;

 private:
  std::vector<Multipartition> labels_;
  std::vector<bool> less_;
};

/// The order on P(d, n), labels in enumeration order.
OrderPoset build_order_poset(const ParameterSet& params,
                             OrderConvention convention = OrderConvention::kCategoryO);

/// Every strict relation of `coarser` holds in `finer`.
bool refines(const OrderPoset& finer, const OrderPoset& coarser);

struct OrderEquality {
  bool equal = true;
  // A pair related differently by the two parameter sets.
  std::optional<std::pair<Multipartition, Multipartition>> witness;
};

OrderEquality orders_equal(const ParameterSet& first, const ParameterSet& second,
                           OrderConvention convention = OrderConvention::kCategoryO);

/// h_j -> h_{j+r}: the new value of h_j is the old value of h_{(j+r) mod d}.
ParameterSet twist_parameters(const ParameterSet& params, int r);

/// Shift every parameter of a hyperplane class by a constant. The H_1-class
/// shift also moves the pinned h_{H_1,1} = 0, so once the pin is restored it
/// leaves h unchanged.
ParameterSet normalize_shift(const ParameterSet& params, const Rational& h0_class_shift,
                             const Rational& h1_class_shift = Rational());

}  // namespace bdorder

#endif  // BDORDER_CORDER_HPP_
