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

#include "bdorder/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bdorder/characters.hpp"
#include "bdorder/error.hpp"

namespace bdorder {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  // Classes ordered by smallest member, members increasing.
  std::vector<std::vector<std::size_t>> classes() {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(parent_.size(), parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      const std::size_t root = find(i);
      if (slot[root] == parent_.size()) {
        slot[root] = out.size();
        out.emplace_back();
      }
      out[slot[root]].push_back(i);
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

// ---------------------------------------------------------------- linkage

bool LinkagePartition::all_singletons() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const auto& c) { return c.size() == 1; });
}

LinkagePartition linkage_partition(const ParameterSet& params) {
  LinkagePartition out;
  out.labels = enumerate_multipartitions(params.d(), params.n());
  std::vector<LinearForm> forms;
  for (const auto& label : out.labels) forms.push_back(evaluate(c_form(label), params));
  UnionFind uf(out.labels.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      if (integer_difference(forms[i], forms[j])) uf.unite(i, j);
    }
  }
  out.classes = uf.classes();
  return out;
}

std::string to_string(SemisimplicityVerdict v) {
  return v == SemisimplicityVerdict::kSemisimple ? "semisimple" : "not-decided";
}

SemisimplicityResult semisimplicity_check(const ParameterSet& params) {
  OrderPoset poset = build_order_poset(params, OrderConvention::kCategoryO);
  if (poset.is_antichain()) {
    return {SemisimplicityVerdict::kSemisimple, std::move(poset), std::nullopt};
  }
  const auto [i, j] = poset.relations().front();
  auto witness = std::make_pair(poset.labels()[i], poset.labels()[j]);
  return {SemisimplicityVerdict::kNotDecided, std::move(poset), std::move(witness)};
}

// ------------------------------------------------------------------ defect 1

std::string DecompositionMatrix::to_tsv() const {
  std::ostringstream out;
  for (const auto& row : entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << '\t';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

DecompositionMatrix defect1_decomposition_matrix(int size) {
  if (size < 1) throw DomainError("decomposition matrix size must be >= 1");
  DecompositionMatrix m;
  m.entries.assign(static_cast<std::size_t>(size),
                   std::vector<BigInt>(static_cast<std::size_t>(size), BigInt(0)));
  for (int i = 0; i < size; ++i) {
    m.entries[i][i] = 1;
    if (i > 0) m.entries[i][i - 1] = 1;
  }
  return m;
}

std::vector<std::vector<BigInt>> alternating_sum_matrix(int size) {
  if (size < 1) throw DomainError("alternating-sum matrix size must be >= 1");
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(size),
                                     std::vector<BigInt>(static_cast<std::size_t>(size), BigInt(0)));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j <= i; ++j) a[i][j] = (i + j) % 2 == 0 ? 1 : -1;
  }
  return a;
}

std::string to_string(Defect1Verdict v) {
  return v == Defect1Verdict::kDefectOnePrincipal ? "defect-one-principal" : "not-defect-one";
}

Defect1Check defect1_coxeter_check(const std::vector<int>& degrees, int r) {
  if (r < 2) throw DomainError("defect-1 check needs r >= 2, got " + std::to_string(r));
  const int k = cyclotomic_multiplicity(poincare_polynomial(degrees), r);
  return {k == 1 ? Defect1Verdict::kDefectOnePrincipal : Defect1Verdict::kNotDefectOne, k};
}

std::vector<Multipartition> sort_block(std::vector<Multipartition> block,
                                       const ParameterSet& params,
                                       OrderConvention convention) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      const Comparison c = compare(block[i], block[j], params, convention);
      if (c == Comparison::kEqualLabel) {
        throw DomainError("block lists " + block[i].to_string() + " twice");
      }
      if (c == Comparison::kIncomparable) {
        throw DomainError("block is not totally ordered: " + block[i].to_string() + " and " +
                          block[j].to_string() + " are incomparable");
      }
    }
  }
  std::sort(block.begin(), block.end(), [&](const Multipartition& a, const Multipartition& b) {
    return compare(a, b, params, convention) == Comparison::kLess;
  });
  return block;
}

GradedSeries simple_dimension_series(const std::vector<Multipartition>& block, int index,
                                     const ParameterSet& params, int truncation,
                                     OrderConvention convention) {
  if (block.empty()) throw DomainError("empty block");
  for (const auto& label : block) {
    if (!evaluate(c_form(label), params).is_constant()) {
      throw DomainError("simple_dimension_series needs every parameter in c(" +
                        label.to_string() + ") assigned");
    }
  }
  if (index < 1 || index > static_cast<int>(block.size())) {
    throw DomainError("index " + std::to_string(index) + " outside 1.." +
                      std::to_string(block.size()));
  }
  const std::vector<Multipartition> sorted = sort_block(block, params, convention);
  const int n = sorted.front().size();

  std::vector<std::pair<Rational, BigInt>> terms;
  for (int i = 1; i <= index; ++i) {
    const Multipartition& label = sorted[i - 1];
    const LinearForm c_prime = evaluate(c_prime_form(label), params);
    BigInt coefficient = wreath_character_dimension(label);
    if ((index - i) % 2 == 1) coefficient = -coefficient;
    terms.emplace_back(c_prime.constant(), std::move(coefficient));
  }
  Rational shift = terms.front().first;
  for (const auto& [e, a] : terms) shift = std::min(shift, e);
  std::vector<SeriesTerm> numerator;
  for (auto& [e, a] : terms) numerator.push_back({e - shift, std::move(a)});
  return GradedSeries(shift, std::move(numerator), n, truncation);
}

// ------------------------------------------------------------------ orbits

OrbitDecomposition orbit_decomposition(const ParameterSet& params) {
  const int d = params.d();
  OrbitDecomposition out;
  for (int r = 0; r < d; ++r) {
    const auto& h_r = params.h_r(r);
    out.exponents.push_back(h_r ? std::optional<Rational>(*h_r + Rational(r, d)) : std::nullopt);
  }
  if (d == 1) {
    out.classes = {{0}};
    return out;
  }
  if (!params.all_rational()) {
    throw DomainError("orbit decomposition needs h and every h_r assigned");
  }
  const Rational& h = *params.h();
  const int n = params.n();
  UnionFind uf(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    for (int r2 = r + 1; r2 < d; ++r2) {
      const Rational delta = *out.exponents[r2] - *out.exponents[r];
      for (int a = -n; a <= n; ++a) {
        if ((delta - Rational(a) * h).is_integer()) {
          uf.unite(static_cast<std::size_t>(r), static_cast<std::size_t>(r2));
          break;
        }
      }
    }
  }
  for (const auto& cls : uf.classes()) {
    out.classes.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

Multipartition glue(const Multipartition& alpha, const Multipartition& beta) {
  std::vector<Partition> comps = alpha.components();
  comps.insert(comps.end(), beta.components().begin(), beta.components().end());
  return Multipartition(std::move(comps));
}

bool OrbitProbeReport::shape_independent() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const auto& l) { return l.shape_independent; });
}

bool OrbitProbeReport::matches_literal_display() const {
  return std::all_of(levels.begin(), levels.end(), [](const auto& l) {
    return l.value && *l.value == l.literal_display;
  });
}

bool OrbitProbeReport::matches_expected() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const auto& l) { return l.value && *l.value == l.expected; });
}

namespace {

// Pairs (i, j) with labels[i] <= labels[j] in the order for `params`; only
// the reflexive pairs when there is nothing to order.
std::vector<std::pair<std::size_t, std::size_t>> weak_order_pairs(
    const std::vector<Multipartition>& labels, const std::optional<ParameterSet>& params) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (i == j || (params && compare(labels[i], labels[j], *params) == Comparison::kLess)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::vector<ParameterSet> probe_samples(int d, int n) {
  // Integral parameters: h in {-1, -2}, h_0 = 0, gaps h_r - h_{r-1} in {n, n+1}.
  std::vector<ParameterSet> samples;
  const int gap_choices = 1 << (d - 1);
  for (int h : {-1, -2}) {
    for (int mask = 0; mask < gap_choices; ++mask) {
      std::vector<std::optional<Rational>> values{Rational(0)};
      int current = 0;
      for (int r = 1; r < d; ++r) {
        current += n + ((mask >> (r - 1)) & 1);
        values.emplace_back(Rational(current));
      }
      samples.emplace_back(d, n, Rational(h), std::move(values));
    }
  }
  return samples;
}

std::optional<ParameterSet> restrict_params(const ParameterSet& params, int first, int count,
                                            int size) {
  if (size == 0) return std::nullopt;
  std::vector<std::optional<Rational>> values(params.h_values().begin() + first,
                                              params.h_values().begin() + first + count);
  return ParameterSet(count, size, params.h(), std::move(values));
}

}  // namespace

OrbitProbeReport orbit_c_identity_probe(int d, int s, int n) {
  if (s < 1 || s > d - 1) {
    throw DomainError("probe needs 1 <= s <= d-1, got s = " + std::to_string(s) +
                      ", d = " + std::to_string(d));
  }
  if (n < 1) throw DomainError("probe needs n >= 1");
  OrbitProbeReport report;
  report.d = d;
  report.s = s;
  report.n = n;

  const LinearForm h0_minus_hs =
      LinearForm::variable(Variable::h_index(0)) - LinearForm::variable(Variable::h_index(s));
  for (int m = 0; m <= n; ++m) {
    OrbitProbeLevel level;
    level.m = m;
    level.literal_display = h0_minus_hs * Rational(d * (n - m)) + LinearForm(Rational(m * (n - m)));
    level.expected = h0_minus_hs * Rational(d * (n - m)) +
                     LinearForm::variable(Variable::h(), Rational(d * m * (n - m)));
    std::optional<Multipartition> first_union;
    for (const auto& alpha : enumerate_multipartitions(s, m)) {
      for (const auto& beta : enumerate_multipartitions(d - s, n - m)) {
        const Multipartition joined = glue(alpha, beta);
        const LinearForm value =
            Rational(d) * (c_form(alpha) * Rational(1, s) + c_form(beta, s) * Rational(1, d - s)) -
            c_form(joined);
        if (!level.value) {
          level.value = value;
          first_union = joined;
        } else if (level.shape_independent && value != *level.value) {
          level.shape_independent = false;
          level.counterexample = std::make_pair(*first_union, joined);
        }
      }
    }
    if (!level.shape_independent) level.value.reset();
    report.levels.push_back(std::move(level));
  }

  report.samples = probe_samples(d, n);
  for (const auto& params : report.samples) {
    for (int m = 0; m <= n; ++m) {
      const auto alphas = enumerate_multipartitions(s, m);
      const auto betas = enumerate_multipartitions(d - s, n - m);
      const auto alpha_pairs = weak_order_pairs(alphas, restrict_params(params, 0, s, m));
      const auto beta_pairs = weak_order_pairs(betas, restrict_params(params, s, d - s, n - m));
      for (const auto& [a, a2] : alpha_pairs) {
        for (const auto& [b, b2] : beta_pairs) {
          const Multipartition low = glue(alphas[a], betas[b]);
          const Multipartition high = glue(alphas[a2], betas[b2]);
          ++report.monotonicity_checks;
          if (low == high || compare(low, high, params) == Comparison::kLess) continue;
          if (++report.monotonicity_violations == 1) {
            report.first_violation = low.to_string() + " !<= " + high.to_string() + " at " +
                                     params.to_string();
          }
        }
      }
    }
  }
  return report;
}

}  // namespace bdorder
