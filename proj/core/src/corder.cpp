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

#include "bdorder/corder.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "bdorder/characters.hpp"
#include "bdorder/error.hpp"

namespace bdorder {

// ------------------------------------------------------------- ParameterSet

ParameterSet::ParameterSet(int d, int n, std::optional<Rational> h,
                           std::vector<std::optional<Rational>> h_r)
    : d_(d), n_(n), h_(std::move(h)), h_r_(std::move(h_r)) {
  if (d_ < 1) throw DomainError("d must be >= 1, got " + std::to_string(d_));
  if (n_ < 1) throw DomainError("n must be >= 1, got " + std::to_string(n_));
  if (static_cast<int>(h_r_.size()) != d_) {
    throw DomainError("expected " + std::to_string(d_) + " values h_0..h_{d-1}, got " +
                      std::to_string(h_r_.size()));
  }
}

ParameterSet ParameterSet::symbolic(int d, int n) {
  return ParameterSet(d, n, std::nullopt,
                      std::vector<std::optional<Rational>>(d < 1 ? 0 : d, std::nullopt));
}

bool ParameterSet::all_rational() const {
  if (!h_) return false;
  for (const auto& v : h_r_) {
    if (!v) return false;
  }
  return true;
}

bool ParameterSet::all_symbolic() const {
  if (h_) return false;
  for (const auto& v : h_r_) {
    if (v) return false;
  }
  return true;
}

std::optional<Rational> ParameterSet::value(Variable v) const {
  if (v.is_h()) return h_;
  if (v.index() >= d_) return std::nullopt;
  return h_r_[v.index()];
}

ParameterSet ParameterSet::with_h(std::optional<Rational> h) const {
  ParameterSet out = *this;
  out.h_ = std::move(h);
  return out;
}

ParameterSet ParameterSet::with_h_r(int r, std::optional<Rational> value) const {
  ParameterSet out = *this;
  out.h_r_.at(r) = std::move(value);
  return out;
}

std::string ParameterSet::to_string() const {
  auto show = [](const std::optional<Rational>& v) { return v ? v->to_string() : "sym"; };
  std::ostringstream out;
  out << "d=" << d_ << " n=" << n_ << " h=" << show(h_);
  for (int r = 0; r < d_; ++r) out << " h_" << r << '=' << show(h_r_[r]);
  return out.str();
}

// ---------------------------------------------------------------- c-forms

LinearForm c_form(const Multipartition& lambda, int first_variable) {
  const int d = lambda.d();
  const int n = lambda.size();
  LinearForm form;
  for (int r = 2; r <= d; ++r) {
    const Rational weight(d * lambda.component(r).size());
    form += LinearForm::variable(Variable::h_index(first_variable + r - 1), weight);
    form -= LinearForm::variable(Variable::h_index(first_variable), weight);
  }
  const Rational statistic = Rational(n * (n - 1), 2) + Rational(bd_statistic(lambda).total());
  form -= LinearForm::variable(Variable::h(), Rational(d) * statistic);
  return form;
}

LinearForm c_form_from_multiplicities(const Multipartition& lambda) {
  const int d = lambda.d();
  const int n = lambda.size();
  if (n == 0) throw DomainError("c_form_from_multiplicities needs n >= 1");
  const RestrictionProfile profile = restriction_profile_closed(lambda);
  LinearForm form;
  if (d >= 2) {
    const Rational orbit_times_order(n * d);
    for (int l = 0; l < d; ++l) {
      form += LinearForm::variable(Variable::h_index(l),
                                   orbit_times_order * profile.s0_multiplicities[l]);
    }
  }
  if (n >= 2) {
    // The det-isotypic part pairs with h_{H_1,1} = 0 and drops out.
    const Rational orbit_times_order(d * n * (n - 1));
    form += LinearForm::variable(Variable::h(),
                                 orbit_times_order * (Rational(1) - *profile.s1_det_multiplicity));
  }
  return form;
}

LinearForm c_prime_form(const Multipartition& lambda) {
  if (lambda.size() == 0) return LinearForm();
  return c_form_from_multiplicities(lambda) -
         c_form_from_multiplicities(trivial_multipartition(lambda.d(), lambda.size()));
}

LinearForm evaluate(const LinearForm& form, const ParameterSet& params) {
  return form.substitute([&](Variable v) { return params.value(v); });
}

// ------------------------------------------------------------- comparison

std::string to_string(OrderConvention c) {
  return c == OrderConvention::kCategoryO ? "categoryO" : "coarse";
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::kGreater: return "greater";
    case Comparison::kLess: return "less";
    case Comparison::kIncomparable: return "incomparable";
    case Comparison::kEqualLabel: return "equal-label";
  }
  return "?";
}

namespace {

// `diff` is c_lambda - c_mu after substitution.
Comparison classify(const LinearForm& diff, OrderConvention convention) {
  if (!diff.is_constant()) return Comparison::kIncomparable;
  const Rational& x = diff.constant();
  if (convention == OrderConvention::kCategoryO && !x.is_integer()) {
    return Comparison::kIncomparable;
  }
  // lambda > mu iff c_mu - c_lambda > 0.
  if (x.sign() < 0) return Comparison::kGreater;
  if (x.sign() > 0) return Comparison::kLess;
  return Comparison::kIncomparable;
}

void check_shape(const Multipartition& lambda, const ParameterSet& params) {
  if (lambda.d() != params.d()) {
    throw DomainError("label " + lambda.to_string() + " has d = " + std::to_string(lambda.d()) +
                      " but parameters have d = " + std::to_string(params.d()));
  }
}

}  // namespace

Comparison compare(const Multipartition& lambda, const Multipartition& mu,
                   const ParameterSet& params, OrderConvention convention) {
  check_shape(lambda, params);
  check_shape(mu, params);
  if (lambda.size() != mu.size()) {
    throw DomainError("labels of different sizes: " + lambda.to_string() + ", " +
                      mu.to_string());
  }
  if (lambda == mu) return Comparison::kEqualLabel;
  return classify(evaluate(c_form(lambda) - c_form(mu), params), convention);
}

// -------------------------------------------------------------- OrderPoset

OrderPoset::OrderPoset(std::vector<Multipartition> labels,
                       const std::vector<std::pair<std::size_t, std::size_t>>& less)
    : labels_(std::move(labels)), less_(labels_.size() * labels_.size(), false) {
  const std::size_t n = labels_.size();
  for (const auto& [i, j] : less) {
    if (i >= n || j >= n) throw DomainError("relation index out of range");
    less_[i * n + j] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!less_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (less_[k * n + j]) less_[i * n + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (less_[i * n + i]) throw DomainError("order relation has a cycle through " +
                                            labels_[i].to_string());
  }
}

std::optional<std::size_t> OrderPoset::index_of(const Multipartition& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> OrderPoset::relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (less(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> OrderPoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [i, j] : relations()) {
    bool cover = true;
    for (std::size_t k = 0; k < size() && cover; ++k) {
      if (less(i, k) && less(k, j)) cover = false;
    }
    if (cover) out.emplace_back(i, j);
  }
  return out;
}

bool OrderPoset::is_antichain() const {
  return std::none_of(less_.begin(), less_.end(), [](bool b) { return b; });
}

bool OrderPoset::is_chain() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (!comparable(i, j)) return false;
    }
  }
  return true;
}

std::string OrderPoset::to_dot(const std::string& header_comment) const {
  std::ostringstream out;
  if (!header_comment.empty()) out << "// " << header_comment << '\n';
  out << "digraph order {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < size(); ++i) {
    out << "  n" << i << " [label=\"" << labels_[i].to_string() << "\"];\n";
  }
  for (const auto& [i, j] : hasse_edges()) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string OrderPoset::to_json() const {
  nlohmann::json j;
  j["labels"] = nlohmann::json::array();
  for (const auto& label : labels_) j["labels"].push_back(label.to_string());
  j["less"] = nlohmann::json::array();
  for (const auto& [a, b] : relations()) j["less"].push_back({a, b});
  return j.dump(2);
}

OrderPoset OrderPoset::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    // Accept a bare poset, {"poset": ...}, or a CLI report carrying result.poset.
    const auto& body = j.contains("result") ? j.at("result") : j;
    const auto& poset = body.contains("poset") ? body.at("poset") : body;
    std::vector<Multipartition> labels;
    for (const auto& s : poset.at("labels")) labels.push_back(Multipartition::parse(s.get<std::string>()));
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (const auto& pair : poset.at("less")) {
      less.emplace_back(pair.at(0).get<std::size_t>(), pair.at(1).get<std::size_t>());
    }
    return OrderPoset(std::move(labels), less);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poset JSON: ") + e.what());
  }
}

OrderPoset build_order_poset(const ParameterSet& params, OrderConvention convention) {
  std::vector<Multipartition> labels = enumerate_multipartitions(params.d(), params.n());
  std::vector<LinearForm> forms;
  forms.reserve(labels.size());
  for (const auto& label : labels) forms.push_back(evaluate(c_form(label), params));

  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (i != j && classify(forms[i] - forms[j], convention) == Comparison::kLess) {
        less.emplace_back(i, j);
      }
    }
  }
  return OrderPoset(std::move(labels), less);
}

bool refines(const OrderPoset& finer, const OrderPoset& coarser) {
  if (finer.labels() != coarser.labels()) {
    throw DomainError("refines: posets have different label sets");
  }
  for (const auto& [i, j] : coarser.relations()) {
    if (!finer.less(i, j)) return false;
  }
  return true;
}

OrderEquality orders_equal(const ParameterSet& first, const ParameterSet& second,
                           OrderConvention convention) {
  if (first.d() != second.d() || first.n() != second.n()) {
    throw DomainError("orders_equal: parameter sets have different (d, n)");
  }
  const OrderPoset a = build_order_poset(first, convention);
  const OrderPoset b = build_order_poset(second, convention);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.less(i, j) != b.less(i, j)) {
        return {false, std::make_pair(a.labels()[i], a.labels()[j])};
      }
    }
  }
  return {};
}

ParameterSet twist_parameters(const ParameterSet& params, int r) {
  const int d = params.d();
  const int shift = ((r % d) + d) % d;
  std::vector<std::optional<Rational>> values(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) values[j] = params.h_r((j + shift) % d);
  return ParameterSet(d, params.n(), params.h(), std::move(values));
}

ParameterSet normalize_shift(const ParameterSet& params, const Rational& h0_class_shift,
                             const Rational& h1_class_shift) {
  // (h + f) - (0 + f): the H_1-class shift cancels against the pin.
  static_cast<void>(h1_class_shift);
  std::vector<std::optional<Rational>> values = params.h_values();
  for (auto& v : values) {
    if (v) *v += h0_class_shift;
  }
  return ParameterSet(params.d(), params.n(), params.h(), std::move(values));
}

}  // namespace bdorder
