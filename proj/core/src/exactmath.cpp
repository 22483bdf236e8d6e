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

#include "bdorder/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bdorder/error.hpp"

namespace bdorder {

namespace {

BigInt parse_bigint(std::string_view text, std::string_view context) {
  if (text.empty()) {
    throw ParseError("empty integer in '" + std::string(context) + "'");
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw ParseError("missing digits in '" + std::string(context) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid character '" + std::string(1, c) + "' in '" +
                       std::string(context) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g < 0) g = -g;
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(s, text));
  BigInt den = parse_bigint(std::string_view(s).substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_bigint(std::string_view(s).substr(0, slash), text),
                  std::move(den));
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

Rational Rational::fractional_part() const { return *this - Rational(floor()); }

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  num_ = num_ * other.den_ + other.num_ * den_;
  den_ *= other.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  num_ *= other.den_;
  den_ *= other.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Variable

Variable Variable::h_index(int r) {
  if (r < 0) throw DomainError("negative parameter index " + std::to_string(r));
  return Variable(r);
}

Variable Variable::parse(std::string_view text) {
  if (text == "h") return h();
  if (text.size() > 2 && text.substr(0, 2) == "h_") {
    const auto digits = text.substr(2);
    if (std::all_of(digits.begin(), digits.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
        digits.size() < 9) {
      return h_index(std::stoi(std::string(digits)));
    }
  }
  throw ParseError("unknown variable '" + std::string(text) + "'");
}

std::string Variable::name() const {
  return is_h() ? std::string("h") : "h_" + std::to_string(index_);
}

// -------------------------------------------------------------- LinearForm

LinearForm LinearForm::variable(Variable v, const Rational& coefficient) {
  LinearForm f;
  f.add_term(v, coefficient);
  return f;
}

void LinearForm::add_term(Variable v, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = coefficients_.try_emplace(v, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) coefficients_.erase(it);
  }
}

Rational LinearForm::coefficient(Variable v) const {
  const auto it = coefficients_.find(v);
  return it == coefficients_.end() ? Rational() : it->second;
}

LinearForm LinearForm::substitute(
    const std::function<std::optional<Rational>(Variable)>& value) const {
  LinearForm out(constant_);
  for (const auto& [v, a] : coefficients_) {
    if (auto x = value(v)) {
      out.constant_ += a * *x;
    } else {
      out.add_term(v, a);
    }
  }
  return out;
}

LinearForm LinearForm::operator-() const {
  LinearForm out;
  out.constant_ = -constant_;
  for (const auto& [v, a] : coefficients_) out.coefficients_.emplace(v, -a);
  return out;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  constant_ += other.constant_;
  for (const auto& [v, a] : other.coefficients_) add_term(v, a);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) { return *this += -other; }

LinearForm& LinearForm::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    *this = LinearForm();
    return *this;
  }
  constant_ *= scalar;
  for (auto& [v, a] : coefficients_) a *= scalar;
  return *this;
}

std::string LinearForm::to_string() const {
  std::vector<std::pair<Rational, std::string>> terms;
  if (!constant_.is_zero()) terms.emplace_back(constant_, "");
  for (const auto& [v, a] : coefficients_) terms.emplace_back(a, v.name());
  if (terms.empty()) return "0";

  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [a, name] = terms[i];
    if (i == 0) {
      if (a.sign() < 0) out << '-';
    } else {
      out << (a.sign() < 0 ? " - " : " + ");
    }
    const Rational magnitude = a.sign() < 0 ? -a : a;
    if (name.empty()) {
      out << magnitude.to_string();
    } else if (magnitude == Rational(1)) {
      out << name;
    } else {
      out << magnitude.to_string() << '*' << name;
    }
  }
  return out.str();
}

LinearForm LinearForm::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty linear form");
  LinearForm out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string_view term = std::string_view(s).substr(pos, end - pos);
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");

    Rational coefficient(1);
    std::string_view var_text;
    if (const auto star = term.find('*'); star != std::string_view::npos) {
      coefficient = Rational::parse(term.substr(0, star));
      var_text = term.substr(star + 1);
    } else if (term[0] == 'h') {
      var_text = term;
    } else {
      coefficient = Rational::parse(term);
    }
    if (negative) coefficient = -coefficient;
    if (var_text.empty()) {
      out.constant_ += coefficient;
    } else {
      out.add_term(Variable::parse(var_text), coefficient);
    }
    pos = end;
  }
  return out;
}

std::optional<BigInt> integer_difference(const LinearForm& a, const LinearForm& b) {
  const LinearForm diff = a - b;
  if (!diff.is_constant() || !diff.constant().is_integer()) return std::nullopt;
  return diff.constant().numerator();
}

// ----------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const BigInt& coefficient, std::size_t degree) {
  std::vector<BigInt> c(degree + 1, BigInt(0));
  c[degree] = coefficient;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(c));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return IntPoly();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(rem.size() - divisor.coeffs_.size() + 1, BigInt(0));
  const BigInt& lead = divisor.leading();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    BigInt& top = rem[k + divisor.degree()];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    const BigInt q = top / lead;
    quot[k] = q;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
      rem[k + j] -= q * divisor.coeffs_[j];
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& monic) const {
  if (monic.is_zero() || monic.leading() != 1) {
    throw DomainError("divmod_monic needs a monic divisor");
  }
  if (degree() < monic.degree()) return {IntPoly(), *this};
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(rem.size() - monic.coeffs_.size() + 1, BigInt(0));
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const BigInt q = rem[k + monic.degree()];
    if (q == 0) continue;
    quot[k] = q;
    for (std::size_t j = 0; j < monic.coeffs_.size(); ++j) {
      rem[k + j] -= q * monic.coeffs_[j];
    }
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || magnitude != 1) out << magnitude;
    if (k >= 1) out << 't';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

IntPoly cyclotomic(int m) {
  if (m < 1) throw DomainError("cyclotomic index must be >= 1, got " + std::to_string(m));
  std::map<int, IntPoly> phi;
  for (int k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    IntPoly p = IntPoly::monomial(1, k) - IntPoly{1};
    for (const auto& [j, pj] : phi) {
      if (k % j != 0) continue;
      auto q = p.divide_exact(pj);
      if (!q) throw std::logic_error("cyclotomic: inexact division");
      p = std::move(*q);
    }
    phi.emplace(k, std::move(p));
  }
  return phi.at(m);
}

IntPoly poincare_polynomial(std::span<const int> degrees) {
  IntPoly p{1};
  for (int deg : degrees) {
    if (deg < 1) throw DomainError("invariant degree must be >= 1, got " + std::to_string(deg));
    p = p * IntPoly(std::vector<BigInt>(static_cast<std::size_t>(deg), BigInt(1)));
  }
  return p;
}

int cyclotomic_multiplicity(const IntPoly& p, int r) {
  if (p.is_zero()) throw DomainError("cyclotomic multiplicity of the zero polynomial");
  const IntPoly phi = cyclotomic(r);
  int k = 0;
  IntPoly current = p;
  while (auto q = current.divide_exact(phi)) {
    current = std::move(*q);
    ++k;
  }
  return k;
}

// ------------------------------------------------------------ GradedSeries

GradedSeries::GradedSeries(Rational shift, std::vector<SeriesTerm> numerator,
                           int denominator_power, int truncation_degree)
    : shift_(std::move(shift)),
      denominator_power_(denominator_power),
      truncation_degree_(truncation_degree) {
  if (denominator_power < 0) throw DomainError("negative denominator power");
  if (truncation_degree < 0) throw DomainError("negative truncation degree");
  std::map<Rational, BigInt> merged;
  for (auto& term : numerator) merged[term.exponent] += term.coefficient;
  for (auto& [e, a] : merged) {
    if (a != 0) numerator_.push_back({e, a});
  }
}

std::vector<SeriesTerm> GradedSeries::expand() const {
  const int n = denominator_power_;
  std::map<Rational, BigInt> acc;
  for (const auto& [e, a] : numerator_) {
    // binom(k + n - 1, n - 1), built incrementally in k.
    BigInt binom = 1;
    for (int k = 0; e + Rational(k) <= Rational(truncation_degree_); ++k) {
      if (k > 0) {
        if (n == 0) break;
        binom = binom * (k + n - 1) / k;
      }
      acc[shift_ + e + Rational(k)] += a * binom;
    }
  }
  std::vector<SeriesTerm> out;
  for (auto& [e, a] : acc) {
    if (a != 0) out.push_back({e, a});
  }
  return out;
}

std::optional<std::vector<SeriesTerm>> GradedSeries::polynomial_detect() const {
  // Terms whose exponents differ by an integer form one Z[t]-polynomial.
  std::map<Rational, std::map<BigInt, BigInt>> classes;
  for (const auto& [e, a] : numerator_) {
    classes[e.fractional_part()][e.floor()] += a;
  }
  const IntPoly one_minus_t{1, -1};
  std::vector<SeriesTerm> out;
  for (const auto& [frac, terms] : classes) {
    const BigInt base = terms.begin()->first;
    std::vector<BigInt> coeffs;
    for (const auto& [k, a] : terms) {
      const auto idx = static_cast<std::size_t>(k - base);
      if (coeffs.size() <= idx) coeffs.resize(idx + 1, 0);
      coeffs[idx] = a;
    }
    IntPoly p(std::move(coeffs));
    for (int i = 0; i < denominator_power_; ++i) {
      auto q = p.divide_exact(one_minus_t);
      if (!q) return std::nullopt;
      p = std::move(*q);
    }
    for (int k = 0; k <= p.degree(); ++k) {
      if (p.coefficient(k) == 0) continue;
      out.push_back({shift_ + frac + Rational(base) + Rational(k), p.coefficient(k)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SeriesTerm& a, const SeriesTerm& b) { return a.exponent < b.exponent; });
  return out;
}

BigInt GradedSeries::numerator_at_one() const {
  BigInt total = 0;
  for (const auto& term : numerator_) total += term.coefficient;
  return total;
}

}  // namespace bdorder
