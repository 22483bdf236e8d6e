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

#ifndef BDORDER_EXACTMATH_HPP_
#define BDORDER_EXACTMATH_HPP_

// Exact arithmetic used throughout: big rationals, linear forms in the
// parameter variables h, h_0, ..., h_{d-1}, integer polynomials and
// truncated rational-exponent power series. Nothing here touches floating
// point.

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bdorder {

using BigInt = boost::multiprecision::cpp_int;

/// A reduced fraction with positive denominator.
///
/// Text form is `p/q`, with `/q` omitted when q == 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt numerator, BigInt denominator);
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}

  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }
  BigInt floor() const;
  // Representative of the class modulo Z in [0, 1).
  Rational fractional_part() const;

  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// One of the parameter variables: `h` (the H_1-class parameter) or `h_r`.
class Variable {
 public:
  static Variable h() { return Variable(-1); }
  static Variable h_index(int r);
  static Variable parse(std::string_view text);

  bool is_h() const { return index_ < 0; }
  // Only meaningful when !is_h().
  int index() const { return index_; }
  std::string name() const;

  // `h` sorts before every `h_r`.
  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  explicit Variable(int index) : index_(index) {}
  int index_;
};

/// constant + sum_v coefficient_v * v, with zero coefficients never stored.
///
/// Text form: `c + a*h + b0*h_0 + ...`, terms in variable order, unit
/// coefficients written bare (`h`, `-h_1`), the zero form written `0`.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Rational constant) : constant_(std::move(constant)) {}  // NOLINT
  static LinearForm variable(Variable v, const Rational& coefficient = Rational(1));
  static LinearForm parse(std::string_view text);

  const Rational& constant() const { return constant_; }
  const std::map<Variable, Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(Variable v) const;
  bool is_constant() const { return coefficients_.empty(); }
  bool is_zero() const { return is_constant() && constant_.is_zero(); }

  // Replaces every variable for which `value` returns a number; the rest
  // stay symbolic.
  LinearForm substitute(
      const std::function<std::optional<Rational>(Variable)>& value) const;

  std::string to_string() const;

  LinearForm operator-() const;
  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(const Rational& scalar);

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
  friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  void add_term(Variable v, const Rational& coefficient);

  Rational constant_;
  std::map<Variable, Rational> coefficients_;
};

/// The integer a - b if it is one: no surviving variable part and an
/// integral constant. This is the membership test for Z under the coarsest
/// order on the logarithm group.
std::optional<BigInt> integer_difference(const LinearForm& a, const LinearForm& b);

/// Dense univariate polynomial over Z, lowest degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long long> coefficients);
  static IntPoly monomial(const BigInt& coefficient, std::size_t degree);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coefficient(std::size_t k) const;
  BigInt evaluate(const BigInt& x) const;

  // Quotient when `divisor` divides this polynomial in Z[t], else nullopt.
  std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;
  // Division by a monic polynomial: (quotient, remainder).
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& monic) const;

  std::string to_string() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Phi_m by the recursive quotient (t^m - 1) / prod_{k | m, k < m} Phi_k.
IntPoly cyclotomic(int m);

/// prod_i (t^{d_i} - 1) / (t - 1).
IntPoly poincare_polynomial(std::span<const int> degrees);

/// Largest k with Phi_r^k dividing p.
int cyclotomic_multiplicity(const IntPoly& p, int r);

struct SeriesTerm {
  Rational exponent;
  BigInt coefficient;
  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

/// t^shift * (sum_e a_e t^e) / (1 - t)^denominator_power, expanded up to
/// relative degree truncation_degree (numerator exponent plus geometric
/// degree, measured from the shift).
class GradedSeries {
 public:
  GradedSeries(Rational shift, std::vector<SeriesTerm> numerator,
               int denominator_power, int truncation_degree);

  const Rational& shift() const { return shift_; }
  const std::vector<SeriesTerm>& numerator() const { return numerator_; }
  int denominator_power() const { return denominator_power_; }
  int truncation_degree() const { return truncation_degree_; }

  // Absolute exponents (shift included), increasing, zero coefficients
  // omitted.
  std::vector<SeriesTerm> expand() const;

  // The finite series when (1 - t)^n divides the numerator exactly, with
  // absolute exponents; nullopt otherwise.
  std::optional<std::vector<SeriesTerm>> polynomial_detect() const;

  // Value of the numerator at t = 1.
  BigInt numerator_at_one() const;

 private:
  Rational shift_;
  std::vector<SeriesTerm> numerator_;
  int denominator_power_;
  int truncation_degree_;
};

}  // namespace bdorder

#endif  // BDORDER_EXACTMATH_HPP_
