#pragma once

#include "redword/rational.hpp"

#include <string>
#include <vector>

namespace redword {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Dense univariate polynomial over Q, coefficients from the constant term up.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// x - root
  static Polynomial linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational operator()(const Rational& x) const;

  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial scaled(const Rational& c) const;

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

std::string to_string(const Polynomial& p);  // "x^2 - 1/2*x"

/// det(x I - A) by similarity reduction to upper Hessenberg form followed by
/// the Hessenberg determinant recurrence. Exact.
Polynomial characteristic_polynomial(const RationalMatrix& a);

/// Determinant by Gaussian elimination over Q.
Rational determinant(RationalMatrix a);

/// The unique probability vector pi with T pi = pi. Throws std::runtime_error
/// if the fixed space is not one-dimensional.
std::vector<Rational> solve_stationary(const RationalMatrix& t);

RationalMatrix identity_matrix(std::size_t n);
std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& v);

}  // namespace redword
