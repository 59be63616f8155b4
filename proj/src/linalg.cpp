#include "redword/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace redword {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (coefficients_.empty() || rhs.coefficients_.empty()) return {};
  std::vector<Rational> out(coefficients_.size() + rhs.coefficients_.size() - 1, Rational(0));
  for (std::size_t a = 0; a < coefficients_.size(); ++a) {
    if (coefficients_[a] == 0) continue;
    for (std::size_t b = 0; b < rhs.coefficients_.size(); ++b) out[a + b] += coefficients_[a] * rhs.coefficients_[b];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<Rational> out(std::max(coefficients_.size(), rhs.coefficients_.size()), Rational(0));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) out[k] += coefficients_[k];
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) out[k] -= rhs.coefficients_[k];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out = coefficients_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::string to_string(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    if (c[k] == 0) continue;
    Rational mag = c[k] < 0 ? Rational(-c[k]) : c[k];
    if (out.empty()) {
      if (c[k] < 0) out += "-";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial characteristic_polynomial(const RationalMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  }
  RationalMatrix h = a;
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && h[pivot][m - 1] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      std::swap(h[pivot], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][m]);
    }
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][m - 1] == 0) continue;
      const Rational t = h[j][m - 1] / h[m][m - 1];
      for (std::size_t c = 0; c < n; ++c) h[j][c] -= t * h[m][c];
      for (std::size_t r = 0; r < n; ++r) h[r][m] += t * h[r][j];
    }
  }
  // p_m = (x - h_{m,m}) p_{m-1} - sum_i h_{i,m} (h_{i+1,i} ... h_{m,m-1}) p_{i-1}, 1-based.
  std::vector<Polynomial> p{Polynomial::constant(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    Polynomial next = Polynomial::linear_factor(h[m - 1][m - 1]) * p[m - 1];
    Rational run = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      run *= h[i][i - 1];
      if (run == 0) break;
      next = next - p[i - 1].scaled(h[i - 1][m - 1] * run);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational t = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= t * a[c][k];
    }
  }
  return det;
}

std::vector<Rational> solve_stationary(const RationalMatrix& t) {
  const std::size_t n = t.size();
  // Rows: (T - I) pi = 0, then sum(pi) = 1.
  RationalMatrix m(n + 1, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = t[r][c] - (r == c ? 1 : 0);
  }
  for (std::size_t c = 0; c < n; ++c) m[n][c] = 1;
  m[n][n] = 1;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < n && row <= n; ++c) {
    std::size_t p = row;
    while (p <= n && m[p][c] == 0) ++p;
    if (p > n) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r <= n; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k <= n; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (pivot_col.size() != n) throw std::runtime_error("stationary distribution is not unique");
  for (std::size_t r = row; r <= n; ++r) {
    if (m[r][n] != 0) throw std::runtime_error("no stationary probability vector");
  }
  std::vector<Rational> pi(n);
  for (std::size_t r = 0; r < n; ++r) pi[pivot_col[r]] = m[r][n];
  return pi;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 0; k < n; ++k) out[k][k] = 1;
  return out;
}

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& v) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (a[r][c] != 0) out[r] += a[r][c] * v[c];
    }
  }
  return out;
}

}  // namespace redword
