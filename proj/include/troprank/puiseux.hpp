#pragma once

#include <string>
#include <vector>

#include "troprank/matrix.hpp"

namespace troprank {

/// Finite sum of c t^e with rational exponents and nonzero rational coefficients, kept sorted by
/// strictly increasing exponent. The empty sum is zero.
class PuiseuxPoly {
 public:
  struct Term {
    Rational exponent;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  PuiseuxPoly() = default;
  explicit PuiseuxPoly(std::vector<Term> terms);
  PuiseuxPoly(long c);  // NOLINT: integer constants read naturally in formulas
  PuiseuxPoly(const Rational& c);  // NOLINT

  static PuiseuxPoly monomial(const Rational& coeff, const Rational& exponent);
  /// t^e
  static PuiseuxPoly t_pow(const Rational& exponent);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Smallest exponent. Throws DomainError for the zero polynomial.
  const Rational& valuation() const;
  const Rational& leading_coefficient() const;

  PuiseuxPoly operator-() const;
  PuiseuxPoly& operator+=(const PuiseuxPoly& g);
  PuiseuxPoly& operator-=(const PuiseuxPoly& g);
  friend PuiseuxPoly operator+(PuiseuxPoly f, const PuiseuxPoly& g) { return f += g; }
  friend PuiseuxPoly operator-(PuiseuxPoly f, const PuiseuxPoly& g) { return f -= g; }
  friend PuiseuxPoly operator*(const PuiseuxPoly& f, const PuiseuxPoly& g);

  PuiseuxPoly scale(const Rational& c) const;
  /// Multiplies by t^e.
  PuiseuxPoly shift(const Rational& e) const;

  bool operator==(const PuiseuxPoly&) const = default;

  /// e.g. "-1 + 3*t^(1/2) - t^2"
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Dense d x n matrix of Puiseux polynomials (a lift once every entry is nonzero).
class PuiseuxMatrix {
 public:
  PuiseuxMatrix(std::size_t rows, std::size_t cols);
  PuiseuxMatrix(std::initializer_list<std::initializer_list<PuiseuxPoly>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  PuiseuxPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const PuiseuxPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PuiseuxMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  PuiseuxMatrix transpose() const;

  friend PuiseuxMatrix operator*(const PuiseuxMatrix& a, const PuiseuxMatrix& b);
  bool operator==(const PuiseuxMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<PuiseuxPoly> data_;
};

/// Leibniz expansion; intended for small square matrices (minors).
PuiseuxPoly determinant(const PuiseuxMatrix& f);

}  // namespace troprank
