#include "troprank/puiseux.hpp"

#include <algorithm>
#include <numeric>

#include "troprank/errors.hpp"

namespace troprank {

PuiseuxPoly::PuiseuxPoly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

PuiseuxPoly::PuiseuxPoly(long c) : PuiseuxPoly(Rational(c)) {}

PuiseuxPoly::PuiseuxPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Rational(0), c});
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coeff, const Rational& exponent) {
  return PuiseuxPoly(std::vector<Term>{{exponent, coeff}});
}

PuiseuxPoly PuiseuxPoly::t_pow(const Rational& exponent) { return monomial(Rational(1), exponent); }

void PuiseuxPoly::normalize() {
  for (auto& t : terms_) {
    t.exponent.canonicalize();
    t.coeff.canonicalize();
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponent == t.exponent) merged.back().coeff += t.coeff;
    else merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

const Rational& PuiseuxPoly::valuation() const {
  if (terms_.empty()) throw DomainError("the zero series has no valuation");
  return terms_.front().exponent;
}

const Rational& PuiseuxPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("the zero series has no leading coefficient");
  return terms_.front().coeff;
}

PuiseuxPoly PuiseuxPoly::operator-() const { return scale(Rational(-1)); }

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& g) {
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.cbegin();
  auto b = g.terms_.cbegin();
  while (a != terms_.cend() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != terms_.cend() && a->exponent < b->exponent)) {
      out.push_back(*a++);
    } else if (a == terms_.cend() || b->exponent < a->exponent) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exponent, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& g) { return *this += -g; }

PuiseuxPoly operator*(const PuiseuxPoly& f, const PuiseuxPoly& g) {
  const PuiseuxPoly& small = f.terms_.size() <= g.terms_.size() ? f : g;
  const PuiseuxPoly& large = &small == &f ? g : f;
  PuiseuxPoly out;
  for (const auto& a : small.terms_) {
    PuiseuxPoly row = large;
    for (auto& b : row.terms_) {
      b.exponent += a.exponent;
      b.coeff *= a.coeff;
    }
    out += row;
  }
  return out;
}

PuiseuxPoly PuiseuxPoly::scale(const Rational& c) const {
  if (c == 0) return {};
  PuiseuxPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

PuiseuxPoly PuiseuxPoly::shift(const Rational& e) const {
  PuiseuxPoly r = *this;
  for (auto& t : r.terms_) t.exponent += e;
  return r;
}

std::string PuiseuxPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& [e, c] = terms_[k];
    Rational mag = abs(c);
    if (k == 0) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (e == 0) {
      s += troprank::to_string(mag);
      continue;
    }
    if (mag != 1) s += troprank::to_string(mag) + "*";
    s += "t";
    if (e != 1) {
      std::string es = troprank::to_string(e);
      s += "^" + (e.get_den() == 1 && e > 0 ? es : "(" + es + ")");
    }
  }
  return s;
}

PuiseuxMatrix::PuiseuxMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

PuiseuxMatrix::PuiseuxMatrix(std::initializer_list<std::initializer_list<PuiseuxPoly>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged Puiseux matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

PuiseuxMatrix PuiseuxMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PuiseuxMatrix s(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) s(a, b) = (*this)(rows[a], cols[b]);
  return s;
}

PuiseuxMatrix PuiseuxMatrix::transpose() const {
  PuiseuxMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PuiseuxMatrix operator*(const PuiseuxMatrix& a, const PuiseuxMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("inner dimensions differ");
  PuiseuxMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

PuiseuxPoly determinant(const PuiseuxMatrix& f) {
  if (f.rows() != f.cols()) throw ShapeError("determinant needs a square matrix");
  const std::size_t n = f.rows();
  if (n == 0) return PuiseuxPoly(1);
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  PuiseuxPoly det;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j] ? 1 : 0;
    PuiseuxPoly term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * f(i, p[i]);
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

}  // namespace troprank
