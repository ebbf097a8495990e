#include "troprank/det.hpp"

#include <algorithm>
#include <numeric>

#include "detail/assignment.hpp"
#include "troprank/errors.hpp"

namespace troprank {

namespace {

constexpr std::size_t kBruteForceLimit = 10;

void require_square(const TropMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant needs a square matrix");
}

void require_small(const TropMatrix& m) {
  if (m.rows() > kBruteForceLimit) throw ResourceError("permutation enumeration is limited to 10x10");
}

bool is_even(const Permutation& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
  return inversions % 2 == 0;
}

// Potentials from Bellman-Ford on the tight-edge system: u_i + v_j <= m_ij, equality on sigma.
void dual_potentials(const TropMatrix& m, const Permutation& sigma, TropVector& u, TropVector& v) {
  const std::size_t n = m.rows();
  // With v_{sigma(i)} = m_{i sigma(i)} - u_i, feasibility is u_i - u_k <= m_{i sigma(k)} - m_{k sigma(k)}.
  std::vector<Rational> dist(n, Rational(0));
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        Rational w = m(i, sigma[k]) - m(k, sigma[k]);
        if (dist[k] + w < dist[i]) {
          dist[i] = dist[k] + w;
          changed = true;
        }
      }
    if (!changed) break;
  }
  u = dist;
  v.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) v[sigma[i]] = m(i, sigma[i]) - u[i];
}

}  // namespace

Rational permutation_sum(const TropMatrix& m, const Permutation& sigma) {
  Rational s(0);
  for (std::size_t i = 0; i < sigma.size(); ++i) s += m(i, sigma[i]);
  return s;
}

SingularityCertificate trop_det(const TropMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  return detail::with_exact_view(m, [&](const auto& a, const mpz_class& scale) {
    auto as = detail::solve_assignment(a);
    auto tight = detail::tight_graph(a, as.u, as.v);
    SingularityCertificate cert;
    cert.sigma = detail::lex_smallest_matching(tight, n);
    cert.sigma2 = detail::second_matching(tight, cert.sigma);
    cert.det_value = permutation_sum(m, cert.sigma);
    for (std::size_t i = 0; i < n; ++i) {
      cert.u.push_back(detail::to_rational(as.u[i], scale));
      cert.v.push_back(detail::to_rational(as.v[i], scale));
    }
    return cert;
  });
}

bool is_tropically_singular(const TropMatrix& m) {
  require_square(m);
  return detail::with_exact_view(m, [](const auto& a, const mpz_class&) { return detail::is_singular_view(a); });
}

SingularityCertificate det_bruteforce(const TropMatrix& m) {
  require_square(m);
  require_small(m);
  const std::size_t n = m.rows();
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  SingularityCertificate cert;
  bool first = true;
  do {
    Rational s = permutation_sum(m, p);
    if (first || s < cert.det_value) {
      cert.det_value = s;
      cert.sigma = p;
      cert.sigma2.reset();
      first = false;
    } else if (s == cert.det_value && !cert.sigma2) {
      cert.sigma2 = p;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  dual_potentials(m, cert.sigma, cert.u, cert.v);
  return cert;
}

bool check_certificate(const TropMatrix& m, const SingularityCertificate& cert) {
  const std::size_t n = m.rows();
  auto is_perm = [n](const Permutation& p) {
    if (p.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (auto j : p) {
      if (j >= n || seen[j]) return false;
      seen[j] = 1;
    }
    return true;
  };
  if (!m.is_square() || !is_perm(cert.sigma) || cert.u.size() != n || cert.v.size() != n) return false;
  if (permutation_sum(m, cert.sigma) != cert.det_value) return false;
  Rational dual_sum(0);
  for (std::size_t i = 0; i < n; ++i) {
    dual_sum += cert.u[i] + cert.v[i];
    for (std::size_t j = 0; j < n; ++j)
      if (cert.u[i] + cert.v[j] > m(i, j)) return false;
  }
  if (dual_sum != cert.det_value) return false;
  if (cert.sigma2) {
    if (!is_perm(*cert.sigma2) || *cert.sigma2 == cert.sigma) return false;
    if (permutation_sum(m, *cert.sigma2) != cert.det_value) return false;
  }
  return true;
}

ParityMinima even_odd_minima(const TropMatrix& m) {
  require_square(m);
  require_small(m);
  const std::size_t n = m.rows();
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::optional<Rational> even, odd;
  do {
    Rational s = permutation_sum(m, p);
    auto& slot = is_even(p) ? even : odd;
    if (!slot || s < *slot) slot = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return {*even, odd};
}

}  // namespace troprank
