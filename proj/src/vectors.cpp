#include "flagcx/vectors.hpp"

#include <stdexcept>
#include <string>

namespace flagcx {

Polynomial h_polynomial(const SimplicialComplex& k) {
  if (k.is_void()) throw std::invalid_argument("h_polynomial: void complex");
  const int d = k.dimension() + 1;
  const Polynomial f = f_vector(k);
  const Polynomial one_minus_x{1, -1};
  Polynomial h;
  for (int i = 0; i <= d; ++i) {
    Polynomial term = Polynomial::monomial(f.coeff(i), i);
    for (int j = 0; j < d - i; ++j) term *= one_minus_x;
    h += term;
  }
  return h;
}

bool is_palindromic(const Polynomial& h, int d) {
  if (d < 0 || h.degree() > d) return false;
  for (int i = 0; i <= d; ++i)
    if (h.coeff(i) != h.coeff(d - i)) return false;
  return true;
}

bool dehn_sommerville_check(const SimplicialComplex& k) {
  if (k.is_void()) return false;
  return is_palindromic(h_polynomial(k), k.dimension() + 1);
}

GammaVector gamma_vector(const Polynomial& h, int d) {
  if (!is_palindromic(h, d))
    throw std::domain_error("gamma_vector: h = " + h.to_string() + " is not palindromic for d = " +
                            std::to_string(d));
  GammaVector g;
  g.d = d;
  Polynomial rest = h;
  for (int j = 0; 2 * j <= d; ++j) {
    Integer c = rest.coeff(j);
    g.gammas.push_back(c);
    if (c != 0) rest -= Polynomial::one_plus_x_pow(d - 2 * j).shifted(j) * c;
  }
  if (!rest.is_zero()) throw std::logic_error("gamma_vector: nonzero residue " + rest.to_string());
  return g;
}

Polynomial expand_gamma(const GammaVector& g) {
  Polynomial h;
  for (std::size_t j = 0; j < g.gammas.size(); ++j)
    h += Polynomial::one_plus_x_pow(g.d - 2 * static_cast<int>(j)).shifted(static_cast<int>(j)) * g.gammas[j];
  return h;
}

}  // namespace flagcx
