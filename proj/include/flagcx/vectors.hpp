// h- and gamma-vectors of simplicial complexes.
#pragma once

#include "flagcx/complex.hpp"
#include "flagcx/polynomial.hpp"

#include <vector>

namespace flagcx {

/// γ_0..γ_{⌊d/2⌋} with h(x) = Σ γ_j x^j (1+x)^{d-2j}.
struct GammaVector {
  std::vector<Integer> gammas;
  int d = 0;

  [[nodiscard]] Integer operator[](std::size_t j) const { return j < gammas.size() ? gammas[j] : Integer(0); }
  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// h(x) = Σ_i f_{i-1} x^i (1-x)^{d-i}, d = dim K + 1.
Polynomial h_polynomial(const SimplicialComplex& k);

/// Palindromicity of h of length d + 1 (coefficients past the degree count as zero).
bool is_palindromic(const Polynomial& h, int d);

/// h_k(K) = h_{d-k}(K) for every k, d = dim K + 1. False for the void complex.
bool dehn_sommerville_check(const SimplicialComplex& k);

/// Throws std::domain_error if h is not palindromic of length d + 1.
GammaVector gamma_vector(const Polynomial& h, int d);

/// Σ γ_j x^j (1+x)^{d-2j}.
Polynomial expand_gamma(const GammaVector& g);

}  // namespace flagcx
