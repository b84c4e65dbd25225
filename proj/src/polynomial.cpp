#include "flagcx/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagcx {

Polynomial::Polynomial(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(Integer c) { return Polynomial(std::vector<Integer>{std::move(c)}); }

Polynomial Polynomial::monomial(Integer c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_plus_x_pow(int n) {
  if (n < 0) throw std::invalid_argument("one_plus_x_pow: negative exponent");
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[k] = binomial(n, k);
  return Polynomial(std::move(v));
}

Integer Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Polynomial Polynomial::shifted(int k) const {
  if (k < 0) return divided_by_x(-k);
  if (is_zero()) return {};
  std::vector<Integer> v(static_cast<std::size_t>(k), Integer(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::divided_by_x(int k) const {
  if (k < 0) return shifted(-k);
  for (int i = 0; i < k && i < static_cast<int>(coeffs_.size()); ++i)
    if (coeffs_[i] != 0) throw std::domain_error("polynomial not divisible by x^" + std::to_string(k));
  if (k >= static_cast<int>(coeffs_.size())) return {};
  return Polynomial(std::vector<Integer>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

bool poly_ge(const Polynomial& p, const Polynomial& q) { return nonnegative(p - q); }

bool nonnegative(const Polynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c >= 0; });
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace flagcx
