#include "vknot/laurent_poly.hpp"

#include <stdexcept>

namespace vknot {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = coeffs_.try_emplace(exponent, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::max_degree() const {
  if (coeffs_.empty()) throw std::domain_error("max_degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
  if (coeffs_.empty()) throw std::domain_error("min_degree of the zero polynomial");
  return coeffs_.begin()->first;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (auto [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (auto [e, c] : coeffs_) out.coeffs_.emplace(-e, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (auto [e1, c1] : coeffs_)
    for (auto [e2, c2] : o.coeffs_) out.add_term(e1 + e2, c1 * c2);
  return *this = std::move(out);
}

LaurentPoly& LaurentPoly::operator*=(std::int64_t k) {
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, c] : coeffs_) c *= k;
  return *this;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) throw std::domain_error("negative power of a Laurent polynomial");
  LaurentPoly result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::string LaurentPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto [e, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c);
    out += '*';
    out += var;
    out += '^';
    out += std::to_string(e);
  }
  return out;
}

int max_degree(const LaurentPoly& p) { return p.max_degree(); }

}  // namespace vknot
