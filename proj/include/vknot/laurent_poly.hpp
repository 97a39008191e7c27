#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace vknot {

/// Integer Laurent polynomial in one variable. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Coefficients = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant) { add_term(0, constant); }  // NOLINT: integers embed as constants

  static LaurentPoly monomial(std::int64_t coeff, int exponent);

  void add_term(int exponent, std::int64_t coeff);

  const Coefficients& coefficients() const { return coeffs_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Throws std::domain_error on the zero polynomial.
  int max_degree() const;
  int min_degree() const;

  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  /// x -> x^-1.
  LaurentPoly reflected() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(std::int64_t k);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, std::int64_t k) { return a *= k; }
  friend LaurentPoly operator*(std::int64_t k, LaurentPoly a) { return a *= k; }
  LaurentPoly operator-() const { return *this * std::int64_t{-1}; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Non-negative integer power.
  LaurentPoly pow(int n) const;

  /// Terms by ascending exponent, e.g. `-1*A^-16 + 1*A^-12 + 1*A^-4`; `0` when zero.
  std::string to_string(char var = 'A') const;

 private:
  Coefficients coeffs_;
};

/// Free-function spelling used by the invariant code.
int max_degree(const LaurentPoly& p);

}  // namespace vknot
