#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nesto {

/// Dense integer polynomial, coefficient of t^i at index i. Trailing zeros are
/// trimmed on construction, so the zero polynomial has no coefficients and
/// equality is structural. All arithmetic is overflow checked.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial one() { return IntPolynomial{1}; }
  static IntPolynomial monomial(int power, std::int64_t coeff = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^i; 0 beyond the degree.
  std::int64_t operator[](int i) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  std::int64_t evaluate(std::int64_t t) const;
  bool nonnegative() const;
  /// True when c_i == c_{d-i} for the stated degree d.
  bool symmetric(int d) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }
  /// Multiply by t^k.
  IntPolynomial shifted(int k) const;

  bool operator==(const IntPolynomial&) const = default;

  /// "[1, 3]"; the zero polynomial prints as "[0]".
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// (1 + t)^k
IntPolynomial one_plus_t_pow(int k);

/// h(s) = f(s - 1) for a d-dimensional simple polytope's f-polynomial.
IntPolynomial f_to_h(const IntPolynomial& f, int d);

/// The unique gamma with sum gamma_i t^i (1+t)^(d-2i) == h.
IntPolynomial h_to_gamma(const IntPolynomial& h, int d);

/// sum gamma_i t^i (1+t)^(d-2i)
IntPolynomial gamma_to_h(const IntPolynomial& gamma, int d);

/// Coefficient-wise a <= b, missing coefficients read as zero.
bool gamma_le(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace nesto
