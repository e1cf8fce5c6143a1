#include "nesto/poly.hpp"

#include <algorithm>
#include <sstream>

#include "nesto/errors.hpp"

namespace nesto {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in polynomial addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in polynomial subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in polynomial multiplication");
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(int power, std::int64_t coeff) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(power) + 1, 0);
  c.back() = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::int64_t IntPolynomial::evaluate(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

bool IntPolynomial::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

bool IntPolynomial::symmetric(int d) const {
  if (degree() > d) return false;
  for (int i = 0; i <= d; ++i)
    if ((*this)[i] != (*this)[d - i]) return false;
  return true;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<std::int64_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = checked_add((*this)[static_cast<int>(i)], o[static_cast<int>(i)]);
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<std::int64_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = checked_sub((*this)[static_cast<int>(i)], o[static_cast<int>(i)]);
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<std::int64_t> r(static_cast<std::size_t>(k), 0);
  r.insert(r.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "[0]";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
  os << ']';
  return os.str();
}

IntPolynomial one_plus_t_pow(int k) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int row = 1; row <= k; ++row)
    for (int j = row; j >= 1; --j) c[j] = checked_add(c[j], c[j - 1]);
  return IntPolynomial(std::move(c));
}

IntPolynomial f_to_h(const IntPolynomial& f, int d) {
  if (d < 0 || f.degree() != d)
    throw MalformedPolynomial("f-polynomial " + f.to_string() + " does not have degree " + std::to_string(d));
  if (!f.nonnegative()) throw MalformedPolynomial("f-polynomial " + f.to_string() + " has a negative coefficient");
  // Taylor shift by -1 via repeated synthetic division.
  std::vector<std::int64_t> c = f.coeffs();
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) c[j] = checked_sub(c[j], c[j + 1]);
  return IntPolynomial(std::move(c));
}

IntPolynomial h_to_gamma(const IntPolynomial& h, int d) {
  if (!h.symmetric(d)) throw SymmetryViolation("h-polynomial " + h.to_string() + " is not symmetric in degree " + std::to_string(d));
  IntPolynomial rest = h;
  std::vector<std::int64_t> gamma;
  for (int i = 0; i <= d / 2; ++i) {
    const std::int64_t g = rest[i];
    gamma.push_back(g);
    if (g != 0) rest = rest - (one_plus_t_pow(d - 2 * i) * IntPolynomial{g}).shifted(i);
  }
  if (!rest.is_zero())
    throw SymmetryViolation("gamma expansion of " + h.to_string() + " leaves remainder " + rest.to_string());
  return IntPolynomial(std::move(gamma));
}

IntPolynomial gamma_to_h(const IntPolynomial& gamma, int d) {
  if (2 * gamma.degree() > d)
    throw MalformedPolynomial("gamma-polynomial " + gamma.to_string() + " too long for dimension " + std::to_string(d));
  IntPolynomial h;
  for (int i = 0; i <= gamma.degree(); ++i)
    if (gamma[i] != 0) h += (one_plus_t_pow(d - 2 * i) * IntPolynomial{gamma[i]}).shifted(i);
  return h;
}

bool gamma_le(const IntPolynomial& a, const IntPolynomial& b) {
  const int top = std::max(a.degree(), b.degree());
  for (int i = 0; i <= top; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace nesto
