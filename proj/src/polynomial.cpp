#include "vctk/polynomial.hpp"

#include <map>
#include <mutex>

namespace vctk {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::t_power_minus_one(unsigned d) {
  std::vector<Integer> c(d + 1);
  c[0] = -1;
  c[d] += 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  if (c_.empty()) throw ArithmeticError("zero polynomial has no leading coefficient");
  return c_.back();
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& s, const IntPolynomial& a) {
  std::vector<Integer> c = a.c_;
  for (auto& x : c) x *= s;
  return IntPolynomial(std::move(c));
}

PolyDivision divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  const Integer& lb = b.leading();
  if (abs(lb) != 1) throw ArithmeticError("polynomial divisor must have leading coefficient +-1");
  std::vector<Integer> rem = a.coefficients();
  const std::vector<Integer>& bc = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {IntPolynomial(), a};
  std::vector<Integer> quot(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    Integer q = rem[k] * lb;  // lb = +-1 is its own inverse
    if (sgn(q) == 0) continue;
    quot[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  PolyDivision d = divide(a, b);
  if (!d.remainder.is_zero()) throw ArithmeticError("polynomial division leaves a remainder");
  return d.quotient;
}

unsigned long euler_phi(unsigned long d) {
  unsigned long result = d;
  for (unsigned long p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

const IntPolynomial& cyclotomic(unsigned d) {
  if (d == 0) throw InputError("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<unsigned, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  // Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e
  IntPolynomial p = IntPolynomial::t_power_minus_one(d);
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) p = exact_divide(p, cyclotomic(e));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(d, std::move(p)).first->second;
}

IntPolynomial char_poly(const IntMatrix& h) {
  if (!h.square()) throw DimensionError("characteristic polynomial needs a square matrix");
  const std::size_t n = h.rows();
  Matrix<IntPolynomial> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = i == j ? IntPolynomial({Integer(-h(i, j)), Integer(1)})
                       : IntPolynomial::constant(-h(i, j));
  if (n == 0) return IntPolynomial({1});
  // Bareiss; the pivots are leading principal minors of tI - H, hence monic.
  IntPolynomial prev({1});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return m(n - 1, n - 1);
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& a = c[k];
    if (sgn(a) == 0) continue;
    Integer mag = abs(a);
    if (out.empty())
      out += sgn(a) < 0 ? "-" : "";
    else
      out += sgn(a) < 0 ? " - " : " + ";
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

CyclotomicFactorization is_quasi_unipotent(const IntPolynomial& p) {
  if (p.is_zero() || abs(p.leading()) != 1)
    throw InputError("quasi-unipotence test needs a polynomial with leading coefficient +-1");
  CyclotomicFactorization out;
  out.sign = sgn(p.leading());
  IntPolynomial rest = out.sign > 0 ? p : -p;
  // phi(d) >= sqrt(d / 2), so d <= 2 deg^2 bounds every candidate.
  const unsigned long deg = static_cast<unsigned long>(rest.degree());
  const unsigned long dmax = std::max<unsigned long>(2, 2 * deg * deg);
  for (unsigned d = 1; d <= dmax && rest.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<unsigned long>(rest.degree())) continue;
    const IntPolynomial& phi = cyclotomic(d);
    for (;;) {
      PolyDivision div = divide(rest, phi);
      if (!div.remainder.is_zero()) break;
      rest = div.quotient;
      out.factors.push_back(d);
    }
  }
  out.quasi_unipotent = rest == IntPolynomial({1});
  return out;
}

}  // namespace vctk
