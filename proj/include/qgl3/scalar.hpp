#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <gmpxx.h>

#include "qgl3/errors.hpp"

namespace qgl3 {

using Rational = mpq_class;

// Exponent vector over the scalar variables (q, alpha, beta, gamma).
struct Expo {
  std::array<std::int32_t, 4> e{0, 0, 0, 0};

  friend bool operator==(const Expo&, const Expo&) = default;
  friend auto operator<=>(const Expo& a, const Expo& b) { return a.e <=> b.e; }

  static std::int32_t checked_add(std::int32_t a, std::int32_t b) {
    std::int64_t s = std::int64_t(a) + std::int64_t(b);
    if (s > INT32_MAX / 2 || s < INT32_MIN / 2) throw OverflowError{};
    return static_cast<std::int32_t>(s);
  }

  Expo operator+(const Expo& o) const {
    Expo r;
    for (int i = 0; i < 4; ++i) r.e[i] = checked_add(e[i], o.e[i]);
    return r;
  }
  Expo operator-(const Expo& o) const {
    Expo r;
    for (int i = 0; i < 4; ++i) r.e[i] = checked_add(e[i], -o.e[i]);
    return r;
  }
  Expo operator-() const {
    Expo r;
    for (int i = 0; i < 4; ++i) r.e[i] = checked_add(0, -e[i]);
    return r;
  }
  bool is_zero() const { return e == std::array<std::int32_t, 4>{0, 0, 0, 0}; }
};

// Multivariate Laurent polynomial over Q in q and the parameters
// alpha, beta, gamma.  Zero coefficients are never stored.
class LaurentScalar {
 public:
  using Terms = std::map<Expo, Rational>;

  LaurentScalar() = default;

  static LaurentScalar zero() { return {}; }

  static LaurentScalar from_rational(const Rational& r) {
    LaurentScalar s;
    if (r != 0) s.terms_[Expo{}] = r;
    return s;
  }

  static LaurentScalar from_int(long v) { return from_rational(Rational(v)); }

  static LaurentScalar one() { return from_int(1); }

  static LaurentScalar monomial(const Expo& x, const Rational& c) {
    LaurentScalar s;
    if (c != 0) s.terms_[x] = c;
    return s;
  }

  static LaurentScalar q(std::int32_t power = 1) {
    return monomial(Expo{{power, 0, 0, 0}}, 1);
  }

  // q_hat = q - q^{-1}
  static LaurentScalar q_hat() { return q(1) - q(-1); }

  static LaurentScalar alpha(std::int32_t power = 1) {
    return monomial(Expo{{0, power, 0, 0}}, 1);
  }
  static LaurentScalar beta(std::int32_t power = 1) {
    return monomial(Expo{{0, 0, power, 0}}, 1);
  }
  static LaurentScalar gamma(std::int32_t power = 1) {
    return monomial(Expo{{0, 0, 0, power}}, 1);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_zero() &&
           terms_.begin()->second == 1;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  // The exponent t such that *this == q^t exactly, if any.
  std::optional<std::int32_t> as_q_power() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [x, c] = *terms_.begin();
    if (c != 1) return std::nullopt;
    if (x.e[1] != 0 || x.e[2] != 0 || x.e[3] != 0) return std::nullopt;
    return x.e[0];
  }

  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    return a.terms_ == b.terms_;
  }

  LaurentScalar& operator+=(const LaurentScalar& o) {
    for (const auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
  }
  LaurentScalar& operator-=(const LaurentScalar& o) {
    for (const auto& [x, c] : o.terms_) add_term(x, -c);
    return *this;
  }
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) {
    a += b;
    return a;
  }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) {
    a -= b;
    return a;
  }
  LaurentScalar operator-() const {
    LaurentScalar r;
    for (const auto& [x, c] : terms_) r.terms_[x] = -c;
    return r;
  }

  friend LaurentScalar operator*(const LaurentScalar& a,
                                 const LaurentScalar& b) {
    LaurentScalar r;
    for (const auto& [xa, ca] : a.terms_)
      for (const auto& [xb, cb] : b.terms_) r.add_term(xa + xb, ca * cb);
    return r;
  }
  LaurentScalar& operator*=(const LaurentScalar& o) {
    *this = *this * o;
    return *this;
  }

  LaurentScalar scaled(const Rational& c) const {
    LaurentScalar r;
    if (c == 0) return r;
    for (const auto& [x, k] : terms_) r.terms_[x] = k * c;
    return r;
  }

  // Quotient of *this by a divisor that is known to divide it in the
  // Laurent ring; empty result when the division is not exact.
  std::optional<LaurentScalar> try_exact_div(const LaurentScalar& b) const {
    if (b.is_zero()) throw ZeroDivisor{};
    if (is_zero()) return zero();
    if (b.is_monomial()) {
      const auto& [xb, cb] = *b.terms_.begin();
      LaurentScalar r;
      for (const auto& [x, c] : terms_) r.terms_[x - xb] = c / cb;
      return r;
    }
    // Leading-term division under the lex order on exponent vectors.
    // Every quotient term must land in the box [min(a)-min(b), max(a)-max(b)],
    // componentwise; stepping outside it certifies non-divisibility.
    Expo lo, hi;
    for (int i = 0; i < 4; ++i) {
      lo.e[i] = Expo::checked_add(min_exp(i), -b.min_exp(i));
      hi.e[i] = Expo::checked_add(max_exp(i), -b.max_exp(i));
    }
    const auto& [lead_b, lead_bc] = *b.terms_.rbegin();
    LaurentScalar quot, rem = *this;
    while (!rem.is_zero()) {
      const auto& [lead_r, lead_rc] = *rem.terms_.rbegin();
      Expo t = lead_r - lead_b;
      for (int i = 0; i < 4; ++i)
        if (t.e[i] < lo.e[i] || t.e[i] > hi.e[i]) return std::nullopt;
      LaurentScalar m = monomial(t, lead_rc / lead_bc);
      quot += m;
      rem -= m * b;
    }
    return quot;
  }

  LaurentScalar exact_div(const LaurentScalar& b) const {
    auto r = try_exact_div(b);
    if (!r) throw DivisibilityError("scalar division is not exact");
    return *r;
  }

  // Componentwise minimum of the exponent vectors (monomial content).
  Expo monomial_content() const {
    Expo m = terms_.begin()->first;
    for (const auto& [x, c] : terms_)
      for (int i = 0; i < 4; ++i) m.e[i] = std::min(m.e[i], x.e[i]);
    return m;
  }

  LaurentScalar shifted(const Expo& by) const {
    LaurentScalar r;
    for (const auto& [x, c] : terms_) r.terms_[x + by] = c;
    return r;
  }

  // Substitute a rational value for one of the parameter variables
  // (1 = alpha, 2 = beta, 3 = gamma).  The value must be nonzero since
  // negative exponents occur.
  LaurentScalar substituted(int var, const Rational& value) const {
    if (value == 0) throw ZeroDivisor{};
    LaurentScalar r;
    for (const auto& [x, c] : terms_) {
      Expo y = x;
      std::int32_t p = y.e[var];
      y.e[var] = 0;
      r.add_term(y, c * pow_rational(value, p));
    }
    return r;
  }

  // Evaluate at rational points (all nonzero); used by test oracles.
  Rational evaluated(const std::array<Rational, 4>& at) const {
    Rational r = 0;
    for (const auto& [x, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < 4; ++i) t *= pow_rational(at[i], x.e[i]);
      r += t;
    }
    return r;
  }

  // Sign of the leading (largest-exponent) coefficient.
  bool leading_negative() const {
    return !terms_.empty() && terms_.rbegin()->second < 0;
  }

  std::string to_string() const {
    static const char* names[4] = {"q", "alpha", "beta", "gamma"};
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [x, c] = *it;
      Rational a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      std::string vars;
      for (int i = 0; i < 4; ++i) {
        if (x.e[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += names[i];
        if (x.e[i] != 1) vars += "^" + std::to_string(x.e[i]);
      }
      if (vars.empty()) {
        os << a.get_str();
      } else if (a == 1) {
        os << vars;
      } else {
        os << a.get_str() << "*" << vars;
      }
    }
    return os.str();
  }

 private:
  void add_term(const Expo& x, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(x);
    if (it == terms_.end()) {
      terms_.emplace(x, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int32_t min_exp(int i) const {
    std::int32_t m = terms_.begin()->first.e[i];
    for (const auto& [x, c] : terms_) m = std::min(m, x.e[i]);
    return m;
  }
  std::int32_t max_exp(int i) const {
    std::int32_t m = terms_.begin()->first.e[i];
    for (const auto& [x, c] : terms_) m = std::max(m, x.e[i]);
    return m;
  }

  static Rational pow_rational(const Rational& v, std::int32_t p) {
    if (p == 0) return 1;
    Rational base = p > 0 ? v : Rational(1) / v;
    std::int64_t n = p > 0 ? p : -std::int64_t(p);
    Rational r = 1;
    while (n) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  Terms terms_;
};

enum class ScalarOp { add, mul, neg, exact_div };

// Spec-level dispatch wrapper over the operators above.
inline LaurentScalar scalar_arith(const LaurentScalar& a,
                                  const LaurentScalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::add:
      return a + b;
    case ScalarOp::mul:
      return a * b;
    case ScalarOp::neg:
      return -a;
    case ScalarOp::exact_div:
      return a.exact_div(b);
  }
  throw Error("bad scalar op");
}

}  // namespace qgl3
