#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qgl3/scalar.hpp"

namespace qgl3 {

// (-q)^k as a Laurent scalar, k of either sign.
inline LaurentScalar minus_q_pow(std::int32_t k) {
  bool odd = ((k % 2) + 2) % 2 == 1;
  return LaurentScalar::monomial(Expo{{k, 0, 0, 0}}, odd ? -1 : 1);
}

// One canonical generator X_{row,col}, indices 1-based.
struct Generator {
  std::uint8_t row = 1, col = 1;

  Generator() = default;
  Generator(int r, int c) : row(std::uint8_t(r)), col(std::uint8_t(c)) {}

  int code(int n) const { return (row - 1) * n + (col - 1); }

  friend bool operator==(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

// H-weight: row and column multidegrees in Z^n.
struct HWeight {
  std::vector<int> rows, cols;

  explicit HWeight(int n = 0) : rows(n, 0), cols(n, 0) {}

  friend bool operator==(const HWeight&, const HWeight&) = default;
  friend auto operator<=>(const HWeight& a, const HWeight& b) {
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    return a.cols <=> b.cols;
  }

  HWeight& operator+=(const HWeight& o) {
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] += o.rows[i];
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] += o.cols[i];
    return *this;
  }
  HWeight operator+(const HWeight& o) const {
    HWeight r = *this;
    r += o;
    return r;
  }
  HWeight operator-(const HWeight& o) const {
    HWeight r = *this;
    for (std::size_t i = 0; i < rows.size(); ++i) r.rows[i] -= o.rows[i];
    for (std::size_t i = 0; i < cols.size(); ++i) r.cols[i] -= o.cols[i];
    return r;
  }
  HWeight operator-() const {
    HWeight r(int(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) r.rows[i] = -rows[i];
    for (std::size_t i = 0; i < cols.size(); ++i) r.cols[i] = -cols[i];
    return r;
  }
  HWeight reversed() const {
    HWeight r = *this;
    std::reverse(r.rows.begin(), r.rows.end());
    std::reverse(r.cols.begin(), r.cols.end());
    return r;
  }
  HWeight swapped() const {
    HWeight r = *this;
    std::swap(r.rows, r.cols);
    return r;
  }
  int total() const { return std::accumulate(rows.begin(), rows.end(), 0); }

  static HWeight of_generator(int n, Generator g) {
    HWeight w(n);
    w.rows[g.row - 1] = 1;
    w.cols[g.col - 1] = 1;
    return w;
  }
  static HWeight constant(int n, int v) {
    HWeight w(n);
    for (auto& x : w.rows) x = v;
    for (auto& x : w.cols) x = v;
    return w;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < rows.size(); ++i)
      os << (i ? "," : "") << rows[i];
    os << "|";
    for (std::size_t i = 0; i < cols.size(); ++i)
      os << (i ? "," : "") << cols[i];
    os << ")";
    return os.str();
  }
};

// Exponent vector of a lexicographically ordered monomial in the X_{ij},
// row-major over generators.
struct PbwMonomial {
  std::vector<std::uint16_t> exponents;  // length n*n

  PbwMonomial() = default;
  explicit PbwMonomial(int n) : exponents(std::size_t(n) * n, 0) {}

  friend bool operator==(const PbwMonomial&, const PbwMonomial&) = default;
  friend auto operator<=>(const PbwMonomial& a, const PbwMonomial& b) {
    return a.exponents <=> b.exponents;
  }

  int dimension() const {
    int n = 1;
    while (std::size_t(n) * n < exponents.size()) ++n;
    return n;
  }

  int degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
  }

  HWeight weight(int n) const {
    HWeight w(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        int e = exponents[std::size_t(r) * n + c];
        w.rows[r] += e;
        w.cols[c] += e;
      }
    return w;
  }

  Word to_word(int n) const {
    Word w;
    w.reserve(degree());
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c)
        for (int k = 0; k < exponents[std::size_t(r - 1) * n + (c - 1)]; ++k)
          w.emplace_back(r, c);
    return w;
  }

  static PbwMonomial from_sorted_word(int n, const Word& w) {
    PbwMonomial m(n);
    for (Generator g : w) ++m.exponents[g.code(n)];
    return m;
  }

  static PbwMonomial unit(int n) { return PbwMonomial(n); }

  std::string to_string() const {
    int n = dimension();
    if (degree() == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        int e = exponents[std::size_t(r - 1) * n + (c - 1)];
        if (!e) continue;
        if (!first) os << "*";
        first = false;
        os << "X" << r << c;
        if (e > 1) os << "^" << e;
      }
    return os.str();
  }
};

enum class RewriteStrategy { leftmost, rightmost };

class AlgebraElement;
inline AlgebraElement normal_form(int n, const Word& word,
                                  RewriteStrategy strategy,
                                  const LaurentScalar& coeff);

// Element of O_q(M_n): finite Laurent-scalar combination of PBW monomials.
class AlgebraElement {
 public:
  using Terms = std::map<PbwMonomial, LaurentScalar>;

  explicit AlgebraElement(int n = 1) : n_(n) {}

  static AlgebraElement zero(int n) { return AlgebraElement(n); }

  static AlgebraElement scalar(int n, const LaurentScalar& c) {
    AlgebraElement a(n);
    a.add_term(PbwMonomial::unit(n), c);
    return a;
  }

  static AlgebraElement one(int n) {
    return scalar(n, LaurentScalar::one());
  }

  static AlgebraElement generator(int n, int row, int col) {
    AlgebraElement a(n);
    PbwMonomial m(n);
    ++m.exponents[Generator(row, col).code(n)];
    a.add_term(m, LaurentScalar::one());
    return a;
  }

  static AlgebraElement monomial(int n, const PbwMonomial& m,
                                 const LaurentScalar& c) {
    AlgebraElement a(n);
    a.add_term(m, c);
    return a;
  }

  int dimension() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PbwMonomial& m, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a += b;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a -= b;
    return a;
  }
  AlgebraElement operator-() const {
    AlgebraElement r(n_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  AlgebraElement scaled(const LaurentScalar& s) const {
    AlgebraElement r(n_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }

  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b) {
    a.check_dim(b);
    AlgebraElement r(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
      Word wa = ma.to_word(a.n_);
      for (const auto& [mb, cb] : b.terms_) {
        Word w = wa;
        Word wb = mb.to_word(a.n_);
        w.insert(w.end(), wb.begin(), wb.end());
        r += normal_form(a.n_, w, RewriteStrategy::leftmost, ca * cb);
      }
    }
    return r;
  }
  AlgebraElement& operator*=(const AlgebraElement& o) {
    *this = *this * o;
    return *this;
  }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  struct WeightResult {
    enum Kind { Homogeneous, NotHomogeneous, Zero } kind;
    HWeight weight;

    bool homogeneous() const { return kind != NotHomogeneous; }
  };

  WeightResult weight() const {
    if (terms_.empty()) return {WeightResult::Zero, HWeight(n_)};
    HWeight w = terms_.begin()->first.weight(n_);
    for (const auto& [m, c] : terms_)
      if (m.weight(n_) != w) return {WeightResult::NotHomogeneous, HWeight(n_)};
    return {WeightResult::Homogeneous, w};
  }

  bool is_homogeneous() const { return weight().homogeneous(); }

  // Splits into H-homogeneous components, keyed by weight.
  std::map<HWeight, AlgebraElement> components() const {
    std::map<HWeight, AlgebraElement> out;
    for (const auto& [m, c] : terms_) {
      auto [it, fresh] = out.try_emplace(m.weight(n_), n_);
      it->second.add_term(m, c);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string mono = m.to_string();
      bool neg = c.leading_negative();
      LaurentScalar coef = neg ? -c : c;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      if (coef.is_one()) {
        os << mono;
      } else {
        std::string cs = coef.to_string();
        if (!coef.is_monomial()) cs = "(" + cs + ")";
        if (mono == "1")
          os << cs;
        else
          os << cs << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  void check_dim(const AlgebraElement& o) const {
    if (n_ != o.n_) throw DimensionError("algebra dimension mismatch");
  }

  int n_;
  Terms terms_;
};

// Expansion of a generator word in the PBW basis via the defining
// relations, rewriting out-of-order adjacent pairs until sorted.  The two
// strategies must agree (confluence); the property suite checks this.
inline AlgebraElement normal_form(int n, const Word& word,
                                  RewriteStrategy strategy,
                                  const LaurentScalar& coeff) {
  AlgebraElement result(n);
  if (coeff.is_zero()) return result;
  std::vector<std::pair<LaurentScalar, Word>> stack;
  stack.emplace_back(coeff, word);
  const LaurentScalar qinv = LaurentScalar::q(-1);
  const LaurentScalar neg_qhat = -LaurentScalar::q_hat();
  while (!stack.empty()) {
    auto [c, w] = std::move(stack.back());
    stack.pop_back();
    int pos = -1;
    if (strategy == RewriteStrategy::leftmost) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].code(n) > w[i + 1].code(n)) {
          pos = int(i);
          break;
        }
    } else {
      for (std::size_t i = w.size(); i >= 2; --i)
        if (w[i - 2].code(n) > w[i - 1].code(n)) {
          pos = int(i - 2);
          break;
        }
    }
    if (pos < 0) {
      result.add_term(PbwMonomial::from_sorted_word(n, w), c);
      continue;
    }
    Generator a = w[pos], b = w[pos + 1];  // a > b in row-major order
    std::swap(w[pos], w[pos + 1]);
    if (a.row == b.row || a.col == b.col) {
      stack.emplace_back(c * qinv, std::move(w));
    } else if (a.col < b.col) {
      stack.emplace_back(c, std::move(w));  // plain commutation
    } else {
      // a.row > b.row, a.col > b.col: swap minus q_hat correction
      Word w2 = w;
      w2[pos] = Generator(b.row, a.col);
      w2[pos + 1] = Generator(a.row, b.col);
      stack.emplace_back(c, std::move(w));
      stack.emplace_back(c * neg_qhat, std::move(w2));
    }
  }
  return result;
}

inline AlgebraElement normal_form(int n, const Word& word,
                                  RewriteStrategy strategy =
                                      RewriteStrategy::leftmost) {
  return normal_form(n, word, strategy, LaurentScalar::one());
}

// Index sets of a quantum minor [I|J]; rows and cols strictly increasing
// and of equal size.
struct MinorSpec {
  std::vector<int> rows, cols;

  MinorSpec() = default;
  MinorSpec(std::vector<int> r, std::vector<int> c)
      : rows(std::move(r)), cols(std::move(c)) {
    validate();
  }

  void validate() const {
    if (rows.size() != cols.size())
      throw DimensionError("minor index sets differ in size");
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
      if (rows[i] >= rows[i + 1] || cols[i] >= cols[i + 1])
        throw DimensionError("minor index sets must be strictly increasing");
  }

  std::size_t size() const { return rows.size(); }

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
  friend auto operator<=>(const MinorSpec& a, const MinorSpec& b) {
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    return a.cols <=> b.cols;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r : rows) os << r;
    os << "|";
    for (int c : cols) os << c;
    os << "]";
    return os.str();
  }
};

// Complement of an index set inside {1..n}.
inline std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
  return out;
}

inline int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

// [I|J] = sum over S_t of (-q)^{l(pi)} X_{i1,j_pi(1)} ... X_{it,j_pi(t)};
// the factors come in increasing row order, so each term is already a PBW
// monomial.
inline AlgebraElement quantum_minor(int n, const MinorSpec& spec) {
  spec.validate();
  std::size_t t = spec.size();
  AlgebraElement out(n);
  if (t == 0) return AlgebraElement::one(n);
  std::vector<int> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Word w;
    w.reserve(t);
    for (std::size_t k = 0; k < t; ++k)
      w.emplace_back(spec.rows[k], spec.cols[perm[k]]);
    out.add_term(PbwMonomial::from_sorted_word(n, w),
                 minus_q_pow(inversion_count(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline AlgebraElement quantum_determinant(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return quantum_minor(n, MinorSpec(all, all));
}

// Element of O_q(GL_n) written as numerator * D_q^{-dq_power}.
struct GlElement {
  AlgebraElement numerator;
  unsigned dq_power = 0;

  GlElement() : numerator(1) {}
  explicit GlElement(AlgebraElement a, unsigned p = 0)
      : numerator(std::move(a)), dq_power(p) {}

  int dimension() const { return numerator.dimension(); }
};

inline bool gl_equal(const GlElement& a, const GlElement& b) {
  if (a.dimension() != b.dimension())
    throw DimensionError("GL element dimension mismatch");
  int n = a.dimension();
  AlgebraElement dq = quantum_determinant(n);
  AlgebraElement lhs = a.numerator, rhs = b.numerator;
  for (unsigned k = 0; k < b.dq_power; ++k) lhs *= dq;
  for (unsigned k = 0; k < a.dq_power; ++k) rhs *= dq;
  return lhs == rhs;
}

// Weight of a GL element: D_q^{-1} contributes (-1,...,-1 | -1,...,-1).
inline AlgebraElement::WeightResult gl_weight(const GlElement& a) {
  auto w = a.numerator.weight();
  if (w.kind != AlgebraElement::WeightResult::Homogeneous) return w;
  w.weight += HWeight::constant(a.dimension(), -int(a.dq_power));
  return w;
}

enum class LaplaceSide { row, col };

// Quantum Laplace expansions: row side checks
//   sum_j (-q)^{j-l} X_{ij} [~l|~j] = delta_{il} D_q,
// column side checks   sum_j (-q)^{i-j} [~j|~i] X_{jl} = delta_{il} D_q.
inline bool laplace_check(int n, int i, int l, LaplaceSide side) {
  AlgebraElement sum(n);
  for (int j = 1; j <= n; ++j) {
    if (side == LaplaceSide::row) {
      AlgebraElement minor =
          quantum_minor(n, MinorSpec(complement(n, {l}), complement(n, {j})));
      sum += (AlgebraElement::generator(n, i, j) * minor)
                 .scaled(minus_q_pow(j - l));
    } else {
      AlgebraElement minor =
          quantum_minor(n, MinorSpec(complement(n, {j}), complement(n, {i})));
      sum += (minor * AlgebraElement::generator(n, j, l))
                 .scaled(minus_q_pow(i - j));
    }
  }
  AlgebraElement expected =
      i == l ? quantum_determinant(n) : AlgebraElement::zero(n);
  return sum == expected;
}

}  // namespace qgl3
