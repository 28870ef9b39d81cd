#pragma once

#include <vector>

#include "qgl3/qmatrix.hpp"

namespace qgl3 {

// Transpose automorphism: X_ij -> X_ji, word order kept.
inline AlgebraElement apply_tau(const AlgebraElement& a) {
  int n = a.dimension();
  AlgebraElement out(n);
  for (const auto& [m, c] : a.terms()) {
    Word w = m.to_word(n);
    for (Generator& g : w) std::swap(g.row, g.col);
    out += normal_form(n, w, RewriteStrategy::leftmost, c);
  }
  return out;
}

// Anti-automorphism rho: X_ij -> X_{n+1-j, n+1-i}, word reversed.
inline AlgebraElement apply_rho(const AlgebraElement& a) {
  int n = a.dimension();
  AlgebraElement out(n);
  for (const auto& [m, c] : a.terms()) {
    Word w = m.to_word(n);
    std::reverse(w.begin(), w.end());
    for (Generator& g : w)
      g = Generator(n + 1 - g.col, n + 1 - g.row);
    out += normal_form(n, w, RewriteStrategy::leftmost, c);
  }
  return out;
}

inline GlElement apply_tau(const GlElement& a) {
  return GlElement(apply_tau(a.numerator), a.dq_power);  // tau(D_q) = D_q
}

inline GlElement apply_rho(const GlElement& a) {
  return GlElement(apply_rho(a.numerator), a.dq_power);  // rho(D_q) = D_q
}

// Antipode image of a single generator, with the D_q^{-1} factor kept
// implicit: S(X_ij) = (-q)^{i-j} [~j|~i] D_q^{-1}.
inline AlgebraElement antipode_numerator(int n, Generator g) {
  return quantum_minor(n, MinorSpec(complement(n, {g.col}),
                                    complement(n, {g.row})))
      .scaled(minus_q_pow(g.row - g.col));
}

// Antipode on O_q(M_n) values, landing in O_q(GL_n): words are reversed
// and each letter contributes one D_q^{-1}.
inline GlElement apply_antipode(const AlgebraElement& a) {
  int n = a.dimension();
  unsigned max_len = 0;
  for (const auto& [m, c] : a.terms())
    max_len = std::max(max_len, unsigned(m.degree()));
  AlgebraElement dq = quantum_determinant(n);
  AlgebraElement num(n);
  for (const auto& [m, c] : a.terms()) {
    Word w = m.to_word(n);
    AlgebraElement part = AlgebraElement::scalar(n, c);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      part *= antipode_numerator(n, *it);
    for (unsigned k = unsigned(w.size()); k < max_len; ++k) part *= dq;
    num += part;
  }
  return GlElement(num, max_len);
}

inline GlElement apply_antipode(const GlElement& a) {
  GlElement s = apply_antipode(a.numerator);  // S(D_q^{-m}) = D_q^{m}
  if (s.dq_power >= a.dq_power) return GlElement(s.numerator, s.dq_power - a.dq_power);
  AlgebraElement dq = quantum_determinant(a.dimension());
  AlgebraElement num = s.numerator;
  for (unsigned k = s.dq_power; k < a.dq_power; ++k) num *= dq;
  return GlElement(num, 0);
}

// The square of the antipode acts diagonally: S^2(X_ij) = q^{2(i-j)} X_ij.
// Verified computationally by the symmetry suite before S^{-1} is trusted.
inline AlgebraElement scale_by_antipode_square_inverse(
    const AlgebraElement& a) {
  int n = a.dimension();
  AlgebraElement out(n);
  for (const auto& [m, c] : a.terms()) {
    int shift = 0;
    auto w = m.weight(n);
    for (int i = 0; i < n; ++i) shift += (i + 1) * (w.rows[i] - w.cols[i]);
    out.add_term(m, c * LaurentScalar::q(-2 * shift));
  }
  return out;
}

inline GlElement apply_antipode_inverse(const GlElement& a) {
  // S^{-1} = (S^2)^{-1} . S; D_q is fixed by (S^2)^{-1}
  GlElement s = apply_antipode(a);
  return GlElement(scale_by_antipode_square_inverse(s.numerator), s.dq_power);
}

inline GlElement gl_mul(const GlElement& a, const GlElement& b) {
  return GlElement(a.numerator * b.numerator, a.dq_power + b.dq_power);
}

enum class SymmetryKind { tau, rho, antipode, antipode_inverse };

// Composite symmetry, applied left to right.
using SymmetryMap = std::vector<SymmetryKind>;

inline GlElement apply_symmetry(SymmetryKind k, const GlElement& a) {
  switch (k) {
    case SymmetryKind::tau:
      return apply_tau(a);
    case SymmetryKind::rho:
      return apply_rho(a);
    case SymmetryKind::antipode:
      return apply_antipode(a);
    case SymmetryKind::antipode_inverse:
      return apply_antipode_inverse(a);
  }
  throw Error("bad symmetry kind");
}

inline GlElement apply_symmetry(const SymmetryMap& seq, GlElement a) {
  for (SymmetryKind k : seq) a = apply_symmetry(k, a);
  return a;
}

inline bool is_anti_automorphism(SymmetryKind k) {
  return k != SymmetryKind::tau;
}

inline bool is_anti_automorphism(const SymmetryMap& seq) {
  bool anti = false;
  for (SymmetryKind k : seq)
    if (is_anti_automorphism(k)) anti = !anti;
  return anti;
}

inline std::string symmetry_name(SymmetryKind k) {
  switch (k) {
    case SymmetryKind::tau:
      return "tau";
    case SymmetryKind::rho:
      return "rho";
    case SymmetryKind::antipode:
      return "S";
    case SymmetryKind::antipode_inverse:
      return "S^-1";
  }
  return "?";
}

inline std::string symmetry_name(const SymmetryMap& seq) {
  // printed in right-to-left composition order, first applied last
  std::string s;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += symmetry_name(*it);
  }
  return s.empty() ? "id" : s;
}

}  // namespace qgl3
