#pragma once

#include "qgl3/qmatrix.hpp"

// The quantum Laplace and minor commutation identities, stated over
// O_q(M_n) and evaluated to exact zero remainders by the PBW engine.

namespace qgl3::identities {

inline AlgebraElement comp_minor(int n, int r, int c) {
  return quantum_minor(n, MinorSpec(complement(n, {r}), complement(n, {c})));
}

inline bool e11(int n, int i, int j, int l, int m) {
  auto X = [n](int r, int c) { return AlgebraElement::generator(n, r, c); };
  if (j == m && i < l)  // same column
    return X(i, j) * X(l, j) == (X(l, j) * X(i, j)).scaled(LaurentScalar::q());
  if (i == l && j < m)  // same row
    return X(i, j) * X(i, m) == (X(i, m) * X(i, j)).scaled(LaurentScalar::q());
  if (i < l && j > m) return X(i, j) * X(l, m) == X(l, m) * X(i, j);
  if (i < l && j < m)
    return X(i, j) * X(l, m) - X(l, m) * X(i, j) ==
           (X(i, m) * X(l, j)).scaled(LaurentScalar::q_hat());
  return false;
}

inline bool e13b(int n, int i, int j, int l, int m) {
  AlgebraElement x = AlgebraElement::generator(n, i, j);
  AlgebraElement mn = comp_minor(n, l, m);
  return x * mn == mn * x;
}

inline bool e13c(int n, int i, int j, int l, int variant) {
  AlgebraElement x = AlgebraElement::generator(n, i, j);
  AlgebraElement mn = comp_minor(n, l, j);
  AlgebraElement rhs(n);
  if (variant == 1) {
    for (int s = 1; s < j; ++s)
      rhs += (comp_minor(n, l, s) * AlgebraElement::generator(n, i, s))
                 .scaled(minus_q_pow(j - s));
    return x * mn - (mn * x).scaled(LaurentScalar::q()) ==
           rhs.scaled(LaurentScalar::q_hat());
  }
  for (int s = j + 1; s <= n; ++s)
    rhs += (comp_minor(n, l, s) * AlgebraElement::generator(n, i, s))
               .scaled(minus_q_pow(j - s));
  return x * mn - (mn * x).scaled(LaurentScalar::q(-1)) ==
         rhs.scaled(-LaurentScalar::q_hat());
}

inline bool e13d(int n, int i, int j, int m, int variant) {
  AlgebraElement x = AlgebraElement::generator(n, i, j);
  AlgebraElement mn = comp_minor(n, i, m);
  AlgebraElement rhs(n);
  if (variant == 1) {
    for (int s = 1; s < i; ++s)
      rhs += (comp_minor(n, s, m) * AlgebraElement::generator(n, s, j))
                 .scaled(minus_q_pow(i - s));
    return x * mn - (mn * x).scaled(LaurentScalar::q()) ==
           rhs.scaled(LaurentScalar::q_hat());
  }
  for (int s = i + 1; s <= n; ++s)
    rhs += (comp_minor(n, s, m) * AlgebraElement::generator(n, s, j))
               .scaled(minus_q_pow(i - s));
  return x * mn - (mn * x).scaled(LaurentScalar::q(-1)) ==
         rhs.scaled(-LaurentScalar::q_hat());
}

inline bool e13e(int n, int i, int j, int variant) {
  AlgebraElement x = AlgebraElement::generator(n, i, j);
  AlgebraElement mn = comp_minor(n, i, j);
  AlgebraElement lhs = x * mn - mn * x;
  AlgebraElement rhs(n);
  if (variant == 1) {
    for (int s = 1; s < i; ++s)
      rhs += (AlgebraElement::generator(n, s, j) * comp_minor(n, s, j))
                 .scaled(minus_q_pow(s - i));
    for (int t = j + 1; t <= n; ++t)
      rhs -= (comp_minor(n, i, t) * AlgebraElement::generator(n, i, t))
                 .scaled(minus_q_pow(j - t));
    return lhs == rhs.scaled(LaurentScalar::q() * LaurentScalar::q_hat());
  }
  for (int t = 1; t < j; ++t)
    rhs += (comp_minor(n, i, t) * AlgebraElement::generator(n, i, t))
               .scaled(minus_q_pow(j - t));
  for (int s = i + 1; s <= n; ++s)
    rhs -= (AlgebraElement::generator(n, s, j) * comp_minor(n, s, j))
               .scaled(minus_q_pow(s - i));
  return lhs == rhs.scaled(LaurentScalar::q(-1) * LaurentScalar::q_hat());
}

inline bool e13f(int n, int i, int j, int m) {  // j < m
  AlgebraElement a = comp_minor(n, i, j), b = comp_minor(n, i, m);
  return a * b == (b * a).scaled(LaurentScalar::q(-1));
}

inline bool e13g(int n, int i, int j, int l) {  // i < l
  AlgebraElement a = comp_minor(n, i, j), b = comp_minor(n, l, j);
  return a * b == (b * a).scaled(LaurentScalar::q(-1));
}

inline bool e13h(int n, int i, int j, int l, int m) {  // i < l, j > m
  AlgebraElement a = comp_minor(n, i, j), b = comp_minor(n, l, m);
  return a * b == b * a;
}

inline bool e13i(int n, int i, int j, int l, int m) {  // i < l, j < m
  // complementation reverses the componentwise order of the index sets,
  // so the commutator is oriented with [~l|~m] first
  AlgebraElement a = comp_minor(n, i, j), b = comp_minor(n, l, m);
  return b * a - a * b ==
         (comp_minor(n, l, j) * comp_minor(n, i, m))
             .scaled(LaurentScalar::q_hat());
}

inline bool dq_central(int n) {
  AlgebraElement dq = quantum_determinant(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      AlgebraElement x = AlgebraElement::generator(n, i, j);
      if (!(dq * x == x * dq)) return false;
    }
  return true;
}

// X_13 D_q = [12|13][13|23] - q [13|13][12|23]  (n = 3)
inline bool e43a() {
  int n = 3;
  AlgebraElement lhs =
      AlgebraElement::generator(n, 1, 3) * quantum_determinant(n);
  AlgebraElement rhs =
      quantum_minor(n, MinorSpec({1, 2}, {1, 3})) *
          quantum_minor(n, MinorSpec({1, 3}, {2, 3})) -
      (quantum_minor(n, MinorSpec({1, 3}, {1, 3})) *
       quantum_minor(n, MinorSpec({1, 2}, {2, 3})))
          .scaled(LaurentScalar::q());
  return lhs == rhs;
}

}  // namespace qgl3::identities
