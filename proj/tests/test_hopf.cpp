#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qgl3/hopf.hpp"
#include "qgl3/perm.hpp"

using namespace qgl3;

namespace {

AlgebraElement X(int r, int c) { return AlgebraElement::generator(3, r, c); }

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<MinorSpec> all_minors(int n) {
  std::vector<MinorSpec> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& I : subsets(n, k))
      for (const auto& J : subsets(n, k)) out.emplace_back(I, J);
  return out;
}

std::vector<int> w0_image(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int v : s) out.push_back(n + 1 - v);
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement random_element(std::mt19937_64& rng, int n, int maxdeg,
                              int maxterms) {
  std::uniform_int_distribution<int> terms(1, maxterms), len(0, maxdeg),
      idx(1, n), coef(-3, 3);
  AlgebraElement out(n);
  for (int t = 0, k = terms(rng); t < k; ++t) {
    PbwMonomial m(n);
    for (int i = 0, d = len(rng); i < d; ++i)
      ++m.exponents[Generator(idx(rng), idx(rng)).code(n)];
    out.add_term(m, LaurentScalar::monomial(Expo{{coef(rng), 0, 0, 0}},
                                            Rational(coef(rng))));
  }
  return out;
}

PbwMonomial random_monomial(std::mt19937_64& rng, int n, int maxdeg) {
  std::uniform_int_distribution<int> len(0, maxdeg), idx(1, n);
  PbwMonomial m(n);
  for (int i = 0, k = len(rng); i < k; ++i)
    ++m.exponents[Generator(idx(rng), idx(rng)).code(n)];
  return m;
}

}  // namespace

TEST_CASE("generator images") {
  CHECK(apply_tau(X(1, 3)) == X(3, 1));
  CHECK(apply_rho(X(1, 2)) == X(2, 3));
  CHECK(apply_tau(quantum_determinant(3)) == quantum_determinant(3));
  CHECK(apply_rho(quantum_determinant(3)) == quantum_determinant(3));
}

TEST_CASE("tau and rho minor transformation laws") {
  for (const auto& spec : all_minors(3)) {
    AlgebraElement m = quantum_minor(3, spec);
    CHECK(apply_tau(m) == quantum_minor(3, MinorSpec(spec.cols, spec.rows)));
    CHECK(apply_rho(m) ==
          quantum_minor(3, MinorSpec(w0_image(3, spec.cols),
                                     w0_image(3, spec.rows))));
  }
}

TEST_CASE("antipode on generators") {
  // S(X_11) = [23|23] D_q^{-1}
  CHECK(gl_equal(apply_antipode(X(1, 1)),
                 GlElement(quantum_minor(3, MinorSpec({2, 3}, {2, 3})), 1)));
  // S(X_31) = q^2 [23|12] D_q^{-1}
  CHECK(gl_equal(apply_antipode(X(3, 1)),
                 GlElement(quantum_minor(3, MinorSpec({2, 3}, {1, 2}))
                               .scaled(LaurentScalar::q(2)),
                           1)));
}

TEST_CASE("antipode minor transformation law") {
  for (const auto& spec : all_minors(3)) {
    int sum_i = 0, sum_j = 0;
    for (int v : spec.rows) sum_i += v;
    for (int v : spec.cols) sum_j += v;
    AlgebraElement image =
        quantum_minor(3, MinorSpec(complement(3, spec.cols),
                                   complement(3, spec.rows)))
            .scaled(minus_q_pow(sum_i - sum_j));
    CHECK(gl_equal(apply_antipode(quantum_minor(3, spec)),
                   GlElement(image, 1)));
  }
}

TEST_CASE("tau and rho are involutions") {
  std::mt19937_64 rng(0x1D1D1Du);
  for (int t = 0; t < 100; ++t) {
    AlgebraElement a = random_element(rng, 3, 4, 3);
    CHECK(apply_tau(apply_tau(a)) == a);
    CHECK(apply_rho(apply_rho(a)) == a);
  }
}

TEST_CASE("tau commutes with rho") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(apply_tau(apply_rho(X(i, j))) == apply_rho(apply_tau(X(i, j))));
  std::mt19937_64 rng(0x7A7A7Au);
  for (int t = 0; t < 25; ++t) {
    AlgebraElement a = random_element(rng, 3, 4, 3);
    CHECK(apply_tau(apply_rho(a)) == apply_rho(apply_tau(a)));
  }
}

TEST_CASE("anti-multiplicativity") {
  std::mt19937_64 rng(0xFEED5u);
  for (int t = 0; t < 100; ++t) {
    AlgebraElement a = AlgebraElement::monomial(3, random_monomial(rng, 3, 3),
                                                LaurentScalar::one());
    AlgebraElement b = AlgebraElement::monomial(3, random_monomial(rng, 3, 3),
                                                LaurentScalar::one());
    CHECK(apply_rho(a * b) == apply_rho(b) * apply_rho(a));
    CHECK(gl_equal(apply_antipode(a * b),
                   gl_mul(apply_antipode(b), apply_antipode(a))));
  }
}

TEST_CASE("weight equivariance") {
  std::mt19937_64 rng(0x888u);
  for (int t = 0; t < 50; ++t) {
    AlgebraElement a = AlgebraElement::monomial(3, random_monomial(rng, 3, 4),
                                                LaurentScalar::one());
    HWeight w = a.weight().weight;
    CHECK(apply_tau(a).weight().weight == w.swapped());
    CHECK(apply_rho(a).weight().weight == w.swapped().reversed());
    auto ws = gl_weight(apply_antipode(a));
    CHECK(ws.weight == -w.swapped());
  }
}

TEST_CASE("antipode square is the diagonal q-scaling") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      GlElement s2 = apply_antipode(apply_antipode(X(i, j)));
      CHECK(gl_equal(
          s2, GlElement(X(i, j).scaled(LaurentScalar::q(2 * (i - j))))));
    }
}

TEST_CASE("antipode inverse") {
  std::mt19937_64 rng(0x99u);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      GlElement x(X(i, j));
      CHECK(gl_equal(apply_antipode_inverse(apply_antipode(x)), x));
      CHECK(gl_equal(apply_antipode(apply_antipode_inverse(x)), x));
    }
  for (int t = 0; t < 10; ++t) {
    GlElement a(AlgebraElement::monomial(3, random_monomial(rng, 3, 3),
                                         LaurentScalar::one()),
                1);
    CHECK(gl_equal(apply_antipode_inverse(apply_antipode(a)), a));
  }
}

TEST_CASE("antipode axiom on generators") {
  // sum_j S(X_ij) X_jl = delta_il; fixes the antipode convention
  for (int i = 1; i <= 3; ++i)
    for (int l = 1; l <= 3; ++l) {
      AlgebraElement num(3);
      for (int j = 1; j <= 3; ++j)
        num += apply_antipode(X(i, j)).numerator * X(j, l);
      AlgebraElement expect =
          i == l ? AlgebraElement::one(3) : AlgebraElement::zero(3);
      CHECK(gl_equal(GlElement(num, 1), GlElement(expect)));
    }
}

TEST_CASE("composite symmetries") {
  GlElement x(X(2, 1));
  SymmetryMap tau_s = {SymmetryKind::antipode, SymmetryKind::tau};
  CHECK(symmetry_name(tau_s) == "tau S");
  CHECK(gl_equal(apply_symmetry(tau_s, x), apply_tau(apply_antipode(x))));
  CHECK(is_anti_automorphism(tau_s));
  CHECK(!is_anti_automorphism(
      SymmetryMap{SymmetryKind::rho, SymmetryKind::antipode}));
}
