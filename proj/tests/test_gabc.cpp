#include "support.hpp"

#include <g2abc/gabc.hpp>

#include <doctest.h>

using namespace g2abc;
using namespace g2abc::test;

namespace {

constexpr std::array kGenerated{FamilyKind::Skew, FamilyKind::Diagonal, FamilyKind::Symmetric,
                                FamilyKind::Antidiagonal, FamilyKind::General};

Form e2(int i, int j, double c = 1.0) { return Form::monomial({i, j}, c); }

/// Hodge star of n = span{e3..e6} with vol_n = e^3456, on 2-forms.
Form star_n(const Form& eta) {
  const IndexSet n{3, 4, 5, 6};
  Form out(2);
  for (const auto& [idx, c] : eta.terms()) {
    const IndexSet rest = IndexSet::from_mask(n.mask() & ~idx.mask());
    out.add(rest, merge_sign(idx, rest) * c);
  }
  return out;
}

double commutator(const Mat4& x, const Mat4& y) { return (x * y - y * x).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("triple validation") {
  CHECK_THROWS_WITH_AS(TripleABC(diag4(1, 0, 0, 0), Mat4::Zero(), Mat4::Zero()),
                       doctest::Contains("trace condition violated"), ValidationError);
  CHECK_THROWS_WITH_AS(TripleABC(elementary(3, 4), elementary(4, 5), Mat4::Zero()),
                       doctest::Contains("pairwise commutation violated"), ValidationError);
  Mat4 nan = Mat4::Zero();
  nan(0, 1) = std::nan("");
  CHECK_THROWS_AS(TripleABC(nan, Mat4::Zero(), Mat4::Zero()), ValidationError);
  CHECK_NOTHROW(TripleABC(elementary(3, 4), elementary(3, 4), Mat4::Zero()));

  const TripleABC t = generate(FamilyKind::General, 1);
  CHECK(&t.D(7) == &t.A());
  CHECK(&t.D(1) == &t.B());
  CHECK(&t.D(2) == &t.C());
  CHECK_THROWS_AS(t.D(3), Error);
  CHECK(t.a(3, 6) == t.A()(0, 3));
}

TEST_CASE("build") {
  const GabcModel zero = build(TripleABC::zero());
  CHECK(jacobi_residual(zero.algebra) == 0.0);
  for (int i = 1; i <= 7; ++i) CHECK(zero.algebra.ad(i).isZero());
  CHECK(zero.structure.metric().is_identity());
  CHECK(zero.structure.phi() == standard_phi());

  const GabcModel one = build(TripleABC(elementary(3, 4), Mat4::Zero(), Mat4::Zero()));
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      Vec7 expected = Vec7::Zero();
      if (i == 7 && j == 4) expected = basis_vector(3);
      if (i == 4 && j == 7) expected = -basis_vector(3);
      CHECK(bracket(one.algebra, basis_vector(i), basis_vector(j)) == expected);
    }

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GabcModel d = build(generate(FamilyKind::Diagonal, seed));
    CHECK(is_unimodular(d.algebra));
    CHECK(jacobi_residual(d.algebra) <= 1e-10);
  }
}

TEST_CASE("brackets follow A, B, C") {
  const TripleABC t = generate(FamilyKind::General, 2);
  const LieAlgebra7 g = build(t).algebra;
  for (int j = 3; j <= 6; ++j) {
    Vec7 a = Vec7::Zero(), b = Vec7::Zero(), c = Vec7::Zero();
    for (int i = 3; i <= 6; ++i) {
      a(i - 1) = t.a(i, j);
      b(i - 1) = t.b(i, j);
      c(i - 1) = t.c(i, j);
    }
    CHECK(bracket(g, basis_vector(7), basis_vector(j)) == a);
    CHECK(bracket(g, basis_vector(1), basis_vector(j)) == b);
    CHECK(bracket(g, basis_vector(2), basis_vector(j)) == c);
    for (int k = 3; k <= 6; ++k) CHECK(bracket(g, basis_vector(j), basis_vector(k)).isZero());
  }
}

TEST_CASE("family predicates") {
  CHECK(is_skew(elementary(3, 4) - elementary(4, 3)));
  CHECK_FALSE(is_skew(elementary(3, 4)));
  CHECK(is_diagonal(diag4(1, 2, 3, 4)));
  CHECK(is_symmetric(elementary(3, 4) + elementary(4, 3)));
  CHECK(is_antidiagonal(elementary(3, 6) + elementary(4, 5) + elementary(5, 4) + elementary(6, 3)));
  CHECK_FALSE(is_antidiagonal(elementary(3, 5)));
  CHECK(detect_family(TripleABC::zero()) == FamilyKind::Diagonal);
  for (FamilyKind k : kGenerated) {
    const TripleABC t = generate(k, 3);
    CHECK(belongs_to(t, k));
    CHECK(detect_family(t) == k);
  }
  CHECK(belongs_to(generate(FamilyKind::Skew, 3), FamilyKind::General));
  for (FamilyKind k : kGenerated) CHECK(parse_family(to_string(k)) == k);
  CHECK(parse_family("diagonal") == FamilyKind::Diagonal);
  CHECK_FALSE(parse_family("upper").has_value());
}

TEST_CASE("generators") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TripleABC s = generate(FamilyKind::Skew, seed);
    for (const Mat4* m : {&s.A(), &s.B(), &s.C()}) CHECK(m->transpose() == -*m);
    CHECK(s.commutator_residual() <= 1e-12);

    const TripleABC ad = generate(FamilyKind::Antidiagonal, seed);
    for (const Mat4* m : {&ad.A(), &ad.B(), &ad.C()})
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (i + j != 3) CHECK((*m)(i, j) == 0.0);

    const TripleABC g = generate(FamilyKind::General, seed);
    CHECK(commutator(g.A(), g.B()) <= 1e-10);
    CHECK(g.commutator_residual() <= 1e-10);

    const TripleABC sym = generate(FamilyKind::Symmetric, seed);
    for (const Mat4* m : {&sym.A(), &sym.B(), &sym.C()}) CHECK(m->transpose() == *m);

    for (FamilyKind k : kGenerated) {
      const TripleABC t = generate(k, seed);
      for (const Mat4* m : {&t.A(), &t.B(), &t.C()}) CHECK(m->cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("generators are deterministic and scale") {
  for (FamilyKind k : kGenerated) {
    CHECK(generate(k, 9).A() == generate(k, 9).A());
    CHECK(generate(k, 9).C() == generate(k, 9).C());
    CHECK(generate(k, 9).A() != generate(k, 10).A());
    CHECK((generate(k, 9, 3.0).B() - 3.0 * generate(k, 9).B()).cwiseAbs().maxCoeff() <= 1e-15);
  }
}

TEST_CASE("omega forms") {
  CHECK(omega(7) == e2(3, 4) + e2(5, 6));
  CHECK(omega(1) == e2(3, 5) - e2(4, 6));
  CHECK(omega(2) == -e2(3, 6) - e2(4, 5));
  CHECK(omega_bar(7) == e2(3, 4) - e2(5, 6));
  CHECK(omega_bar(1) == e2(3, 5) + e2(4, 6));
  CHECK(omega_bar(2) == -e2(3, 6) + e2(4, 5));
  CHECK_THROWS_AS(omega(3), Error);
}

TEST_CASE("omega identities") {
  const Form phi = standard_phi(), psi = standard_psi();
  const auto e = [](std::initializer_list<int> idx) { return Form::monomial(idx); };

  // (i), (ii)
  CHECK(phi == e({1, 2, 7}) + wedge(omega(7), e({7})) + wedge(omega(1), e({1})) + wedge(omega(2), e({2})));
  CHECK(psi == e({3, 4, 5, 6}) + wedge(omega(7), e({1, 2})) + wedge(omega(1), e({2, 7})) -
                   wedge(omega(2), e({1, 7})));

  // (iii)
  for (int l : {7, 1, 2}) {
    CHECK(star_n(omega(l)) == omega(l));
    CHECK(star_n(omega_bar(l)) == -omega_bar(l));
  }

  // (iv), (v)
  const Form vol_n = e({3, 4, 5, 6});
  for (int i : {7, 1, 2})
    for (int j : {7, 1, 2}) {
      if (i == j) {
        CHECK(wedge(omega(i), omega(i)) == 2.0 * vol_n);
        CHECK(wedge(omega_bar(i), omega_bar(i)) == -2.0 * vol_n);
        CHECK(wedge(omega(i), omega_bar(i)).is_zero());
      } else {
        CHECK(wedge(omega(i), omega(j)).is_zero());
        CHECK(wedge(omega(i), omega_bar(j)).is_zero());
        CHECK(wedge(omega_bar(i), omega_bar(j)).is_zero());
      }
    }

  // (vi)
  CHECK(e2(3, 4) == 0.5 * (omega_bar(7) + omega(7)));
  CHECK(e2(3, 5) == 0.5 * (omega_bar(1) + omega(1)));
  CHECK(e2(3, 6) == -0.5 * (omega_bar(2) + omega(2)));
  CHECK(e2(4, 5) == 0.5 * (omega_bar(2) - omega(2)));
  CHECK(e2(4, 6) == 0.5 * (omega_bar(1) - omega(1)));
  CHECK(e2(5, 6) == -0.5 * (omega_bar(7) - omega(7)));

  // (vii)
  const Metric7 id = Metric7::identity();
  const std::array basis{omega_bar(7), omega_bar(1), omega_bar(2), omega(7), omega(1), omega(2)};
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      CHECK(form_inner(basis[i], basis[j], id) == (i == j ? 2.0 : 0.0));
}

TEST_CASE("theta examples") {
  const double m33 = 0.3, m44 = -0.7, m55 = 1.1, m66 = -0.7;
  const Form expected = -(m33 + m44) * e2(3, 4) - (m55 + m66) * e2(5, 6);
  CHECK(max_abs_diff(theta(diag4(m33, m44, m55, m66), omega(7)), expected) <= 1e-15);

  std::mt19937_64 rng(51);
  CHECK(theta(Mat4::Zero(), random_n_form(rng)).is_zero());
  CHECK(theta(diag4(1, 1, -1, -1), omega(1)).is_zero());
  CHECK_THROWS_AS(theta(Mat4::Identity(), e2(1, 3)), ValidationError);
  CHECK_THROWS_AS(theta(Mat4::Identity(), Form::monomial({3})), ValidationError);
}

TEST_CASE("theta follows its definition") {
  std::mt19937_64 rng(52);
  for (int n = 0; n < 20; ++n) {
    const Mat4 m = random_traceless(rng);
    const Form eta = random_n_form(rng);
    const Form th = theta(m, eta);
    for (int i = 3; i <= 6; ++i)
      for (int j = 3; j <= 6; ++j) {
        const Vec7 mi = [&] {
          Vec7 v = Vec7::Zero();
          v.segment<4>(2) = m.col(i - 3);
          return v;
        }();
        const Vec7 mj = [&] {
          Vec7 v = Vec7::Zero();
          v.segment<4>(2) = m.col(j - 3);
          return v;
        }();
        const std::array<Vec7, 2> a{mi, basis_vector(j)}, b{basis_vector(i), mj};
        CHECK(th.evaluate({i, j}) == doctest::Approx(-eta.evaluate(a) - eta.evaluate(b)).epsilon(1e-13));
      }
  }
}

TEST_CASE("theta is a Lie algebra action") {
  std::mt19937_64 rng(53);
  for (int n = 0; n < 50; ++n) {
    const Mat4 m = random_traceless(rng), k = random_traceless(rng);
    const Form eta = random_n_form(rng);
    const Form lhs = theta(m * k - k * m, eta);
    const Form rhs = theta(m, theta(k, eta)) - theta(k, theta(m, eta));
    CHECK(max_abs_diff(lhs, rhs) <= 1e-10);
  }
}
