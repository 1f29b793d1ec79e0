#include <g2abc/closed_form.hpp>

namespace g2abc {

namespace {

Form e2(int i, int j, double c) { return Form::monomial({i, j}, c); }
Form e3(int i, int j, int k, double c) { return Form::monomial({i, j, k}, c); }

Mat4 sym(const Mat4& m) { return 0.5 * (m + m.transpose()); }
Mat4 asym(const Mat4& m) { return 0.5 * (m - m.transpose()); }

// Embeds n-vector coordinates (rows 3..6) into a 7-vector.
Vec7 embed_n(const Eigen::Vector4d& v) {
  Vec7 out = Vec7::Zero();
  out.segment<4>(2) = v;
  return out;
}

bool in_a(int i) { return i == 1 || i == 2 || i == 7; }

// Entry accessors in the 3..6 convention.
struct Entries {
  const TripleABC& t;
  double a(int i, int j) const { return t.a(i, j); }
  double b(int i, int j) const { return t.b(i, j); }
  double c(int i, int j) const { return t.c(i, j); }
};

ClosedFormTorsion general_torsion(const TripleABC& t) {
  const Entries m{t};
  auto a = [&](int ij) { return m.a(ij / 10, ij % 10); };
  auto b = [&](int ij) { return m.b(ij / 10, ij % 10); };
  auto c = [&](int ij) { return m.c(ij / 10, ij % 10); };

  ClosedFormTorsion r;
  r.tau0 = 2.0 / 7.0 *
           (a(46) - a(64) + a(53) - a(35) + b(35) - b(53) + b(64) - b(46) + c(54) - c(45) + c(63) - c(36));

  const auto k = tau1_coefficients(t);
  r.tau1 = Form::monomial({1}, k.k1) + Form::monomial({2}, k.k2) + Form::monomial({7}, k.k7);

  const double third = 1.0 / 3.0;
  r.tau2 = e2(1, 2, third * (b(45) - b(54) + b(36) - b(63) + c(35) - c(53) + c(64) - c(46))) +
           e2(1, 7, third * (a(64) - a(46) + a(35) - a(53) + b(65) - b(56) + b(43) - b(34))) +
           e2(2, 7, third * (a(54) - a(45) + a(63) - a(36) + c(65) - c(56) + c(43) - c(34))) +
           e2(3, 4, third * (-3 * a(33) - 3 * a(44) + 2 * c(46) - 2 * c(35) - 2 * b(45) - 2 * b(36) - c(53) +
                             c(64) - b(63) - b(54))) +
           e2(3, 5, third * (-2 * a(54) + 2 * a(36) + 2 * c(56) + 2 * c(34) + a(63) - a(45) + c(65) + c(43) -
                             3 * b(55) - 3 * b(33))) +
           e2(3, 6, third * (-2 * a(64) - 2 * a(35) - 2 * b(65) + 2 * b(34) - a(46) - a(53) - b(56) + b(43) -
                             3 * c(44) - 3 * c(55))) +
           e2(4, 5, third * (a(64) + a(35) + b(65) - b(34) + 2 * a(46) + 2 * a(53) + 2 * b(56) - 2 * b(43) +
                             3 * c(55) + 3 * c(44))) +
           e2(4, 6, third * (-a(54) + a(36) + c(56) + c(34) + 2 * a(63) - 2 * a(45) + 2 * c(65) + 2 * c(43) -
                             3 * b(33) - 3 * b(55))) +
           e2(5, 6, third * (3 * a(33) + 3 * a(44) - c(46) + c(35) + b(45) + b(36) + 2 * c(53) - 2 * c(64) +
                             2 * b(63) + 2 * b(54)));

  const double q = 0.25, s = 1.0 / 7.0;
  r.tau3 =
      e3(1, 2, 7, -2 * s * (a(56) + c(54) + a(34) - c(36) - a(65) + c(63) - a(43) - c(45) + b(64) + b(35) - b(53) -
                           b(46))) +
      e3(1, 3, 4, -q * (-b(65) - b(43) + b(56) + b(34) - a(64) + a(53) - 3 * a(46) + 3 * a(35) - c(33) - c(44))) +
      e3(1, 3, 5, s * (5 * a(56) + 5 * c(54) + 5 * a(34) - 5 * c(36) + 2 * a(65) - 2 * c(63) + 2 * a(43) +
                       2 * c(45) - 2 * b(64) - 2 * b(35) + 2 * b(53) + 2 * b(46))) +
      e3(1, 3, 6, -q * (-b(63) + b(45) - b(54) + b(36) - c(53) - c(46) - 3 * c(64) - 3 * c(35) + a(55) + a(44))) +
      e3(1, 4, 5, q * (b(63) - b(45) + b(54) - b(36) - 3 * c(53) - 3 * c(46) - c(64) - c(35) + 4 * a(44) +
                       4 * a(55))) +
      e3(1, 4, 6, s * (2 * a(56) + 2 * c(54) + 2 * a(34) - 2 * c(36) + 5 * a(65) - 5 * c(63) + 5 * a(43) +
                       5 * c(45) + 2 * b(64) + 2 * b(35) - 2 * b(53) - 2 * b(46))) +
      e3(1, 5, 6, q * (b(65) + b(43) - b(56) - b(34) - 3 * a(64) + 3 * a(53) - a(46) + a(35) - 4 * c(44) -
                       4 * c(33))) +
      e3(2, 3, 4, q * (-c(56) + c(43) + c(65) - c(34) + a(63) + a(54) + 3 * a(45) + 3 * a(36) - 4 * b(33) -
                       4 * b(44))) +
      e3(2, 3, 5, q * (b(63) - b(45) - 3 * b(54) + 3 * b(36) + c(53) + c(46) - c(64) - c(35) + 4 * a(33) +
                       4 * a(55))) +
      e3(2, 3, 6, -s * (-2 * a(56) - 2 * c(54) + 5 * a(34) + 2 * c(36) - 5 * a(65) - 2 * c(63) + 2 * a(43) +
                        2 * c(45) + 5 * b(64) + 5 * b(35) + 2 * b(53) + 2 * b(46))) +
      e3(2, 4, 5, s * (-5 * a(56) + 2 * c(54) + 2 * a(34) - 2 * c(36) - 2 * a(65) + 2 * c(63) + 5 * a(43) -
                       2 * c(45) + 2 * b(64) + 2 * b(35) + 5 * b(53) + 5 * b(46))) +
      e3(2, 4, 6, q * (3 * b(63) - 3 * b(45) - b(54) + b(36) - c(53) - c(46) + c(64) + c(35) + 4 * a(55) +
                       4 * a(33))) +
      e3(2, 5, 6, -q * (c(56) - c(43) - c(65) + c(34) + 3 * a(63) + 3 * a(54) + a(45) + a(36) - 4 * b(44) -
                        4 * b(33))) +
      e3(3, 4, 7, -s * (2 * a(56) + 2 * c(54) + 2 * a(34) + 5 * c(36) - 2 * a(65) + 2 * c(63) - 2 * a(43) +
                        5 * c(45) + 2 * b(64) - 5 * b(35) - 2 * b(53) + 5 * b(46))) +
      e3(3, 5, 7, -q * (b(65) + b(43) + 3 * b(56) + 3 * b(34) + a(64) - a(53) - a(46) + a(35) + 4 * c(33) +
                        4 * c(55))) +
      e3(3, 6, 7, -q * (c(56) - c(43) + 3 * c(65) - 3 * c(34) - a(63) - a(54) + a(45) + a(36) - 4 * b(55) -
                        4 * b(44))) +
      e3(4, 5, 7, -q * (-3 * c(56) + 3 * c(43) - c(65) + c(34) - a(63) - a(54) + a(45) + a(36) + 4 * b(44) +
                        4 * b(55))) +
      e3(4, 6, 7, q * (-3 * b(65) - 3 * b(43) - b(56) - b(34) + a(64) - a(53) - a(46) + a(35) - 4 * c(55) -
                       4 * c(33))) +
      e3(5, 6, 7, -s * (2 * a(56) - 5 * c(54) + 2 * a(34) - 2 * c(36) - 2 * a(65) - 5 * c(63) - 2 * a(43) -
                        2 * c(45) - 5 * b(64) + 2 * b(35) + 5 * b(53) - 2 * b(46)));
  return r;
}

ClosedFormTorsion skew_torsion(const TripleABC& t) {
  auto a = [&](int ij) { return t.a(ij / 10, ij % 10); };
  auto b = [&](int ij) { return t.b(ij / 10, ij % 10); };
  auto c = [&](int ij) { return t.c(ij / 10, ij % 10); };

  ClosedFormTorsion r;
  r.tau0 = 4.0 / 7.0 * (a(46) + a(53) + b(35) + b(64) + c(54) + c(63));
  r.tau1 = Form::monomial({1}, -1.0 / 6.0 * (a(36) + a(45) + c(56) + c(34))) +
           Form::monomial({2}, -1.0 / 6.0 * (a(64) + a(35) + b(43) + b(65))) +
           Form::monomial({7}, -1.0 / 6.0 * (b(63) + b(54) + c(46) + c(53)));

  const double tt = 2.0 / 3.0, th = 1.0 / 3.0;
  r.tau2 = e2(1, 2, tt * (b(45) + b(36) + c(35) + c(64))) + e2(1, 7, tt * (a(64) + a(35) + b(65) + b(43))) +
           e2(2, 7, tt * (a(54) + a(63) + c(65) + c(43))) + e2(3, 4, th * (c(46) - c(35) - b(45) - b(36))) +
           e2(3, 5, th * (-a(54) + a(36) + c(56) + c(34))) + e2(3, 6, th * (-a(64) - a(35) - b(65) + b(34))) +
           e2(4, 5, th * (a(46) + a(53) + b(56) - b(43))) + e2(4, 6, th * (a(63) - a(45) + c(65) + c(43))) +
           e2(5, 6, th * (c(53) - c(64) + b(63) + b(54)));

  const double h = 0.5, s = 1.0 / 7.0;
  const double p134 = b(65) + b(43) - a(64) + a(53);
  const double p136 = b(63) + b(54) - c(53) + c(64);
  const double p234 = c(65) + c(43) - a(54) - a(63);
  const double p236 = 3 * a(65) + 4 * c(63) + 3 * a(43) + 4 * c(54) + 3 * b(53) - 3 * b(64);
  const double p347 = 4 * a(65) + 3 * c(63) + 4 * a(43) + 3 * c(54) - 3 * b(53) + 3 * b(64);
  r.tau3 = e3(1, 2, 7, 4 * s * (a(65) - c(63) + a(43) - c(54) + b(53) - b(64))) + e3(1, 3, 4, h * p134) +
           e3(1, 3, 5, s * (-3 * a(65) + 3 * c(63) - 3 * a(43) + 3 * c(54) + 4 * b(53) - 4 * b(64))) +
           e3(1, 3, 6, h * p136) + e3(1, 4, 5, h * p136) +
           e3(1, 4, 6, s * (3 * a(65) - 3 * c(63) + 3 * a(43) - 3 * c(54) - 4 * b(53) + 4 * b(64))) +
           e3(1, 5, 6, h * p134) + e3(2, 3, 4, h * p234) + e3(2, 3, 5, h * (-b(63) - b(54) + c(53) - c(64))) +
           e3(2, 3, 6, s * p236) + e3(2, 4, 5, s * p236) + e3(2, 4, 6, h * p136) + e3(2, 5, 6, h * p234) +
           e3(3, 4, 7, s * p347) + e3(3, 5, 7, h * p134) + e3(3, 6, 7, h * (-c(65) - c(43) + a(54) + a(63))) +
           e3(4, 5, 7, h * (-c(65) - c(43) + a(54) + a(63))) + e3(4, 6, 7, h * (-b(65) - b(43) + a(64) - a(53))) +
           e3(5, 6, 7, s * p347);
  return r;
}

ClosedFormTorsion diagonal_torsion(const TripleABC& t) {
  auto a = [&](int i) { return t.a(i, i); };
  auto b = [&](int i) { return t.b(i, i); };
  auto c = [&](int i) { return t.c(i, i); };

  ClosedFormTorsion r;
  r.tau2 = e2(3, 4, -(a(3) + a(4))) + e2(3, 5, -(b(3) + b(5))) + e2(3, 6, -(c(4) + c(5))) +
           e2(4, 5, c(4) + c(5)) + e2(4, 6, -(b(3) - b(5))) + e2(5, 6, a(3) + a(4));
  r.tau3 = e3(1, 3, 4, c(3) + c(4)) + e3(1, 3, 6, -(a(4) + a(5))) + e3(1, 4, 5, a(4) + a(5)) +
           e3(1, 5, 6, -(c(3) + c(4))) + e3(2, 3, 4, -(b(3) + b(4))) + e3(2, 3, 5, a(3) + a(5)) +
           e3(2, 4, 6, a(3) + a(5)) + e3(2, 5, 6, b(3) + b(4)) + e3(3, 5, 7, -(c(3) + c(5))) +
           e3(3, 6, 7, b(4) + b(5)) + e3(4, 5, 7, -(b(4) + b(5))) + e3(4, 6, 7, -(c(3) + c(5)));
  return r;
}

ClosedFormTorsion antidiagonal_torsion(const TripleABC& t) {
  auto a = [&](int ij) { return t.a(ij / 10, ij % 10); };
  auto b = [&](int ij) { return t.b(ij / 10, ij % 10); };
  auto c = [&](int ij) { return t.c(ij / 10, ij % 10); };

  ClosedFormTorsion r;
  r.tau0 = 2.0 / 7.0 * (c(54) - c(45) + c(63) - c(36));
  r.tau1 = Form::monomial({1}, (a(63) - a(36) + a(54) - a(45)) / 12.0) +
           Form::monomial({7}, (b(36) - b(63) + b(45) - b(54)) / 12.0);

  const double th = 1.0 / 3.0;
  r.tau2 = e2(1, 2, th * (b(45) - b(54) + b(36) - b(63))) + e2(2, 7, th * (a(54) - a(45) + a(63) - a(36))) +
           e2(3, 4, th * (2 * b(36) - b(63) + b(54) - 2 * b(45))) +
           e2(3, 5, th * (2 * a(36) + a(63) - 2 * a(54) - a(45))) +
           e2(4, 6, th * (2 * a(63) + a(36) - 2 * a(45) - a(54))) +
           e2(5, 6, th * (2 * b(63) + b(36) + 2 * b(54) - b(45)));

  const double q = 0.25, s = 1.0 / 7.0;
  const double pb = b(63) - b(36) + b(54) - b(45);
  const double pc = c(54) - c(45) + c(63) - c(36);
  const double pa = a(54) - a(45) + a(63) - a(36);
  r.tau3 = e3(1, 2, 7, 2 * s * (c(45) - c(54) + c(36) - c(63))) +
           e3(1, 3, 5, s * (5 * c(54) + 2 * c(45) - 5 * c(36) - 2 * c(63))) + e3(1, 3, 6, q * pb) +
           e3(1, 4, 5, q * pb) + e3(1, 4, 6, s * (5 * c(45) + 2 * c(54) - 5 * c(63) - 2 * c(36))) +
           e3(2, 3, 4, q * (3 * a(36) + 3 * a(45) + a(63) + a(54))) +
           e3(2, 3, 5, q * (3 * b(36) + b(63) - 3 * b(54) - b(45))) + e3(2, 3, 6, 2 * s * pc) +
           e3(2, 4, 5, 2 * s * pc) + e3(2, 4, 6, q * (3 * b(63) + b(36) - 3 * b(45) - b(54))) +
           e3(2, 5, 6, -q * (3 * a(63) + a(36) + 3 * a(54) + a(45))) +
           e3(3, 4, 7, -s * (5 * c(45) + 2 * c(54) + 5 * c(36) + 2 * c(63))) + e3(3, 6, 7, q * pa) +
           e3(4, 5, 7, q * pa) + e3(5, 6, 7, s * (5 * c(54) + 2 * c(45) + 5 * c(63) + 2 * c(36)));
  return r;
}

}  // namespace

Form theta_printed(const Mat4& mm, int l) {
  auto m = [&](int ij) { return entry(mm, ij / 10, ij % 10); };
  switch (l) {
    case 7:
      return e2(3, 4, -(m(33) + m(44))) + e2(3, 5, m(63) - m(45)) + e2(3, 6, -(m(46) + m(53))) +
             e2(4, 5, m(64) + m(35)) + e2(4, 6, m(36) - m(54)) + e2(5, 6, -(m(55) + m(66)));
    case 1:
      return e2(3, 4, -(m(54) + m(63))) + e2(3, 5, -(m(33) - m(55))) + e2(3, 6, m(43) - m(56)) +
             e2(4, 5, m(65) - m(34)) + e2(4, 6, m(44) + m(66)) + e2(5, 6, m(45) + m(36));
    case 2:
      return e2(3, 4, m(64) - m(53)) + e2(3, 5, m(43) + m(65)) + e2(3, 6, m(33) + m(66)) +
             e2(4, 5, m(44) + m(55)) + e2(4, 6, m(56) + m(54)) + e2(5, 6, m(35) - m(46));
    default: throw Error("theta_printed: l must be 1, 2 or 7");
  }
}

Derivatives closed_form_derivatives(const TripleABC& t) {
  const Mat4 &A = t.A(), &B = t.B(), &C = t.C();
  const Mat4 At = A.transpose(), Bt = B.transpose(), Ct = C.transpose();
  const Form w7 = omega(7), w1 = omega(1), w2 = omega(2);
  auto e = [](std::initializer_list<int> idx) { return Form::monomial(idx); };

  Derivatives d;
  d.dphi = wedge(theta(B, w7) - theta(A, w1), e({1, 7})) + wedge(theta(C, w7) - theta(A, w2), e({2, 7})) +
           wedge(theta(B, w2) - theta(C, w1), e({1, 2}));
  d.star_dphi = wedge(theta(Bt, w7) - theta(At, w1), e({2})) - wedge(theta(Ct, w7) - theta(At, w2), e({1})) -
                wedge(theta(Bt, w2) - theta(Ct, w1), e({7}));
  d.dpsi = wedge(theta(A, w7) + theta(B, w1) + theta(C, w2), e({1, 2, 7}));
  d.star_dpsi = -(theta(At, w7) + theta(Bt, w1) + theta(Ct, w2));
  return d;
}

TauOneCoefficients tau1_coefficients(const TripleABC& t) {
  auto a = [&](int ij) { return t.a(ij / 10, ij % 10); };
  auto b = [&](int ij) { return t.b(ij / 10, ij % 10); };
  auto c = [&](int ij) { return t.c(ij / 10, ij % 10); };
  const double k = -1.0 / 12.0;
  return {k * (a(36) - a(63) + a(45) - a(54) + c(56) - c(65) + c(34) - c(43)),
          k * (a(64) - a(46) + a(35) - a(53) + b(43) - b(34) + b(65) - b(56)),
          k * (b(63) - b(36) + b(54) - b(45) + c(46) - c(64) + c(53) - c(35))};
}

ClosedFormTorsion closed_form_torsion(const TripleABC& t, FamilyKind kind) {
  if (!belongs_to(t, kind))
    throw ValidationError("closed_form_torsion: triple is not of family " + std::string(to_string(kind)));
  ClosedFormTorsion r;
  switch (kind) {
    case FamilyKind::Skew: r = skew_torsion(t); break;
    case FamilyKind::Diagonal: r = diagonal_torsion(t); break;
    case FamilyKind::Antidiagonal: r = antidiagonal_torsion(t); break;
    case FamilyKind::Symmetric:
    case FamilyKind::General: r = general_torsion(t); break;
  }
  // i_{tau1} phi = k1 (e^27 + w1) + k2 (-e^17 + w2) + k7 (e^12 + w7), with k read
  // off the tau1 just produced.
  const double k1 = r.tau1.coeff(IndexSet{1}), k2 = r.tau1.coeff(IndexSet{2}), k7 = r.tau1.coeff(IndexSet{7});
  r.iota_tau1_phi = k1 * (Form::monomial({2, 7}) + omega(1)) + k2 * (omega(2) - Form::monomial({1, 7})) +
                    k7 * (Form::monomial({1, 2}) + omega(7));
  return r;
}

Connection7 closed_form_connection(const TripleABC& t) {
  Connection7 conn;
  for (int x = 1; x <= kDim; ++x)
    for (int y = 1; y <= kDim; ++y) {
      Vec7 v = Vec7::Zero();
      if (in_a(x) && !in_a(y)) {
        v = embed_n(asym(t.D(x)).col(y - 3));  // A(M_X) Y
      } else if (!in_a(x) && in_a(y)) {
        v = -embed_n(sym(t.D(y)).col(x - 3));  // -S(M_Y) X
      } else if (!in_a(x) && !in_a(y)) {
        for (int l : {1, 2, 7}) v(l - 1) = sym(t.D(l))(y - 3, x - 3);  // <S(D^l) X, Y>
      }
      conn.set_nabla(x, y, v);
    }
  return conn;
}

std::string_view to_string(RicciBlockOrder o) {
  return o == RicciBlockOrder::ByGenerator ? "(e7,e1,e2)<->(A,B,C)" : "(e1,e2,e7)<->(A,B,C)";
}

Mat7 closed_form_ricci(const TripleABC& t, RicciBlockOrder order) {
  const Mat4 &A = t.A(), &B = t.B(), &C = t.C();
  Mat7 ric = Mat7::Zero();
  auto comm_t = [](const Mat4& m) -> Mat4 { return m * m.transpose() - m.transpose() * m; };
  ric.block<4, 4>(2, 2) = 0.5 * (comm_t(A) + comm_t(B) + comm_t(C));

  const Mat4 SA = sym(A), SB = sym(B), SC = sym(C);
  Eigen::Matrix3d gram;
  gram << (SA * SA).trace(), (SA * B).trace(), (SA * C).trace(),  //
      (SA * B).trace(), (SB * SB).trace(), (SB * C).trace(),      //
      (SA * C).trace(), (SB * C).trace(), (SC * SC).trace();
  const int rows[3] = {order == RicciBlockOrder::ByGenerator ? 7 : 1, order == RicciBlockOrder::ByGenerator ? 1 : 2,
                       order == RicciBlockOrder::ByGenerator ? 2 : 7};
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) ric(rows[p] - 1, rows[q] - 1) = -gram(p, q);
  return ric;
}

Vec7 closed_form_divergence(const TripleABC& t, const Mat7& tau27) {
  Vec7 div = Vec7::Zero();
  for (int j : {1, 2, 7}) {
    const Mat4 S = sym(t.D(j));
    double v = 0.0;
    for (int n = 3; n <= 6; ++n) v -= entry(t.D(j), n, n) * tau27(n - 1, n - 1);
    for (int i = 3; i <= 6; ++i)
      for (int l = 3; l <= 6; ++l)
        if (i != l) v += entry(S, i, l) * tau27(i - 1, l - 1);
    div(j - 1) = v;
  }
  return div;
}

Vec7 closed_form_divergence_corrected(const TripleABC& t, const Mat7& tau27) {
  Vec7 div = Vec7::Zero();
  const Mat4 n_block = tau27.block<4, 4>(2, 2);
  for (int j : {1, 2, 7}) div(j - 1) = -kTau27TorsionWeight * sym(t.D(j)).cwiseProduct(n_block).sum();
  return div;
}

namespace {

constexpr FlaggedCoefficient kFlagged[] = {
    {"theta", "theta1", "35", "-(m33 - m55)", "-(m33 + m55)"},
    {"theta", "theta2", "46", "m56 + m54", "m56 + m34"},
    {"tau0", "general", "scalar", "2/7 (a46 - a64 + a53 - a35 + ...)", "2/7 (a34 - a43 + a56 - a65 + ...)"},
    {"tau0", "skew", "scalar", "4/7 (a46 + a53 + ...)", "4/7 (a34 + a56 + ...)"},
    {"tau3", "general", "134", "-1/4 (... - c33 - c44)", "-1/4 (... - 4 c33 - 4 c44)"},
    {"tau3", "general", "136", "-1/4 (... + a55 + a44)", "-1/4 (... + 4 a55 + 4 a44)"},
    {"tau2", "diag", "46", "-(b33 - b55)", "-(b33 + b55)"},
    {"tau2", "adiag", "34", "1/3 (2 b36 - b63 + b54 - 2 b45)", "1/3 (-2 b36 - b63 - b54 - 2 b45)"},
    {"tau2", "adiag", "56", "1/3 (2 b63 + b36 + 2 b54 - b45)", "1/3 (2 b63 + b36 + 2 b54 + b45)"},
};

}  // namespace

std::span<const FlaggedCoefficient> flagged_coefficients() { return kFlagged; }

bool is_flagged(std::string_view quantity, std::string_view formula_set, std::string_view coefficient) {
  for (const auto& f : kFlagged)
    if (f.quantity == quantity && f.formula_set == formula_set && f.coefficient == coefficient) return true;
  return false;
}

}  // namespace g2abc
