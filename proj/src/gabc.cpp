#include <g2abc/gabc.hpp>

#include <cmath>
#include <random>

namespace g2abc {

namespace {

double comm(const Mat4& x, const Mat4& y) { return (x * y - y * x).cwiseAbs().maxCoeff(); }

}  // namespace

TripleABC::TripleABC(const Mat4& a, const Mat4& b, const Mat4& c) : a_(a), b_(b), c_(c) {
  if (!a.allFinite() || !b.allFinite() || !c.allFinite()) throw ValidationError("matrix entries must be finite");
  if (std::abs(a.trace()) > kTraceTolerance || std::abs(b.trace()) > kTraceTolerance ||
      std::abs(c.trace()) > kTraceTolerance)
    throw ValidationError("trace condition violated: A, B, C must be traceless");
  if (commutator_residual() > kCommutatorTolerance)
    throw ValidationError("pairwise commutation violated: [A,B], [A,C], [B,C] must vanish");
}

const Mat4& TripleABC::D(int l) const {
  switch (l) {
    case 1: return b_;
    case 2: return c_;
    case 7: return a_;
    default: throw Error("D^l is defined for l in {1, 2, 7}");
  }
}

double TripleABC::commutator_residual() const {
  return std::max({comm(a_, b_), comm(a_, c_), comm(b_, c_)});
}

std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Skew: return "skew";
    case FamilyKind::Diagonal: return "diag";
    case FamilyKind::Symmetric: return "sym";
    case FamilyKind::Antidiagonal: return "adiag";
    case FamilyKind::General: return "general";
  }
  return "general";
}

std::optional<FamilyKind> parse_family(std::string_view s) {
  if (s == "skew") return FamilyKind::Skew;
  if (s == "diag" || s == "diagonal") return FamilyKind::Diagonal;
  if (s == "sym" || s == "symmetric") return FamilyKind::Symmetric;
  if (s == "adiag" || s == "antidiagonal") return FamilyKind::Antidiagonal;
  if (s == "general") return FamilyKind::General;
  return std::nullopt;
}

bool is_skew(const Mat4& m) { return m == -m.transpose(); }
bool is_symmetric(const Mat4& m) { return m == m.transpose(); }

bool is_diagonal(const Mat4& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && m(i, j) != 0.0) return false;
  return true;
}

bool is_antidiagonal(const Mat4& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i + j != 3 && m(i, j) != 0.0) return false;
  return true;
}

bool belongs_to(const TripleABC& t, FamilyKind k) {
  auto all = [&](bool (*pred)(const Mat4&)) { return pred(t.A()) && pred(t.B()) && pred(t.C()); };
  switch (k) {
    case FamilyKind::Skew: return all(is_skew);
    case FamilyKind::Diagonal: return all(is_diagonal);
    case FamilyKind::Symmetric: return all(is_symmetric);
    case FamilyKind::Antidiagonal: return all(is_antidiagonal);
    case FamilyKind::General: return true;
  }
  return false;
}

FamilyKind detect_family(const TripleABC& t) {
  for (FamilyKind k : {FamilyKind::Diagonal, FamilyKind::Skew, FamilyKind::Antidiagonal, FamilyKind::Symmetric})
    if (belongs_to(t, k)) return k;
  return FamilyKind::General;
}

StructureConstants abc_structure_constants(const Mat4& a, const Mat4& b, const Mat4& c) {
  StructureConstants sc;
  const std::pair<int, const Mat4*> generators[] = {{7, &a}, {1, &b}, {2, &c}};
  for (const auto& [l, m] : generators)
    for (int j = 3; j <= 6; ++j)
      for (int i = 3; i <= 6; ++i) sc.set_bracket(l, j, i, entry(*m, i, j));  // [e_l, e_j] = sum_i m_ij e_i
  return sc;
}

GabcModel build(const TripleABC& t) {
  LieAlgebra7 g(abc_structure_constants(t.A(), t.B(), t.C()));
  G2Structure s(g, standard_phi());
  return {std::move(g), std::move(s)};
}

Form omega(int l) {
  switch (l) {
    case 7: return Form::monomial({3, 4}) + Form::monomial({5, 6});
    case 1: return Form::monomial({3, 5}) - Form::monomial({4, 6});
    case 2: return -Form::monomial({3, 6}) - Form::monomial({4, 5});
    default: throw Error("omega_l is defined for l in {1, 2, 7}");
  }
}

Form omega_bar(int l) {
  switch (l) {
    case 7: return Form::monomial({3, 4}) - Form::monomial({5, 6});
    case 1: return Form::monomial({3, 5}) + Form::monomial({4, 6});
    case 2: return -Form::monomial({3, 6}) + Form::monomial({4, 5});
    default: throw Error("omega_bar_l is defined for l in {1, 2, 7}");
  }
}

Form theta(const Mat4& m, const Form& eta) {
  if (eta.degree() != 2) throw ValidationError("theta acts on 2-forms");
  for (const auto& [idx, c] : eta.terms())
    if (idx.contains(1) || idx.contains(2) || idx.contains(7))
      throw ValidationError("theta: 2-form is not supported on n = span{e3..e6}");
  Form out(2);
  for (int p = 3; p <= 6; ++p)
    for (int q = p + 1; q <= 6; ++q) {
      // M e_p = sum_r m_rp e_r
      double v = 0.0;
      for (int r = 3; r <= 6; ++r) v -= entry(m, r, p) * eta.evaluate({r, q}) + entry(m, r, q) * eta.evaluate({p, r});
      out.add(IndexSet{p, q}, v);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

namespace {

class Sampler {
 public:
  Sampler(FamilyKind kind, std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(kind)};
    rng_.seed(seq);
  }

  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Mat4 matrix() {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = uniform();
    return m;
  }

  Mat4 traceless_diagonal() {
    Mat4 d = Mat4::Zero();
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) sum += (d(i, i) = uniform());
    d(3, 3) = -sum;
    const double mx = d.cwiseAbs().maxCoeff();
    return mx > 1.0 ? Mat4(d / mx) : d;
  }

  Mat4 rotation() {
    Eigen::HouseholderQR<Mat4> qr(matrix());
    Mat4 q = qr.householderQ();
    if (q.determinant() < 0) q.col(0) *= -1.0;
    return q;
  }

 private:
  std::mt19937_64 rng_;
};

Mat4 skew_block(double x, double y) {
  Mat4 m = Mat4::Zero();
  m(0, 1) = -x;
  m(1, 0) = x;
  m(2, 3) = -y;
  m(3, 2) = y;
  return m;
}

Mat4 project_traceless(const Mat4& m) { return m - (m.trace() / 4.0) * Mat4::Identity(); }

Mat4 cubic(const Mat4& m, const double (&k)[4]) {
  const Mat4 m2 = m * m;
  return k[0] * Mat4::Identity() + k[1] * m + k[2] * m2 + k[3] * m2 * m;
}

// Rescale so that the largest entry has magnitude `target`; the zero matrix is kept.
Mat4 normalized(const Mat4& m, double target) {
  const double mx = m.cwiseAbs().maxCoeff();
  return mx == 0.0 ? m : Mat4(m * (target / mx));
}

}  // namespace

TripleABC generate(FamilyKind kind, std::uint64_t seed, double scale) {
  Sampler s(kind, seed);
  Mat4 a, b, c;
  switch (kind) {
    case FamilyKind::Skew: {
      a = skew_block(s.uniform(), s.uniform());
      b = skew_block(s.uniform(), s.uniform());
      c = skew_block(s.uniform(), s.uniform());
      const Mat4 q = s.rotation();
      for (Mat4* m : {&a, &b, &c}) {
        const Mat4 r = q * *m * q.transpose();
        *m = 0.5 * (r - r.transpose());
      }
      break;
    }
    case FamilyKind::Diagonal:
      a = s.traceless_diagonal();
      b = s.traceless_diagonal();
      c = s.traceless_diagonal();
      break;
    case FamilyKind::Symmetric: {
      const Mat4 q = s.rotation();
      for (Mat4* m : {&a, &b, &c}) {
        const Mat4 r = q * s.traceless_diagonal() * q.transpose();
        *m = 0.5 * (r + r.transpose());
      }
      break;
    }
    case FamilyKind::Antidiagonal: {
      // D and E commute iff d36 e63 = d63 e36 and d45 e54 = d54 e45.
      const double a36 = s.uniform(), a63 = s.uniform(), a45 = s.uniform(), a54 = s.uniform();
      auto make = [&](double k1, double k2) {
        Mat4 m = Mat4::Zero();
        m(0, 3) = k1 * a36;
        m(3, 0) = k1 * a63;
        m(1, 2) = k2 * a45;
        m(2, 1) = k2 * a54;
        return m;
      };
      a = make(1.0, 1.0);
      b = make(s.uniform(), s.uniform());
      c = make(s.uniform(), s.uniform());
      break;
    }
    case FamilyKind::General: {
      const Mat4 m = s.matrix();
      for (Mat4* out : {&a, &b, &c}) {
        const double k[4] = {s.uniform(), s.uniform(), s.uniform(), s.uniform()};
        *out = normalized(project_traceless(cubic(m, k)), s.uniform(0.25, 1.0));
      }
      break;
    }
  }
  return TripleABC(a * scale, b * scale, c * scale);
}

}  // namespace g2abc
