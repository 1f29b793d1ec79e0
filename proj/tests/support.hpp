#pragma once

#include <g2abc/gabc.hpp>

#include <random>

namespace g2abc::test {

inline double uniform(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Dense random k-form, every coefficient uniform in [-1, 1].
inline Form random_form(std::mt19937_64& rng, int degree) {
  Form f(degree);
  for (IndexSet idx : IndexSet::all_of_size(degree)) f.add(idx, uniform(rng));
  return f;
}

inline Vec7 random_vector(std::mt19937_64& rng) {
  Vec7 v;
  for (int i = 0; i < kDim; ++i) v(i) = uniform(rng);
  return v;
}

/// Random 2-form supported on e^3..e^6.
inline Form random_n_form(std::mt19937_64& rng) {
  Form f(2);
  for (IndexSet idx : IndexSet::all_of_size(2))
    if (!idx.contains(1) && !idx.contains(2) && !idx.contains(7)) f.add(idx, uniform(rng));
  return f;
}

inline Mat4 random_traceless(std::mt19937_64& rng) {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = uniform(rng);
  m -= (m.trace() / 4.0) * Mat4::Identity();
  return m;
}

/// 4x4 matrix with a single 1 at (i, j), indices 3..6.
inline Mat4 elementary(int i, int j) {
  Mat4 m = Mat4::Zero();
  m(i - 3, j - 3) = 1.0;
  return m;
}

inline Mat4 diag4(double a, double b, double c, double d) { return Eigen::Vector4d(a, b, c, d).asDiagonal(); }

/// Symmetric commuting triple Q D_i Q^T with one shared orthogonal Q.
inline TripleABC random_symmetric_triple(std::mt19937_64& rng) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = uniform(rng);
  const Mat4 q = Eigen::HouseholderQR<Mat4>(r).householderQ();
  const auto d = [&] {
    Eigen::Vector4d v(uniform(rng), uniform(rng), uniform(rng), uniform(rng));
    v.array() -= v.mean();
    return Mat4(q * v.asDiagonal() * q.transpose());
  };
  const Mat4 a = d(), b = d(), c = d();
  return TripleABC(a, b, c);
}

inline double max_abs(const Mat7& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace g2abc::test
