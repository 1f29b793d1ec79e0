#pragma once

// The solvable Lie algebras g_{A,B,C} = a + n, a = span{e1,e2,e7} abelian,
// n = span{e3..e6} an abelian ideal, with [e7,v] = Av, [e1,v] = Bv, [e2,v] = Cv.
//
// Matrix entries are addressed in the 3..6 convention: a(3,6) is the entry of A
// in row e_3, column e_6.

#include <g2abc/g2core.hpp>
#include <g2abc/liealg.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace g2abc {

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kCommutatorTolerance = 1e-10;

/// Entry m_{ij} of a 4x4 matrix indexed by 3..6.
inline double entry(const Mat4& m, int i, int j) { return m(i - 3, j - 3); }

/// Three traceless, pairwise-commuting 4x4 matrices.
class TripleABC {
 public:
  /// Throws ValidationError naming the failing invariant.
  TripleABC(const Mat4& a, const Mat4& b, const Mat4& c);
  static TripleABC zero() { return {Mat4::Zero(), Mat4::Zero(), Mat4::Zero()}; }

  const Mat4& A() const noexcept { return a_; }
  const Mat4& B() const noexcept { return b_; }
  const Mat4& C() const noexcept { return c_; }

  double a(int i, int j) const { return entry(a_, i, j); }
  double b(int i, int j) const { return entry(b_, i, j); }
  double c(int i, int j) const { return entry(c_, i, j); }

  /// D^l: B for l = 1, C for l = 2, A for l = 7.
  const Mat4& D(int l) const;

  /// Max-abs over the three pairwise commutators.
  double commutator_residual() const;

 private:
  Mat4 a_, b_, c_;
};

enum class FamilyKind { Skew, Diagonal, Symmetric, Antidiagonal, General };

std::string_view to_string(FamilyKind k);
/// Accepts skew, diag/diagonal, sym/symmetric, adiag/antidiagonal, general.
std::optional<FamilyKind> parse_family(std::string_view s);

bool is_skew(const Mat4& m);
bool is_diagonal(const Mat4& m);
bool is_symmetric(const Mat4& m);
bool is_antidiagonal(const Mat4& m);

/// Exact shape membership of all three matrices. General accepts everything.
bool belongs_to(const TripleABC& t, FamilyKind k);
/// First match in the order Diagonal, Skew, Antidiagonal, Symmetric, General.
FamilyKind detect_family(const TripleABC& t);

/// Structure constants of the bracket defined by (A, B, C), without validation.
StructureConstants abc_structure_constants(const Mat4& a, const Mat4& b, const Mat4& c);

struct GabcModel {
  LieAlgebra7 algebra;
  G2Structure structure;
};

/// g_{A,B,C} with the standard phi (identity metric).
GabcModel build(const TripleABC& t);

/// omega_7, omega_1, omega_2 (l = 7, 1, 2) and their anti-self-dual partners.
Form omega(int l);
Form omega_bar(int l);

/// (theta(M) eta)(X, Y) = -eta(MX, Y) - eta(X, MY) on 2-forms of n.
/// Throws ValidationError when eta is not a 2-form supported on e^3..e^6.
Form theta(const Mat4& m, const Form& eta);

/// Random member of a family; deterministic in (kind, seed). Entries of unit
/// scale times `scale`.
TripleABC generate(FamilyKind kind, std::uint64_t seed, double scale = 1.0);

}  // namespace g2abc
