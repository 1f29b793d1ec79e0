#pragma once

// Constant-coefficient exterior algebra on a 7-dimensional oriented inner
// product space.
//
// Basis indices are 1-based (e^1 .. e^7). A monomial e^I denotes
// e^{i1} ^ ... ^ e^{ik} with i1 < ... < ik, and e^I(e_{i1}, ..., e_{ik}) = 1.

#include <g2abc/types.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace g2abc {

/// Coefficients at or below this magnitude are dropped after every operation.
inline constexpr double kPruneThreshold = 1e-14;

/// Strictly increasing subset of {1, ..., 7}, stored as a bit mask.
class IndexSet {
 public:
  constexpr IndexSet() noexcept = default;

  /// Throws Error unless the indices are strictly increasing and in 1..7.
  IndexSet(std::initializer_list<int> indices);
  explicit IndexSet(std::span<const int> indices);

  static constexpr IndexSet from_mask(std::uint8_t mask) noexcept {
    IndexSet s;
    s.mask_ = static_cast<std::uint8_t>(mask & 0x7f);
    return s;
  }

  /// All subsets of the given size, in lexicographic order.
  static std::vector<IndexSet> all_of_size(int k);

  constexpr std::uint8_t mask() const noexcept { return mask_; }
  int size() const noexcept;
  bool contains(int i) const noexcept { return i >= 1 && i <= kDim && (mask_ >> (i - 1)) & 1u; }
  std::vector<int> indices() const;
  IndexSet complement() const noexcept { return from_mask(static_cast<std::uint8_t>(~mask_)); }
  IndexSet with(int i) const noexcept { return from_mask(static_cast<std::uint8_t>(mask_ | (1u << (i - 1)))); }
  IndexSet without(int i) const noexcept { return from_mask(static_cast<std::uint8_t>(mask_ & ~(1u << (i - 1)))); }

  /// Concatenated digits, e.g. "127"; empty for the empty set.
  std::string label() const;

  friend bool operator==(IndexSet a, IndexSet b) noexcept { return a.mask_ == b.mask_; }
  /// Lexicographic on the ascending index sequence.
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept;

 private:
  std::uint8_t mask_ = 0;
};

/// Sign of the permutation sorting the concatenation (a, b); 0 when they overlap.
int merge_sign(IndexSet a, IndexSet b) noexcept;

/// Sign of the permutation sorting `indices`; 0 on a repeat.
int sort_sign(std::span<const int> indices);

class Metric7;

/// Sparse alternating k-form with coefficients keyed by ascending index sets.
class Form {
 public:
  using Terms = std::map<IndexSet, double>;

  explicit Form(int degree = 0);

  static Form scalar(double value);
  /// e^{i1} ^ ... ^ e^{ik} for arbitrary order; normalized with the permutation
  /// sign, zero on repeated indices.
  static Form monomial(std::initializer_list<int> indices, double coeff = 1.0);
  static Form monomial(IndexSet indices, double coeff = 1.0);
  /// The 1-form sum_i v_i e^i.
  static Form covector(const Vec7& v);
  /// Builds a degree-k form from (indices, coeff) pairs.
  static Form from_terms(int degree, std::initializer_list<std::pair<IndexSet, double>> terms);

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  double coeff(IndexSet idx) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  double max_abs() const noexcept;

  /// Value on basis vectors e_{j1}, ..., e_{jk} (1-based, any order).
  double evaluate(std::span<const int> basis) const;
  double evaluate(std::initializer_list<int> basis) const {
    return evaluate(std::span<const int>(basis.begin(), basis.size()));
  }
  /// Value on arbitrary vectors.
  double evaluate(std::span<const Vec7> vectors) const;

  Form& add(IndexSet idx, double value);
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(double s);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, double s) { return a *= s; }
  friend Form operator*(double s, Form a) { return a *= s; }
  friend Form operator-(Form a) { return a *= -1.0; }

  /// Exact equality of the pruned coefficient maps.
  friend bool operator==(const Form& a, const Form& b) = default;

  std::string str() const;

 private:
  void prune();

  int degree_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Form& f);

/// Max-abs coefficient of a - b; throws on a degree mismatch.
double max_abs_diff(const Form& a, const Form& b);

/// Symmetric positive-definite metric with an orientation relative to e^{1...7}.
class Metric7 {
 public:
  explicit Metric7(const Mat7& g, int orientation = +1);
  static Metric7 identity();

  const Mat7& matrix() const noexcept { return g_; }
  const Mat7& inverse() const noexcept { return g_inv_; }
  int orientation() const noexcept { return orientation_; }
  /// sqrt(det g); vol = orientation * volume_factor * e^{1...7}.
  double volume_factor() const noexcept { return sqrt_det_; }
  bool is_identity(double tol = 1e-12) const;

  double inner(const Vec7& x, const Vec7& y) const { return x.dot(g_ * y); }

 private:
  Mat7 g_;
  Mat7 g_inv_;
  double sqrt_det_;
  int orientation_;
  bool identity_;
};

/// Throws ValidationError when deg a + deg b > 7.
Form wedge(const Form& a, const Form& b);
/// Interior product: (contract(x, a))(Y, ...) = a(x, Y, ...).
Form contract(const Vec7& x, const Form& a);
Form hodge(const Form& a, const Metric7& m);
double form_inner(const Form& a, const Form& b, const Metric7& m);
Form volume_form(const Metric7& m);

}  // namespace g2abc
