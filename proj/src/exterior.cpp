#include <g2abc/exterior.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>

namespace g2abc {

namespace {

std::uint8_t bit(int i) { return static_cast<std::uint8_t>(1u << (i - 1)); }

void require_index(int i) {
  if (i < 1 || i > kDim) throw Error("basis index out of range: " + std::to_string(i));
}

// det of the minor of `m` with rows `rows` and columns `cols` (both ascending).
double minor_det(const Mat7& m, IndexSet rows, IndexSet cols) {
  const auto r = rows.indices();
  const auto c = cols.indices();
  const auto k = static_cast<Eigen::Index>(r.size());
  if (k == 0) return 1.0;
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = m(r[a] - 1, c[b] - 1);
  return sub.determinant();
}

}  // namespace

// ---------------------------------------------------------------------------
// IndexSet
// ---------------------------------------------------------------------------

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(std::span<const int>(indices.begin(), indices.size())) {}

IndexSet::IndexSet(std::span<const int> indices) {
  int prev = 0;
  for (int i : indices) {
    require_index(i);
    if (i <= prev) throw Error("index set must be strictly increasing");
    mask_ |= bit(i);
    prev = i;
  }
}

std::vector<IndexSet> IndexSet::all_of_size(int k) {
  std::vector<IndexSet> out;
  for (unsigned m = 0; m < 128; ++m)
    if (std::popcount(m) == k) out.push_back(from_mask(static_cast<std::uint8_t>(m)));
  std::sort(out.begin(), out.end());
  return out;
}

int IndexSet::size() const noexcept { return std::popcount(mask_); }

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  out.reserve(7);
  for (int i = 1; i <= kDim; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string IndexSet::label() const {
  std::string s;
  for (int i : indices()) s += static_cast<char>('0' + i);
  return s;
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
}

int merge_sign(IndexSet a, IndexSet b) noexcept {
  if (a.mask() & b.mask()) return 0;
  int inversions = 0;
  for (int j = 1; j <= kDim; ++j) {
    if (!b.contains(j)) continue;
    // elements of a that are larger than j sit in front of it
    inversions += std::popcount(static_cast<unsigned>(a.mask() >> j));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int sort_sign(std::span<const int> indices) {
  int sign = 1;
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      if (indices[i] == indices[j]) return 0;
      if (indices[i] > indices[j]) sign = -sign;
    }
  return sign;
}

// ---------------------------------------------------------------------------
// Form
// ---------------------------------------------------------------------------

Form::Form(int degree) : degree_(degree) {
  if (degree < 0 || degree > kDim) throw ValidationError("form degree out of range: " + std::to_string(degree));
}

Form Form::scalar(double value) {
  Form f(0);
  f.add(IndexSet{}, value);
  return f;
}

Form Form::monomial(std::initializer_list<int> indices, double coeff) {
  Form f(static_cast<int>(indices.size()));
  for (int i : indices) require_index(i);
  const int sign = sort_sign(std::span<const int>(indices.begin(), indices.size()));
  if (sign == 0) return f;
  std::uint8_t m = 0;
  for (int i : indices) m |= bit(i);
  f.add(IndexSet::from_mask(m), sign * coeff);
  return f;
}

Form Form::monomial(IndexSet indices, double coeff) {
  Form f(indices.size());
  f.add(indices, coeff);
  return f;
}

Form Form::covector(const Vec7& v) {
  Form f(1);
  for (int i = 1; i <= kDim; ++i) f.add(IndexSet::from_mask(bit(i)), v(i - 1));
  return f;
}

Form Form::from_terms(int degree, std::initializer_list<std::pair<IndexSet, double>> terms) {
  Form f(degree);
  for (const auto& [idx, c] : terms) {
    if (idx.size() != degree) throw Error("term degree does not match form degree");
    f.add(idx, c);
  }
  return f;
}

double Form::coeff(IndexSet idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? 0.0 : it->second;
}

double Form::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& [idx, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double Form::evaluate(std::span<const int> basis) const {
  if (static_cast<int>(basis.size()) != degree_) throw Error("evaluate: wrong number of arguments");
  std::uint8_t m = 0;
  for (int i : basis) {
    require_index(i);
    m |= bit(i);
  }
  const int sign = sort_sign(basis);
  return sign == 0 ? 0.0 : sign * coeff(IndexSet::from_mask(m));
}

double Form::evaluate(std::span<const Vec7> vectors) const {
  if (static_cast<int>(vectors.size()) != degree_) throw Error("evaluate: wrong number of arguments");
  Form f = *this;
  for (const auto& v : vectors) f = contract(v, f);
  return f.coeff(IndexSet{});
}

Form& Form::add(IndexSet idx, double value) {
  if (idx.size() != degree_) throw Error("add: index set of wrong size");
  double& c = terms_[idx];
  c += value;
  if (std::abs(c) <= kPruneThreshold) terms_.erase(idx);
  return *this;
}

Form& Form::operator+=(const Form& other) {
  if (other.degree_ != degree_) throw ValidationError("cannot add forms of different degrees");
  for (const auto& [idx, c] : other.terms_) terms_[idx] += c;
  prune();
  return *this;
}

Form& Form::operator-=(const Form& other) {
  if (other.degree_ != degree_) throw ValidationError("cannot subtract forms of different degrees");
  for (const auto& [idx, c] : other.terms_) terms_[idx] -= c;
  prune();
  return *this;
}

Form& Form::operator*=(double s) {
  for (auto& [idx, c] : terms_) c *= s;
  prune();
  return *this;
}

void Form::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) <= kPruneThreshold; });
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const double a = std::abs(c);
    if (degree_ == 0) {
      os << a;
      continue;
    }
    if (a != 1.0) os << a << " ";
    os << "e^" << idx.label();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Form& f) { return os << f.str(); }

double max_abs_diff(const Form& a, const Form& b) { return (a - b).max_abs(); }

// ---------------------------------------------------------------------------
// Metric7
// ---------------------------------------------------------------------------

Metric7::Metric7(const Mat7& g, int orientation) : g_(g), orientation_(orientation) {
  if (orientation != 1 && orientation != -1) throw ValidationError("orientation must be +1 or -1");
  if (!g.allFinite()) throw ValidationError("metric has non-finite entries");
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ValidationError("metric is not symmetric");
  g_ = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Mat7> eig(g_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() <= 0.0) throw ValidationError("metric is not positive-definite");
  g_inv_ = g_.inverse();
  sqrt_det_ = std::sqrt(g_.determinant());
  identity_ = (g_ - Mat7::Identity()).cwiseAbs().maxCoeff() == 0.0;
}

Metric7 Metric7::identity() { return Metric7(Mat7::Identity()); }

bool Metric7::is_identity(double tol) const {
  return (g_ - Mat7::Identity()).cwiseAbs().maxCoeff() <= tol && orientation_ == 1;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

Form wedge(const Form& a, const Form& b) {
  const int k = a.degree() + b.degree();
  if (k > kDim) throw ValidationError("wedge: degree overflow (" + std::to_string(k) + " > 7)");
  Form out(k);
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      const int s = merge_sign(ia, ib);
      if (s != 0) out.add(IndexSet::from_mask(ia.mask() | ib.mask()), s * ca * cb);
    }
  return out;
}

Form contract(const Vec7& x, const Form& a) {
  if (a.degree() == 0) throw ValidationError("contract: cannot contract a 0-form");
  Form out(a.degree() - 1);
  for (const auto& [idx, c] : a.terms()) {
    int pos = 0;
    for (int j = 1; j <= kDim; ++j) {
      if (!idx.contains(j)) continue;
      if (x(j - 1) != 0.0) out.add(idx.without(j), (pos % 2 == 0 ? 1.0 : -1.0) * x(j - 1) * c);
      ++pos;
    }
  }
  return out;
}

double form_inner(const Form& a, const Form& b, const Metric7& m) {
  if (a.degree() != b.degree()) throw ValidationError("form_inner: degree mismatch");
  double s = 0.0;
  if (m.is_identity(0.0)) {
    for (const auto& [idx, c] : a.terms()) s += c * b.coeff(idx);
    return s;
  }
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) s += ca * cb * minor_det(m.inverse(), ia, ib);
  return s;
}

Form hodge(const Form& a, const Metric7& m) {
  const int k = a.degree();
  Form out(kDim - k);
  if (m.is_identity(0.0)) {
    for (const auto& [idx, c] : a.terms()) out.add(idx.complement(), merge_sign(idx, idx.complement()) * c);
    return out;
  }
  // e^I ^ (*a) = <e^I, a> vol, read off on the complement of I.
  const double scale = m.orientation() * m.volume_factor();
  for (IndexSet row : IndexSet::all_of_size(k)) {
    double s = 0.0;
    for (const auto& [idx, c] : a.terms()) s += c * minor_det(m.inverse(), row, idx);
    out.add(row.complement(), merge_sign(row, row.complement()) * scale * s);
  }
  return out;
}

Form volume_form(const Metric7& m) {
  return Form::monomial(IndexSet::from_mask(0x7f), m.orientation() * m.volume_factor());
}

}  // namespace g2abc
