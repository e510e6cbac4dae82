#ifndef QQF_SUPERLINALG_HPP
#define QQF_SUPERLINALG_HPP

#include "errors.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qqf {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b)
{
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr int bit(Parity p) { return static_cast<int>(p); }

/// (-1)^p
constexpr int sign(Parity p) { return p == Parity::odd ? -1 : 1; }

/// Koszul sign (-1)^{|a||b|}.
constexpr int koszul(Parity a, Parity b) { return (a == Parity::odd && b == Parity::odd) ? -1 : 1; }

inline std::string to_string(Parity p) { return p == Parity::odd ? "1" : "0"; }

struct BasisElement {
  std::string label;
  Parity parity = Parity::even;
};

/// Ordered homogeneous basis, canonically even-first.
class SuperSpace {
 public:
  /// Reorders stably so that even vectors precede odd ones; labels must be unique.
  explicit SuperSpace(const std::vector<BasisElement>& basis)
  {
    permutation_.resize(basis.size());
    for (Parity p : {Parity::even, Parity::odd})
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].parity == p) {
          permutation_[i] = basis_.size();
          basis_.push_back(basis[i]);
        }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].label.empty()) throw Error("empty basis label");
      if (!index_.emplace(basis_[i].label, i).second) throw Error("duplicate basis label '" + basis_[i].label + "'");
      if (basis_[i].parity == Parity::even) ++even_dim_;
    }
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t even_dim() const { return even_dim_; }
  std::size_t odd_dim() const { return basis_.size() - even_dim_; }
  const BasisElement& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  Parity parity(std::size_t i) const { return basis_[i].parity; }
  const std::string& label(std::size_t i) const { return basis_[i].label; }

  /// Canonical position of the i-th element as originally given.
  const std::vector<std::size_t>& permutation() const { return permutation_; }

  std::optional<std::size_t> find(const std::string& label) const
  {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const std::string& label) const
  {
    auto i = find(label);
    if (!i) throw DimensionMismatch("unknown basis label '" + label + "'");
    return *i;
  }

  friend bool operator==(const SuperSpace& a, const SuperSpace& b)
  {
    if (a.basis_.size() != b.basis_.size()) return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
      if (a.basis_[i].label != b.basis_[i].label || a.basis_[i].parity != b.basis_[i].parity) return false;
    return true;
  }

 private:
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> permutation_;
  std::map<std::string, std::size_t> index_;
  std::size_t even_dim_ = 0;
};

using SpacePtr = std::shared_ptr<const SuperSpace>;

inline SpacePtr make_space(const std::vector<BasisElement>& basis) { return std::make_shared<const SuperSpace>(basis); }

inline bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || (a && b && *a == *b); }

inline void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* where)
{
  if (!same_space(a, b)) throw DimensionMismatch(std::string(where) + ": operands live in different superspaces");
}

namespace detail {

/// Parity of a coefficient vector: nullopt for zero, HomogeneityError for mixed.
inline std::optional<Parity> vector_parity(const SuperSpace& s, const Vec& c, const char* what)
{
  std::optional<Parity> p;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (qqf::is_zero(c[i])) continue;
    if (p && *p != s.parity(i)) throw HomogeneityError(std::string(what) + " is not homogeneous");
    p = s.parity(i);
  }
  return p;
}

inline std::string format_combination(const SuperSpace& s, const Vec& c, const std::string& suffix = {})
{
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (qqf::is_zero(c[i])) continue;
    Scalar a = c[i];
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) out += to_string(a) + " ";
    out += s.label(i) + suffix;
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// Element of a superspace, stored densely in canonical basis order.
class SuperVector {
 public:
  SuperVector() = default;
  SuperVector(SpacePtr space, Vec coeffs) : space_(std::move(space)), coeffs_(std::move(coeffs))
  {
    if (coeffs_.size() != space_->dim()) throw DimensionMismatch("vector length does not match space dimension");
  }

  static SuperVector zero(const SpacePtr& s) { return {s, Vec(s->dim())}; }

  static SuperVector basis(const SpacePtr& s, std::size_t i)
  {
    Vec c(s->dim());
    c.at(i) = 1;
    return {s, c};
  }

  static SuperVector basis(const SpacePtr& s, const std::string& label) { return basis(s, s->index_of(label)); }

  static SuperVector from_terms(const SpacePtr& s, const std::vector<std::pair<std::string, Scalar>>& terms)
  {
    Vec c(s->dim());
    for (const auto& [label, a] : terms) c[s->index_of(label)] += a;
    return {s, c};
  }

  const SpacePtr& space() const { return space_; }
  const Vec& coeffs() const { return coeffs_; }
  std::size_t dim() const { return coeffs_.size(); }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  const Scalar& operator[](const std::string& label) const { return coeffs_[space_->index_of(label)]; }

  bool is_zero() const { return qqf::is_zero(coeffs_); }

  /// nullopt for the zero vector; throws HomogeneityError for mixed vectors.
  std::optional<Parity> parity() const { return detail::vector_parity(*space_, coeffs_, "vector"); }

  bool is_homogeneous() const
  {
    try {
      (void)parity();
      return true;
    } catch (const HomogeneityError&) {
      return false;
    }
  }

  std::string str() const { return detail::format_combination(*space_, coeffs_); }

  friend SuperVector operator+(const SuperVector& a, const SuperVector& b)
  {
    require_same_space(a.space_, b.space_, "vector addition");
    return {a.space_, a.coeffs_ + b.coeffs_};
  }
  friend SuperVector operator-(const SuperVector& a, const SuperVector& b)
  {
    require_same_space(a.space_, b.space_, "vector subtraction");
    return {a.space_, a.coeffs_ - b.coeffs_};
  }
  friend SuperVector operator*(const Scalar& s, const SuperVector& a) { return {a.space_, s * a.coeffs_}; }
  friend SuperVector operator-(const SuperVector& a) { return Scalar(-1) * a; }
  friend bool operator==(const SuperVector& a, const SuperVector& b)
  {
    return same_space(a.space_, b.space_) && a.coeffs_ == b.coeffs_;
  }

 private:
  SpacePtr space_;
  Vec coeffs_;
};

/// Linear functional; coefficient k is the value on b_k. The dual x* has parity |x|.
class Covector {
 public:
  Covector() = default;
  Covector(SpacePtr space, Vec values) : space_(std::move(space)), values_(std::move(values))
  {
    if (values_.size() != space_->dim()) throw DimensionMismatch("covector length does not match space dimension");
  }

  static Covector dual(const SpacePtr& s, const std::string& label)
  {
    Vec v(s->dim());
    v[s->index_of(label)] = 1;
    return {s, v};
  }

  const SpacePtr& space() const { return space_; }
  const Vec& values() const { return values_; }
  Scalar operator()(const SuperVector& v) const
  {
    require_same_space(space_, v.space(), "covector evaluation");
    return dot(values_, v.coeffs());
  }
  std::optional<Parity> parity() const { return detail::vector_parity(*space_, values_, "covector"); }

  friend Covector operator+(const Covector& a, const Covector& b) { return {a.space_, a.values_ + b.values_}; }
  friend Covector operator*(const Scalar& s, const Covector& a) { return {a.space_, s * a.values_}; }

 private:
  SpacePtr space_;
  Vec values_;
};

/// Homogeneous linear map; matrix(i,j) is the b_i-coefficient of f(b_j).
class Endomorphism {
 public:
  Endomorphism() = default;
  Endomorphism(SpacePtr space, Matrix m, Parity p) : space_(std::move(space)), m_(std::move(m)), parity_(p)
  {
    const std::size_t n = space_->dim();
    if (m_.rows() != n || m_.cols() != n) throw DimensionMismatch("endomorphism matrix has wrong size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!qqf::is_zero(m_(i, j)) && space_->parity(i) != space_->parity(j) + p)
          throw HomogeneityError("endomorphism entry (" + space_->label(i) + ", " + space_->label(j) +
                                 ") violates parity " + to_string(p));
  }

  static Endomorphism identity(const SpacePtr& s) { return {s, Matrix::identity(s->dim()), Parity::even}; }
  static Endomorphism zero(const SpacePtr& s, Parity p) { return {s, Matrix(s->dim(), s->dim()), p}; }

  /// Matrix unit E_{target,source}: maps source to c*target.
  static Endomorphism unit(const SpacePtr& s, const std::string& target, const std::string& source, const Scalar& c = 1)
  {
    const std::size_t i = s->index_of(target), j = s->index_of(source);
    Matrix m(s->dim(), s->dim());
    m(i, j) = c;
    return {s, m, s->parity(i) + s->parity(j)};
  }

  /// Builds from the images of the basis vectors, in canonical order.
  static Endomorphism from_images(const SpacePtr& s, const std::vector<SuperVector>& images, Parity p)
  {
    Matrix m(s->dim(), s->dim());
    for (std::size_t j = 0; j < images.size(); ++j)
      for (std::size_t i = 0; i < s->dim(); ++i) m(i, j) = images[j][i];
    return {s, m, p};
  }

  static Endomorphism diagonal(const SpacePtr& s, const Vec& d)
  {
    Matrix m(s->dim(), s->dim());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return {s, m, Parity::even};
  }

  const SpacePtr& space() const { return space_; }
  const Matrix& matrix() const { return m_; }
  Parity parity() const { return parity_; }
  std::size_t dim() const { return m_.rows(); }

  SuperVector operator()(const SuperVector& v) const
  {
    require_same_space(space_, v.space(), "endomorphism application");
    return {space_, m_.apply(v.coeffs())};
  }
  Vec apply(const Vec& v) const { return m_.apply(v); }
  SuperVector image(std::size_t j) const { return {space_, m_.column(j)}; }

  bool is_zero() const { return m_.is_zero(); }

  std::optional<Endomorphism> inverse() const
  {
    auto inv = qqf::inverse(m_);
    if (!inv) return std::nullopt;
    return Endomorphism(space_, *inv, parity_);
  }

  std::string str() const
  {
    std::string out;
    for (std::size_t j = 0; j < dim(); ++j) {
      const SuperVector img = image(j);
      if (img.is_zero()) continue;
      if (!out.empty()) out += "; ";
      out += space_->label(j) + " -> " + img.str();
    }
    return out.empty() ? "0" : out;
  }

  friend Endomorphism operator*(const Endomorphism& a, const Endomorphism& b)
  {
    require_same_space(a.space_, b.space_, "composition");
    return {a.space_, a.m_ * b.m_, a.parity_ + b.parity_};
  }
  friend Endomorphism operator+(const Endomorphism& a, const Endomorphism& b)
  {
    require_same_space(a.space_, b.space_, "endomorphism sum");
    return {a.space_, a.m_ + b.m_, combined_parity(a, b)};
  }
  friend Endomorphism operator-(const Endomorphism& a, const Endomorphism& b)
  {
    require_same_space(a.space_, b.space_, "endomorphism difference");
    return {a.space_, a.m_ - b.m_, combined_parity(a, b)};
  }
  friend Endomorphism operator*(const Scalar& s, const Endomorphism& a) { return {a.space_, s * a.m_, a.parity_}; }
  friend Endomorphism operator-(const Endomorphism& a) { return Scalar(-1) * a; }
  friend bool operator==(const Endomorphism& a, const Endomorphism& b)
  {
    return same_space(a.space_, b.space_) && a.m_ == b.m_ && (a.parity_ == b.parity_ || a.m_.is_zero());
  }

 private:
  static Parity combined_parity(const Endomorphism& a, const Endomorphism& b)
  {
    if (a.parity_ == b.parity_ || b.is_zero()) return a.parity_;
    if (a.is_zero()) return b.parity_;
    throw HomogeneityError("sum of endomorphisms of different parity");
  }

  SpacePtr space_;
  Matrix m_;
  Parity parity_ = Parity::even;
};

/// Graded commutator [a,b] = ab - (-1)^{|a||b|} ba.
inline Endomorphism graded_commutator(const Endomorphism& a, const Endomorphism& b)
{
  return a * b - Scalar(koszul(a.parity(), b.parity())) * (b * a);
}

enum class Symmetry { symmetric, antisymmetric, none };

inline std::string to_string(Symmetry s)
{
  switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::antisymmetric: return "antisymmetric";
    default: return "none";
  }
}

/// Homogeneous bilinear form stored by its raw values B(b_i, b_j).
class BilinearForm {
 public:
  BilinearForm() = default;
  BilinearForm(SpacePtr space, Matrix raw, Parity p, Symmetry sym)
      : space_(std::move(space)), raw_(std::move(raw)), parity_(p), symmetry_(sym)
  {
    const std::size_t n = space_->dim();
    if (raw_.rows() != n || raw_.cols() != n) throw DimensionMismatch("form table has wrong size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!qqf::is_zero(raw_(i, j)) && space_->parity(i) + space_->parity(j) != p)
          throw HomogeneityError("form value at (" + space_->label(i) + ", " + space_->label(j) + ") violates parity " +
                                 to_string(p));
        if (sym == Symmetry::none) continue;
        const int s = koszul(space_->parity(i), space_->parity(j)) * (sym == Symmetry::symmetric ? 1 : -1);
        if (raw_(i, j) != Scalar(s) * raw_(j, i))
          throw SymmetryError("form is not " + to_string(sym) + " at (" + space_->label(i) + ", " +
                              space_->label(j) + ")");
      }
  }

  static BilinearForm zero(const SpacePtr& s, Parity p, Symmetry sym)
  {
    return {s, Matrix(s->dim(), s->dim()), p, sym};
  }

  const SpacePtr& space() const { return space_; }
  const Matrix& raw() const { return raw_; }
  Parity parity() const { return parity_; }
  Symmetry symmetry() const { return symmetry_; }
  std::size_t dim() const { return raw_.rows(); }
  const Scalar& at(std::size_t i, std::size_t j) const { return raw_(i, j); }

  Scalar operator()(const Vec& u, const Vec& v) const
  {
    Scalar s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (qqf::is_zero(u[i])) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!qqf::is_zero(v[j]) && !qqf::is_zero(raw_(i, j))) s += u[i] * raw_(i, j) * v[j];
    }
    return s;
  }

  Scalar operator()(const SuperVector& u, const SuperVector& v) const
  {
    require_same_space(space_, u.space(), "form evaluation");
    require_same_space(space_, v.space(), "form evaluation");
    return (*this)(u.coeffs(), v.coeffs());
  }

  /// Gram view: entry (i,j) is (-1)^{p(B) p(b_i)} B(b_i, b_j).
  Matrix gram() const
  {
    Matrix g = raw_;
    for (std::size_t i = 0; i < dim(); ++i)
      if (parity_ == Parity::odd && space_->parity(i) == Parity::odd)
        for (std::size_t j = 0; j < dim(); ++j) g(i, j) = -g(i, j);
    return g;
  }

  bool nondegenerate() const { return rank(raw_) == dim(); }

  /// Covector v -> B(u, v).
  Covector left(const SuperVector& u) const
  {
    Vec vals(dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t i = 0; i < dim(); ++i)
        if (!qqf::is_zero(u[i])) vals[j] += u[i] * raw_(i, j);
    return {space_, vals};
  }

  std::string str() const
  {
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        if (qqf::is_zero(raw_(i, j))) continue;
        if (!out.empty()) out += ", ";
        out += "(" + space_->label(i) + "," + space_->label(j) + ")=" + to_string(raw_(i, j));
      }
    return out.empty() ? "0" : out;
  }

  friend BilinearForm operator+(const BilinearForm& a, const BilinearForm& b)
  {
    require_same_space(a.space_, b.space_, "form sum");
    Parity p = a.parity_;
    if (a.parity_ != b.parity_) {
      if (b.raw_.is_zero()) p = a.parity_;
      else if (a.raw_.is_zero()) p = b.parity_;
      else throw HomogeneityError("sum of forms of different parity");
    }
    return {a.space_, a.raw_ + b.raw_, p, a.symmetry_ == b.symmetry_ ? a.symmetry_ : Symmetry::none};
  }
  friend BilinearForm operator-(const BilinearForm& a, const BilinearForm& b) { return a + Scalar(-1) * b; }
  friend BilinearForm operator*(const Scalar& s, const BilinearForm& a)
  {
    return {a.space_, s * a.raw_, a.parity_, a.symmetry_};
  }
  friend bool operator==(const BilinearForm& a, const BilinearForm& b)
  {
    return same_space(a.space_, b.space_) && a.raw_ == b.raw_;
  }

 private:
  SpacePtr space_;
  Matrix raw_;
  Parity parity_ = Parity::even;
  Symmetry symmetry_ = Symmetry::none;
};

namespace detail {

inline Parity parity_or_even(const std::optional<Parity>& p) { return p.value_or(Parity::even); }

inline Symmetry detect_symmetry(const SuperSpace& s, const Matrix& raw)
{
  bool sym = true, anti = true;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Scalar t = Scalar(koszul(s.parity(i), s.parity(j))) * raw(j, i);
      if (raw(i, j) != t) sym = false;
      if (raw(i, j) != -t) anti = false;
    }
  if (sym && !anti) return Symmetry::symmetric;
  if (anti && !sym) return Symmetry::antisymmetric;
  return sym ? Symmetry::symmetric : Symmetry::none;
}

}  // namespace detail

/// <x* ⊗ y*, u ⊗ v> = (-1)^{|y||u|} x*(u) y*(v).
inline Scalar pair_dual(const Covector& x, const Covector& y, const SuperVector& u, const SuperVector& v)
{
  require_same_space(x.space(), y.space(), "pair_dual");
  require_same_space(x.space(), u.space(), "pair_dual");
  require_same_space(x.space(), v.space(), "pair_dual");
  const Parity py = detail::parity_or_even(y.parity());
  const Parity pu = detail::parity_or_even(u.parity());
  (void)x.parity();
  (void)v.parity();
  return Scalar(koszul(py, pu)) * x(u) * y(v);
}

namespace detail {

inline Matrix tensor_table(const Covector& f, const Covector& g)
{
  const SpacePtr& s = f.space();
  Matrix t(s->dim(), s->dim());
  for (std::size_t i = 0; i < s->dim(); ++i)
    for (std::size_t j = 0; j < s->dim(); ++j)
      t(i, j) = pair_dual(f, g, SuperVector::basis(s, i), SuperVector::basis(s, j));
  return t;
}

inline BilinearForm graded_product(const Covector& f, const Covector& g, int relative_sign, Symmetry sym)
{
  require_same_space(f.space(), g.space(), "wedge/odot");
  const Parity pf = parity_or_even(f.parity());
  const Parity pg = parity_or_even(g.parity());
  const Matrix t = tensor_table(f, g) + Scalar(relative_sign * koszul(pf, pg)) * tensor_table(g, f);
  return {f.space(), t, pf + pg, sym};
}

}  // namespace detail

/// f ∧ g = f⊗g - (-1)^{|f||g|} g⊗f.
inline BilinearForm wedge(const Covector& f, const Covector& g)
{
  return detail::graded_product(f, g, -1, Symmetry::antisymmetric);
}

/// f ⊙ g = f⊗g + (-1)^{|f||g|} g⊗f.
inline BilinearForm odot(const Covector& f, const Covector& g)
{
  return detail::graded_product(f, g, 1, Symmetry::symmetric);
}

inline BilinearForm wedge(const SpacePtr& s, const std::string& x, const std::string& y)
{
  return wedge(Covector::dual(s, x), Covector::dual(s, y));
}

inline BilinearForm odot(const SpacePtr& s, const std::string& x, const std::string& y)
{
  return odot(Covector::dual(s, x), Covector::dual(s, y));
}

/// u(B)(w,v) = (-1)^{|v||w|} B(v,w).
inline BilinearForm upsetting(const BilinearForm& b)
{
  const SuperSpace& s = *b.space();
  Matrix u(s.dim(), s.dim());
  for (std::size_t w = 0; w < s.dim(); ++w)
    for (std::size_t v = 0; v < s.dim(); ++v) u(w, v) = Scalar(koszul(s.parity(v), s.parity(w))) * b.at(v, w);
  return {b.space(), u, b.parity(), b.symmetry()};
}

/// Upsetting computed through the Gram view and the block formula
/// [[R,S],[T,U]] -> [[R^t, (-1)^p T^t], [(-1)^p S^t, -U^t]].
inline BilinearForm upsetting_via_gram(const BilinearForm& b)
{
  const SuperSpace& s = *b.space();
  const std::size_t n = s.dim(), n0 = s.even_dim();
  const Matrix g = b.gram();
  const Scalar sp = sign(b.parity());
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool ie = i < n0, je = j < n0;
      if (ie && je) h(i, j) = g(j, i);
      else if (ie && !je) h(i, j) = sp * g(j, i);
      else if (!ie && je) h(i, j) = sp * g(j, i);
      else h(i, j) = -g(j, i);
    }
  Matrix raw(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      raw(i, j) = (b.parity() == Parity::odd && s.parity(i) == Parity::odd) ? Scalar(-h(i, j)) : h(i, j);
  return {b.space(), raw, b.parity(), b.symmetry()};
}

/// Solves B(x, b_k) = rhs_k for every k.
inline SuperVector solve_against_form(const BilinearForm& b, const Vec& rhs)
{
  if (!b.nondegenerate()) throw SingularFormError("solve_against_form: form is degenerate");
  auto x = solve(b.raw().transpose(), rhs);
  return {b.space(), *x};
}

inline SuperVector solve_against_form(const BilinearForm& b, const Covector& rhs)
{
  require_same_space(b.space(), rhs.space(), "solve_against_form");
  return solve_against_form(b, rhs.values());
}

/// f* with B(f v, w) = (-1)^{|f||v|} B(v, f* w).
inline Endomorphism adjoint(const Endomorphism& f, const BilinearForm& b)
{
  require_same_space(f.space(), b.space(), "adjoint");
  if (!b.nondegenerate()) throw SingularFormError("adjoint: form is degenerate");
  const SuperSpace& s = *b.space();
  const std::size_t n = s.dim();
  Matrix rhs(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec fi = f.matrix().column(i);
    const Scalar sg = koszul(f.parity(), s.parity(i));
    for (std::size_t j = 0; j < n; ++j) {
      Scalar v = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (!qqf::is_zero(fi[k])) v += fi[k] * b.at(k, j);
      rhs(i, j) = sg * v;
    }
  }
  const Matrix star = *inverse(b.raw()) * rhs;
  return {f.space(), star, f.parity()};
}

}  // namespace qqf

#endif  // QQF_SUPERLINALG_HPP
