#ifndef QQF_TEST_FIXTURES_HPP
#define QQF_TEST_FIXTURES_HPP

#include "qqf/catalog.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace fx {

using namespace qqf;

inline const Parity E = Parity::even;
inline const Parity O = Parity::odd;

inline SpacePtr space22() { return make_space({{"x1", E}, {"x2", E}, {"y1", O}, {"y2", O}}); }

inline Vec combo(const SpacePtr& s, std::vector<std::pair<std::string, Scalar>> terms)
{
  return SuperVector::from_terms(s, terms).coeffs();
}

/// [x1,y1] = y2, [y1,y1] = x2.
inline LieSuperalgebra g2_alg()
{
  const SpacePtr s = space22();
  return {s, {{"x1", "y1", combo(s, {{"y2", 1}})}, {"y1", "y1", combo(s, {{"x2", 1}})}}, "g2"};
}

/// ω = 2x1*∧x2* − y1*∧y2*.
inline BilinearForm g2_omega(const SpacePtr& s) { return Scalar(2) * wedge(s, "x1", "x2") - wedge(s, "y1", "y2"); }

/// 𝓑 = −x1*⊙x2* − y1*⊙y2*.
inline BilinearForm g2_b(const SpacePtr& s) { return Scalar(-1) * odot(s, "x1", "x2") - odot(s, "y1", "y2"); }

/// δ = diag(−2, 2 | 1, −1).
inline Endomorphism g2_delta(const SpacePtr& s) { return Endomorphism::diagonal(s, {-2, 2, 1, -1}); }

/// [y1,y1] = x1, [y1,y2] = x2.
inline LieSuperalgebra g4_alg()
{
  const SpacePtr s = space22();
  return {s, {{"y1", "y1", combo(s, {{"x1", 1}})}, {"y1", "y2", combo(s, {{"x2", 1}})}}, "g4"};
}

/// ω = −2x1*∧y2* + x2*∧y1*.
inline BilinearForm g4_omega(const SpacePtr& s) { return Scalar(-2) * wedge(s, "x1", "y2") + wedge(s, "x2", "y1"); }

/// 𝓑 = x1*⊙y2* + x2*⊙y1*.
inline BilinearForm g4_b(const SpacePtr& s) { return odot(s, "x1", "y2") + odot(s, "x2", "y1"); }

/// δ = diag(−2, 1 | −1, 2).
inline Endomorphism g4_delta(const SpacePtr& s) { return Endomorphism::diagonal(s, {-2, 1, -1, 2}); }

/// [x1,y1] = y2; ω = x1*∧y2* + x2*∧y1*.
inline QuasiFrobeniusStructure g3()
{
  const SpacePtr s = space22();
  LieSuperalgebra g(s, {{"x1", "y1", combo(s, {{"y2", 1}})}}, "g3");
  return {g, wedge(s, "x1", "y2") + wedge(s, "x2", "y1")};
}

/// [x1,x2] = x3; ω = x1*∧x4* + x2*∧x3*.
inline QuasiFrobeniusStructure k_h3()
{
  const SpacePtr s = make_space({{"x1", E}, {"x2", E}, {"x3", E}, {"x4", E}});
  LieSuperalgebra g(s, {{"x1", "x2", combo(s, {{"x3", 1}})}}, "K+h3");
  return {g, wedge(s, "x1", "x4") + wedge(s, "x2", "x3")};
}

/// [x1,x2] = x2; ω = x1*∧x2*.
inline QuasiFrobeniusStructure aff1()
{
  const SpacePtr s = make_space({{"x1", E}, {"x2", E}});
  LieSuperalgebra g(s, {{"x1", "x2", combo(s, {{"x2", 1}})}}, "aff1");
  return {g, wedge(s, "x1", "x2")};
}

/// The odd plane y1, y2 with ω(y1,y2) = ω(y2,y1) = 1 and ρ = diag(1,−1).
inline QQFStructure odd_plane()
{
  const SpacePtr s = make_space({{"y1", O}, {"y2", O}});
  Matrix w(2, 2);
  w(0, 1) = 1;
  w(1, 0) = 1;
  return {QuasiFrobeniusStructure(LieSuperalgebra(s, "plane"), BilinearForm(s, w, E, Symmetry::antisymmetric)),
          Endomorphism::diagonal(s, {1, -1})};
}

inline std::string data_path(const std::string& rel) { return std::string(QQF_DATA_DIR) + "/" + rel; }

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline QQFStructure catalog_qqf(const std::string& name) { return qqf_from(parse_document(catalog_get(name).document)); }
inline QuasiFrobeniusStructure catalog_qf(const std::string& name) { return qf_from(parse_document(catalog_get(name).document)); }

/// Small random rationals p/q with |p| ≤ 4, 1 ≤ q ≤ 3.
struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Scalar rational() { return Scalar(integer(-4, 4)) / Scalar(integer(1, 3)); }
  Scalar nonzero()
  {
    Scalar r = rational();
    while (r == 0) r = rational();
    return r;
  }
  bool coin(int percent) { return integer(1, 100) <= percent; }
};

/// Random homogeneous endomorphism of the given parity.
inline Endomorphism random_endo(Rng& rng, const SpacePtr& s, Parity p, int density = 60)
{
  Matrix m(s->dim(), s->dim());
  for (std::size_t i = 0; i < s->dim(); ++i)
    for (std::size_t j = 0; j < s->dim(); ++j)
      if (s->parity(i) == s->parity(j) + p && rng.coin(density)) m(i, j) = rng.rational();
  return {s, m, p};
}

/// Oracle: the adjoint solved entrywise as a dense linear system in the n² unknowns of f*.
inline Matrix adjoint_by_linear_solve(const Endomorphism& f, const BilinearForm& b)
{
  const SuperSpace& s = *b.space();
  const std::size_t n = s.dim();
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      // B(f b_v, b_w) = ± Σ_k B(b_v, b_k) X(k, w)
      Vec row(n * n);
      for (std::size_t k = 0; k < n; ++k) row[k * n + w] = Scalar(koszul(f.parity(), s.parity(v))) * b.at(v, k);
      Scalar lhs = 0;
      for (std::size_t k = 0; k < n; ++k) lhs += f.matrix()(k, v) * b.at(k, w);
      rows.push_back(row);
      rhs.push_back(lhs);
    }
  const auto x = solve(Matrix::from_rows(rows, n * n), rhs);
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t w = 0; w < n; ++w) out(k, w) = (*x)[k * n + w];
  return out;
}

inline Vec e(const SpacePtr& s, std::size_t i) { return SuperVector::basis(s, i).coeffs(); }

/// u⋆v − (−1)^{|u||v|} v⋆u = [u,v] and ω(u⋆v,w) + (−1)^{|u||v|} ω(v,u⋆w) = 0, evaluated entrywise.
inline bool satisfies_defining_identities(const ProductTable& p, const LieSuperalgebra& g, const BilinearForm& w)
{
  const SuperSpace& s = *g.space();
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar k = koszul(s.parity(i), s.parity(j));
      if (p.product(i, j) - k * p.product(j, i) != g.structure(i, j)) return false;
      for (std::size_t m = 0; m < n; ++m)
        if (w(p.product(i, j), e(g.space(), m)) + k * w(e(g.space(), j), p.product(i, m)) != 0) return false;
    }
  return true;
}

/// Oracle: left multiplication matrices and K(u,v) = L_[u,v] − [L_u, L_v] from the raw table.
inline Matrix left_matrix(const ProductTable& p, const Vec& u)
{
  const std::size_t n = p.dim();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec c(n);
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] != 0) c = c + u[i] * p.product(i, j);
    for (std::size_t k = 0; k < n; ++k) l(k, j) = c[k];
  }
  return l;
}

inline bool curvature_vanishes(const ProductTable& p, const LieSuperalgebra& g)
{
  const SuperSpace& s = *g.space();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Matrix li = left_matrix(p, e(g.space(), i)), lj = left_matrix(p, e(g.space(), j));
      const Matrix k = left_matrix(p, g.structure(i, j)) - (li * lj - Scalar(koszul(s.parity(i), s.parity(j))) * (lj * li));
      if (!k.is_zero()) return false;
    }
  return true;
}

/// B(u,v) = ω(ρu,v) is supersymmetric and invariant, checked entrywise.
inline bool rho_is_invariant(const QuasiFrobeniusStructure& q, const Endomorphism& rho)
{
  const SuperSpace& s = *q.space();
  const std::size_t n = s.dim();
  auto b = [&](const Vec& u, const Vec& v) { return q.omega()(rho.apply(u), v); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (b(e(q.space(), i), e(q.space(), j)) != Scalar(koszul(s.parity(i), s.parity(j))) * b(e(q.space(), j), e(q.space(), i)))
        return false;
      for (std::size_t k = 0; k < n; ++k)
        if (b(q.alg().structure(i, j), e(q.space(), k)) != b(e(q.space(), i), q.alg().structure(j, k))) return false;
    }
  return true;
}

/// x1 ↦ λx1 + βx2, x2 ↦ μx1 − 2λx2, y1 ↦ 2λy1 + β/2 y2, y2 ↦ 2μy1 − λy2.
inline Endomorphism g4_printed_rho(const SpacePtr& s, const Scalar& l, const Scalar& beta, const Scalar& mu)
{
  return Endomorphism::from_images(s,
                                   {SuperVector::from_terms(s, {{"x1", l}, {"x2", beta}}),
                                    SuperVector::from_terms(s, {{"x1", mu}, {"x2", -2 * l}}),
                                    SuperVector::from_terms(s, {{"y1", 2 * l}, {"y2", beta / 2}}),
                                    SuperVector::from_terms(s, {{"y1", 2 * mu}, {"y2", -l}})},
                                   E);
}

inline Vec flat(const Matrix& m)
{
  Vec v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

/// Membership of a matrix in the span of the solution basis.
inline bool in_span(const std::vector<Endomorphism>& basis, const Matrix& m)
{
  std::vector<Vec> rows;
  for (const auto& b : basis) rows.push_back(flat(b.matrix()));
  const std::size_t r = rows.empty() ? 0 : rank(Matrix::from_rows(rows, m.rows() * m.cols()));
  rows.push_back(flat(m));
  return rank(Matrix::from_rows(rows, m.rows() * m.cols())) == r;
}

/// Oracle: φ preserves parity, brackets, ω and ρ, checked entrywise on basis vectors.
inline bool is_isomorphism(const QQFStructure& src, const QQFStructure& tgt, const Matrix& phi)
{
  const SuperSpace& s = *src.space();
  const SuperSpace& t = *tgt.space();
  const std::size_t n = s.dim();
  if (t.dim() != n || phi.rows() != n || phi.cols() != n || rank(phi) != n) return false;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (phi(i, j) != 0 && t.parity(i) != s.parity(j)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (phi.apply(src.alg().structure(i, j)) != tgt.alg().bracket(phi.column(i), phi.column(j))) return false;
      if (tgt.omega()(phi.column(i), phi.column(j)) != src.omega().at(i, j)) return false;
    }
  return phi * src.rho().matrix() == tgt.rho().matrix() * phi;
}

/// Oracle: (u⋆v)⋆w − u⋆(v⋆w) = (−1)^{|u||v|}((v⋆u)⋆w − v⋆(u⋆w)) on basis triples.
inline bool left_symmetric(const QuasiFrobeniusStructure& q)
{
  const ProductTable& p = q.star();
  const SuperSpace& s = *q.space();
  const std::size_t n = s.dim();
  auto b = [&](std::size_t i) { return SuperVector::basis(q.space(), i).coeffs(); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec a1 = p.apply(p.product(i, j), b(k)) - p.apply(b(i), p.product(j, k));
        const Vec a2 = p.apply(p.product(j, i), b(k)) - p.apply(b(j), p.product(i, k));
        if (a1 != Scalar(koszul(s.parity(i), s.parity(j))) * a2) return false;
      }
  return true;
}

}  // namespace fx

#endif  // QQF_TEST_FIXTURES_HPP
