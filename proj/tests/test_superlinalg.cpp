#include "fixtures.hpp"

#include <catch_amalgamated.hpp>

using namespace qqf;
using fx::E;
using fx::O;

TEST_CASE("rationals are exact and kept in lowest terms", "[superlinalg][scalar]")
{
  const Scalar a = Scalar(1) / 3 + Scalar(1) / 6;
  CHECK(a == Scalar(1, 2));
  CHECK(to_string(a) == "1/2");
  CHECK(to_string(Scalar(-6, 4)) == "-3/2");
  CHECK(to_string(Scalar(4, 2)) == "2");
  CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(parse_scalar("7") == Scalar(7));
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
}

TEST_CASE("field axioms on random rationals", "[superlinalg][scalar][property]")
{
  fx::Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const Scalar a = rng.rational(), b = rng.rational(), c = rng.nonzero();
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a / c) * c == a);
    CHECK(a - a == 0);
    CHECK(parse_scalar(to_string(a)) == a);
  }
}

TEST_CASE("superspace is canonically even-first and records the permutation", "[superlinalg][space]")
{
  const SpacePtr s = make_space({{"y1", O}, {"x1", E}, {"y2", O}, {"x2", E}});
  CHECK(s->label(0) == "x1");
  CHECK(s->label(1) == "x2");
  CHECK(s->label(2) == "y1");
  CHECK(s->label(3) == "y2");
  CHECK(s->permutation() == std::vector<std::size_t>{2, 0, 3, 1});
  CHECK(s->even_dim() == 2);
  CHECK(s->odd_dim() == 2);
  CHECK_THROWS_AS(make_space({{"a", E}, {"a", O}}), Error);
}

TEST_CASE("mixed vectors are rejected where homogeneity is required", "[superlinalg][homogeneity]")
{
  const SpacePtr s = fx::space22();
  const SuperVector mixed = SuperVector::from_terms(s, {{"x1", 1}, {"y1", 1}});
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK_THROWS_AS(mixed.parity(), HomogeneityError);
  CHECK_THROWS_AS(pair_dual(Covector::dual(s, "x1"), Covector::dual(s, "x2"), mixed, SuperVector::basis(s, "x2")),
                  HomogeneityError);
  Covector f(s, {1, 0, 1, 0});
  CHECK_THROWS_AS(wedge(f, Covector::dual(s, "x2")), HomogeneityError);
  CHECK_THROWS_AS(odot(f, Covector::dual(s, "x2")), HomogeneityError);
  Matrix m(4, 4);
  m(2, 0) = 1;
  CHECK_THROWS_AS(Endomorphism(s, m, E), HomogeneityError);
}

TEST_CASE("<x*⊗y*, u⊗v> = (-1)^{|y||u|} x*(u) y*(v)", "[superlinalg][pairing]")
{
  const SpacePtr s = fx::space22();
  auto d = [&](const char* l) { return Covector::dual(s, l); };
  auto b = [&](const char* l) { return SuperVector::basis(s, l); };
  CHECK(pair_dual(d("x1"), d("x2"), b("x1"), b("x2")) == 1);
  CHECK(pair_dual(d("y1"), d("y2"), b("y1"), b("y2")) == -1);
  CHECK(pair_dual(d("y2"), d("y1"), b("y1"), b("y2")) == 0);
  CHECK(pair_dual(d("x1"), d("y1"), b("x1"), b("y1")) == 1);
}

TEST_CASE("wedge and odot values", "[superlinalg][wedge]")
{
  const SpacePtr s = fx::space22();
  auto b = [&](const char* l) { return SuperVector::basis(s, l); };
  CHECK(wedge(s, "x1", "x2")(b("x1"), b("x2")) == 1);
  CHECK(wedge(s, "x1", "x2")(b("x2"), b("x1")) == -1);
  CHECK(wedge(s, "y1", "y2")(b("y1"), b("y2")) == -1);
  const BilinearForm w = fx::g2_omega(s);
  CHECK(w(b("y1"), b("y2")) == 1);
  CHECK(w(b("y2"), b("y1")) == 1);
  CHECK(w(b("x1"), b("x2")) == 2);
  CHECK(odot(s, "x1", "x2")(b("x1"), b("x2")) == 1);
  const BilinearForm bb = fx::g2_b(s);
  CHECK(bb(b("y1"), b("y2")) == 1);
  CHECK(bb(b("y2"), b("y1")) == -1);
  const BilinearForm b4 = fx::g4_b(s);
  CHECK(b4(b("x1"), b("y2")) == 1);
  CHECK(b4.parity() == O);
}

TEST_CASE("wedge(f,g) = -(-1)^{|f||g|} wedge(g,f) and odot(f,g) = (-1)^{|f||g|} odot(g,f)", "[superlinalg][wedge][property]")
{
  const SpacePtr s = make_space({{"a", E}, {"b", E}, {"c", E}, {"p", O}, {"q", O}, {"r", O}});
  fx::Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const Parity pf = rng.coin(50) ? O : E, pg = rng.coin(50) ? O : E;
    Vec fv(6), gv(6);
    for (std::size_t i = 0; i < 6; ++i) {
      if (s->parity(i) == pf) fv[i] = rng.rational();
      if (s->parity(i) == pg) gv[i] = rng.rational();
    }
    const Covector f(s, fv), g(s, gv);
    const Scalar k = koszul(pf, pg);
    CHECK(wedge(f, g).raw() == (-k * wedge(g, f)).raw());
    CHECK(odot(f, g).raw() == (k * odot(g, f)).raw());
  }
}

TEST_CASE("upsetting of symmetric and antisymmetric forms", "[superlinalg][upsetting]")
{
  const SpacePtr s = fx::space22();
  CHECK(upsetting(fx::g2_b(s)).raw() == fx::g2_b(s).raw());
  CHECK(upsetting(fx::g2_omega(s)).raw() == (Scalar(-1) * fx::g2_omega(s)).raw());
  Matrix m(4, 4);
  m(2, 3) = 1;
  const BilinearForm single(s, m, E, Symmetry::none);
  CHECK(upsetting(single).at(3, 2) == -1);
}

TEST_CASE("upsetting is an involution and agrees with the Gram block formula", "[superlinalg][upsetting][property]")
{
  const SpacePtr s = make_space({{"a", E}, {"b", E}, {"p", O}, {"q", O}, {"r", O}});
  fx::Rng rng(7);
  for (int t = 0; t < 80; ++t) {
    const Parity p = rng.coin(50) ? O : E;
    Matrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        if (s->parity(i) + s->parity(j) == p && rng.coin(70)) m(i, j) = rng.rational();
    const BilinearForm b(s, m, p, Symmetry::none);
    CHECK(upsetting(upsetting(b)).raw() == b.raw());
    CHECK(upsetting_via_gram(b).raw() == upsetting(b).raw());
  }
}

TEST_CASE("adjoint examples", "[superlinalg][adjoint]")
{
  const SpacePtr e4 = make_space({{"e1", E}, {"e2", E}, {"e3", E}, {"e4", E}});
  const BilinearForm w4 = wedge(e4, "e1", "e4") + wedge(e4, "e2", "e3");
  const Scalar a(3, 2);
  const Endomorphism xi = Endomorphism::unit(e4, "e1", "e3", a) - Endomorphism::unit(e4, "e2", "e4", a);
  CHECK(adjoint(xi, w4) == xi);
  CHECK(adjoint(xi, w4).matrix() == fx::adjoint_by_linear_solve(xi, w4));

  const SpacePtr s = fx::space22();
  const Endomorphism delta = fx::g2_delta(s);
  CHECK(adjoint(delta, fx::g2_omega(s)) == -delta);
  CHECK(adjoint(Endomorphism::identity(s), fx::g4_omega(s)) == Endomorphism::identity(s));
  CHECK_THROWS_AS(adjoint(delta, BilinearForm::zero(s, E, Symmetry::antisymmetric)), SingularFormError);
}

TEST_CASE("adjoint identities (f∘g)* = (-1)^{|f||g|} g*∘f* and f** = f", "[superlinalg][adjoint][property]")
{
  const SpacePtr s = fx::space22();
  fx::Rng rng(3);
  for (const BilinearForm& b : {fx::g2_omega(s), fx::g4_omega(s), fx::g2_b(s), fx::g4_b(s)}) {
    for (int t = 0; t < 25; ++t) {
      const Endomorphism f = fx::random_endo(rng, s, rng.coin(50) ? O : E);
      const Endomorphism g = fx::random_endo(rng, s, rng.coin(50) ? O : E);
      const Endomorphism fs = adjoint(f, b);
      CHECK(fs.matrix() == fx::adjoint_by_linear_solve(f, b));
      CHECK(adjoint(fs, b) == f);
      CHECK(adjoint(f * g, b) == Scalar(koszul(f.parity(), g.parity())) * (adjoint(g, b) * fs));
    }
  }
}

TEST_CASE("solve_against_form", "[superlinalg][solve]")
{
  const SpacePtr s = fx::space22();
  const BilinearForm w = fx::g2_omega(s);
  const SuperVector x = solve_against_form(w, Vec{-1, 0, 0, 0});
  CHECK(x == SuperVector::from_terms(s, {{"x2", Scalar(1, 2)}}));
  CHECK(solve_against_form(w, Vec(4)).is_zero());
  CHECK_THROWS_AS(solve_against_form(BilinearForm::zero(s, E, Symmetry::antisymmetric), Vec(4)), SingularFormError);
}

TEST_CASE("forms reject wrong parity or symmetry", "[superlinalg][form]")
{
  const SpacePtr s = fx::space22();
  Matrix m(4, 4);
  m(0, 2) = 1;
  CHECK_THROWS_AS(BilinearForm(s, m, E, Symmetry::none), HomogeneityError);
  Matrix n(4, 4);
  n(0, 1) = 1;
  n(1, 0) = 1;
  CHECK_THROWS_AS(BilinearForm(s, n, E, Symmetry::antisymmetric), SymmetryError);
  CHECK_NOTHROW(BilinearForm(s, n, E, Symmetry::symmetric));
}
