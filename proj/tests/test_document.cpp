#include "fixtures.hpp"

#include <catch_amalgamated.hpp>

using namespace qqf;
using fx::E;
using fx::O;

namespace {

std::string minimal(const std::string& extra)
{
  return R"({"name": "t", "basis": [{"name": "x1", "parity": 0}, {"name": "x2", "parity": 0}, {"name": "y1", "parity": 1}])" +
         extra + "}";
}

std::string parse_error(const std::string& text)
{
  try {
    (void)parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse then serialize then parse is the identity on every document", "[document][roundtrip]")
{
  std::vector<std::string> texts;
  for (const auto& name : catalog_names()) texts.push_back(catalog_get(name).document);
  for (const char* f : {"aff1.json", "g2-base.json", "odd-abelian-2.json", "planar8-base.json"})
    texts.push_back(fx::read_file(fx::data_path(f)));
  for (const auto& text : texts) {
    const AlgebraDocument d = parse_document(text);
    INFO(d.name);
    const std::string once = serialize(d);
    CHECK(parse_document(once) == d);
    CHECK(serialize(parse_document(once)) == once);
  }
}

TEST_CASE("catalog documents are stored in canonical form", "[document][roundtrip]")
{
  for (const auto& name : catalog_names()) {
    INFO(name);
    const std::string text = catalog_get(name).document;
    CHECK(serialize(parse_document(text)) == text);
  }
}

TEST_CASE("document values are the g2 structure constants", "[document]")
{
  const AlgebraDocument d = parse_document(catalog_get("g2").document);
  const SpacePtr& s = d.space();
  CHECK(d.alg == fx::g2_alg().renamed("g2"));
  CHECK(d.forms.at("omega").raw() == fx::g2_omega(s).raw());
  CHECK(d.forms.at("B").raw() == fx::g2_b(s).raw());
  CHECK(d.endos.at("delta") == fx::g2_delta(s));
  CHECK(d.endos.at("rho") == Endomorphism::diagonal(s, {Scalar(-1, 2), Scalar(1, 2), 1, -1}));
}

TEST_CASE("structures written by to_document read back unchanged", "[document][roundtrip][property]")
{
  for (const char* name : {"g2", "g4", "dex6-peri", "planar8"}) {
    INFO(name);
    const QQFStructure q = fx::catalog_qqf(name);
    const QQFStructure back = qqf_from(parse_document(serialize(to_document(q, name))));
    CHECK(back.alg() == q.alg());
    CHECK(back.omega() == q.omega());
    CHECK(back.rho() == q.rho());
    CHECK(back.b_form() == q.b_form());
  }
  const QuasiFrobeniusStructure a = fx::aff1();
  const QuasiFrobeniusStructure back = qf_from(parse_document(serialize(to_document(a, "aff1"))));
  CHECK(back.alg() == a.alg());
  CHECK(back.omega() == a.omega());
}

TEST_CASE("unknown fields and malformed values are parse errors", "[document][errors]")
{
  CHECK(parse_error(minimal(R"(, "extra": 1)")).find("unknown field 'extra'") != std::string::npos);
  CHECK(parse_error(minimal(R"(, "brackets": [{"left": "x1", "right": "x2", "value": {"x2": "1"}, "note": ""}])"))
            .find("unknown field 'note'") != std::string::npos);
  CHECK(parse_error(minimal(R"(, "brackets": [{"left": "x1", "right": "x2", "value": {"x2": "0.5"}}])")).find("bracket value") !=
        std::string::npos);
  CHECK(parse_error(minimal(R"(, "brackets": [{"left": "x1", "right": "z", "value": {}}])")).find("unknown basis label 'z'") !=
        std::string::npos);
  CHECK_FALSE(parse_error(R"({"name": "t", "basis": [{"name": "a", "parity": 2}]})").empty());
  CHECK_FALSE(parse_error(R"({"name": "t", "basis": [{"name": "a", "parity": 0}, {"name": "a", "parity": 1}]})").empty());
  CHECK_FALSE(parse_error(R"({"basis": []})").empty());
  CHECK_FALSE(parse_error("{").empty());
  CHECK_FALSE(parse_error(R"({"name": "t", "name": "u", "basis": []})").empty());
}

TEST_CASE("duplicate brackets and form entries name the offending pair", "[document][errors]")
{
  CHECK(parse_error(minimal(R"(, "brackets": [{"left": "x1", "right": "x2", "value": {"x2": "1"}},
                                                {"left": "x2", "right": "x1", "value": {"x2": "-1"}}])")) ==
        "duplicate bracket [x2, x1]");
  CHECK(parse_error(minimal(R"(, "forms": {"omega": {"parity": 0, "kind": "antisymmetric",
                                "values": [["x1", "x2", "1"], ["x2", "x1", "-1"]]}})"))
            .find("duplicate entry (x1, x2)") != std::string::npos);
  CHECK(parse_error(minimal(R"(, "endos": {"rho": {"parity": 0, "entries": [["x1", "x1", "1"], ["x1", "x1", "2"]]}})"))
            .find("duplicate entry (x1, x1)") != std::string::npos);
}

TEST_CASE("form and endomorphism parity violations surface as homogeneity errors", "[document][errors]")
{
  CHECK_THROWS_AS(parse_document(minimal(R"(, "forms": {"omega": {"parity": 0, "kind": "antisymmetric", "values": [["x1", "y1", "1"]]}})")),
                  HomogeneityError);
  CHECK_THROWS_AS(parse_document(minimal(R"(, "endos": {"rho": {"parity": 0, "entries": [["y1", "x1", "1"]]}})")),
                  HomogeneityError);
  CHECK_THROWS_AS(parse_document(minimal(R"(, "forms": {"B": {"parity": 0, "kind": "symmetric", "values": [["y1", "y1", "1"]]}})")),
                  SymmetryError);
}

TEST_CASE("stored quadratic data must be consistent", "[document][quadratic]")
{
  AlgebraDocument d = parse_document(catalog_get("g2").document);
  CHECK(check_stored_quadratic(d, d.forms.at("omega")).ok());
  d.endos.at("delta") = fx::g2_delta(d.space()) + fx::g2_delta(d.space());
  CHECK(check_stored_quadratic(d, d.forms.at("omega")).failed("delta"));
  CHECK_THROWS_AS(qqf_from(d), HypothesisError);
  d.endos.erase("delta");
  d.endos.at("rho") = Endomorphism::identity(d.space());
  CHECK(check_stored_quadratic(d, d.forms.at("omega")).failed("rho"));
}

TEST_CASE("extension data documents round trip", "[document][extension]")
{
  const AlgebraDocument plane = parse_document(fx::read_file(fx::data_path("odd-abelian-2.json")));
  const std::string xi = fx::read_file(fx::data_path("xi-half.json"));
  const ExtensionDocument e = parse_extension(xi, plane.space());
  REQUIRE_FALSE(e.planar());
  const auto& c = std::get<ExtensionDocument::Central>(e.value);
  CHECK(c.kind == ExtensionKind::even_ortho);
  CHECK(c.data.xi == Endomorphism::unit(plane.space(), "y2", "y1", Scalar(1, 2)));
  CHECK(c.data.lambda == Scalar(1, 2));
  CHECK(c.labels.d == "x1");
  CHECK(serialize(parse_extension(serialize(e), plane.space())) == serialize(e));

  const AlgebraDocument b8 = parse_document(fx::read_file(fx::data_path("planar8-base.json")));
  for (const char* f : {"planar8-data.json", "planar8-printed-data.json"}) {
    const ExtensionDocument p = parse_extension(fx::read_file(fx::data_path(f)), b8.space());
    CHECK(p.planar());
    CHECK(p.kind_label() == "planar-periplectic");
    CHECK(serialize(parse_extension(serialize(p), b8.space())) == serialize(p));
  }

  CHECK_THROWS_AS(parse_extension(R"({"kind": "sideways"})", plane.space()), ParseError);
  CHECK_THROWS_AS(parse_extension(R"({"kind": "even-ortho", "xi0": []})", plane.space()), ParseError);
  CHECK_THROWS_AS(parse_extension(R"({"kind": "even-ortho", "lambda": "1/0"})", plane.space()), ParseError);
  CHECK_THROWS_AS(parse_extension(R"({"kind": "odd-ortho", "xi": [["y1", "y1", "1"]]})", plane.space()), HomogeneityError);
}

TEST_CASE("witness documents round trip", "[document][witness]")
{
  const std::string text = fx::read_file(fx::data_path("g2-witness.json"));
  const Isomorphism phi = parse_witness(text);
  CHECK(phi.matrix(0, 0) == Scalar(-1, 2));
  CHECK(serialize(phi) == text);
  CHECK_THROWS_AS(parse_witness(R"({"source": [], "target": []})"), ParseError);
  CHECK_THROWS_AS(parse_witness(R"({"source": [{"name": "a", "parity": 0}], "target": [{"name": "b", "parity": 0}],
                                   "images": [["a", "b", "1"], ["a", "b", "2"]]})"),
                  ParseError);
}

TEST_CASE("Frobenius algebra documents round trip", "[document][frobenius]")
{
  for (const char* f : {"dual-numbers.json", "field.json", "grassmann.json"}) {
    INFO(f);
    const std::string text = fx::read_file(fx::data_path(f));
    const FrobeniusAlgebra a = parse_frobenius(text);
    CHECK(serialize(a) == text);
  }
  CHECK(serialize(parse_frobenius(fx::read_file(fx::data_path("dual-numbers.json")))) ==
        serialize(FrobeniusAlgebra::dual_numbers()));
  CHECK(serialize(parse_frobenius(fx::read_file(fx::data_path("field.json")))) == serialize(FrobeniusAlgebra::field()));
}
