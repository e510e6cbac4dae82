#ifndef QQF_CLI_HPP
#define QQF_CLI_HPP

#include "catalog.hpp"
#include "document.hpp"
#include "extensions.hpp"

#include <optional>
#include <string>

namespace qqf::cli {

/// Result of one command: exit code, standard output and standard error text.
struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 clean, 1 semantic failure with report, 2 malformed input.
enum ExitCode { clean = 0, semantic = 1, malformed = 2 };

template <class F>
Outcome guarded(F&& body)
{
  try {
    return body();
  } catch (const ParseError& e) {
    return {malformed, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const HypothesisError& e) {
    std::string msg = std::string("error: ") + e.what();
    if (msg.back() != '\n') msg += "\n";
    return {semantic, {}, msg};
  } catch (const Error& e) {
    return {semantic, {}, std::string("error: ") + e.what() + "\n"};
  }
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string dims(const SuperSpace& s) { return std::to_string(s.even_dim()) + "|" + std::to_string(s.odd_dim()); }

inline void report_lines(std::string& out, const std::string& label, const ValidationReport& r)
{
  if (r.ok()) out += label + ": ok\n";
  for (const auto& f : r.failures()) out += label + ": FAIL " + f.check + ": " + f.detail + "\n";
  for (const auto& n : r.notes()) out += label + ": NOTE " + n.check + ": " + n.detail + "\n";
}

inline Outcome finish(std::string out, std::size_t failures)
{
  out += failures == 0 ? "result: clean\n" : "result: " + std::to_string(failures) + " failure(s)\n";
  return {failures == 0 ? clean : semantic, std::move(out), {}};
}

inline std::string quadratic_line(const QuasiFrobeniusStructure& qf, Parity p)
{
  const QuadraticExistence qe = quadratic_existence(qf, p);
  std::string line = "quadratic structure (" + std::string(p == Parity::even ? "even" : "odd") + " rho): ";
  line += to_string(qe.verdict) + " (" + qe.witness + ")";
  if (qe.sample) line += "; invertible sample: " + qe.sample->str();
  return line + "\n";
}

}  // namespace detail

/// Lie axioms, form flags and endomorphism checks; exit 0 iff clean.
inline Outcome validate(const std::string& text)
{
  return guarded([&]() -> Outcome {
    const AlgebraDocument doc = parse_document(text);
    std::string out = "name: " + doc.name + "\ndim: " + detail::dims(*doc.space()) + "\n";
    std::size_t failures = 0;
    auto add = [&](const std::string& label, const ValidationReport& r) {
      detail::report_lines(out, label, r);
      failures += r.failures().size();
    };
    add("lie", validate_lie(doc.alg));
    for (const auto& [name, form] : doc.forms) {
      ValidationReport r;
      if (!form.nondegenerate()) r.fail("nondegenerate", "form is degenerate");
      if (name == "omega") r.merge(check_symplectic_form(form));
      if (form.symmetry() == Symmetry::antisymmetric) {
        const ValidationReport closed = check_closed(doc.alg, form);
        if (name == "omega") r.merge(closed);
        else out += "form " + name + ": closed " + detail::yes_no(closed.ok()) + "\n";
      } else {
        const ValidationReport inv = check_invariant(doc.alg, form);
        if (name == "B") r.merge(inv);
        else out += "form " + name + ": invariant " + detail::yes_no(inv.ok()) + "\n";
      }
      add("form " + name + " (parity " + to_string(form.parity()) + ", " + to_string(form.symmetry()) + ")", r);
    }
    for (const auto& [name, f] : doc.endos) {
      ValidationReport r;
      const bool invertible = f.inverse().has_value();
      if ((name == "rho" || name == "delta") && !invertible) r.fail("invertible", name + " is not invertible");
      const DerivationCheck der = is_derivation(f, doc.alg);
      if (name == "delta" && !der) r.fail("derivation", der.witness);
      add("endo " + name + " (parity " + to_string(f.parity()) + ")", r);
    }
    if (has_quadratic(doc)) {
      if (!doc.forms.count("omega")) {
        add("quadratic", [] {
          ValidationReport r;
          r.fail("omega", "quadratic data without omega");
          return r;
        }());
      } else {
        ValidationReport r = check_stored_quadratic(doc, doc.forms.at("omega"));
        if (r.ok()) {
          try {
            (void)qqf_from(doc);
          } catch (const HypothesisError& e) {
            r.merge(e.report());
            if (e.report().ok()) r.fail("qqf", e.what());
          }
        }
        add("quadratic", r);
      }
    }
    return detail::finish(std::move(out), failures);
  });
}

/// Structural report for a document with a designated omega.
inline Outcome analyze(const std::string& text)
{
  return guarded([&]() -> Outcome {
    const AlgebraDocument doc = parse_document(text);
    const ValidationReport lie = validate_lie(doc.alg);
    if (!lie.ok()) throw HypothesisError("not a Lie superalgebra", lie);
    const QuasiFrobeniusStructure qf = qf_from(doc);
    const LieSuperalgebra& g = qf.alg();
    const SuperSpace& s = *g.space();
    const Subspace z = center(g);
    const Subspace dg = derived(g);
    std::string out = "name: " + doc.name + "\ndim: " + detail::dims(s) + "\n";
    out += "omega: " + qf.flavor() + ", closed yes\n";
    out += "center: " + z.str() + "\n";
    out += "derived: " + dg.str() + "\n";
    out += "perp(derived): " + perp(dg, qf.omega()).str() + "\n";
    out += "perp(center): " + perp(z, qf.omega()).str() + "\n";
    out += "star:\n";
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j)
        if (!is_zero(qf.star().product(i, j)))
          out += "  " + s.label(i) + " * " + s.label(j) + " = " + qqf::detail::format_combination(s, qf.star().product(i, j)) + "\n";
    const ValidationReport star = check_product(g, qf.omega(), qf.star());
    out += "star postconditions: " + std::string(star.ok() ? "ok" : "FAIL") + "\n";
    const FlatnessResult f = qf.flatness();
    out += f.flat ? "flat: yes\n" : "flat: no (" + f.witness + ")\n";
    out += detail::quadratic_line(qf, Parity::even);
    out += detail::quadratic_line(qf, Parity::odd);
    const ValidationReport even_dims = dimension_checks(s.dim(), Parity::even);
    const ValidationReport odd_dims = dimension_checks(s.dim(), Parity::odd);
    out += "dimension even: " + detail::yes_no(even_dims.ok()) + "\n";
    out += "dimension divisible by 4: " + detail::yes_no(odd_dims.ok()) + "\n";
    if (has_quadratic(doc)) {
      const QQFStructure q = qqf_from(doc);
      const ValidationReport suite = flat_qqf_suite(q);
      out += "stored rho: parity " + to_string(q.rho().parity()) + ", " + q.rho().str() + "\n";
      out += "npl product equals star: " + detail::yes_no(npl_product(g, q.delta()) == qf.star()) + "\n";
      detail::report_lines(out, "flat qqf suite", suite);
    }
    return {clean, std::move(out), {}};
  });
}

struct ExtendOptions {
  std::optional<std::string> kind;     ///< must agree with the data document
  Gate gate = Gate::printed;
  std::optional<std::string> name;     ///< default: base name + "+" + kind
  std::optional<std::string> witness;  ///< witness text; the result is transported along it
};

/// Double extension of a base document; QQF when the base carries quadratic data, else quasi-Frobenius.
inline Outcome extend(const std::string& base_text, const std::string& data_text, const ExtendOptions& opt = {})
{
  return guarded([&]() -> Outcome {
    const AlgebraDocument base = parse_document(base_text);
    const ExtensionDocument data = parse_extension(data_text, base.space());
    if (opt.kind && !is_known_kind(*opt.kind)) throw ParseError("unknown kind '" + *opt.kind + "'");
    if (opt.kind && *opt.kind != data.kind_label())
      throw ParseError("--kind " + *opt.kind + " disagrees with data kind " + data.kind_label());
    const std::optional<Isomorphism> phi = opt.witness ? std::optional(parse_witness(*opt.witness)) : std::nullopt;
    const std::string name = opt.name.value_or(base.name + "+" + data.kind_label());
    const QuasiFrobeniusStructure bqf = qf_from(base);
    AlgebraDocument result;
    if (has_quadratic(base)) {
      const QQFStructure bq = qqf_from(base);
      QQFStructure q;
      if (const auto* c = std::get_if<ExtensionDocument::Central>(&data.value))
        q = qqf_double_extend(c->kind, bq, c->data, c->labels, opt.gate);
      else {
        const auto& p = std::get<ExtensionDocument::Planar>(data.value);
        q = planar_qqf_extend(p.flavor, bq, p.data, p.labels, opt.gate);
      }
      if (phi) {
        const QQFStructure moved = transport(q, *phi);
        const ValidationReport r = verify_isomorphism(q, moved, *phi);
        if (!r.ok()) throw HypothesisError("witness does not transport the extension", r);
        q = moved;
      }
      result = to_document(q, name);
    } else {
      QuasiFrobeniusStructure q;
      if (const auto* c = std::get_if<ExtensionDocument::Central>(&data.value))
        q = double_extend(c->kind, bqf, c->data, c->labels, opt.gate);
      else {
        const auto& p = std::get<ExtensionDocument::Planar>(data.value);
        q = planar_extend(p.flavor, bqf, p.data, p.labels, opt.gate);
      }
      if (phi) {
        const QuasiFrobeniusStructure moved = transport(q, *phi);
        const ValidationReport r = verify_isomorphism(q, moved, *phi);
        if (!r.ok()) throw HypothesisError("witness does not transport the extension", r);
        q = moved;
      }
      result = to_document(q, name);
    }
    return {clean, serialize(result), {}};
  });
}

/// Base, data and witness documents of one reduction step.
struct Reduction {
  Outcome outcome;  ///< out holds the base document
  std::string data;
  std::string witness;
};

/// One reduction step: central for even rho, planar for odd rho. The witness maps the re-extension onto the input.
inline Reduction reduce(const std::string& text, const std::optional<std::string>& name = {})
{
  Reduction red;
  red.outcome = guarded([&]() -> Outcome {
    const AlgebraDocument doc = parse_document(text);
    const QQFStructure q = qqf_from(doc);
    const std::string base_name = name.value_or(doc.name + "-base");
    if (q.rho().parity() == Parity::even) {
      const ReductionResult r = central_reduce(q);
      red.data = serialize(ExtensionDocument{ExtensionDocument::Central{r.kind, r.data, r.labels}});
      red.witness = serialize(r.witness);
      return {clean, serialize(to_document(r.base, base_name)), {}};
    }
    const PlanarReductionResult r = planar_reduce(q);
    red.data = serialize(ExtensionDocument{ExtensionDocument::Planar{r.flavor, r.data, r.labels}});
    red.witness = serialize(r.witness);
    return {clean, serialize(to_document(r.base, base_name)), {}};
  });
  return red;
}

/// Iterated reduction report; exit 1 when peeling stops before {0}.
inline Outcome peel(const std::string& text)
{
  return guarded([&]() -> Outcome {
    const AlgebraDocument doc = parse_document(text);
    const QQFStructure q = qqf_from(doc);
    const PeelResult p = qqf::peel(q);
    std::string out = "name: " + doc.name + "\n";
    for (const auto& s : p.steps)
      out += s.operation + " " + s.kind + ": " + std::to_string(s.from_dim) + " -> " + std::to_string(s.to_dim) + "\n";
    out += "steps: " + std::to_string(p.steps.size()) + "\n";
    if (p.complete) return {clean, out + "reached {0}: yes\n", {}};
    return {semantic, out + "reached {0}: no (" + p.stopped + ")\n", {}};
  });
}

/// Tensor product of a flat QQF document with a Frobenius algebra document.
inline Outcome tensor(const std::string& text, const std::string& algebra_text, const std::optional<std::string>& name = {})
{
  return guarded([&]() -> Outcome {
    const AlgebraDocument doc = parse_document(text);
    const FrobeniusAlgebra a = parse_frobenius(algebra_text);
    const QQFStructure q = tensor_qqf(qqf_from(doc), a);
    return {clean, serialize(to_document(q, name.value_or(doc.name + "." + a.name()))), {}};
  });
}

inline Outcome catalog_list()
{
  std::string out;
  for (const auto& n : catalog_names()) {
    const CatalogEntry e = catalog_get(n);
    out += e.name + ": " + (e.quadratic ? "quadratic" : "quasi-Frobenius") + ", even rho " + to_string(e.even_rho) +
           ", odd rho " + to_string(e.odd_rho) + "\n";
  }
  return {clean, out, {}};
}

inline Outcome catalog_show(const std::string& name)
{
  return guarded([&]() -> Outcome {
    const CatalogEntry e = catalog_get(name);
    return {clean, "name: " + e.name + "\nnotes: " + e.notes + "\ncertificate: " + e.certificate + "\n" + e.document, {}};
  });
}

inline Outcome catalog_export(const std::string& name)
{
  return guarded([&]() -> Outcome { return {clean, catalog_get(name).document, {}}; });
}

/// Certifies one entry, or every entry when name is empty.
inline Outcome catalog_certify(const std::string& name = {})
{
  return guarded([&]() -> Outcome {
    const std::vector<std::string> names = name.empty() ? catalog_names() : std::vector<std::string>{name};
    std::string out;
    std::size_t failures = 0;
    for (const auto& n : names) {
      const Certification c = certify(catalog_get(n));
      detail::report_lines(out, n + " [" + c.digest + "]", c.report);
      failures += c.report.failures().size();
    }
    return detail::finish(std::move(out), failures);
  });
}

/// Checks a witness between two documents at the richest level both carry.
inline Outcome compare(const std::string& a_text, const std::string& b_text, const std::string& witness_text)
{
  return guarded([&]() -> Outcome {
    const AlgebraDocument a = parse_document(a_text);
    const AlgebraDocument b = parse_document(b_text);
    const Isomorphism phi = parse_witness(witness_text);
    ValidationReport r;
    std::string level;
    if (has_quadratic(a) && has_quadratic(b)) {
      level = "qqf";
      r = verify_isomorphism(qqf_from(a), qqf_from(b), phi);
    } else if (a.forms.count("omega") && b.forms.count("omega")) {
      level = "quasi-Frobenius";
      r = verify_isomorphism(qf_from(a), qf_from(b), phi);
    } else {
      level = "lie";
      r = verify_isomorphism(a.alg, b.alg, phi);
    }
    std::string out = "level: " + level + "\n";
    detail::report_lines(out, "witness", r);
    out += "isomorphic: " + detail::yes_no(r.ok()) + "\n";
    return {r.ok() ? clean : semantic, out, {}};
  });
}

}  // namespace qqf::cli

#endif  // QQF_CLI_HPP
