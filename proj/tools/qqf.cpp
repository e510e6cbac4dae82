#include "qqf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << text;
}

/// Prints the outcome; documents go to --out when given.
int emit(const qqf::cli::Outcome& o, const std::string& out_path = {})
{
  if (!o.err.empty()) std::cerr << o.err;
  if (o.code == qqf::cli::clean && !out_path.empty()) spill(out_path, o.out);
  else std::cout << o.out;
  return o.code;
}

std::string stem(const std::string& path)
{
  const auto dot = path.rfind(".json");
  return dot != std::string::npos && dot + 5 == path.size() ? path.substr(0, dot) : path;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact quasi-Frobenius and quadratic Lie superalgebra toolkit"};
  app.require_subcommand(1);
  int code = 0;

  std::string file, other, data, kind, gate = "printed", name, witness, out, data_out, witness_out, entry;
  bool do_peel = false;

  auto* validate = app.add_subcommand("validate", "Check Lie axioms, forms and endomorphisms of a document");
  validate->add_option("file", file, "algebra document")->required();

  auto* analyze = app.add_subcommand("analyze", "Center, derived algebra, product, flatness and quadratic existence");
  analyze->add_option("file", file, "algebra document with omega")->required();

  auto* extend = app.add_subcommand("extend", "Double extension of a base document");
  extend->add_option("file", file, "base document")->required();
  extend->add_option("--data", data, "extension data document")->required();
  extend->add_option("--kind", kind, "expected extension kind");
  extend->add_option("--gate", gate, "printed or verified")->check(CLI::IsMember({"printed", "verified"}));
  extend->add_option("--name", name, "name of the result");
  extend->add_option("--witness", witness, "witness mapping the result onto its final basis");
  extend->add_option("--out", out, "output path");

  auto* reduce = app.add_subcommand("reduce", "One reduction step, or iterated peeling");
  reduce->add_option("file", file, "quadratic document")->required();
  reduce->add_option("--name", name, "name of the base document");
  reduce->add_option("--out", out, "base document path");
  reduce->add_option("--data-out", data_out, "extension data path (default: <out>-data.json)");
  reduce->add_option("--witness-out", witness_out, "witness path (default: <out>-witness.json)");
  reduce->add_flag("--peel", do_peel, "reduce repeatedly down to {0} and report the steps");

  auto* tensor = app.add_subcommand("tensor", "Tensor product with a Frobenius algebra");
  tensor->add_option("file", file, "flat quadratic document")->required();
  tensor->add_option("algebra", other, "Frobenius algebra document")->required();
  tensor->add_option("--name", name, "name of the result");
  tensor->add_option("--out", out, "output path");

  auto* catalog = app.add_subcommand("catalog", "Embedded example catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List entries");
  auto* show = catalog->add_subcommand("show", "Notes and document of an entry");
  show->add_option("name", entry)->required();
  auto* exp = catalog->add_subcommand("export", "Document of an entry");
  exp->add_option("name", entry)->required();
  exp->add_option("--out", out, "output path");
  auto* cert = catalog->add_subcommand("certify", "Run the validator suite on entries");
  cert->add_option("name", entry, "entry (default: all)");

  auto* compare = app.add_subcommand("compare", "Verify a witness isomorphism between two documents");
  compare->add_option("source", file)->required();
  compare->add_option("target", other)->required();
  compare->add_option("--witness", witness, "witness document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : qqf::cli::malformed;
  }

  namespace cli = qqf::cli;
  try {
    if (validate->parsed()) code = emit(cli::validate(slurp(file)));
    else if (analyze->parsed()) code = emit(cli::analyze(slurp(file)));
    else if (extend->parsed()) {
      cli::ExtendOptions opt;
      if (!kind.empty()) opt.kind = kind;
      opt.gate = gate == "verified" ? qqf::Gate::verified : qqf::Gate::printed;
      if (!name.empty()) opt.name = name;
      if (!witness.empty()) opt.witness = slurp(witness);
      code = emit(cli::extend(slurp(file), slurp(data), opt), out);
    } else if (reduce->parsed()) {
      if (do_peel) code = emit(cli::peel(slurp(file)));
      else {
        const cli::Reduction r = cli::reduce(slurp(file), name.empty() ? std::nullopt : std::optional(name));
        code = emit(r.outcome, out);
        if (code == cli::clean) {
          if (data_out.empty() && !out.empty()) data_out = stem(out) + "-data.json";
          if (witness_out.empty() && !out.empty()) witness_out = stem(out) + "-witness.json";
          if (!data_out.empty()) spill(data_out, r.data);
          if (!witness_out.empty()) spill(witness_out, r.witness);
        }
      }
    } else if (tensor->parsed()) {
      code = emit(cli::tensor(slurp(file), slurp(other), name.empty() ? std::nullopt : std::optional(name)), out);
    } else if (list->parsed()) code = emit(cli::catalog_list());
    else if (show->parsed()) code = emit(cli::catalog_show(entry));
    else if (exp->parsed()) code = emit(cli::catalog_export(entry), out);
    else if (cert->parsed()) code = emit(cli::catalog_certify(entry));
    else if (compare->parsed()) code = emit(cli::compare(slurp(file), slurp(other), slurp(witness)));
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::malformed;
  }
  return code;
}
