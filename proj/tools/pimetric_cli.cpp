// pimetric: command-line front end for the pi-metric symmetry library.
//
// Exit codes: 0 success / true verdict, 1 false verdict or a valid input the
// operation rejects, 2 usage or parse errors (including oversized spaces).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pimetric/autgroup.hpp"
#include "pimetric/counting.hpp"
#include "pimetric/error.hpp"
#include "pimetric/io.hpp"
#include "pimetric/oracle.hpp"

using namespace pimetric;

namespace
{

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

std::string slurp(std::string const &path)
{
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in)
      throw Error(Errc::ParseError, "cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

ExplicitMap load_map(std::string const &path)
{
  std::istringstream in(slurp(path));
  return read_map(in);
}

StructuredSymmetry as_structured(SymmetryDocument const &doc)
{
  if (auto const *l = std::get_if<LinearBlockMap>(&doc))
    return to_structured(*l);
  return std::get<StructuredSymmetry>(doc);
}

int exit_code_for(Errc code)
{
  switch (code) {
  case Errc::NotASymmetry:
  case Errc::NotAnAutomorphism:
  case Errc::NotBijective:
  case Errc::SeparabilityViolation:
  case Errc::ZeroCode:
    return kExitFalse;
  default:
    return kExitUsage;
  }
}

Space make_space(unsigned q, std::string const &pi)
{
  return Space(Field::make(q), Partition::parse(pi));
}

int cmd_order(std::string const &kind, unsigned q, std::string const &pi, unsigned n)
{
  if (kind == "hamming") {
    if (n == 0)
      throw Error(Errc::InvalidArgument, "order hamming needs --n");
    auto h = hamming_orders(n, q);
    std::cout << "symm: " << to_decimal(h.symm) << "\naut: " << to_decimal(h.aut) << '\n';
    return 0;
  }
  if (pi.empty())
    throw Error(Errc::InvalidArgument, "order " + kind + " needs --pi");
  Partition p = Partition::parse(pi);
  std::cout << to_decimal(kind == "symm" ? symm_order(p, q) : aut_order(p, q)) << '\n';
  return 0;
}

int cmd_verify(std::string const &path, std::string const &mode)
{
  auto f = load_map(path);
  if (!f.is_bijective()) {
    std::cout << mode << ": false\nreason: not bijective\n";
    return kExitFalse;
  }
  if (auto w = find_distance_violation(f)) {
    IndexedSpace space(f.space());
    auto show = [&](std::uint32_t v) { return format_vector(BlockVector::from_index(f.space(), v)); };
    std::cout << mode << ": false\n"
              << "witness: " << show(w->first) << " ; " << show(w->second)
              << " (distance " << space.distance(w->first, w->second) << ")\n"
              << "images: " << show(f(w->first)) << " ; " << show(f(w->second))
              << " (distance " << space.distance(f(w->first), f(w->second)) << ")\n";
    return kExitFalse;
  }
  if (mode == "automorphism" && !is_linear(f)) {
    std::cout << mode << ": false\nreason: not linear\n";
    return kExitFalse;
  }
  std::cout << mode << ": true\n";
  return 0;
}

int cmd_decompose(std::string const &path, bool linear, bool validate)
{
  auto f = load_map(path);
  if (linear)
    write_linear(std::cout, decompose_linear(f));
  else
    write_structured(std::cout, decompose(f, validate));
  return 0;
}

int cmd_expand(std::string const &path)
{
  auto doc = parse_symmetry(slurp(path));
  write_map(std::cout, expand(as_structured(doc)));
  return 0;
}

int cmd_compose(std::string const &a, std::string const &b)
{
  auto lhs = as_structured(parse_symmetry(slurp(a)));
  auto rhs = as_structured(parse_symmetry(slurp(b)));
  write_structured(std::cout, compose(lhs, rhs));
  return 0;
}

int cmd_enumerate(unsigned q, std::string const &pi, std::string const &kind, bool json,
                  unsigned workers)
{
  Space space = make_space(q, pi);
  OracleOptions opts;
  opts.workers = workers;
  EnumerationReport report;
  BigInt formula;
  if (kind == "symm") {
    report = enumerate_symmetries(space, opts);
    formula = symm_order(space.partition(), q);
  } else if (kind == "aut") {
    report = enumerate_automorphisms(space, opts);
    formula = aut_order(space.partition(), q);
  } else {
    report = enumerate_M(space, opts);
    formula = m_order(space.partition(), q);
  }
  if (json)
    std::cout << report_json(report, formula) << '\n';
  else
    write_report(std::cout, report, formula);
  return BigInt(report.count) == formula ? 0 : kExitFalse;
}

int cmd_random(unsigned q, std::string const &pi, std::string const &kind, std::uint64_t seed,
               unsigned count)
{
  Space space = make_space(q, pi);
  for (unsigned j = 0; j < count; ++j) {
    if (j > 0)
      std::cout << "---\n";
    // Consecutive seeds keep each document reproducible on its own.
    if (kind == "aut")
      write_linear(std::cout, random_automorphism(space, seed + j));
    else
      write_structured(std::cout, random_symmetry(space, seed + j));
  }
  return 0;
}

int cmd_mindist(std::string const &path)
{
  std::istringstream in(slurp(path));
  std::cout << code_min_distance(read_generator(in)) << '\n';
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Symmetries of the pi-metric on F_q^n"};
  app.require_subcommand(1);

  unsigned q = 0, n = 0, workers = 0, count = 1;
  std::string pi, kind, mode = "symmetry", file, other;
  std::uint64_t seed = 0;
  bool json = false, linear = false, validate = false;

  auto *order = app.add_subcommand("order", "Exact order of Symm, Aut, or the Hamming groups");
  order->add_option("kind", kind, "symm | aut | hamming")
      ->required()
      ->check(CLI::IsMember({"symm", "aut", "hamming"}));
  order->add_option("--q", q, "Field order")->required();
  order->add_option("--pi", pi, "Partition, e.g. 2,1,1");
  order->add_option("--n", n, "Length (hamming only)");

  auto *verify = app.add_subcommand("verify", "Check whether a map file is a symmetry");
  verify->add_option("file", file, "Map file, '-' for stdin")->required();
  verify->add_option("--mode", mode, "symmetry | automorphism")
      ->check(CLI::IsMember({"symmetry", "automorphism"}));

  auto *decomp = app.add_subcommand("decompose", "Factor a symmetry as sigma o T");
  decomp->add_option("file", file, "Map file, '-' for stdin")->required();
  decomp->add_flag("--linear", linear, "Emit block matrices (automorphisms only)");
  decomp->add_flag("--validate", validate, "Check block separability on every vector");

  auto *expand_cmd = app.add_subcommand("expand", "Expand a structured or linear document");
  expand_cmd->add_option("file", file, "Document, '-' for stdin")->required();

  auto *compose_cmd = app.add_subcommand("compose", "Product a o b (b applied first)");
  compose_cmd->add_option("a", file, "Left factor")->required();
  compose_cmd->add_option("b", other, "Right factor")->required();

  auto *enumerate = app.add_subcommand("enumerate", "Brute-force group order vs formula");
  enumerate->add_option("--q", q, "Field order")->required();
  enumerate->add_option("--pi", pi, "Partition")->required();
  enumerate->add_option("--kind", kind, "symm | aut | M")
      ->required()
      ->check(CLI::IsMember({"symm", "aut", "M"}));
  enumerate->add_flag("--json", json, "Machine-readable report");
  enumerate->add_option("--workers", workers, "Worker threads (default: PIMETRIC_WORKERS or all cores)");

  auto *random = app.add_subcommand("random", "Uniform random symmetries or automorphisms");
  random->add_option("--q", q, "Field order")->required();
  random->add_option("--pi", pi, "Partition")->required();
  random->add_option("--kind", kind, "symm | aut")
      ->default_val("symm")
      ->check(CLI::IsMember({"symm", "aut"}));
  random->add_option("--seed", seed, "Seed")->default_val(0);
  random->add_option("--count", count, "Number of documents")->default_val(1);

  auto *mindist = app.add_subcommand("mindist", "Minimum pi-distance of a linear code");
  mindist->add_option("file", file, "Generator file, '-' for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*order)
      return cmd_order(kind, q, pi, n);
    if (*verify)
      return cmd_verify(file, mode);
    if (*decomp)
      return cmd_decompose(file, linear, validate);
    if (*expand_cmd)
      return cmd_expand(file);
    if (*compose_cmd)
      return cmd_compose(file, other);
    if (*enumerate)
      return cmd_enumerate(q, pi, kind, json, workers);
    if (*random)
      return cmd_random(q, pi, kind, seed, count);
    if (*mindist)
      return cmd_mindist(file);
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
