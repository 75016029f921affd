// facschur: compute factorial supersymmetric Schur polynomials, check the
// identities they satisfy, and expand polynomials in the factorial basis.
//
// Exit status: 0 success, 1 identity failure or non-supersymmetric input,
// 2 usage errors (bad flags, malformed input, parameter window too small).

#include "facschur/error.hpp"
#include "facschur/serialize.hpp"
#include "facschur/shifted.hpp"
#include "facschur/supersym.hpp"
#include "facschur/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace facschur;

namespace {

constexpr const char* kSeqEnv = "FACSCHUR_SEQ";

std::optional<ParamSequence> sequence_from(const std::string& flag) {
  if (!flag.empty()) return ParamSequence::parse(flag);
  if (const char* env = std::getenv(kSeqEnv); env && *env) return ParamSequence::parse(env);
  return std::nullopt;
}

void print_poly(const Poly& p, const std::string& format) {
  if (format == "json")
    std::cout << poly_to_json(p).dump() << "\n";
  else
    std::cout << to_text(p) << "\n";
}

struct ComputeArgs {
  std::string what = "s";
  std::string lambda;
  std::string mu;
  int k = -1;
  int m = 1;
  int n = 1;
  std::string seq;
  std::string format = "text";
};

int cmd_compute(const ComputeArgs& args) {
  const Partition lambda = parse_partition(args.lambda);
  const Partition mu = parse_partition(args.mu);
  const SkewShape shape(lambda, mu);
  const int k = args.k >= 0 ? args.k : shape.size();
  const std::string& what = args.what;

  if (what == "sstar" || what == "estar" || what == "hstar") {
    const ShiftedContext ctx{args.m, args.n};
    if (what == "sstar") print_poly(shifted_super_schur(shape, ctx), args.format);
    if (what == "estar") print_poly(e_star(k, ctx), args.format);
    if (what == "hstar") print_poly(h_star(k, ctx), args.format);
    return 0;
  }
  if (what == "classical") {
    print_poly(classical_super_schur(shape, args.m, args.n), args.format);
    return 0;
  }

  const auto [lo, hi] = conservative_window(std::max(k, lambda.weight()), args.m, args.n);
  const ParamSequence a = sequence_from(args.seq).value_or(ParamSequence::symbolic(lo, hi));
  const SuperContext ctx = SuperContext::symbolic(args.m, args.n, a);
  if (what == "s")
    print_poly(super_schur_tableau(shape, ctx), args.format);
  else if (what == "e")
    print_poly(e_super(k, ctx), args.format);
  else if (what == "h")
    print_poly(h_super(k, ctx), args.format);
  else
    throw ParseError("unknown function '" + what + "'");
  return 0;
}

struct VerifyArgs {
  VerifyOptions options;
  std::string seq;
  std::string format = "text";
};

int cmd_verify(VerifyArgs args) {
  args.options.seq = sequence_from(args.seq);
  VerifyReport report = run_verify(args.options);
  if (args.format == "json")
    std::cout << report_json(report).dump(2) << "\n";
  else
    std::cout << report_text(report);
  std::cerr << "wall time: " << report.wall_seconds << " s\n";
  return report.passed() ? 0 : 1;
}

struct ExpandArgs {
  std::string file;
  int m = 1;
  int n = 1;
  int k = -1;
  std::string seq;
  std::string format = "json";
};

int cmd_expand(const ExpandArgs& args) {
  std::ifstream in(args.file);
  if (!in) throw ParseError("cannot read " + args.file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Poly p = parse_poly_json(buffer.str());
  const ParamSequence a = sequence_from(args.seq).value_or(ParamSequence::arithmetic(0));
  const int k = args.k >= 0 ? args.k : std::max(p.total_degree(), 0);
  const BasisExpansion e = expand_in_basis(p, SuperContext::symbolic(args.m, args.n, a), k);
  if (args.format == "json") {
    std::cout << expansion_to_json(e).dump(2) << "\n";
  } else {
    for (const auto& [lambda, c] : e.coefficients) std::cout << to_string(lambda) << ": " << to_display_string(c) << "\n";
    std::cout << "reconstruction_exact: " << (e.reconstruction_exact ? "true" : "false") << "\n";
  }
  return e.reconstruction_exact ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorial supersymmetric Schur polynomials"};
  app.require_subcommand(1);
  const std::string seq_help = "parameter sequence: zero | arith:<off> | list:<lo>:<v,...> | sym:<lo>:<hi> "
                               "(default from $" + std::string(kSeqEnv) + ")";

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "print one polynomial");
  c->add_option("--what", compute.what, "s | e | h | sstar | estar | hstar | classical")
      ->check(CLI::IsMember({"s", "e", "h", "sstar", "estar", "hstar", "classical"}));
  c->add_option("--lambda", compute.lambda, "outer partition, e.g. 3,1");
  c->add_option("--mu", compute.mu, "inner partition (default empty)");
  c->add_option("--k", compute.k, "degree for e, h, estar, hstar (default |lambda/mu|)");
  c->add_option("--m", compute.m, "number of x (or u) variables")->check(CLI::NonNegativeNumber);
  c->add_option("--n", compute.n, "number of y (or v) variables")->check(CLI::NonNegativeNumber);
  c->add_option("--seq", compute.seq, seq_help);
  c->add_option("--format", compute.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check an identity over a grid of cases");
  v->add_option("--identity", verify.options.identity)->required()->check(CLI::IsMember(identity_names()));
  v->add_option("--max-weight", verify.options.max_weight)->check(CLI::NonNegativeNumber);
  v->add_option("--m", verify.options.m)->check(CLI::NonNegativeNumber);
  v->add_option("--n", verify.options.n)->check(CLI::NonNegativeNumber);
  v->add_option("--seq", verify.seq, seq_help);
  v->add_option("--trials", verify.options.trials)->check(CLI::NonNegativeNumber);
  v->add_option("--rng-seed", verify.options.seed);
  v->add_option("--N", verify.options.order, "generating series truncation order")->check(CLI::NonNegativeNumber);
  v->add_option("--jobs", verify.options.jobs, "worker threads")->check(CLI::PositiveNumber);
  v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));

  ExpandArgs expand;
  auto* e = app.add_subcommand("expand", "expand a supersymmetric polynomial in the factorial basis");
  e->add_option("poly_file", expand.file, "polynomial in JSON form")->required();
  e->add_option("--m", expand.m)->check(CLI::NonNegativeNumber);
  e->add_option("--n", expand.n)->check(CLI::NonNegativeNumber);
  e->add_option("--k", expand.k, "degree bound (default: degree of the input)");
  e->add_option("--seq", expand.seq, seq_help + "; must be numeric");
  e->add_option("--format", expand.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c) return cmd_compute(compute);
    if (*v) return cmd_verify(verify);
    return cmd_expand(expand);
  } catch (const NotSupersymmetric& err) {
    std::cerr << "not supersymmetric: " << err.what() << "\n";
    return 1;
  } catch (const WindowExceeded& err) {
    std::cerr << "error: " << err.what() << " (widen the sequence window)\n";
    return 2;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const PreconditionViolated& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const NotInHook& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
