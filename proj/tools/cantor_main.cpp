// Command-line front end: parse point literals, apply named
// homeomorphisms, query zoo membership, run verification suites and
// modulus probes.
//
// Exit codes: 0 success / suite pass / member, 1 semantic negative
// (non-member, suite failure), 2 usage, parse, shape or witness error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cantor/filters.hpp"
#include "cantor/homeo.hpp"
#include "cantor/verify.hpp"

namespace {

using namespace cantor;

std::vector<ev_periodic_set> parse_tuple(const std::string& text) {
  std::vector<ev_periodic_set> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw std::invalid_argument("empty coordinate in tuple literal");
    out.push_back(ev_periodic_set::parse(item.substr(a, b - a + 1)));
    start = end + 1;
  }
  return out;
}

std::variant<filter_spec, semifilter_spec> resolve_zoo(const std::string& name) {
  if (name == "frechet") return frechet();
  if (name == "dyadic") return dyadic_chain();
  if (name == "semifilter-T") return semifilter_t();
  if (name.rfind("principal:", 0) == 0)
    return principal_filter(ev_periodic_set::parse(name.substr(10)));
  throw std::invalid_argument("unknown zoo name: " + name);
}

filter_spec resolve_filter(const std::string& name) {
  auto entry = resolve_zoo(name);
  if (auto* f = std::get_if<filter_spec>(&entry)) return *f;
  throw std::invalid_argument(name + " is a semifilter, not a filter");
}

struct homeo_args {
  std::string omega;
  std::string omega_star;
  std::string filter;
  std::uint32_t m = 3;
  std::uint32_t n = 2;
};

ground_set require_ground(const std::string& literal, const char* flag) {
  if (literal.empty())
    throw std::invalid_argument(std::string("missing required ") + flag);
  return ground_set(ev_periodic_set::parse(literal));
}

homeo resolve_homeo(const std::string& name, const homeo_args& args) {
  if (name == "restriction")
    return restriction_homeo(require_ground(args.omega, "--omega"),
                             require_ground(args.omega_star, "--omega-star"));
  if (name == "product") return product_homeo(require_ground(args.omega, "--omega"));
  if (name == "main") return main_pair_homeo(require_ground(args.omega, "--omega"));
  if (name == "code") return code_homeo();
  if (name == "disjoint-encode")
    return disjoint_encode_homeo(require_ground(args.omega, "--omega"));
  if (name == "square") {
    if (args.filter.empty()) throw std::invalid_argument("square needs --filter");
    return square_homeo(resolve_filter(args.filter));
  }
  if (name == "power") {
    if (args.filter.empty()) throw std::invalid_argument("power needs --filter");
    return power_homeo(resolve_filter(args.filter), args.m, args.n);
  }
  throw std::invalid_argument("unknown homeomorphism: " + name);
}

int run_apply(const std::string& name, const homeo_args& args,
              const std::string& input, bool inverse) {
  const homeo h = resolve_homeo(name, args);
  const auto in = parse_tuple(input);
  const auto out = inverse ? h.backward(in) : h.forward(in);
  for (const auto& coord : out) std::cout << coord.to_string() << "\n";
  return 0;
}

int run_mem(const std::string& name, const std::string& literal) {
  const auto x = ev_periodic_set::parse(literal);
  const auto entry = resolve_zoo(name);
  const bool in = std::holds_alternative<filter_spec>(entry)
                      ? mem_filter(std::get<filter_spec>(entry), x)
                      : std::get<semifilter_spec>(entry).decide(x);
  std::cout << (in ? "in" : "out") << "\n";
  return in ? 0 : 1;
}

int run_verify(const std::string& suite, const std::string& homeo_name,
               const homeo_args& args, std::uint64_t trials, std::uint64_t seed,
               std::uint64_t depth, const std::string& out_path, bool serial) {
  const run_mode mode = serial ? run_mode::serial : run_mode::parallel;
  verify_report rep;
  if (suite == "roundtrip") {
    rep = roundtrip_suite(resolve_homeo(homeo_name, args), trials, seed, mode);
  } else if (suite == "agreement") {
    rep = agreement_suite(resolve_homeo(homeo_name, args), trials, depth, seed, mode);
  } else if (suite == "preservation") {
    if (args.filter.empty()) throw std::invalid_argument("preservation needs --filter");
    rep = preservation_suite(resolve_filter(args.filter), trials, seed, mode);
  } else if (suite == "axioms") {
    if (args.filter.empty()) throw std::invalid_argument("axioms needs --filter");
    rep = filter_axiom_suite(resolve_filter(args.filter), trials, seed, mode);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open " + out_path);
    rep.write(out);
  } else {
    rep.write(std::cout);
  }
  std::cerr << rep.suite << ": " << (rep.trials - rep.failures()) << "/" << rep.trials
            << " passed\n";
  return rep.all_pass() ? 0 : 1;
}

int run_modulus(const std::string& homeo_name, const homeo_args& args,
                std::uint64_t k_max, std::uint64_t seed) {
  const auto table = modulus_probe(resolve_homeo(homeo_name, args), k_max, seed);
  table.write(std::cout);
  return 0;
}

int run_zoo_list() {
  std::cout << "frechet\tfilter\tprincipal generator=|1\n";
  std::cout << "principal:<literal>\tfilter\tprincipal\n";
  std::cout << "dyadic\tfilter\tnon-principal omega=|10 omega*=|1000\n";
  std::cout << "semifilter-T\tsemifilter\tpartition |10 / |01\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus of eventually periodic sets, filters on the naturals, "
               "and stream homeomorphisms between filter spaces"};
  app.require_subcommand(1);

  homeo_args hargs;
  std::string homeo_name, input, zoo_name, literal, suite, out_path;
  std::uint64_t trials = 500, seed = 7, depth = 512, k_max = 64;
  bool inverse = false, serial = false;

  auto add_homeo_flags = [&hargs](CLI::App* cmd) {
    cmd->add_option("--omega", hargs.omega, "carrier literal for the construction");
    cmd->add_option("--omega-star", hargs.omega_star, "inner carrier literal");
    cmd->add_option("--filter", hargs.filter, "zoo filter name");
    cmd->add_option("--m", hargs.m, "power source arity");
    cmd->add_option("--n", hargs.n, "power target arity");
  };

  auto* apply = app.add_subcommand("apply", "apply a named homeomorphism to a tuple");
  apply->add_option("name", homeo_name,
                    "restriction|product|main|code|disjoint-encode|square|power")
      ->required();
  apply->add_option("--input", input, "tuple literal, coordinates separated by ';'")
      ->required();
  apply->add_flag("--inverse", inverse, "apply the backward direction");
  add_homeo_flags(apply);

  auto* mem = app.add_subcommand("mem", "decide zoo membership of a point");
  mem->add_option("filter", zoo_name, "frechet|principal:<literal>|dyadic|semifilter-T")
      ->required();
  mem->add_option("literal", literal, "point literal PREFIX|BLOCK")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "roundtrip|preservation|agreement|axioms")
      ->required();
  verify->add_option("--homeo", homeo_name, "named homeomorphism for the suite");
  verify->add_option("--trials", trials, "number of trials");
  verify->add_option("--seed", seed, "generator seed");
  verify->add_option("--depth", depth, "agreement depth in positions");
  verify->add_option("--out", out_path, "write the report to a file");
  verify->add_flag("--serial", serial, "run trials on one thread");
  add_homeo_flags(verify);

  auto* modulus = app.add_subcommand("modulus", "probe the continuity modulus");
  modulus->add_option("name", homeo_name, "named homeomorphism")->required();
  modulus->add_option("--k", k_max, "number of output positions");
  modulus->add_option("--seed", seed, "input seed");
  add_homeo_flags(modulus);

  auto* zoo = app.add_subcommand("zoo", "zoo utilities");
  auto* zoo_list = zoo->add_subcommand("list", "list the zoo");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(apply)) return run_apply(homeo_name, hargs, input, inverse);
    if (app.got_subcommand(mem)) return run_mem(zoo_name, literal);
    if (app.got_subcommand(verify))
      return run_verify(suite, homeo_name, hargs, trials, seed, depth, out_path, serial);
    if (app.got_subcommand(modulus)) return run_modulus(homeo_name, hargs, k_max, seed);
    if (app.got_subcommand(zoo)) {
      if (zoo->got_subcommand(zoo_list)) return run_zoo_list();
      throw std::invalid_argument("zoo: expected a subcommand");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
