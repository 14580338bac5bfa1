// arithmos: command-line front end for the codecs, relations, proof checker
// and diagonal constructions. Exit status: 0 success or accept, 1 reject or
// not found, 2 usage or input error.

#include <atomic>
#include <csignal>
#include <filesystem>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "arithmos/numbering.hpp"
#include "arithmos/diagonal.hpp"
#include "arithmos/relations/registry.hpp"

using namespace arithmos;

namespace {

enum class NumberStyle { Auto, Factored, Decimal };
NumberStyle style = NumberStyle::Auto;

std::string show(const GodelNumber& g) {
  switch (style) {
    case NumberStyle::Factored: return format_factored(g);
    case NumberStyle::Decimal: return format_decimal(g);
    default: return format_auto(g);
  }
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A number in decimal or factored form, or (when allowed) a surface formula.
GodelNumber read_code(const std::string& arg, bool surface = true) {
  std::string text = arg == "-" ? read_all(std::cin) : arg;
  try {
    return parse_godel(text);
  } catch (const SyntaxError&) {
    if (!surface) throw;
  }
  return encode_formula(parse_surface(text));
}

std::atomic<bool> interrupted{false};
extern "C" void on_sigint(int) { interrupted = true; }

// Runs f with a stop token that fires on SIGINT.
template <class F>
auto interruptible(F&& f) {
  std::stop_source src;
  interrupted = false;
  auto old = std::signal(SIGINT, on_sigint);
  std::jthread watch([&](std::stop_token done) {
    while (!done.stop_requested()) {
      if (interrupted) {
        src.request_stop();
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
  });
  auto r = f(src.get_token());
  watch.request_stop();
  std::signal(SIGINT, old);
  return r;
}

proof::SearchBudget make_budget(const std::optional<std::uint64_t>& count, const std::string& max_code,
                                const std::optional<std::uint64_t>& ms) {
  proof::SearchBudget b;
  b.max_candidates = count;
  if (!max_code.empty()) b.max_candidate_code = read_code(max_code, false);
  if (ms) b.wall_clock = std::chrono::milliseconds(*ms);
  if (!b.max_candidates && !b.max_candidate_code && !b.wall_clock)
    throw CLI::ValidationError("search", "give --budget, --max-code or --time");
  return b;
}

void print_search(const proof::SearchResult& r) {
  if (r.found()) {
    std::cout << "found: " << show(*r.witness) << "\n";
    std::cout << "lines: " << r.proof.size() << "\n";
    for (std::size_t i = 0; i < r.proof.size(); ++i) std::cout << i + 1 << ": " << print_surface(r.proof[i]) << "\n";
  } else {
    std::cout << "exhausted: " << r.stop_name() << "\n";
  }
  std::cout << "examined: " << r.examined << " of " << r.total << "\n";
  if (r.frontier) std::cout << "frontier: " << show(*r.frontier) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goedel numbering, arithmetized syntax, proof arrays and diagonalization"};
  app.require_subcommand(1);
  app.fallthrough();
  bool factored = false, decimal = false;
  app.add_flag("--factored", factored, "print numbers as prime factorizations");
  app.add_flag("--decimal", decimal, "print numbers in decimal");

  std::string arg1, arg2, arg3, axioms_file, alphabet, max_code;
  std::vector<std::string> rel_args;
  std::optional<std::uint64_t> budget, time_ms;
  std::uint64_t count = 10, from = 0, K = 0;
  std::size_t max_lines = 3, pool_limit = 12;
  bool literal = false, list = false, show_formula = false, print_code = false, rosser = false;

  auto* encode = app.add_subcommand("encode", "code of a surface formula ('-' reads stdin)");
  encode->add_option("formula", arg1)->required();
  auto* decode = app.add_subcommand("decode", "formula, proof array or sequence behind a code");
  decode->add_option("number", arg1)->required();
  auto* wff = app.add_subcommand("wff", "is the number the code of a formula?");
  wff->add_option("number", arg1)->required();
  auto* sub = app.add_subcommand("sub", "Sub(code, var, sign)");
  sub->add_option("code", arg1)->required();
  sub->add_option("var", arg2)->required();
  sub->add_option("sign", arg3)->required();
  auto* diag_cmd = app.add_subcommand("diag", "the class expression applied to the numeral of its own code");
  diag_cmd->add_option("code", arg1)->required();
  auto* check = app.add_subcommand("check-proof", "verify a proof script file or a proof-array code");
  check->add_option("proof", arg1)->required();
  check->add_option("--axioms", axioms_file, "extra axioms file");
  check->add_flag("--code", print_code, "also print the code of the array");
  auto* enumerate = app.add_subcommand("enumerate", "E(m) for consecutive m");
  enumerate->add_option("--count", count, "how many values")->capture_default_str();
  enumerate->add_option("--from", from, "first m")->capture_default_str();
  enumerate->add_option("--alphabet", alphabet, "comma-separated symbol codes");
  enumerate->add_flag("--show", show_formula, "print the formula after each value");
  auto* relation = app.add_subcommand("relation", "evaluate a relation by number or name");
  relation->add_option("relation", arg1);
  relation->add_option("args", rel_args);
  relation->add_flag("--literal", literal, "run the printed bounded definition");
  relation->add_flag("--list", list, "print the relation table");
  relation->add_option("--axioms", axioms_file, "extra axioms file");
  auto* search = app.add_subcommand("search-prov", "bounded search for a proof of a formula");
  search->add_option("code", arg1)->required();
  search->add_option("--budget", budget, "candidate count ceiling");
  search->add_option("--max-code", max_code, "candidate code ceiling");
  search->add_option("--time", time_ms, "wall-clock ceiling in milliseconds");
  search->add_option("--max-lines", max_lines)->capture_default_str();
  search->add_option("--pool", pool_limit)->capture_default_str();
  search->add_option("--axioms", axioms_file, "extra axioms file");
  search->add_flag("--rosser", rosser, "accept only Rosser proofs");
  auto* omega = app.add_subcommand("omega-scan", "look for an omega-inconsistency witness");
  omega->add_option("code", arg1)->required();
  omega->add_option("--var", arg2)->required();
  omega->add_option("-K", K)->required();
  omega->add_option("--budget", budget, "candidate count ceiling per search");
  omega->add_option("--max-code", max_code, "candidate code ceiling");
  omega->add_option("--time", time_ms, "wall-clock ceiling per search in milliseconds");
  omega->add_option("--axioms", axioms_file, "extra axioms file");
  auto* constants = app.add_subcommand("constants", "the axiom constants z1, z2, z3, z4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (factored && decimal) {
    std::cerr << "error: --factored and --decimal exclude each other\n";
    return 2;
  }
  style = factored ? NumberStyle::Factored : decimal ? NumberStyle::Decimal : NumberStyle::Auto;

  try {
    auto axioms = [&] { return axioms_file.empty() ? proof::AxiomSet::standard() : proof::read_axiom_file(axioms_file); };

    if (*encode) {
      std::string text = arg1 == "-" ? read_all(std::cin) : arg1;
      std::cout << show(encode_formula(parse_surface(text))) << "\n";
      return 0;
    }
    if (*decode) {
      GodelNumber g = read_code(arg1, false);
      if (auto f = try_decode_formula(g)) {
        std::cout << print_surface(*f) << "\n";
        return 0;
      }
      auto terms = decode_seq(g);
      std::vector<Formula> lines;
      for (const auto& t : terms)
        if (auto f = try_decode_formula(t)) lines.push_back(*f);
      if (!terms.empty() && lines.size() == terms.size()) {
        for (std::size_t i = 0; i < lines.size(); ++i) std::cout << i + 1 << ": " << print_surface(lines[i]) << "\n";
        return 0;
      }
      std::cout << "sequence:";
      for (const auto& t : terms) std::cout << " " << show(t);
      std::cout << "\n";
      return 0;
    }
    if (*wff) {
      GodelNumber g = read_code(arg1, false);
      if (auto f = try_decode_formula(g)) {
        std::cout << "formula: " << print_surface(*f) << "\n";
        return 0;
      }
      std::cout << "not a formula\n";
      return 1;
    }
    if (*sub) {
      GodelNumber x = read_code(arg1);
      Variable v = parse_variable(arg2);
      GodelNumber y = encode_sign(parse_sign(arg3));
      std::cout << show(rel::sub(x, GodelNumber(v.code()), y)) << "\n";
      return 0;
    }
    if (*diag_cmd) {
      GodelNumber d = tmr_diag(read_code(arg1));
      std::cout << show(d) << "\n";
      return d.is_zero() ? 1 : 0;
    }
    if (*check) {
      proof::AxiomSet ax = axioms();
      proof::Verdict v;
      GodelNumber code;
      if (std::filesystem::is_regular_file(arg1)) {
        auto c = proof::compile_script(proof::read_script_file(arg1), ax);
        v = c.verdict;
        code = c.code;
      } else {
        code = read_code(arg1, false);
        v = proof::check_proof_array(code, ax);
      }
      std::cout << v.trace();
      if (print_code) std::cout << "code: " << show(code) << "\n";
      return v.accepted ? 0 : 1;
    }
    if (*enumerate) {
      numbering::WffEnumerator en(alphabet.empty() ? numbering::Alphabet::reduced() : numbering::Alphabet::parse(alphabet));
      for (std::uint64_t m = from; m < from + count; ++m) {
        auto digits = en.unrank(Natural(m));
        std::cout << numbering::f_n(digits, en.alphabet().size());
        if (show_formula) std::cout << "\t" << print_surface(parse_symbols(en.alphabet().symbols(digits)));
        std::cout << "\n";
      }
      return 0;
    }
    if (*relation) {
      if (list) {
        for (const auto& r : rel::registry()) {
          std::cout << r.number << "\t" << r.name << "\t";
          for (std::size_t i = 0; i < r.params.size(); ++i) std::cout << (i ? "," : "") << r.params[i];
          std::cout << "\t" << (r.result == rel::ResultKind::Boolean ? "boolean" : "number")
                    << (r.fast ? "" : "\tsearch-only") << "\n";
        }
        return 0;
      }
      if (arg1.empty()) throw CLI::ValidationError("relation", "give a relation number or --list");
      rel::Args args;
      for (const auto& a : rel_args) args.push_back(read_code(a, false));
      proof::AxiomSet ax = axioms();
      rel::WorkCounter w;
      rel::EvalContext ctx{&w, &ax};
      rel::Value v = rel::eval(arg1, args, literal ? rel::EvalMode::Literal : rel::EvalMode::Fast, ctx);
      if (v.kind == rel::ResultKind::Boolean) {
        std::cout << (v.truth() ? "true" : "false") << "\n";
        return v.truth() ? 0 : 1;
      }
      std::cout << show(v.number) << "\n";
      return 0;
    }
    if (*search) {
      GodelNumber x = read_code(arg1);
      auto b = make_budget(budget, max_code, time_ms);
      proof::AxiomSet ax = axioms();
      proof::SearchOptions opt{max_lines, pool_limit, {}};
      auto r = interruptible([&](std::stop_token st) {
        return rosser ? proof::rosser_prov_search(x, b, ax, opt, st) : proof::prov_search(x, b, ax, opt, st);
      });
      print_search(r);
      return r.found() ? 0 : 1;
    }
    if (*omega) {
      auto e = ClassExpression::from_code(read_code(arg1));
      Variable v = parse_variable(arg2);
      if (!(v == e.free_var))
        throw NotAClassExpression("the free variable of the expression is " + e.free_var.name() + ", not " + v.name());
      auto b = make_budget(budget, max_code, time_ms);
      proof::AxiomSet ax = axioms();
      auto r = interruptible([&](std::stop_token st) { return omega_scan(e, K, b, ax, {}, st); });
      std::cout << r.text();
      return r.omega_witness() ? 0 : 1;
    }
    if (*constants) {
      const auto& c = proof::constants();
      const Formula* fs[] = {&c.i1, &c.i2, &c.i3, &c.v1};
      const GodelNumber* zs[] = {&c.z1, &c.z2, &c.z3, &c.z4};
      for (int i = 0; i < 4; ++i) {
        std::cout << "z" << i + 1 << ": " << (style == NumberStyle::Decimal ? format_decimal(*zs[i]) : format_factored(*zs[i]))
                  << "\n";
        std::cout << "z" << i + 1 << "_formula: " << print_surface(*fs[i]) << "\n";
      }
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
