#include "polylist/cli/commands.hpp"

#include "polylist/arith/laws.hpp"
#include "polylist/cli/instance.hpp"
#include "polylist/errors.hpp"
#include "polylist/lang/parse.hpp"
#include "polylist/listobj/laws.hpp"
#include "polylist/polyadj/slice.hpp"
#include "polylist/setmodel/enumerate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace polylist::cli {

using setmodel::Budget;
using setmodel::Elem;
using setmodel::ObjExpr;

int cmd_laws(const LawsOptions& opt, std::ostream& out, std::ostream& err) {
  Budget budget;
  budget.nat_max = opt.nat_max;
  budget.len_max = opt.len_max;
  budget.seed = opt.seed;
  out << "# seed " << opt.seed << " nat-max " << opt.nat_max << " len-max " << opt.len_max << " card-x "
      << opt.card_x << "\n";
  try {
    setmodel::LawReport report = arith::run_arith_laws(budget);
    setmodel::LawReport oracles = arith::check_arith_oracles(32);
    for (auto& l : oracles.laws) l.id += ".to-32";
    report.append(oracles);
    report.append(listobj::run_list_laws(budget, opt.card_x));
    Budget nb = budget;
    nb.seed = opt.seed + 1;
    report.add(polyadj::check_nth_naturality(setmodel::letters(opt.card_x), setmodel::letters(2), 100, nb));
    report.print(out);
    out << "# " << report.laws.size() << " laws, " << report.failures() << " failed\n";
    return report.all_pass() ? ok : check_failed;
  } catch (const BudgetError& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return budget_overflow;
  }
}

namespace {

std::string h_line(const InstanceFile& file, std::size_t a, const setmodel::Arrow& h) {
  const auto& inst = file.instance;
  return "h(" + file.a_names[a] + ") = " + setmodel::render(h(Elem::num(a)), ObjExpr::list_of(inst.X));
}

std::string first_failure(const setmodel::LawReport& r) {
  for (const auto& l : r.laws)
    if (!l.pass) return l.id + ": " + l.counterexample;
  return {};
}

}  // namespace

int cmd_adjoint_text(const std::string& text, std::ostream& out, std::ostream& err) {
  InstanceFile file;
  try {
    file = parse_instance(text);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  const auto& inst = file.instance;
  const Budget budget = inst.fit(Budget{});
  try {
    setmodel::Arrow h = polyadj::construct_h(inst, budget);
    for (std::size_t a = 0; a < file.a_names.size(); ++a) out << h_line(file, a, h) << "\n";
    const polyadj::VerifyReport existence = polyadj::verify_solution(inst, h, budget);
    if (existence.pass())
      out << "EXISTENCE PASS\n";
    else
      out << "EXISTENCE FAIL " << first_failure(existence.checks) << "\n";

    const polyadj::BruteForce brute = polyadj::brute_force_solutions(inst, budget);
    std::string problem;
    if (brute.solutions.size() != 1) {
      problem = "expected exactly one solution";
    } else if (!setmodel::arrows_equal(brute.solutions.front(), h, budget)) {
      problem = "the solution found by search differs from the constructed h";
    } else {
      const polyadj::VerifyReport theory = polyadj::uniqueness_by_theory(inst, h, brute.solutions.front(), budget);
      if (!theory.pass()) problem = first_failure(theory.checks);
    }
    const std::string count = std::to_string(brute.solutions.size()) +
                              (brute.solutions.size() == 1 ? " solution" : " solutions") + " of " +
                              std::to_string(brute.candidates) + " candidates";
    if (problem.empty())
      out << "UNIQUENESS PASS " << count << "\n";
    else
      out << "UNIQUENESS FAIL " << count << ": " << problem << "\n";
    return existence.pass() && problem.empty() ? ok : check_failed;
  } catch (const BudgetError& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return budget_overflow;
  } catch (const ModelError& e) {
    out << "EXISTENCE FAIL " << e.what() << "\n";
    return check_failed;
  }
}

int cmd_adjoint(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return usage;
  }
  std::ostringstream text;
  text << in.rdbuf();
  return cmd_adjoint_text(text.str(), out, err);
}

int cmd_poly(const PolyOptions& opt, std::ostream& out, std::ostream& err) {
  Budget budget;
  budget.nat_max = opt.max_len;
  budget.len_max = opt.max_len;
  out << "# card-x " << opt.card_x << " max-len " << opt.max_len << "\n";
  try {
    long double expected_total = 0, power = 1;
    for (std::uint64_t n = 0; n <= opt.max_len; ++n, power *= static_cast<long double>(opt.card_x))
      expected_total += power;
    if (expected_total > static_cast<long double>(budget.card_cap))
      throw BudgetError("polynomial extension exceeds card_cap", size_string(expected_total));

    const ObjExpr X = setmodel::letters(opt.card_x);
    const polyadj::PolyExtension ext =
        polyadj::poly_extension(polyadj::list_polynomial(), polyadj::over_terminal(X), budget);
    bool counts_ok = ext.fiber_counts.size() == opt.max_len + 1;
    std::uint64_t total = 0, expect = 1;
    for (std::size_t n = 0; n < ext.fiber_counts.size(); ++n, expect *= opt.card_x) {
      const bool match = ext.fiber_counts[n] == expect;
      counts_ok = counts_ok && match;
      total += ext.fiber_counts[n];
      out << "fiber " << n << ": " << ext.fiber_counts[n] << (match ? "" : " (expected " + std::to_string(expect) + ")")
          << "\n";
    }
    out << "total " << total << "\n";
    setmodel::LawResult bij = polyadj::check_list_bijection(ext, X, budget);
    if (!counts_ok && bij.pass) {
      bij.pass = false;
      bij.counterexample = "fiber counts differ from |X|^n";
    }
    setmodel::LawReport report;
    report.add(bij);
    report.print(out);
    return bij.pass ? ok : check_failed;
  } catch (const BudgetError& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return budget_overflow;
  }
}

namespace {

bool satisfies(const ObjExpr& obj, const Elem& e) {
  const ObjExpr* cur = &obj;
  while (cur->is(ObjExpr::Kind::sub)) {
    if (!(cur->lhs()(e) == cur->rhs()(e))) return false;
    cur = &cur->base();
  }
  return true;
}

}  // namespace

int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
  std::string where = "term";
  try {
    lang::Scope scope;
    for (const auto& [name, text] : opt.sets) {
      where = "--set " + name;
      if (scope.find_set(name)) throw SyntaxError("set " + name + " given twice", 1, 1);
      scope.sets.emplace_back(name, lang::parse_set(text));
    }
    const lang::Context closed(scope);
    std::map<std::string, lang::Term> values;
    for (const auto& [name, text] : opt.lets) {
      where = "--let " + name;
      if (values.count(name)) throw SyntaxError("variable " + name + " given twice", 1, 1);
      values.emplace(name, lang::parse_term(text));
    }

    lang::Context C(scope);
    if (!opt.context.empty()) {
      where = "--ctx";
      C = lang::parse_context(opt.context, scope);
    } else {
      for (const auto& [name, text] : opt.lets) {
        where = "--let " + name;
        C.bind(name, lang::typecheck(values.at(name), closed));
      }
    }

    std::vector<Elem> env;
    for (const auto& v : C.vars()) {
      where = "--let " + v.name;
      auto it = values.find(v.name);
      if (it == values.end()) throw TypeError("no value given for `" + v.name + "`");
      const setmodel::Arrow val = lang::interpret(it->second, closed, v.type);
      if (!(val.cod() == v.type))
        throw TypeError("`" + it->second.to_string() + "` has type " + val.cod().to_string() + ", `" + v.name +
                        "` needs " + v.type.to_string());
      env.push_back(val(Elem::star()));
    }
    for (const auto& [name, text] : opt.lets)
      if (!C.index_of(name)) throw TypeError("`" + name + "` is not a context variable");

    where = "term";
    const lang::Term t = lang::parse_term(opt.term);
    const setmodel::Arrow f = lang::interpret(t, C);
    const Elem point = env.empty() ? Elem::star() : env.size() == 1 ? env.front() : Elem::tup(env);
    if (!satisfies(f.dom(), point)) {
      where = "--let";
      throw ConstraintError("the given values violate a constraint of the context", setmodel::render(point, C.base()));
    }
    out << setmodel::render(f(point), f.cod()) << "\n";
    return ok;
  } catch (const BudgetError& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return budget_overflow;
  } catch (const ModelError& e) {
    err << "error: " << where << ": " << e.what() << "\n";
    return usage;
  }
}

namespace {

std::pair<std::string, std::string> split_assignment(const std::string& text, const char* flag) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw CLI::ValidationError(flag, "expected NAME=VALUE, got '" + text + "'");
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial representation of the list object: law checks and adjunction reports", "polylist"};
  app.require_subcommand(1);

  std::int64_t nat_max = 4, len_max = 3, card_x = 2, seed = 0, max_len = 3;
  auto* laws = app.add_subcommand("laws", "Run the arithmetic, list and naturality law suites");
  laws->add_option("--nat-max", nat_max, "Largest natural enumerated")->check(CLI::NonNegativeNumber);
  laws->add_option("--len-max", len_max, "Longest list enumerated")->check(CLI::NonNegativeNumber);
  laws->add_option("--card-x", card_x, "Size of the element set X")->check(CLI::NonNegativeNumber);
  laws->add_option("--seed", seed, "Seed for sampled arrows")->check(CLI::NonNegativeNumber);

  std::string path;
  auto* adjoint = app.add_subcommand("adjoint", "Construct and verify h for an instance file");
  adjoint->add_option("file", path, "Instance file")->required();

  std::int64_t poly_card = 2;
  auto* poly = app.add_subcommand("poly", "Compare the polynomial extension with bounded lists");
  poly->add_option("--card-x", poly_card, "Size of the element set X")->check(CLI::NonNegativeNumber);
  poly->add_option("--max-len", max_len, "Length bound")->check(CLI::NonNegativeNumber);

  EvalOptions ev;
  std::vector<std::string> sets, lets;
  auto* eval = app.add_subcommand("eval", "Evaluate a term of the internal language");
  eval->add_option("term", ev.term, "Term, e.g. \"nthDef(x, 1, [a,b,c])\"")->required();
  eval->add_option("--ctx", ev.context, "Context, e.g. \"x:X, n:N | monus(n, 3) = 0\"");
  eval->add_option("--set", sets, "Named finite set, e.g. X={a,b,c}")->take_all();
  eval->add_option("--let", lets, "Value of a context variable, e.g. x=a")->take_all();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
    for (const auto& s : sets) ev.sets.push_back(split_assignment(s, "--set"));
    for (const auto& l : lets) ev.lets.push_back(split_assignment(l, "--let"));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return usage;
  }

  auto u = [](std::int64_t v) { return static_cast<std::uint64_t>(v); };
  if (laws->parsed()) return cmd_laws({u(nat_max), u(len_max), u(card_x), u(seed)}, out, err);
  if (adjoint->parsed()) return cmd_adjoint(path, out, err);
  if (poly->parsed()) return cmd_poly({u(poly_card), u(max_len)}, out, err);
  return cmd_eval(ev, out, err);
}

}  // namespace polylist::cli
