#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace polylist::cli {

/// Exit codes shared by every command.
enum Exit : int { ok = 0, check_failed = 1, usage = 2, budget_overflow = 3 };

struct LawsOptions {
  std::uint64_t nat_max = 4;
  std::uint64_t len_max = 3;
  std::uint64_t card_x = 2;
  std::uint64_t seed = 0;
};

struct PolyOptions {
  std::uint64_t card_x = 2;
  std::uint64_t max_len = 3;
};

struct EvalOptions {
  std::string term;
  std::string context;  // empty: one variable per --let, typed by its value
  std::vector<std::pair<std::string, std::string>> sets;  // name, "{a, b}"
  std::vector<std::pair<std::string, std::string>> lets;  // variable, term
};

int cmd_laws(const LawsOptions& opt, std::ostream& out, std::ostream& err);
int cmd_adjoint(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_adjoint_text(const std::string& text, std::ostream& out, std::ostream& err);
int cmd_poly(const PolyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and dispatches; usage errors return 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polylist::cli
