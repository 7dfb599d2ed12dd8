#pragma once

#include "polylist/setmodel/category.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <initializer_list>
#include <string>
#include <vector>

namespace polylist::setmodel {

struct LawResult {
  std::string id;
  bool pass = true;
  std::string counterexample;  // empty on PASS
  std::size_t checked = 0;
};

struct LawReport {
  std::vector<LawResult> laws;

  bool all_pass() const;
  std::size_t failures() const;
  const LawResult* find(const std::string& id) const;
  void append(const LawReport& other);
  void add(LawResult r) { laws.push_back(std::move(r)); }
  /// One line per law: "<id> PASS" or "<id> FAIL <counterexample>".
  void print(std::ostream& os) const;
};

/// Checks f = g by arrows_equal and renders any counterexample against the
/// common domain.
LawResult check_law(std::string id, const Arrow& lhs, const Arrow& rhs, const Budget& budget);

/// Runs `pred` on every enumerated element of `dom`; a returned message marks
/// that element as the counterexample.
LawResult check_all(std::string id, const ObjExpr& dom, const Budget& budget,
                    const std::function<std::optional<std::string>(const Elem&)>& pred);

/// Folds several results into one law; the first failure wins.
LawResult merged(std::string id, std::initializer_list<LawResult> parts);

/// Accumulates several checks under one law id; the first failure wins.
class LawAccumulator {
 public:
  explicit LawAccumulator(std::string id) { result_.id = std::move(id); }
  void merge(const LawResult& r);
  /// Records a failure with a ready-made counterexample description.
  void fail(std::string counterexample);
  void count(std::size_t n = 1) { result_.checked += n; }
  bool ok() const { return result_.pass; }
  LawResult result() const { return result_; }

 private:
  LawResult result_;
};

}  // namespace polylist::setmodel
