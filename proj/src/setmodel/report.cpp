#include "polylist/setmodel/report.hpp"

namespace polylist::setmodel {

bool LawReport::all_pass() const { return failures() == 0; }

std::size_t LawReport::failures() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.pass ? 0 : 1;
  return n;
}

const LawResult* LawReport::find(const std::string& id) const {
  for (const auto& l : laws)
    if (l.id == id) return &l;
  return nullptr;
}

void LawReport::append(const LawReport& other) {
  laws.insert(laws.end(), other.laws.begin(), other.laws.end());
}

void LawReport::print(std::ostream& os) const {
  for (const auto& l : laws) {
    os << l.id << (l.pass ? " PASS" : " FAIL");
    if (!l.pass) os << ' ' << l.counterexample;
    os << '\n';
  }
}

LawResult check_law(std::string id, const Arrow& lhs, const Arrow& rhs, const Budget& budget) {
  LawResult r;
  r.id = std::move(id);
  auto eq = arrows_equal(lhs, rhs, budget);
  r.checked = eq.checked;
  if (!eq.equal) {
    const Elem& w = *eq.counterexample;
    r.pass = false;
    r.counterexample = render(w, lhs.dom()) + ": " + render(lhs(w), lhs.cod()) +
                       " != " + render(rhs(w), rhs.cod());
  }
  return r;
}

LawResult check_all(std::string id, const ObjExpr& dom, const Budget& budget,
                    const std::function<std::optional<std::string>(const Elem&)>& pred) {
  LawAccumulator acc(std::move(id));
  for (const auto& e : enumerate(dom, budget).elems) {
    acc.count();
    if (auto bad = pred(e)) {
      acc.fail(render(e, dom) + ": " + *bad);
      break;
    }
  }
  return acc.result();
}

LawResult merged(std::string id, std::initializer_list<LawResult> parts) {
  LawAccumulator acc(std::move(id));
  for (const auto& r : parts) acc.merge(r);
  return acc.result();
}

void LawAccumulator::merge(const LawResult& r) {
  result_.checked += r.checked;
  if (result_.pass && !r.pass) {
    result_.pass = false;
    result_.counterexample = r.counterexample;
  }
}

void LawAccumulator::fail(std::string counterexample) {
  if (!result_.pass) return;
  result_.pass = false;
  result_.counterexample = std::move(counterexample);
}

}  // namespace polylist::setmodel
