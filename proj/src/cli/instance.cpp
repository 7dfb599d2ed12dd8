#include "polylist/cli/instance.hpp"

#include "polylist/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace polylist::cli {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto step = [&](std::size_t n) {
    i += n;
    col += n;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') step(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      step(1);
      continue;
    }
    const std::size_t c0 = col, start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      step(j - i);
      out.push_back({Tok::ident, std::string(src.substr(start, j - start)), line, c0});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      step(j - i);
      out.push_back({Tok::number, std::string(src.substr(start, j - start)), line, c0});
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      step(2);
      out.push_back({Tok::punct, "->", line, c0});
    } else if (std::string_view("{}(),=:").find(c) != std::string_view::npos) {
      step(1);
      out.push_back({Tok::punct, std::string(1, c), line, c0});
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", line, c0);
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : toks_(lex(text)) {}

  InstanceFile read() {
    while (cur().kind != Tok::end) statement();
    const Token& eof = cur();
    if (!x_) throw SyntaxError("missing declaration of X", eof.line, eof.col);
    if (!a_) throw SyntaxError("missing declaration of A", eof.line, eof.col);
    InstanceFile out;
    out.x_names = *x_;
    out.a_names = *a_;
    auto& inst = out.instance;
    inst.X = setmodel::ObjExpr::fin(*x_);
    inst.A = setmodel::ObjExpr::fin(*a_);
    for (std::size_t a = 0; a < a_->size(); ++a) {
      if (!lengths_[a]) {
        const Token& at = la_at_ ? *la_at_ : eof;
        throw SyntaxError("missing lA(" + (*a_)[a] + ")", at.line, at.col);
      }
      inst.lengths.push_back(*lengths_[a]);
      std::vector<std::uint64_t> row;
      for (std::uint64_t m = 0; m < *lengths_[a]; ++m) {
        auto it = g_.find({m, a});
        if (it == g_.end()) {
          const Token& at = g_at_ ? *g_at_ : eof;
          throw SyntaxError("missing g(" + std::to_string(m) + ", " + (*a_)[a] + ")", at.line, at.col);
        }
        row.push_back(it->second);
      }
      inst.g.push_back(std::move(row));
    }
    inst.validate();
    return out;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool peek(const char* p) const { return cur().kind == Tok::punct && cur().text == p; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw SyntaxError(at.kind == Tok::end ? msg + " at end of input" : msg, at.line, at.col);
  }

  void expect(const char* p) {
    if (!peek(p)) fail(std::string("expected '") + p + "'", cur());
    next();
  }

  const Token& ident(const char* what) {
    if (cur().kind != Tok::ident) fail(std::string("expected ") + what, cur());
    return next();
  }

  std::uint64_t number() {
    const Token& t = cur();
    if (t.kind != Tok::number) fail("expected a natural number", t);
    if (t.text.size() > 6) fail("number too large", t);
    next();
    return std::stoull(t.text);
  }

  // True when the current token opens a new statement (name followed by = or :).
  bool at_statement() const {
    if (cur().kind == Tok::end) return true;
    return cur().kind == Tok::ident && toks_[pos_ + 1].kind == Tok::punct &&
           (toks_[pos_ + 1].text == "=" || toks_[pos_ + 1].text == ":");
  }

  std::size_t lookup(const std::vector<std::string>& names, const Token& t, const char* set) const {
    auto it = std::find(names.begin(), names.end(), t.text);
    if (it == names.end()) fail("'" + t.text + "' is not an element of " + set, t);
    return static_cast<std::size_t>(it - names.begin());
  }

  void statement() {
    const Token& head = ident("a statement (X, A, lA or g)");
    if (head.text == "X" || head.text == "A") {
      auto& slot = head.text == "X" ? x_ : a_;
      if (slot) fail("duplicate declaration of " + head.text, head);
      expect("=");
      slot = set();
      if (head.text == "A") lengths_.assign(a_->size(), std::nullopt);
      return;
    }
    if (head.text == "lA") {
      if (!a_) fail("lA needs A declared first", head);
      if (la_at_) fail("duplicate lA statement", head);
      la_at_ = head;
      expect(":");
      entries([&] {
        const Token& a = ident("an element of A");
        const std::size_t ai = lookup(*a_, a, "A");
        expect("->");
        const std::uint64_t n = number();
        if (lengths_[ai]) fail("duplicate lA(" + a.text + ")", a);
        lengths_[ai] = n;
      });
      return;
    }
    if (head.text == "g") {
      if (!x_ || !la_at_) fail("g needs X and lA declared first", head);
      if (g_at_) fail("duplicate g statement", head);
      g_at_ = head;
      expect(":");
      entries([&] {
        const Token& open = cur();
        expect("(");
        const std::uint64_t m = number();
        expect(",");
        const Token& a = ident("an element of A");
        const std::size_t ai = lookup(*a_, a, "A");
        expect(")");
        expect("->");
        const Token& x = ident("an element of X");
        const std::size_t xi = lookup(*x_, x, "X");
        const std::string entry = "g(" + std::to_string(m) + ", " + a.text + ")";
        if (!lengths_[ai]) fail("lA(" + a.text + ") is not given", a);
        if (m >= *lengths_[ai])
          fail("entry " + entry + " outside m < lA(" + a.text + ") = " + std::to_string(*lengths_[ai]), open);
        if (!g_.emplace(std::pair{m, ai}, xi).second) fail("duplicate " + entry, open);
      });
      return;
    }
    fail("unknown statement '" + head.text + "'", head);
  }

  template <class F>
  void entries(F entry) {
    if (at_statement()) return;
    entry();
    while (peek(",")) {
      next();
      entry();
    }
    if (!at_statement()) fail("expected ',' or a new statement", cur());
  }

  std::vector<std::string> set() {
    expect("{");
    std::vector<std::string> names;
    if (!peek("}")) {
      while (true) {
        const Token& t = ident("an element name");
        if (std::find(names.begin(), names.end(), t.text) != names.end()) fail("duplicate element '" + t.text + "'", t);
        names.push_back(t.text);
        if (!peek(",")) break;
        next();
      }
    }
    expect("}");
    return names;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<std::vector<std::string>> x_, a_;
  std::vector<std::optional<std::uint64_t>> lengths_;
  std::map<std::pair<std::uint64_t, std::size_t>, std::size_t> g_;
  std::optional<Token> la_at_, g_at_;
};

}  // namespace

InstanceFile parse_instance(std::string_view text) { return Reader(text).read(); }

}  // namespace polylist::cli
