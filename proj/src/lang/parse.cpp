#include "polylist/lang/parse.hpp"

#include "polylist/errors.hpp"

#include <algorithm>
#include <cctype>

namespace polylist::lang {

namespace {

constexpr std::uint64_t kMaxNumeral = 10000;
const Scope kNoScope{};

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
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l0 = line, c0 = col, start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      advance(j - i);
      out.push_back({Tok::ident, std::string(src.substr(start, j - start)), l0, c0});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      advance(j - i);
      out.push_back({Tok::number, std::string(src.substr(start, j - start)), l0, c0});
    } else if (c == ':' && i + 1 < src.size() && src[i + 1] == ':') {
      advance(2);
      out.push_back({Tok::punct, "::", l0, c0});
    } else if (c == '<' && i + 1 < src.size() && src[i + 1] == '=') {
      advance(2);
      out.push_back({Tok::punct, "<=", l0, c0});
    } else if (std::string_view("()[],:*=|{}<").find(c) != std::string_view::npos) {
      advance(1);
      out.push_back({Tok::punct, std::string(1, c), l0, c0});
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", l0, c0);
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const Scope& scope) : toks_(lex(src)), scope_(scope) {}

  Term term() {
    Term head = primary();
    if (peek("::")) {
      next();
      Term rest = term();
      return Term::app("cons", {std::move(head), std::move(rest)});
    }
    return head;
  }

  ObjExpr type() {
    std::vector<ObjExpr> factors{type_atom()};
    while (peek("*")) {
      next();
      factors.push_back(type_atom());
    }
    return factors.size() == 1 ? factors.front() : ObjExpr::prod(std::move(factors));
  }

  Context context() {
    Context C(scope_);
    if (at_end()) return C;
    if (!peek("|")) {
      do {
        const Token& name = expect_ident("a variable name");
        expect(":");
        const std::size_t l = name.line, c = name.col;
        ObjExpr t = type();
        try {
          C.bind(name.text, std::move(t));
        } catch (const TypeError& e) {
          throw SyntaxError(e.what(), l, c);
        }
      } while (accept(","));
    }
    if (accept("|")) {
      do {
        const Token& at = cur();
        Term lhs = term();
        Term rhs = Term::var("");
        if (accept("<")) {
          // m < n  is  s(m) - n = 0
          lhs = Term::app("monus", {Term::app("s", {std::move(lhs)}), term()});
          rhs = Term::app("0", {});
        } else if (accept("<=")) {
          lhs = Term::app("monus", {std::move(lhs), term()});
          rhs = Term::app("0", {});
        } else {
          expect("=");
          rhs = term();
        }
        try {
          C.constrain(std::move(lhs), std::move(rhs));
        } catch (const TypeError& e) {
          throw SyntaxError(e.what(), at.line, at.col);
        }
      } while (accept(","));
    }
    return C;
  }

  ObjExpr set() {
    expect("{");
    std::vector<std::string> names;
    if (!peek("}")) {
      do {
        const Token& t = expect_ident("an element name");
        if (std::find(names.begin(), names.end(), t.text) != names.end())
          throw SyntaxError("duplicate element '" + t.text + "'", t.line, t.col);
        names.push_back(t.text);
      } while (accept(","));
    }
    expect("}");
    return ObjExpr::fin(std::move(names));
  }

  void finish() {
    if (!at_end()) fail("unexpected '" + cur().text + "'");
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at_end() const { return cur().kind == Tok::end; }
  bool peek(const char* p) const { return cur().kind == Tok::punct && cur().text == p; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = cur();
    throw SyntaxError(t.kind == Tok::end ? msg + " at end of input" : msg, t.line, t.col);
  }

  bool accept(const char* p) {
    if (!peek(p)) return false;
    next();
    return true;
  }

  void expect(const char* p) {
    if (!accept(p)) fail(std::string("expected '") + p + "'" + (at_end() ? "" : ", got '" + cur().text + "'"));
  }

  const Token& expect_ident(const char* what) {
    if (cur().kind != Tok::ident) fail(std::string("expected ") + what);
    return next();
  }

  std::vector<Term> term_list(const char* close) {
    std::vector<Term> items;
    if (accept(close)) return items;
    do items.push_back(term());
    while (accept(","));
    expect(close);
    return items;
  }

  Term primary() {
    const Token& t = cur();
    if (t.kind == Tok::number) {
      next();
      if (t.text.size() > 5 || std::stoull(t.text) > kMaxNumeral)
        throw SyntaxError("numeral " + t.text + " exceeds " + std::to_string(kMaxNumeral), t.line, t.col);
      Term n = Term::app("0", {});
      for (std::uint64_t k = std::stoull(t.text); k > 0; --k) n = Term::app("s", {std::move(n)});
      return n;
    }
    if (t.kind == Tok::ident) {
      next();
      if (accept("(")) return Term::app(t.text, term_list(")"));
      return Term::var(t.text);
    }
    if (accept("(")) {
      std::vector<Term> items = term_list(")");
      if (items.size() == 1) return items.front();
      return Term::tuple(std::move(items));
    }
    if (accept("[")) {
      std::vector<Term> items = term_list("]");
      Term l = Term::app("nil", {});
      for (auto it = items.rbegin(); it != items.rend(); ++it) l = Term::app("cons", {*it, std::move(l)});
      return l;
    }
    fail(t.kind == Tok::end ? "expected a term" : "expected a term, got '" + t.text + "'");
  }

  ObjExpr type_atom() {
    const Token& t = cur();
    if (t.kind == Tok::number && t.text == "1") {
      next();
      return ObjExpr::unit();
    }
    if (accept("(")) {
      ObjExpr inner = type();
      expect(")");
      return inner;
    }
    if (t.kind == Tok::ident) {
      next();
      if (t.text == "N") return ObjExpr::nat();
      if (t.text == "L" && peek("(")) {
        next();
        ObjExpr elem = type();
        expect(")");
        return ObjExpr::list_of(std::move(elem));
      }
      if (const ObjExpr* s = scope_.find_set(t.text)) return *s;
      throw SyntaxError("unknown type '" + t.text + "'", t.line, t.col);
    }
    fail("expected a type");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Scope& scope_;
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text, kNoScope);
  Term t = p.term();
  p.finish();
  return t;
}

Context parse_context(std::string_view text, const Scope& scope) {
  Parser p(text, scope);
  Context C = p.context();
  p.finish();
  return C;
}

ObjExpr parse_type(std::string_view text, const Scope& scope) {
  Parser p(text, scope);
  ObjExpr t = p.type();
  p.finish();
  return t;
}

ObjExpr parse_set(std::string_view text) {
  Parser p(text, kNoScope);
  ObjExpr s = p.set();
  p.finish();
  return s;
}

}  // namespace polylist::lang
