#include <cctype>
#include <charconv>
#include <vector>

#include "pcf/frontend.hpp"

namespace pcf::frontend {

SurfacePtr var(std::string name) { return std::make_shared<const SurfaceTerm>(SurfaceTerm{Var{std::move(name)}}); }

SurfacePtr lam(std::string name, PcfType annot, SurfacePtr body) {
  return std::make_shared<const SurfaceTerm>(SurfaceTerm{Lam{std::move(name), std::move(annot), std::move(body)}});
}

SurfacePtr app(SurfacePtr fun, SurfacePtr arg) {
  return std::make_shared<const SurfaceTerm>(SurfaceTerm{App{std::move(fun), std::move(arg)}});
}

SurfacePtr constant(Keyword keyword) { return std::make_shared<const SurfaceTerm>(SurfaceTerm{Constant{keyword}}); }

SurfacePtr num_lit(Natural value) { return std::make_shared<const SurfaceTerm>(SurfaceTerm{NumLit{value}}); }

bool operator==(const SurfaceTerm& a, const SurfaceTerm& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Var>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Lam>) {
          return x.name == y.name && x.annot == y.annot && *x.body == *y.body;
        } else if constexpr (std::is_same_v<T, App>) {
          return *x.fun == *y.fun && *x.arg == *y.arg;
        } else if constexpr (std::is_same_v<T, Constant>) {
          return x.keyword == y.keyword;
        } else {
          return x.value == y.value;
        }
      },
      a.node);
}

namespace {

enum class Tok { LParen, RParen, Lambda, Colon, Dot, Arrow, Number, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  };
  while (true) {
    while (pos < src.size()) {
      const char c = src[pos];
      if (c == '\n') {
        ++line;
        line_start = ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '-') {
        while (pos < src.size() && src[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
    const std::size_t column = pos - line_start + 1;
    if (pos == src.size()) {
      tokens.push_back({Tok::End, "", line, column});
      return tokens;
    }
    const char c = src[pos];
    auto single = [&](Tok kind) {
      tokens.push_back({kind, std::string(1, c), line, column});
      ++pos;
    };
    switch (c) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case '\\': single(Tok::Lambda); continue;
      case ':': single(Tok::Colon); continue;
      case '.': single(Tok::Dot); continue;
      default: break;
    }
    if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
      tokens.push_back({Tok::Arrow, "->", line, column});
      pos += 2;
      continue;
    }
    if (c == '#') {
      std::size_t end = pos + 1;
      while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) ++end;
      if (end == pos + 1) throw ParseError(line, column, "expected digits after '#'");
      tokens.push_back({Tok::Number, std::string(src.substr(pos + 1, end - pos - 1)), line, column});
      pos = end;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos;
      while (end < src.size() && ident_char(src[end])) ++end;
      tokens.push_back({Tok::Ident, std::string(src.substr(pos, end - pos)), line, column});
      pos = end;
      continue;
    }
    throw ParseError(line, column, std::string("unexpected character '") + c + "'");
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  SurfacePtr program() {
    SurfacePtr e = term();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(peek().line, peek().column, message);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(std::string("expected ") + what + (peek().kind == Tok::End ? ", found end of input"
                                                                       : ", found '" + peek().text + "'"));
    }
    return next();
  }

  PcfType type() {
    PcfType dom = type_atom();
    if (peek().kind == Tok::Arrow) {
      next();
      return PcfType::arrow(std::move(dom), type());
    }
    return dom;
  }

  PcfType type_atom() {
    if (peek().kind == Tok::LParen) {
      next();
      PcfType t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (peek().kind == Tok::Ident && peek().text == "nat") {
      next();
      return PcfType::iota();
    }
    fail("expected a type");
  }

  SurfacePtr term() {
    if (peek().kind == Tok::Lambda) return lambda();
    SurfacePtr head = atom();
    while (true) {
      if (peek().kind == Tok::Lambda) return app(std::move(head), lambda());
      if (!starts_atom()) return head;
      head = app(std::move(head), atom());
    }
  }

  bool starts_atom() const {
    const Tok k = peek().kind;
    return k == Tok::LParen || k == Tok::Ident || k == Tok::Number;
  }

  SurfacePtr lambda() {
    expect(Tok::Lambda, "'\\'");
    if (peek().kind != Tok::Ident || reserved(peek().text)) fail("expected a variable name");
    std::string name = next().text;
    expect(Tok::Colon, "':'");
    PcfType annot = type();
    expect(Tok::Dot, "'.'");
    scope_.push_back(name);
    SurfacePtr body = term();
    scope_.pop_back();
    return lam(std::move(name), std::move(annot), std::move(body));
  }

  SurfacePtr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::LParen: {
        next();
        SurfacePtr e = term();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Number: {
        Natural n = 0;
        const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), n);
        if (ec != std::errc{}) fail("numeral literal out of range");
        next();
        SurfacePtr e = constant(Keyword::Zero);
        const SurfacePtr s = constant(Keyword::Succ);
        for (Natural i = 0; i < n; ++i) e = app(s, std::move(e));
        return e;
      }
      case Tok::Ident: {
        if (tok.text == "zero") return keyword(Keyword::Zero);
        if (tok.text == "succ") return keyword(Keyword::Succ);
        if (tok.text == "pred") return keyword(Keyword::Pred);
        if (tok.text == "ifz") return keyword(Keyword::Ifz);
        if (tok.text == "fix") return keyword(Keyword::Fix);
        if (tok.text == "nat") fail("'nat' is a type, not a term");
        bool bound = false;
        for (const auto& name : scope_) bound = bound || name == tok.text;
        if (!bound) throw UnboundVariable(tok.line, tok.column, "unbound variable '" + tok.text + "'");
        return var(next().text);
      }
      default:
        fail(tok.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tok.text + "'");
    }
  }

  SurfacePtr keyword(Keyword k) {
    next();
    return constant(k);
  }

  static bool reserved(const std::string& name) {
    return name == "zero" || name == "succ" || name == "pred" || name == "ifz" || name == "fix" || name == "nat";
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

SurfacePtr parse(std::string_view src) { return Parser(lex(src)).program(); }

std::string to_surface(const PcfType& t) {
  if (t.is_iota()) return "nat";
  const std::string dom = to_surface(t.domain());
  return (t.domain().is_arrow() ? "(" + dom + ")" : dom) + " -> " + to_surface(t.codomain());
}

std::string to_surface(const SurfaceTerm& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, Lam>) {
          return "(\\" + x.name + ":" + to_surface(x.annot) + ". " + to_surface(*x.body) + ")";
        } else if constexpr (std::is_same_v<T, App>) {
          return "(" + to_surface(*x.fun) + " " + to_surface(*x.arg) + ")";
        } else if constexpr (std::is_same_v<T, Constant>) {
          switch (x.keyword) {
            case Keyword::Zero: return "zero";
            case Keyword::Succ: return "succ";
            case Keyword::Pred: return "pred";
            case Keyword::Ifz: return "ifz";
            case Keyword::Fix: return "fix";
          }
          return "?";
        } else {
          return "#" + std::to_string(x.value);
        }
      },
      e.node);
}

}  // namespace pcf::frontend
