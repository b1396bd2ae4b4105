#include <cctype>
#include <string>

#include "pcf/syntax.hpp"

namespace pcf {

namespace {

void print_type(const PcfType& t, std::string& out) {
  if (t.is_iota()) {
    out += "iota";
    return;
  }
  out += "(arr ";
  print_type(t.domain(), out);
  out += ' ';
  print_type(t.codomain(), out);
  out += ')';
}

void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Zero: out += "zero"; return;
    case TermKind::Succ: out += "succ"; return;
    case TermKind::Pred: out += "pred"; return;
    case TermKind::Ifz: out += "ifz"; return;
    case TermKind::K:
    case TermKind::S:
    case TermKind::Fix:
      out += t.kind() == TermKind::K ? "(k" : t.kind() == TermKind::S ? "(s" : "(fix";
      for (const PcfType& p : t.params()) {
        out += ' ';
        print_type(p, out);
      }
      out += ')';
      return;
    case TermKind::App:
      out += "(app ";
      print_term(t.fun(), out);
      out += ' ';
      print_term(t.arg(), out);
      out += ')';
      return;
  }
}

class SexprReader {
 public:
  explicit SexprReader(std::string_view text) : text_(text) {}

  PcfType read_type() {
    skip_space();
    if (peek() == '(') {
      advance();
      expect_atom("arr");
      PcfType dom = read_type();
      PcfType cod = read_type();
      expect_close();
      return PcfType::arrow(std::move(dom), std::move(cod));
    }
    const auto [line, col] = position();
    const std::string atom = read_atom();
    if (atom == "iota") return PcfType::iota();
    throw ParseError(line, col, "expected a type, found '" + atom + "'");
  }

  Term read_term() {
    skip_space();
    const auto [line, col] = position();
    if (peek() == '(') {
      advance();
      const std::string head = read_atom();
      Term result = Term::zero();
      if (head == "app") {
        Term f = read_term();
        Term a = read_term();
        result = Term::app(std::move(f), std::move(a));
      } else if (head == "k") {
        PcfType a = read_type();
        PcfType b = read_type();
        result = Term::k(std::move(a), std::move(b));
      } else if (head == "s") {
        PcfType a = read_type();
        PcfType b = read_type();
        PcfType c = read_type();
        result = Term::s(std::move(a), std::move(b), std::move(c));
      } else if (head == "fix") {
        result = Term::fix(read_type());
      } else {
        throw ParseError(line, col, "unknown form '" + head + "'");
      }
      expect_close();
      return result;
    }
    const std::string atom = read_atom();
    if (atom == "zero") return Term::zero();
    if (atom == "succ") return Term::succ();
    if (atom == "pred") return Term::pred();
    if (atom == "ifz") return Term::ifz();
    throw ParseError(line, col, "expected a term, found '" + atom + "'");
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) {
      const auto [line, col] = position();
      throw ParseError(line, col, "trailing input");
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  std::pair<std::size_t, std::size_t> position() const { return {line_, pos_ - line_start_ + 1}; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string read_atom() {
    skip_space();
    const auto [line, col] = position();
    std::string atom;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      atom += text_[pos_];
      advance();
    }
    if (atom.empty()) {
      throw ParseError(line, col, pos_ < text_.size() ? std::string("unexpected '") + text_[pos_] + "'"
                                                      : std::string("unexpected end of input"));
    }
    return atom;
  }

  void expect_atom(std::string_view want) {
    const auto [line, col] = position();
    if (read_atom() != want) throw ParseError(line, col, "expected '" + std::string(want) + "'");
  }

  void expect_close() {
    skip_space();
    if (peek() != ')') {
      const auto [line, col] = position();
      throw ParseError(line, col, "expected ')'");
    }
    advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

std::string to_sexpr(const PcfType& t) {
  std::string out;
  print_type(t, out);
  return out;
}

std::string to_sexpr(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

PcfType parse_type_sexpr(std::string_view text) {
  SexprReader reader(text);
  PcfType t = reader.read_type();
  reader.expect_end();
  return t;
}

Term parse_term_sexpr(std::string_view text) {
  SexprReader reader(text);
  Term t = reader.read_term();
  reader.expect_end();
  return t;
}

}  // namespace pcf
