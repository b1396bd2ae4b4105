#pragma once

// Surface lambda syntax for PCF and its compilation to combinators.
//
// Grammar:
//   type  ::= 'nat' | type '->' type | '(' type ')'       ('->' is right-assoc)
//   term  ::= '\' ident ':' type '.' term
//           | term term                                   (left-assoc)
//           | ident | 'zero' | 'succ' | 'pred' | 'ifz' | 'fix' | '#' digits
//           | '(' term ')'
// A lambda body extends as far to the right as possible. `--` starts a line
// comment. `ifz e0 e1 e2` takes the zero branch, then the successor branch,
// then the scrutinee, exactly like the combinatory constant (and unlike the
// usual if-then-else order).

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "pcf/error.hpp"
#include "pcf/syntax.hpp"

namespace pcf::frontend {

struct SurfaceTerm;
using SurfacePtr = std::shared_ptr<const SurfaceTerm>;

enum class Keyword { Zero, Succ, Pred, Ifz, Fix };

struct Var {
  std::string name;
};
struct Lam {
  std::string name;
  PcfType annot;
  SurfacePtr body;
};
struct App {
  SurfacePtr fun;
  SurfacePtr arg;
};
struct Constant {
  Keyword keyword;
};
struct NumLit {
  Natural value;
};

struct SurfaceTerm {
  std::variant<Var, Lam, App, Constant, NumLit> node;
};

SurfacePtr var(std::string name);
SurfacePtr lam(std::string name, PcfType annot, SurfacePtr body);
SurfacePtr app(SurfacePtr fun, SurfacePtr arg);
SurfacePtr constant(Keyword keyword);
SurfacePtr num_lit(Natural value);

bool operator==(const SurfaceTerm& a, const SurfaceTerm& b);

// Throws ParseError (UnboundVariable for free variables). Numeric literals are
// expanded into succ applications.
SurfacePtr parse(std::string_view src);

// Surface type as written in source, e.g. `nat -> nat -> nat`.
std::string to_surface(const PcfType& t);
// Fully parenthesised surface syntax that parse() accepts back.
std::string to_surface(const SurfaceTerm& e);

// A surface application whose types do not line up, or an unapplied fix.
class ElaborationError : public TypeError {
 public:
  using TypeError::TypeError;
};

// Surface type of a closed term. Throws ElaborationError.
PcfType infer(const SurfaceTerm& e);

// Typed bracket abstraction into a closed combinatory term of the same type.
// Throws ElaborationError.
Term elaborate(const SurfaceTerm& e);

struct SourceProgram {
  std::string text;
  SurfacePtr surface;
  Term term;
  PcfType type;
};

SourceProgram compile_program(std::string text);

}  // namespace pcf::frontend
