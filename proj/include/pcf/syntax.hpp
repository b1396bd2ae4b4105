#pragma once

// Types and terms of combinatory PCF.
//
// Both are immutable trees behind shared pointers, so copies are cheap and
// values can be handed between threads freely. Every constant carries its
// full type parameters (k_{s,t}, s_{s,t,r}, fix_s), which makes the type of
// a raw term tree unique whenever it exists.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcf/error.hpp"

namespace pcf {

using Natural = std::uint64_t;

class PcfType {
 public:
  enum class Kind { Iota, Arrow };

  static PcfType iota();
  static PcfType arrow(PcfType domain, PcfType codomain);

  Kind kind() const;
  bool is_iota() const { return kind() == Kind::Iota; }
  bool is_arrow() const { return kind() == Kind::Arrow; }

  // Only valid on arrows.
  const PcfType& domain() const;
  const PcfType& codomain() const;

  std::size_t depth() const;

  friend bool operator==(const PcfType& a, const PcfType& b);

 private:
  struct Node;
  explicit PcfType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Right-associated arrow chain: arrows({a, b, c}) is a -> (b -> c).
PcfType arrows(std::initializer_list<PcfType> types);

enum class TermKind { Zero, Succ, Pred, Ifz, K, S, Fix, App };

class Term {
 public:
  static Term zero();
  static Term succ();
  static Term pred();
  static Term ifz();
  static Term k(PcfType sigma, PcfType tau);
  static Term s(PcfType sigma, PcfType tau, PcfType rho);
  static Term fix(PcfType sigma);
  static Term app(Term fun, Term arg);

  TermKind kind() const;
  bool is_app() const { return kind() == TermKind::App; }

  // App only.
  const Term& fun() const;
  const Term& arg() const;

  // Type parameters of k (2), s (3) and fix (1); empty otherwise.
  const std::vector<PcfType>& params() const;

  // Cached at construction: the n for which this term is syntactically the
  // nth numeral, if any.
  std::optional<Natural> numeral_value() const;

  // Cached at construction: the type of the term, or nothing when some
  // application inside it is ill-typed. type_of() reports the offender.
  const std::optional<PcfType>& cached_type() const;

  // Number of nodes of the tree (saturating). Shared subterms count once per
  // occurrence.
  std::size_t size() const;

  // Identity of the underlying node; equal identities imply equal terms.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Left-associated application: apply(f, {a, b}) is (f a) b.
Term apply(Term fun, std::initializer_list<Term> args);

class TypeMismatch : public TypeError {
 public:
  // expected is empty when the function position was not an arrow at all.
  TypeMismatch(Term subterm, std::optional<PcfType> expected, PcfType actual);

  const Term& subterm() const { return subterm_; }
  const std::optional<PcfType>& expected() const { return expected_; }
  const PcfType& actual() const { return actual_; }

 private:
  Term subterm_;
  std::optional<PcfType> expected_;
  PcfType actual_;
};

PcfType type_of(const Term& t);

Term numeral(Natural n);
std::optional<Natural> as_numeral(const Term& t);

// Canonical S-expression form: `iota`, `(arr T1 T2)`, `zero`, `succ`, `pred`,
// `ifz`, `(k T1 T2)`, `(s T1 T2 T3)`, `(fix T)`, `(app t1 t2)`.
std::string to_sexpr(const PcfType& t);
std::string to_sexpr(const Term& t);
PcfType parse_type_sexpr(std::string_view text);
Term parse_term_sexpr(std::string_view text);

}  // namespace pcf
