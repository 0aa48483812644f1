#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "allab/lattice.hpp"

namespace allab {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Abstract syntax of lattice terms. `sasaki_prod` and `sasaki_res` are sugar
/// for (x v y') ^ y and x' v (x ^ y); they survive parsing unchanged and are
/// removed by expand_sugar.
struct Term {
  enum class Kind : std::uint8_t {
    var,
    const0,
    const1,
    join,
    meet,
    comp,
    sasaki_prod,
    sasaki_res,
  };

  Kind kind;
  std::string name;  // var only
  TermPtr lhs, rhs;  // comp uses lhs only
};

TermPtr var(std::string name);
TermPtr const0();
TermPtr const1();
TermPtr join(TermPtr a, TermPtr b);
TermPtr meet(TermPtr a, TermPtr b);
TermPtr comp(TermPtr a);
TermPtr sasaki_prod(TermPtr a, TermPtr b);
TermPtr sasaki_res(TermPtr a, TermPtr b);

bool structurally_equal(const TermPtr& a, const TermPtr& b);

/// Replaces every sugar node by its definition; the result is sugar-free.
TermPtr expand_sugar(const TermPtr& t);

/// Sorted, duplicate-free variable names of t.
std::vector<std::string> variables(const TermPtr& t);

/// Concrete syntax with minimal parentheses; parse_term(print_term(t)) is
/// structurally equal to t.
std::string print_term(const TermPtr& t);

/// Parser for the grammar
///   or    := and ("v" and)*
///   and   := sas ("^" sas)*
///   sas   := unary (("o" | "->") unary)?        (non-associative)
///   unary := atom "'"*
///   atom  := name | name "(" or ("," or)* ")" | "0" | "1" | "(" or ")"
/// where `name "(" ... ")"` applies a registry term. Precedence is
/// ' > o,-> > ^ > v. Throws ParseError with position and expectation.
TermPtr parse_term(std::string_view text);

/// Total map from variable names to carrier indices.
using Assignment = std::map<std::string, int>;

/// Bottom-up evaluation over L's tables; sugar nodes evaluate through their
/// definitions. Throws UnboundVariable.
int eval(const TermPtr& t, const FiniteLattice& L, const Assignment& a);

struct Identity {
  TermPtr lhs, rhs;
};

struct Inequality {
  TermPtr lhs, rhs;  // lhs <= rhs
};

/// Horn clause: a conjunction of inequality premises entailing a single
/// inequality or identity.
struct QuasiIdentity {
  std::vector<Inequality> premises;
  TermPtr concl_lhs, concl_rhs;
  bool concl_is_equality = true;
};

struct CheckResult {
  bool holds = true;
  std::optional<Assignment> witness;  // first counterexample, lex order
  std::uint64_t assignments_checked = 0;
};

/// Exhaustive check over all |L|^k assignments. Variables are ordered by
/// name and enumerated with the first variable most significant, so the
/// witness is the lexicographically first counterexample.
CheckResult check_identity(const FiniteLattice& L, const Identity& id);

/// Exhaustive Horn-clause check: reports the first assignment where every
/// premise holds and the conclusion fails.
CheckResult check_quasi(const FiniteLattice& L, const QuasiIdentity& q);

using Statement = std::variant<Identity, QuasiIdentity>;

/// One line of an identity file: "lhs = rhs", "lhs <= rhs", or
/// "p1 & p2 & ... => concl" with inequality premises.
Statement parse_statement(std::string_view line);

std::string print_statement(const Statement& s);

CheckResult check_statement(const FiniteLattice& L, const Statement& s);

/// Built-in term registry, applied by name in the concrete syntax:
///   odot(x,y)   (x v y') ^ y
///   arrow(x,y)  x' v (x ^ y)
///   t1(x,y)     (x ^ y) v (x v y)'
///   u(x,y)      alias of t1
///   t2(x,y,z)   t1(x,y)' v z
///   tBig(x,y,z) the ternary witness term used by the ideal basis
///   p(x,y,z)    the congruence-permutability witness
///   m(x,y,z)    the median (majority) term
bool registry_contains(std::string_view name);
int registry_arity(std::string_view name);
/// The registered term over its canonical variables (x, y[, z]).
TermPtr registry_term(std::string_view name);
/// Substitutes args into the registered term; arity-checked.
TermPtr apply_registry(std::string_view name, const std::vector<TermPtr>& args);
std::vector<std::string> registry_names();

}  // namespace allab
