#include "allab/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "allab/errors.hpp"
#include "allab/parallel.hpp"

namespace allab {

namespace {

TermPtr make(Term::Kind k, std::string name, TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->name = std::move(name);
  t->lhs = std::move(l);
  t->rhs = std::move(r);
  return t;
}

}  // namespace

TermPtr var(std::string name) { return make(Term::Kind::var, std::move(name), nullptr, nullptr); }
TermPtr const0() { return make(Term::Kind::const0, {}, nullptr, nullptr); }
TermPtr const1() { return make(Term::Kind::const1, {}, nullptr, nullptr); }
TermPtr join(TermPtr a, TermPtr b) { return make(Term::Kind::join, {}, std::move(a), std::move(b)); }
TermPtr meet(TermPtr a, TermPtr b) { return make(Term::Kind::meet, {}, std::move(a), std::move(b)); }
TermPtr comp(TermPtr a) { return make(Term::Kind::comp, {}, std::move(a), nullptr); }
TermPtr sasaki_prod(TermPtr a, TermPtr b) {
  return make(Term::Kind::sasaki_prod, {}, std::move(a), std::move(b));
}
TermPtr sasaki_res(TermPtr a, TermPtr b) {
  return make(Term::Kind::sasaki_res, {}, std::move(a), std::move(b));
}

bool structurally_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind || a->name != b->name) return false;
  return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

TermPtr expand_sugar(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::var:
    case Term::Kind::const0:
    case Term::Kind::const1:
      return t;
    case Term::Kind::join:
      return join(expand_sugar(t->lhs), expand_sugar(t->rhs));
    case Term::Kind::meet:
      return meet(expand_sugar(t->lhs), expand_sugar(t->rhs));
    case Term::Kind::comp:
      return comp(expand_sugar(t->lhs));
    case Term::Kind::sasaki_prod: {
      auto a = expand_sugar(t->lhs), b = expand_sugar(t->rhs);
      return meet(join(a, comp(b)), b);
    }
    case Term::Kind::sasaki_res: {
      auto a = expand_sugar(t->lhs), b = expand_sugar(t->rhs);
      return join(comp(a), meet(a, b));
    }
  }
  throw Error("unreachable");
}

namespace {

void collect_vars(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == Term::Kind::var) out.insert(t->name);
  collect_vars(t->lhs, out);
  collect_vars(t->rhs, out);
}

}  // namespace

std::vector<std::string> variables(const TermPtr& t) {
  std::set<std::string> s;
  collect_vars(t, s);
  return {s.begin(), s.end()};
}

namespace {

// Precedence levels: join < meet < sasaki < comp < atom.
enum Level : int { lvl_join = 0, lvl_meet = 1, lvl_sas = 2, lvl_comp = 3, lvl_atom = 4 };

int level_of(const Term& t) {
  switch (t.kind) {
    case Term::Kind::join: return lvl_join;
    case Term::Kind::meet: return lvl_meet;
    case Term::Kind::sasaki_prod:
    case Term::Kind::sasaki_res: return lvl_sas;
    case Term::Kind::comp: return lvl_comp;
    default: return lvl_atom;
  }
}

void print_rec(const TermPtr& t, int min_level, std::string& out) {
  const bool parens = level_of(*t) < min_level;
  if (parens) out += '(';
  switch (t->kind) {
    case Term::Kind::var: out += t->name; break;
    case Term::Kind::const0: out += '0'; break;
    case Term::Kind::const1: out += '1'; break;
    case Term::Kind::join:
      print_rec(t->lhs, lvl_join, out);
      out += " v ";
      print_rec(t->rhs, lvl_meet, out);
      break;
    case Term::Kind::meet:
      print_rec(t->lhs, lvl_meet, out);
      out += " ^ ";
      print_rec(t->rhs, lvl_sas, out);
      break;
    case Term::Kind::sasaki_prod:
      print_rec(t->lhs, lvl_comp, out);
      out += " o ";
      print_rec(t->rhs, lvl_comp, out);
      break;
    case Term::Kind::sasaki_res:
      print_rec(t->lhs, lvl_comp, out);
      out += " -> ";
      print_rec(t->rhs, lvl_comp, out);
      break;
    case Term::Kind::comp:
      print_rec(t->lhs, lvl_comp, out);
      out += '\'';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  print_rec(t, lvl_join, out);
  return out;
}

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok : std::uint8_t {
  lparen, rparen, comma, join_op, meet_op, prime, odot, arrow,
  const0, const1, ident, leq, eq, amp, implies, end,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(s.substr(pos, len)), pos});
      i += len;
    };
    if (c == '(') { push(Tok::lparen, 1); continue; }
    if (c == ')') { push(Tok::rparen, 1); continue; }
    if (c == ',') { push(Tok::comma, 1); continue; }
    if (c == '^') { push(Tok::meet_op, 1); continue; }
    if (c == '\'') { push(Tok::prime, 1); continue; }
    if (c == '&') { push(Tok::amp, 1); continue; }
    if (c == '-') {
      if (i + 1 < s.size() && s[i + 1] == '>') { push(Tok::arrow, 2); continue; }
      throw ParseError(pos, "'->'");
    }
    if (c == '<') {
      if (i + 1 < s.size() && s[i + 1] == '=') { push(Tok::leq, 2); continue; }
      throw ParseError(pos, "'<='");
    }
    if (c == '=') {
      if (i + 1 < s.size() && s[i + 1] == '>') { push(Tok::implies, 2); continue; }
      push(Tok::eq, 1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      const std::string_view lit = s.substr(i, j - i);
      if (lit == "0") { push(Tok::const0, 1); continue; }
      if (lit == "1") { push(Tok::const1, 1); continue; }
      throw ParseError(pos, "constant 0 or 1");
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      const std::string_view word = s.substr(i, j - i);
      if (word == "v") { push(Tok::join_op, 1); continue; }
      if (word == "o") { push(Tok::odot, 1); continue; }
      push(Tok::ident, j - i);
      continue;
    }
    throw ParseError(pos, "a term");
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  TermPtr parse_full_term() {
    auto t = parse_or();
    expect(Tok::end, "end of input");
    return t;
  }

  Statement parse_full_statement() {
    struct Clause {
      TermPtr lhs, rhs;
      bool is_eq;
      std::size_t pos;
    };
    std::vector<Clause> clauses;
    for (;;) {
      const std::size_t cpos = peek().pos;
      TermPtr lhs = parse_or();
      bool is_eq;
      if (peek().kind == Tok::eq) {
        is_eq = true;
      } else if (peek().kind == Tok::leq) {
        is_eq = false;
      } else {
        throw ParseError(peek().pos, "'=' or '<='");
      }
      advance();
      TermPtr rhs = parse_or();
      clauses.push_back({std::move(lhs), std::move(rhs), is_eq, cpos});
      if (peek().kind == Tok::amp) {
        advance();
        continue;
      }
      break;
    }
    if (peek().kind == Tok::implies) {
      advance();
      TermPtr lhs = parse_or();
      bool is_eq;
      if (peek().kind == Tok::eq) {
        is_eq = true;
      } else if (peek().kind == Tok::leq) {
        is_eq = false;
      } else {
        throw ParseError(peek().pos, "'=' or '<=' in the conclusion");
      }
      advance();
      TermPtr rhs = parse_or();
      expect(Tok::end, "end of input");
      QuasiIdentity q;
      for (auto& c : clauses) {
        if (c.is_eq) throw ParseError(c.pos, "inequality premises ('<=') before '=>'");
        q.premises.push_back({std::move(c.lhs), std::move(c.rhs)});
      }
      q.concl_lhs = std::move(lhs);
      q.concl_rhs = std::move(rhs);
      q.concl_is_equality = is_eq;
      return q;
    }
    expect(Tok::end, "end of input");
    if (clauses.size() != 1)
      throw ParseError(clauses[1].pos, "'=>' after a premise list");
    if (clauses[0].is_eq) return Identity{std::move(clauses[0].lhs), std::move(clauses[0].rhs)};
    QuasiIdentity q;
    q.concl_lhs = std::move(clauses[0].lhs);
    q.concl_rhs = std::move(clauses[0].rhs);
    q.concl_is_equality = false;
    return q;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  void advance() { ++pos_; }
  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw ParseError(peek().pos, what);
    advance();
  }

  TermPtr parse_or() {
    auto t = parse_and();
    while (peek().kind == Tok::join_op) {
      advance();
      t = join(std::move(t), parse_and());
    }
    return t;
  }

  TermPtr parse_and() {
    auto t = parse_sas();
    while (peek().kind == Tok::meet_op) {
      advance();
      t = meet(std::move(t), parse_sas());
    }
    return t;
  }

  TermPtr parse_sas() {
    auto t = parse_unary();
    if (peek().kind == Tok::odot || peek().kind == Tok::arrow) {
      const bool prod = peek().kind == Tok::odot;
      advance();
      auto rhs = parse_unary();
      if (peek().kind == Tok::odot || peek().kind == Tok::arrow)
        throw ParseError(peek().pos, "parentheses ('o' and '->' are non-associative)");
      t = prod ? sasaki_prod(std::move(t), std::move(rhs))
               : sasaki_res(std::move(t), std::move(rhs));
    }
    return t;
  }

  TermPtr parse_unary() {
    auto t = parse_atom();
    while (peek().kind == Tok::prime) {
      advance();
      t = comp(std::move(t));
    }
    return t;
  }

  TermPtr parse_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::const0:
        advance();
        return const0();
      case Tok::const1:
        advance();
        return const1();
      case Tok::lparen: {
        advance();
        auto t = parse_or();
        expect(Tok::rparen, "')'");
        return t;
      }
      case Tok::ident: {
        const std::string name = tok.text;
        const std::size_t npos = tok.pos;
        advance();
        if (peek().kind != Tok::lparen) return var(name);
        if (!registry_contains(name))
          throw ParseError(npos, "a registered term name before '('");
        advance();
        std::vector<TermPtr> args;
        if (peek().kind != Tok::rparen) {
          args.push_back(parse_or());
          while (peek().kind == Tok::comma) {
            advance();
            args.push_back(parse_or());
          }
        }
        expect(Tok::rparen, "')'");
        if (static_cast<int>(args.size()) != registry_arity(name))
          throw ParseError(npos, "'" + name + "' applied to " +
                                     std::to_string(registry_arity(name)) + " argument(s)");
        return apply_registry(name, args);
      }
      default:
        throw ParseError(tok.pos, "a variable, constant, or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).parse_full_term(); }

Statement parse_statement(std::string_view line) { return Parser(line).parse_full_statement(); }

std::string print_statement(const Statement& s) {
  if (const auto* id = std::get_if<Identity>(&s))
    return print_term(id->lhs) + " = " + print_term(id->rhs);
  const auto& q = std::get<QuasiIdentity>(s);
  std::string out;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    if (i) out += " & ";
    out += print_term(q.premises[i].lhs) + " <= " + print_term(q.premises[i].rhs);
  }
  if (!q.premises.empty()) out += " => ";
  out += print_term(q.concl_lhs) + (q.concl_is_equality ? " = " : " <= ") +
         print_term(q.concl_rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

int eval(const TermPtr& t, const FiniteLattice& L, const Assignment& a) {
  switch (t->kind) {
    case Term::Kind::var: {
      auto it = a.find(t->name);
      if (it == a.end()) throw UnboundVariable("variable '" + t->name + "' is unbound");
      return it->second;
    }
    case Term::Kind::const0: return L.bottom;
    case Term::Kind::const1: return L.top;
    case Term::Kind::join: return L.join(eval(t->lhs, L, a), eval(t->rhs, L, a));
    case Term::Kind::meet: return L.meet(eval(t->lhs, L, a), eval(t->rhs, L, a));
    case Term::Kind::comp: return L.comp(eval(t->lhs, L, a));
    case Term::Kind::sasaki_prod: {
      const int x = eval(t->lhs, L, a), y = eval(t->rhs, L, a);
      return L.meet(L.join(x, L.comp(y)), y);
    }
    case Term::Kind::sasaki_res: {
      const int x = eval(t->lhs, L, a), y = eval(t->rhs, L, a);
      return L.join(L.comp(x), L.meet(x, y));
    }
  }
  throw Error("unreachable");
}

namespace {

// Stack program for fast exhaustive scans.
struct Instr {
  enum class Op : std::uint8_t { push_var, push_bottom, push_top, do_join, do_meet, do_comp } op;
  int slot = 0;
};

struct Compiled {
  std::vector<Instr> code;
  int max_stack = 0;

  int run(const FiniteLattice& L, const int* vals, int* stack) const {
    int sp = 0;
    for (const auto& ins : code) {
      switch (ins.op) {
        case Instr::Op::push_var: stack[sp++] = vals[ins.slot]; break;
        case Instr::Op::push_bottom: stack[sp++] = L.bottom; break;
        case Instr::Op::push_top: stack[sp++] = L.top; break;
        case Instr::Op::do_join:
          --sp;
          stack[sp - 1] = L.join(stack[sp - 1], stack[sp]);
          break;
        case Instr::Op::do_meet:
          --sp;
          stack[sp - 1] = L.meet(stack[sp - 1], stack[sp]);
          break;
        case Instr::Op::do_comp: stack[sp - 1] = L.comp(stack[sp - 1]); break;
      }
    }
    return stack[0];
  }
};

void compile_rec(const TermPtr& t, const std::map<std::string, int>& slots, Compiled& out,
                 int depth, int& max_depth) {
  max_depth = std::max(max_depth, depth + 1);
  switch (t->kind) {
    case Term::Kind::var:
      out.code.push_back({Instr::Op::push_var, slots.at(t->name)});
      break;
    case Term::Kind::const0: out.code.push_back({Instr::Op::push_bottom, 0}); break;
    case Term::Kind::const1: out.code.push_back({Instr::Op::push_top, 0}); break;
    case Term::Kind::join:
    case Term::Kind::meet:
      compile_rec(t->lhs, slots, out, depth, max_depth);
      compile_rec(t->rhs, slots, out, depth + 1, max_depth);
      out.code.push_back(
          {t->kind == Term::Kind::join ? Instr::Op::do_join : Instr::Op::do_meet, 0});
      break;
    case Term::Kind::comp:
      compile_rec(t->lhs, slots, out, depth, max_depth);
      out.code.push_back({Instr::Op::do_comp, 0});
      break;
    default:
      throw Error("compile on sugared term");
  }
}

Compiled compile(const TermPtr& t, const std::map<std::string, int>& slots) {
  Compiled c;
  int max_depth = 0;
  compile_rec(expand_sugar(t), slots, c, 0, max_depth);
  c.max_stack = max_depth;
  if (c.max_stack > 63) throw Error("term is nested too deeply");
  return c;
}

constexpr std::uint64_t kMaxAssignments = 1ull << 40;

struct Space {
  std::vector<std::string> names;
  std::map<std::string, int> slots;
  std::uint64_t total = 1;
  int n = 0;

  void decode(std::uint64_t idx, int* vals) const {
    for (int j = static_cast<int>(names.size()) - 1; j >= 0; --j) {
      vals[j] = static_cast<int>(idx % static_cast<std::uint64_t>(n));
      idx /= static_cast<std::uint64_t>(n);
    }
  }

  Assignment assignment_at(std::uint64_t idx) const {
    std::vector<int> vals(names.size());
    decode(idx, vals.data());
    Assignment a;
    for (std::size_t j = 0; j < names.size(); ++j) a[names[j]] = vals[j];
    return a;
  }
};

// Variable slots sorted by name; the first variable is the most significant
// digit, so ascending indices enumerate assignments lexicographically.
Space make_space(const FiniteLattice& L, const std::vector<const TermPtr*>& terms) {
  std::set<std::string> vs;
  for (const auto* t : terms) collect_vars(*t, vs);
  Space sp;
  sp.names.assign(vs.begin(), vs.end());
  if (sp.names.size() > 16) throw Error("more than 16 distinct variables");
  sp.n = L.n;
  for (std::size_t i = 0; i < sp.names.size(); ++i) sp.slots[sp.names[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < sp.names.size(); ++i) {
    if (sp.total > kMaxAssignments / static_cast<std::uint64_t>(L.n))
      throw Error("assignment space too large to enumerate");
    sp.total *= static_cast<std::uint64_t>(L.n);
  }
  return sp;
}

}  // namespace

CheckResult check_identity(const FiniteLattice& L, const Identity& id) {
  const Space sp = make_space(L, {&id.lhs, &id.rhs});
  const Compiled lhs = compile(id.lhs, sp.slots);
  const Compiled rhs = compile(id.rhs, sp.slots);

  auto mismatch = [&](std::uint64_t idx) {
    int vals[16];
    int stack[64];
    sp.decode(idx, vals);
    return lhs.run(L, vals, stack) != rhs.run(L, vals, stack);
  };

  CheckResult res;
  if (auto hit = find_first(sp.total, mismatch)) {
    res.holds = false;
    res.witness = sp.assignment_at(*hit);
    res.assignments_checked = *hit + 1;
  } else {
    res.holds = true;
    res.assignments_checked = sp.total;
  }
  return res;
}

CheckResult check_quasi(const FiniteLattice& L, const QuasiIdentity& q) {
  std::vector<const TermPtr*> terms{&q.concl_lhs, &q.concl_rhs};
  for (const auto& p : q.premises) {
    terms.push_back(&p.lhs);
    terms.push_back(&p.rhs);
  }
  const Space sp = make_space(L, terms);

  std::vector<std::pair<Compiled, Compiled>> prem;
  prem.reserve(q.premises.size());
  for (const auto& p : q.premises)
    prem.emplace_back(compile(p.lhs, sp.slots), compile(p.rhs, sp.slots));
  const Compiled cl = compile(q.concl_lhs, sp.slots);
  const Compiled cr = compile(q.concl_rhs, sp.slots);

  auto violated = [&](std::uint64_t idx) {
    int vals[16];
    int stack[64];
    sp.decode(idx, vals);
    for (const auto& [pl, pr] : prem) {
      if (!L.leq(pl.run(L, vals, stack), pr.run(L, vals, stack))) return false;
    }
    const int a = cl.run(L, vals, stack);
    const int b = cr.run(L, vals, stack);
    return q.concl_is_equality ? (a != b) : !L.leq(a, b);
  };

  CheckResult res;
  if (auto hit = find_first(sp.total, violated)) {
    res.holds = false;
    res.witness = sp.assignment_at(*hit);
    res.assignments_checked = *hit + 1;
  } else {
    res.holds = true;
    res.assignments_checked = sp.total;
  }
  return res;
}

CheckResult check_statement(const FiniteLattice& L, const Statement& s) {
  if (const auto* id = std::get_if<Identity>(&s)) return check_identity(L, *id);
  return check_quasi(L, std::get<QuasiIdentity>(s));
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

namespace {

struct RegistryEntry {
  std::vector<std::string> params;
  TermPtr body;
};

TermPtr t1_term() {
  auto x = var("x"), y = var("y");
  return join(meet(x, y), comp(join(x, y)));
}

TermPtr t_big_term() {
  auto x = var("x"), y = var("y"), z = var("z");
  auto a = comp(meet(join(x, y), z));                       // ((x v y) ^ z)'
  auto p = join(comp(meet(join(a, x), join(x, y))), x);     // ((a v x) ^ (x v y))' v x
  auto q = join(a, y);                                      // a v y
  return meet(meet(p, q), join(x, y));
}

TermPtr p_term() {
  auto x = var("x"), y = var("y"), z = var("z");
  return join(meet(x, join(meet(z, y), comp(y))), meet(z, join(meet(x, y), comp(y))));
}

TermPtr m_term() {
  auto x = var("x"), y = var("y"), z = var("z");
  return meet(meet(join(x, y), join(y, z)), join(z, x));
}

const std::map<std::string, RegistryEntry, std::less<>>& registry() {
  static const std::map<std::string, RegistryEntry, std::less<>> reg = [] {
    std::map<std::string, RegistryEntry, std::less<>> r;
    r["odot"] = {{"x", "y"}, sasaki_prod(var("x"), var("y"))};
    r["arrow"] = {{"x", "y"}, sasaki_res(var("x"), var("y"))};
    r["t1"] = {{"x", "y"}, t1_term()};
    r["u"] = {{"x", "y"}, t1_term()};
    r["t2"] = {{"x", "y", "z"}, join(comp(t1_term()), var("z"))};
    r["tBig"] = {{"x", "y", "z"}, t_big_term()};
    r["p"] = {{"x", "y", "z"}, p_term()};
    r["m"] = {{"x", "y", "z"}, m_term()};
    return r;
  }();
  return reg;
}

TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& sub) {
  switch (t->kind) {
    case Term::Kind::var: {
      auto it = sub.find(t->name);
      if (it == sub.end()) throw Error("registry term uses unknown parameter " + t->name);
      return it->second;
    }
    case Term::Kind::const0:
    case Term::Kind::const1:
      return t;
    case Term::Kind::comp:
      return comp(substitute(t->lhs, sub));
    case Term::Kind::join:
      return join(substitute(t->lhs, sub), substitute(t->rhs, sub));
    case Term::Kind::meet:
      return meet(substitute(t->lhs, sub), substitute(t->rhs, sub));
    case Term::Kind::sasaki_prod:
      return sasaki_prod(substitute(t->lhs, sub), substitute(t->rhs, sub));
    case Term::Kind::sasaki_res:
      return sasaki_res(substitute(t->lhs, sub), substitute(t->rhs, sub));
  }
  throw Error("unreachable");
}

}  // namespace

bool registry_contains(std::string_view name) { return registry().count(name) > 0; }

int registry_arity(std::string_view name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown registry term '" + std::string(name) + "'");
  return static_cast<int>(it->second.params.size());
}

TermPtr registry_term(std::string_view name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown registry term '" + std::string(name) + "'");
  return it->second.body;
}

TermPtr apply_registry(std::string_view name, const std::vector<TermPtr>& args) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown registry term '" + std::string(name) + "'");
  if (args.size() != it->second.params.size())
    throw Error("registry term '" + std::string(name) + "' expects " +
                std::to_string(it->second.params.size()) + " arguments");
  std::map<std::string, TermPtr> sub;
  for (std::size_t i = 0; i < args.size(); ++i) sub[it->second.params[i]] = args[i];
  return substitute(it->second.body, sub);
}

std::vector<std::string> registry_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

}  // namespace allab
