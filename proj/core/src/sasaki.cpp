#include "allab/sasaki.hpp"

#include "allab/errors.hpp"
#include "allab/parallel.hpp"

namespace allab {

int sasaki_product(const FiniteLattice& L, int x, int y) {
  return L.meet(L.join(x, L.comp(y)), y);
}

int sasaki_residual(const FiniteLattice& L, int x, int y) {
  return L.join(L.comp(x), L.meet(x, y));
}

AdjointReport check_adjoint(const FiniteLattice& L) {
  const std::uint64_t n = static_cast<std::uint64_t>(L.n);
  const std::uint64_t total = n * n * n;

  auto broken = [&](std::uint64_t idx) {
    const int z = static_cast<int>(idx % n);
    const int y = static_cast<int>((idx / n) % n);
    const int x = static_cast<int>(idx / (n * n));
    const bool prod_le = L.leq(sasaki_product(L, x, y), z);
    const bool res_ge = L.leq(x, sasaki_residual(L, y, z));
    return prod_le != res_ge;
  };

  AdjointReport rep;
  rep.triples_checked = total;
  if (auto hit = find_first(total, broken)) {
    const int z = static_cast<int>(*hit % n);
    const int y = static_cast<int>((*hit / n) % n);
    const int x = static_cast<int>(*hit / (n * n));
    rep.holds = false;
    rep.witness = {x, y, z};
    rep.direction = L.leq(sasaki_product(L, x, y), z) ? AdjointDirection::forward
                                                      : AdjointDirection::backward;
    rep.triples_checked = *hit + 1;
  }
  return rep;
}

const std::array<Statement, 6>& theorem1_conditions() {
  static const std::array<Statement, 6> conds = {
      parse_statement("x o y <= z => x <= y -> z"),
      parse_statement("x v y' = y' v ((x v y') ^ y)"),
      parse_statement("x' <= y => y = x' v (y ^ x)"),
      parse_statement("x <= y -> z => x o y <= z"),
      parse_statement("x ^ y = x ^ ((x ^ y) v x')"),
      parse_statement("x <= y => x = (y' v x) ^ y"),
  };
  return conds;
}

Theorem1Report check_theorem1(const FiniteLattice& L) {
  if (!L.complemented)
    throw NotComplemented("the unary map is not a complementation");
  const auto& conds = theorem1_conditions();
  Theorem1Report rep;
  ConditionVerdict* out[6] = {&rep.a, &rep.b, &rep.c, &rep.d, &rep.e, &rep.f};
  for (int i = 0; i < 6; ++i) {
    const CheckResult r = check_statement(L, conds[static_cast<std::size_t>(i)]);
    out[i]->holds = r.holds;
    out[i]->witness = r.witness;
  }
  rep.group_abc_agrees = rep.a.holds == rep.b.holds && rep.b.holds == rep.c.holds;
  rep.group_def_agrees = rep.d.holds == rep.e.holds && rep.e.holds == rep.f.holds;
  return rep;
}

VarietyReport check_variety(const FiniteLattice& L) {
  VarietyReport rep;
  rep.complemented = true;
  for (int x = 0; x < L.n; ++x) {
    if (L.meet(x, L.comp(x)) != L.bottom || L.join(x, L.comp(x)) != L.top) {
      rep.complemented = false;
      rep.complement_witness = x;
      break;
    }
  }
  const auto& conds = theorem1_conditions();
  rep.identity_b = check_statement(L, conds[1]);
  rep.identity_e = check_statement(L, conds[4]);
  rep.member = rep.complemented && rep.identity_b.holds && rep.identity_e.holds;
  return rep;
}

bool is_member_of_v(const FiniteLattice& L) { return check_variety(L).member; }

Lemma1Verdict check_lemma1(const FiniteLattice& L) {
  if (!check_adjoint(L).holds) return Lemma1Verdict::vacuous;
  for (int x = 0; x < L.n; ++x) {
    if (L.meet(x, L.comp(x)) != L.bottom || L.join(x, L.comp(x)) != L.top)
      return Lemma1Verdict::violation;
  }
  return Lemma1Verdict::confirmed;
}

}  // namespace allab
