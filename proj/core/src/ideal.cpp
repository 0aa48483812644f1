#include "allab/ideal.hpp"

#include <algorithm>
#include <set>

#include "allab/errors.hpp"
#include "allab/sasaki.hpp"

namespace allab {

bool set_contains(ElemSet s, int x) { return (s >> x) & 1u; }
ElemSet set_insert(ElemSet s, int x) { return s | (1u << x); }
int set_size(ElemSet s) { return __builtin_popcount(s); }

std::vector<int> set_elements(ElemSet s) {
  std::vector<int> out;
  for (int x = 0; s >> x; ++x) {
    if ((s >> x) & 1u) out.push_back(x);
  }
  return out;
}

std::vector<std::string> set_labels(const FiniteLattice& L, ElemSet s) {
  std::vector<std::string> out;
  for (int x : set_elements(s)) out.push_back(L.label(x));
  return out;
}

ElemSet parse_label_set(const FiniteLattice& L, std::string_view text) {
  ElemSet s = 0;
  std::size_t start = 0;
  auto add = [&](std::string_view piece) {
    std::size_t b = piece.find_first_not_of(" \t");
    if (b == std::string_view::npos) return;
    std::size_t e = piece.find_last_not_of(" \t");
    s = set_insert(s, L.index_of(piece.substr(b, e - b + 1)));
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      add(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return s;
}

IdealTermTables ideal_term_tables(const FiniteLattice& L) {
  const int n = L.n;
  IdealTermTables tabs;
  tabs.n = n;
  tabs.t1.resize(static_cast<std::size_t>(n) * n);
  tabs.t.resize(static_cast<std::size_t>(n) * n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = L.join(x, y);
      tabs.t1[static_cast<std::size_t>(x) * n + y] = L.join(L.meet(x, y), L.comp(xy));
      for (int z = 0; z < n; ++z) {
        const int a = L.comp(L.meet(xy, z));                       // ((x v y) ^ z)'
        const int p = L.join(L.comp(L.meet(L.join(a, x), xy)), x); // ((a v x) ^ (x v y))' v x
        const int q = L.join(a, y);
        tabs.t[(static_cast<std::size_t>(x) * n + y) * n + z] = L.meet(L.meet(p, q), xy);
      }
    }
  }
  return tabs;
}

const std::vector<IdealBasisTerm>& ideal_basis() {
  static const std::vector<IdealBasisTerm> basis = [] {
    auto x1 = var("x1"), x2 = var("x2"), x3 = var("x3"), x4 = var("x4");
    auto y1 = var("y1"), y2 = var("y2"), y = var("y");
    auto t1_of = [](TermPtr a, TermPtr b) { return apply_registry("t1", {a, b}); };
    auto t_of = [](TermPtr a, TermPtr b, TermPtr c) { return apply_registry("tBig", {a, b, c}); };
    std::vector<IdealBasisTerm> v;
    v.push_back({"join", t1_of(join(t_of(x1, x2, y1), t_of(x3, x4, y2)), join(x2, x4)),
                 {"x1", "x2", "x3", "x4"},
                 {"y1", "y2"}});
    v.push_back({"meet", t1_of(meet(t_of(x1, x2, y1), t_of(x3, x4, y2)), meet(x2, x4)),
                 {"x1", "x2", "x3", "x4"},
                 {"y1", "y2"}});
    v.push_back({"comp", t1_of(comp(t_of(x1, x2, y)), comp(x2)), {"x1", "x2"}, {"y"}});
    v.push_back({"one", const1(), {}, {}});
    return v;
  }();
  return basis;
}

namespace {

void require_member(const FiniteLattice& L) {
  if (L.n > 31) throw Error("ideal machinery supports at most 31 elements");
  if (!is_member_of_v(L)) throw NotInV("the lattice is not a member of the variety");
}

// Distinct values of t(. , x2, y) as a bitmask per (x2, y); the first slot of
// t only contributes a handful of values, which keeps the closure loops flat.
std::vector<ElemSet> t_value_masks(const FiniteLattice& L, const IdealTermTables& tabs) {
  const int n = L.n;
  std::vector<ElemSet> g(static_cast<std::size_t>(n) * n, 0);
  for (int x2 = 0; x2 < n; ++x2) {
    for (int y = 0; y < n; ++y) {
      ElemSet m = 0;
      for (int x1 = 0; x1 < n; ++x1) m = set_insert(m, tabs.t_at(x1, x2, y));
      g[static_cast<std::size_t>(x2) * n + y] = m;
    }
  }
  return g;
}

template <typename Visit>
void for_each_basis_value(const FiniteLattice& L, const IdealTermTables& tabs,
                          const std::vector<ElemSet>& g, ElemSet S, Visit&& visit) {
  const int n = L.n;
  const auto ys = set_elements(S);
  // t1(t(x1,x2,y1) v t(x3,x4,y2), x2 v x4) and its meet twin
  for (int y1 : ys) {
    for (int y2 : ys) {
      for (int x2 = 0; x2 < n; ++x2) {
        const ElemSet g1 = g[static_cast<std::size_t>(x2) * n + y1];
        for (int x4 = 0; x4 < n; ++x4) {
          const int jx = L.join(x2, x4);
          const int mx = L.meet(x2, x4);
          const ElemSet g2 = g[static_cast<std::size_t>(x4) * n + y2];
          for (ElemSet m1 = g1; m1;) {
            const int a = __builtin_ctz(m1);
            m1 &= m1 - 1;
            for (ElemSet m2 = g2; m2;) {
              const int b = __builtin_ctz(m2);
              m2 &= m2 - 1;
              if (!visit(tabs.t1_at(L.join(a, b), jx))) return;
              if (!visit(tabs.t1_at(L.meet(a, b), mx))) return;
            }
          }
        }
      }
    }
  }
  // t1(t(x1,x2,y)', x2')
  for (int y : ys) {
    for (int x2 = 0; x2 < n; ++x2) {
      const int cx2 = L.comp(x2);
      for (ElemSet m = g[static_cast<std::size_t>(x2) * n + y]; m;) {
        const int v = __builtin_ctz(m);
        m &= m - 1;
        if (!visit(tabs.t1_at(L.comp(v), cx2))) return;
      }
    }
  }
}

bool closed_under_basis(const FiniteLattice& L, const IdealTermTables& tabs,
                        const std::vector<ElemSet>& g, ElemSet S) {
  bool closed = true;
  for_each_basis_value(L, tabs, g, S, [&](int value) {
    if (!set_contains(S, value)) {
      closed = false;
      return false;
    }
    return true;
  });
  return closed;
}

ElemSet basis_image(const FiniteLattice& L, const IdealTermTables& tabs,
                    const std::vector<ElemSet>& g, ElemSet S) {
  ElemSet out = S;
  for_each_basis_value(L, tabs, g, S, [&](int value) {
    out = set_insert(out, value);
    return true;
  });
  return out;
}

bool is_ideal_with(const FiniteLattice& L, const IdealTermTables& tabs,
                   const std::vector<ElemSet>& g, ElemSet S) {
  if (!set_contains(S, L.top)) return false;
  return closed_under_basis(L, tabs, g, S);
}

std::vector<ElemSet> sort_ideals(std::vector<ElemSet> ideals) {
  std::sort(ideals.begin(), ideals.end(), [](ElemSet a, ElemSet b) {
    const int sa = set_size(a), sb = set_size(b);
    if (sa != sb) return sa < sb;
    return set_elements(a) < set_elements(b);
  });
  return ideals;
}

}  // namespace

bool is_ideal(const FiniteLattice& L, ElemSet S) {
  require_member(L);
  const IdealTermTables tabs = ideal_term_tables(L);
  return is_ideal_with(L, tabs, t_value_masks(L, tabs), S);
}

ElemSet ideal_closure(const FiniteLattice& L, ElemSet S) {
  require_member(L);
  const IdealTermTables tabs = ideal_term_tables(L);
  const auto g = t_value_masks(L, tabs);
  ElemSet cur = set_insert(S, L.top);
  for (;;) {
    const ElemSet next = basis_image(L, tabs, g, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<ElemSet> all_ideals(const FiniteLattice& L) {
  require_member(L);
  const IdealTermTables tabs = ideal_term_tables(L);
  const auto g = t_value_masks(L, tabs);
  std::vector<ElemSet> found;

  if (L.n <= 20) {
    // Subset enumeration; the top element is always in.
    const ElemSet top_bit = 1u << L.top;
    const ElemSet others = ((1u << L.n) - 1u) & ~top_bit;
    // Iterate over all subsets of `others` plus the top bit.
    ElemSet sub = 0;
    for (;;) {
      const ElemSet candidate = sub | top_bit;
      if (closed_under_basis(L, tabs, g, candidate)) found.push_back(candidate);
      if (sub == others) break;
      sub = (sub - others) & others;  // next subset of `others`
    }
  } else {
    // Kernel route: on variety members ideals are exactly congruence kernels.
    std::set<ElemSet> kernels;
    for (const auto& c : all_congruences(L)) {
      ElemSet k = 0;
      for (int x = 0; x < L.n; ++x) {
        if (c.related(x, L.top)) k = set_insert(k, x);
      }
      kernels.insert(k);
    }
    for (ElemSet k : kernels) {
      if (is_ideal_with(L, tabs, g, k)) found.push_back(k);
    }
  }
  return sort_ideals(std::move(found));
}

Congruence theta_of_ideal(const FiniteLattice& L, ElemSet I) {
  require_member(L);
  const IdealTermTables tabs = ideal_term_tables(L);
  if (!is_ideal_with(L, tabs, t_value_masks(L, tabs), I))
    throw NotAnIdeal("the given subset is not an ideal");

  const int n = L.n;
  auto related = [&](int x, int y) { return set_contains(I, tabs.t1_at(x, y)); };

  // The relation must already be an equivalence; verify instead of trusting.
  for (int x = 0; x < n; ++x) {
    if (!related(x, x)) throw InternalViolation("theta relation is not reflexive");
    for (int y = 0; y < n; ++y) {
      if (related(x, y) != related(y, x))
        throw InternalViolation("theta relation is not symmetric");
      if (!related(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (related(y, z) && !related(x, z))
          throw InternalViolation("theta relation is not transitive");
      }
    }
  }
  std::vector<int> assign(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int rep = x;
    for (int y = 0; y < n; ++y) {
      if (related(x, y)) {
        rep = y;
        break;  // least related element
      }
    }
    assign[static_cast<std::size_t>(x)] = rep;
  }
  Congruence theta = canonicalize(assign);
  if (!is_congruence(L, theta))
    throw InternalViolation("theta relation is not compatible with the operations");
  ElemSet kernel = 0;
  for (int x = 0; x < n; ++x) {
    if (theta.related(x, L.top)) kernel = set_insert(kernel, x);
  }
  if (kernel != I) throw InternalViolation("the class of 1 under theta is not the ideal");
  return theta;
}

CoincidenceReport verify_kernel_coincidence(const FiniteLattice& L) {
  require_member(L);
  CoincidenceReport rep;
  const auto ideals = all_ideals(L);
  const auto congruences = all_congruences(L);

  std::vector<ElemSet> kernels;
  for (const auto& c : congruences) {
    ElemSet k = 0;
    for (int x = 0; x < L.n; ++x) {
      if (c.related(x, L.top)) k = set_insert(k, x);
    }
    kernels.push_back(k);
  }
  std::set<ElemSet> kernel_set(kernels.begin(), kernels.end());
  rep.kernel_map_injective = kernel_set.size() == kernels.size();
  rep.ideal_count = static_cast<int>(ideals.size());
  rep.kernel_count = static_cast<int>(kernel_set.size());

  for (ElemSet i : ideals) {
    if (!kernel_set.count(i)) rep.ideals_without_kernel.push_back(i);
  }
  std::set<ElemSet> ideal_set(ideals.begin(), ideals.end());
  for (ElemSet k : kernel_set) {
    if (!ideal_set.count(k)) rep.kernels_without_ideal.push_back(k);
  }
  rep.holds = rep.kernel_map_injective && rep.ideals_without_kernel.empty() &&
              rep.kernels_without_ideal.empty();
  return rep;
}

const std::array<Identity, 8>& lemma_lem1_identities() {
  static const std::array<Identity, 8> ids = [] {
    auto parse_id = [](std::string_view s) { return std::get<Identity>(parse_statement(s)); };
    return std::array<Identity, 8>{
        parse_id("x v (x ^ y)' = 1"),
        parse_id("y v (x ^ y)' = 1"),
        parse_id("x = (x v y) ^ (x v (x v y)')"),
        parse_id("y = (x v y) ^ (y v (x v y)')"),
        parse_id("(x v y) ^ t1(x,y) = x ^ y"),
        parse_id("t1(x,x) = 1"),
        parse_id("tBig(x,y,t1(x,y)) = x"),
        parse_id("tBig(x,y,1) = y"),
    };
  }();
  return ids;
}

Lemma1IdentitiesReport verify_lemma_lem1(const FiniteLattice& L) {
  require_member(L);
  Lemma1IdentitiesReport rep;
  const auto& ids = lemma_lem1_identities();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    rep.results[i] = check_identity(L, ids[i]);
    rep.all_hold = rep.all_hold && rep.results[i].holds;
  }
  return rep;
}

}  // namespace allab
