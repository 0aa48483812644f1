#include "allab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "allab/errors.hpp"

namespace allab {

namespace {

std::size_t at(int n, int x, int y) { return static_cast<std::size_t>(x) * n + y; }

std::string join_labels(const std::vector<std::string>& labels, const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += labels[static_cast<std::size_t>(xs[i])];
  }
  return out;
}

struct TableFailure {
  enum class Kind { no_upper, no_lower, multiple_lub, multiple_glb } kind;
  int x = 0, y = 0;
  std::vector<int> candidates;  // minimal uppers / maximal lowers
};

// Computes join/meet tables from a reflexive order matrix; reports the first
// offending pair when some pair has no unique supremum or infimum.
std::optional<TableFailure> compute_tables(int n, const std::vector<std::uint8_t>& leq,
                                           std::vector<int>& join_tab,
                                           std::vector<int>& meet_tab) {
  join_tab.assign(static_cast<std::size_t>(n) * n, -1);
  meet_tab.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> bounds;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      bounds.clear();
      for (int z = 0; z < n; ++z) {
        if (leq[at(n, x, z)] && leq[at(n, y, z)]) bounds.push_back(z);
      }
      if (bounds.empty()) return TableFailure{TableFailure::Kind::no_upper, x, y, {}};
      std::vector<int> minimal;
      for (int z : bounds) {
        bool is_min = true;
        for (int w : bounds) {
          if (w != z && leq[at(n, w, z)]) {
            is_min = false;
            break;
          }
        }
        if (is_min) minimal.push_back(z);
      }
      if (minimal.size() != 1)
        return TableFailure{TableFailure::Kind::multiple_lub, x, y, minimal};
      join_tab[at(n, x, y)] = join_tab[at(n, y, x)] = minimal.front();

      bounds.clear();
      for (int z = 0; z < n; ++z) {
        if (leq[at(n, z, x)] && leq[at(n, z, y)]) bounds.push_back(z);
      }
      if (bounds.empty()) return TableFailure{TableFailure::Kind::no_lower, x, y, {}};
      std::vector<int> maximal;
      for (int z : bounds) {
        bool is_max = true;
        for (int w : bounds) {
          if (w != z && leq[at(n, z, w)]) {
            is_max = false;
            break;
          }
        }
        if (is_max) maximal.push_back(z);
      }
      if (maximal.size() != 1)
        return TableFailure{TableFailure::Kind::multiple_glb, x, y, maximal};
      meet_tab[at(n, x, y)] = meet_tab[at(n, y, x)] = maximal.front();
    }
  }
  return std::nullopt;
}

void throw_table_failure(const std::vector<std::string>& labels, const TableFailure& f) {
  const std::string pair = labels[static_cast<std::size_t>(f.x)] + " and " +
                           labels[static_cast<std::size_t>(f.y)];
  switch (f.kind) {
    case TableFailure::Kind::no_upper:
      throw NoBounds("elements " + pair + " have no common upper bound");
    case TableFailure::Kind::no_lower:
      throw NoBounds("elements " + pair + " have no common lower bound");
    case TableFailure::Kind::multiple_lub:
      throw NotALattice("join of " + pair + " is not unique; minimal upper bounds: " +
                        join_labels(labels, f.candidates));
    case TableFailure::Kind::multiple_glb:
      throw NotALattice("meet of " + pair + " is not unique; maximal lower bounds: " +
                        join_labels(labels, f.candidates));
  }
  throw Error("unreachable");
}

bool is_complementation(int n, const std::vector<int>& join_tab, const std::vector<int>& meet_tab,
                        const std::vector<int>& unary, int bottom, int top) {
  for (int x = 0; x < n; ++x) {
    if (meet_tab[at(n, x, unary[static_cast<std::size_t>(x)])] != bottom) return false;
    if (join_tab[at(n, x, unary[static_cast<std::size_t>(x)])] != top) return false;
  }
  return true;
}

FiniteLattice assemble(std::vector<std::string> labels, std::vector<std::uint8_t> leq,
                       std::vector<int> join_tab, std::vector<int> meet_tab,
                       std::vector<int> unary) {
  const int n = static_cast<int>(labels.size());
  int bottom = -1, top = -1;
  for (int x = 0; x < n; ++x) {
    bool least = true, greatest = true;
    for (int y = 0; y < n; ++y) {
      least = least && leq[at(n, x, y)];
      greatest = greatest && leq[at(n, y, x)];
    }
    if (least) bottom = x;
    if (greatest) top = x;
  }
  if (bottom < 0 || top < 0) throw NoBounds("lattice has no least or no greatest element");

  FiniteLattice L;
  L.n = n;
  L.labels = std::move(labels);
  L.bottom = bottom;
  L.top = top;
  L.leq_tab = std::move(leq);
  L.join_tab = std::move(join_tab);
  L.meet_tab = std::move(meet_tab);
  L.unary_map = std::move(unary);
  L.complemented = is_complementation(n, L.join_tab, L.meet_tab, L.unary_map, bottom, top);
  return L;
}

}  // namespace

int FiniteLattice::index_of(std::string_view lbl) const {
  for (int i = 0; i < n; ++i) {
    if (labels[static_cast<std::size_t>(i)] == lbl) return i;
  }
  throw UnknownLabel("unknown element label '" + std::string(lbl) + "'");
}

FiniteLattice lattice_from_leq(std::vector<std::string> labels, std::vector<std::uint8_t> leq,
                               std::vector<int> unary) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw NoBounds("a bounded lattice needs at least one element");
  if (leq.size() != static_cast<std::size_t>(n) * n || unary.size() != static_cast<std::size_t>(n))
    throw Error("table sizes do not match the element count");
  // Order axioms; cover closure guarantees them, direct callers may not.
  for (int x = 0; x < n; ++x) {
    if (!leq[at(n, x, x)]) throw NotALattice("order is not reflexive");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && leq[at(n, x, y)] && leq[at(n, y, x)])
        throw NotALattice("order is not antisymmetric: " + labels[x] + " <= " + labels[y] +
                          " <= " + labels[x]);
      if (!leq[at(n, x, y)]) continue;
      for (int z = 0; z < n; ++z) {
        if (leq[at(n, y, z)] && !leq[at(n, x, z)])
          throw NotALattice("order is not transitive at " + labels[x] + ", " + labels[y] + ", " +
                            labels[z]);
      }
    }
  }
  std::vector<int> join_tab, meet_tab;
  if (auto fail = compute_tables(n, leq, join_tab, meet_tab)) throw_table_failure(labels, *fail);
  return assemble(std::move(labels), std::move(leq), std::move(join_tab), std::move(meet_tab),
                  std::move(unary));
}

std::optional<FiniteLattice> try_lattice_from_leq(std::vector<std::string> labels,
                                                  std::vector<std::uint8_t> leq,
                                                  std::vector<int> unary) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> join_tab, meet_tab;
  if (compute_tables(n, leq, join_tab, meet_tab)) return std::nullopt;
  return assemble(std::move(labels), std::move(leq), std::move(join_tab), std::move(meet_tab),
                  std::move(unary));
}

FiniteLattice build_from_covers(const std::vector<std::string>& labels,
                                const std::vector<std::pair<std::string, std::string>>& covers,
                                const std::map<std::string, std::string>& unary) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw NoBounds("a bounded lattice needs at least one element");

  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(labels[static_cast<std::size_t>(i)], i).second)
      throw DuplicateLabel("duplicate element label '" + labels[static_cast<std::size_t>(i)] + "'");
  }
  auto resolve = [&](const std::string& lbl) {
    auto it = index.find(lbl);
    if (it == index.end()) throw UnknownLabel("unknown element label '" + lbl + "'");
    return it->second;
  };

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[at(n, i, i)] = 1;
  for (const auto& [lo, hi] : covers) {
    const int a = resolve(lo), b = resolve(hi);
    if (a == b) throw NotALattice("cover pair (" + lo + ", " + hi + ") is reflexive");
    leq[at(n, a, b)] = 1;
  }
  // Reflexive-transitive closure.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq[at(n, i, k)]) continue;
      for (int j = 0; j < n; ++j) {
        if (leq[at(n, k, j)]) leq[at(n, i, j)] = 1;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (leq[at(n, i, j)] && leq[at(n, j, i)])
        throw NotALattice("covers contain a cycle through " + labels[static_cast<std::size_t>(i)] +
                          " and " + labels[static_cast<std::size_t>(j)]);
    }
  }

  std::vector<int> unary_vec(static_cast<std::size_t>(n), -1);
  for (const auto& [from, to] : unary) unary_vec[static_cast<std::size_t>(resolve(from))] = resolve(to);
  for (int i = 0; i < n; ++i) {
    if (unary_vec[static_cast<std::size_t>(i)] < 0)
      throw PartialUnary("unary map missing an image for '" + labels[static_cast<std::size_t>(i)] +
                         "'");
  }

  std::vector<int> join_tab, meet_tab;
  if (auto fail = compute_tables(n, leq, join_tab, meet_tab)) throw_table_failure(labels, *fail);
  return assemble(labels, std::move(leq), std::move(join_tab), std::move(meet_tab),
                  std::move(unary_vec));
}

FiniteLattice replace_unary(const FiniteLattice& L, std::vector<int> unary) {
  if (unary.size() != static_cast<std::size_t>(L.n))
    throw PartialUnary("unary map size does not match the carrier");
  for (int v : unary) {
    if (v < 0 || v >= L.n) throw PartialUnary("unary image out of range");
  }
  FiniteLattice out = L;
  out.unary_map = std::move(unary);
  out.complemented =
      is_complementation(L.n, out.join_tab, out.meet_tab, out.unary_map, out.bottom, out.top);
  return out;
}

void validate(const FiniteLattice& L) {
  const int n = L.n;
  auto fail = [&](const std::string& what) { throw InternalViolation("invalid lattice: " + what); };
  if (n < 1) fail("empty carrier");
  if (L.labels.size() != static_cast<std::size_t>(n) ||
      L.leq_tab.size() != static_cast<std::size_t>(n) * n ||
      L.join_tab.size() != static_cast<std::size_t>(n) * n ||
      L.meet_tab.size() != static_cast<std::size_t>(n) * n ||
      L.unary_map.size() != static_cast<std::size_t>(n))
    fail("table sizes");
  for (int x = 0; x < n; ++x) {
    if (L.comp(x) < 0 || L.comp(x) >= n) fail("unary out of range");
    if (!L.leq(L.bottom, x) || !L.leq(x, L.top)) fail("bounds");
    if (L.join(x, x) != x || L.meet(x, x) != x) fail("idempotency");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (L.join(x, y) != L.join(y, x) || L.meet(x, y) != L.meet(y, x)) fail("commutativity");
      // leq(x,y) <=> join(x,y)=y <=> meet(x,y)=x
      const bool le = L.leq(x, y);
      if (le != (L.join(x, y) == y) || le != (L.meet(x, y) == x)) fail("order/table agreement");
      if (L.join(x, L.meet(x, y)) != x || L.meet(x, L.join(x, y)) != x) fail("absorption");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (L.join(L.join(x, y), z) != L.join(x, L.join(y, z))) fail("join associativity");
        if (L.meet(L.meet(x, y), z) != L.meet(x, L.meet(y, z))) fail("meet associativity");
      }
    }
  }
  const bool compl_now =
      is_complementation(n, L.join_tab, L.meet_tab, L.unary_map, L.bottom, L.top);
  if (compl_now != L.complemented) fail("complemented flag");
}

ClassifyReport classify_report(const FiniteLattice& L) {
  ClassifyReport r;
  r.flags.is_lattice = true;

  r.flags.is_complemented = true;
  for (int x = 0; x < L.n && r.flags.is_complemented; ++x) {
    if (L.meet(x, L.comp(x)) != L.bottom || L.join(x, L.comp(x)) != L.top) {
      r.flags.is_complemented = false;
      r.complemented_witness = x;
    }
  }

  r.flags.is_modular = true;
  for (int x = 0; x < L.n && r.flags.is_modular; ++x) {
    for (int y = 0; y < L.n && r.flags.is_modular; ++y) {
      for (int z = 0; z < L.n; ++z) {
        if (L.leq(x, z) && L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) {
          r.flags.is_modular = false;
          r.modular_witness = {x, y, z};
          break;
        }
      }
    }
  }

  r.flags.is_distributive = true;
  for (int x = 0; x < L.n && r.flags.is_distributive; ++x) {
    for (int y = 0; y < L.n && r.flags.is_distributive; ++y) {
      for (int z = 0; z < L.n; ++z) {
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
          r.flags.is_distributive = false;
          r.distributive_witness = {x, y, z};
          break;
        }
      }
    }
  }

  r.flags.unary_is_involution = true;
  for (int x = 0; x < L.n; ++x) {
    if (L.comp(L.comp(x)) != x) {
      r.flags.unary_is_involution = false;
      r.involution_witness = x;
      break;
    }
  }

  r.flags.unary_is_antitone = true;
  for (int x = 0; x < L.n && r.flags.unary_is_antitone; ++x) {
    for (int y = 0; y < L.n; ++y) {
      if (L.leq(x, y) && !L.leq(L.comp(y), L.comp(x))) {
        r.flags.unary_is_antitone = false;
        r.antitone_witness = {x, y};
        break;
      }
    }
  }

  r.flags.is_ortholattice =
      r.flags.is_complemented && r.flags.unary_is_involution && r.flags.unary_is_antitone;

  bool om_law = true;
  for (int x = 0; x < L.n && om_law; ++x) {
    for (int y = 0; y < L.n; ++y) {
      if (L.leq(x, y) && L.join(x, L.meet(y, L.comp(x))) != y) {
        om_law = false;
        r.orthomodular_witness = {x, y};
        break;
      }
    }
  }
  r.flags.is_orthomodular = r.flags.is_ortholattice && om_law;
  return r;
}

ClassifierFlags classify(const FiniteLattice& L) { return classify_report(L).flags; }

std::vector<std::vector<int>> all_complementations(const FiniteLattice& L) {
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(L.n));
  for (int x = 0; x < L.n; ++x) {
    for (int c = 0; c < L.n; ++c) {
      if (L.meet(x, c) == L.bottom && L.join(x, c) == L.top)
        candidates[static_cast<std::size_t>(x)].push_back(c);
    }
    if (candidates[static_cast<std::size_t>(x)].empty()) return {};
  }
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(L.n), 0);
  for (;;) {
    std::vector<int> map(static_cast<std::size_t>(L.n));
    for (int x = 0; x < L.n; ++x)
      map[static_cast<std::size_t>(x)] = candidates[static_cast<std::size_t>(x)][pick[static_cast<std::size_t>(x)]];
    out.push_back(std::move(map));
    int pos = L.n - 1;
    while (pos >= 0 && ++pick[static_cast<std::size_t>(pos)] == candidates[static_cast<std::size_t>(pos)].size()) {
      pick[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b) {
  const int n = a.n * b.n;
  auto pack = [&](int i, int j) { return i * b.n + j; };

  FiniteLattice L;
  L.n = n;
  L.labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < b.n; ++j) L.labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  }
  L.leq_tab.assign(static_cast<std::size_t>(n) * n, 0);
  L.join_tab.assign(static_cast<std::size_t>(n) * n, 0);
  L.meet_tab.assign(static_cast<std::size_t>(n) * n, 0);
  L.unary_map.resize(static_cast<std::size_t>(n));
  for (int i1 = 0; i1 < a.n; ++i1) {
    for (int j1 = 0; j1 < b.n; ++j1) {
      const int x = pack(i1, j1);
      L.unary_map[static_cast<std::size_t>(x)] = pack(a.comp(i1), b.comp(j1));
      for (int i2 = 0; i2 < a.n; ++i2) {
        for (int j2 = 0; j2 < b.n; ++j2) {
          const int y = pack(i2, j2);
          L.leq_tab[at(n, x, y)] = a.leq(i1, i2) && b.leq(j1, j2);
          L.join_tab[at(n, x, y)] = pack(a.join(i1, i2), b.join(j1, j2));
          L.meet_tab[at(n, x, y)] = pack(a.meet(i1, i2), b.meet(j1, j2));
        }
      }
    }
  }
  L.bottom = pack(a.bottom, b.bottom);
  L.top = pack(a.top, b.top);
  L.complemented = is_complementation(n, L.join_tab, L.meet_tab, L.unary_map, L.bottom, L.top);
  return L;
}

std::vector<std::pair<int, int>> cover_pairs(const FiniteLattice& L) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < L.n; ++x) {
    for (int y = 0; y < L.n; ++y) {
      if (x == y || !L.leq(x, y)) continue;
      bool covering = true;
      for (int z = 0; z < L.n; ++z) {
        if (z != x && z != y && L.leq(x, z) && L.leq(z, y)) {
          covering = false;
          break;
        }
      }
      if (covering) out.emplace_back(x, y);
    }
  }
  return out;
}

bool are_isomorphic(const FiniteLattice& a, const FiniteLattice& b, bool include_unary) {
  if (a.n != b.n) return false;
  const int n = a.n;
  if (n == 1) return true;

  // Cheap invariant: multiset of (down-set size, up-set size) per element.
  auto profile = [](const FiniteLattice& L) {
    std::vector<std::pair<int, int>> p(static_cast<std::size_t>(L.n));
    for (int x = 0; x < L.n; ++x) {
      int down = 0, up = 0;
      for (int y = 0; y < L.n; ++y) {
        down += L.leq(y, x);
        up += L.leq(x, y);
      }
      p[static_cast<std::size_t>(x)] = {down, up};
    }
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    return std::pair(p, sorted);
  };
  auto [pa, sa] = profile(a);
  auto [pb, sb] = profile(b);
  if (sa != sb) return false;

  // Brute force over bijections fixing the bounds.
  std::vector<int> middle_a, middle_b;
  for (int x = 0; x < n; ++x) {
    if (x != a.bottom && x != a.top) middle_a.push_back(x);
    if (x != b.bottom && x != b.top) middle_b.push_back(x);
  }
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  perm[static_cast<std::size_t>(a.bottom)] = b.bottom;
  perm[static_cast<std::size_t>(a.top)] = b.top;

  std::sort(middle_b.begin(), middle_b.end());
  do {
    for (std::size_t i = 0; i < middle_a.size(); ++i)
      perm[static_cast<std::size_t>(middle_a[i])] = middle_b[i];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (pa[static_cast<std::size_t>(x)] != pb[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])]) {
        ok = false;
        break;
      }
      for (int y = 0; y < n; ++y) {
        if (a.leq(x, y) != b.leq(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok && include_unary) {
      for (int x = 0; x < n; ++x) {
        if (perm[static_cast<std::size_t>(a.comp(x))] !=
            b.comp(perm[static_cast<std::size_t>(x)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(middle_b.begin(), middle_b.end()));
  return false;
}

}  // namespace allab
