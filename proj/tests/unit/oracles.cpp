#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace allab::oracle {

std::vector<std::vector<int>> complement_maps(const FiniteLattice& L) {
  const int n = L.n;
  std::vector<std::vector<int>> out;
  std::vector<int> map(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool good = true;
    for (int x = 0; x < n; ++x) {
      if (L.meet(x, map[static_cast<std::size_t>(x)]) != L.bottom ||
          L.join(x, map[static_cast<std::size_t>(x)]) != L.top) {
        good = false;
        break;
      }
    }
    if (good) out.push_back(map);
    int pos = n - 1;
    while (pos >= 0 && ++map[static_cast<std::size_t>(pos)] == n) {
      map[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

namespace {

// Reference 5-element order matrices. Pentagon: 0 < 1 < 3 < 4, 0 < 2 < 4.
// Diamond: 0 < 1,2,3 < 4.
const std::uint8_t kPentagon[5][5] = {
    {1, 1, 1, 1, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
const std::uint8_t kDiamond[5][5] = {
    {1, 1, 1, 1, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};

bool subset_matches(const FiniteLattice& L, const std::vector<int>& sub,
                    const std::uint8_t pattern[5][5]) {
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) {
      for (int j = 0; j < 5; ++j) {
        const bool le = L.leq(sub[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                              sub[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
        if (le != (pattern[i][j] != 0)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool has_five_element_sublattice(const FiniteLattice& L, const std::uint8_t pattern[5][5]) {
  const int n = L.n;
  std::vector<int> sub(5);
  // All 5-subsets.
  for (sub[0] = 0; sub[0] < n; ++sub[0]) {
    for (sub[1] = sub[0] + 1; sub[1] < n; ++sub[1]) {
      for (sub[2] = sub[1] + 1; sub[2] < n; ++sub[2]) {
        for (sub[3] = sub[2] + 1; sub[3] < n; ++sub[3]) {
          for (sub[4] = sub[3] + 1; sub[4] < n; ++sub[4]) {
            bool closed = true;
            for (int i = 0; i < 5 && closed; ++i) {
              for (int j = i + 1; j < 5; ++j) {
                const int jo = L.join(sub[static_cast<std::size_t>(i)], sub[static_cast<std::size_t>(j)]);
                const int me = L.meet(sub[static_cast<std::size_t>(i)], sub[static_cast<std::size_t>(j)]);
                if (std::find(sub.begin(), sub.end(), jo) == sub.end() ||
                    std::find(sub.begin(), sub.end(), me) == sub.end()) {
                  closed = false;
                  break;
                }
              }
            }
            if (closed && subset_matches(L, sub, pattern)) return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

bool has_pentagon_sublattice(const FiniteLattice& L) {
  return has_five_element_sublattice(L, kPentagon);
}

bool has_diamond_sublattice(const FiniteLattice& L) {
  return has_five_element_sublattice(L, kDiamond);
}

std::vector<Congruence> congruences_by_partition_scan(const FiniteLattice& L) {
  const int n = L.n;
  std::vector<Congruence> out;
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool compatible = true;
    for (int x = 0; x < n && compatible; ++x) {
      for (int y = x + 1; y < n && compatible; ++y) {
        if (a[static_cast<std::size_t>(x)] != a[static_cast<std::size_t>(y)]) continue;
        if (a[static_cast<std::size_t>(L.comp(x))] != a[static_cast<std::size_t>(L.comp(y))]) {
          compatible = false;
          break;
        }
        for (int z = 0; z < n; ++z) {
          if (a[static_cast<std::size_t>(L.join(x, z))] != a[static_cast<std::size_t>(L.join(y, z))] ||
              a[static_cast<std::size_t>(L.meet(x, z))] != a[static_cast<std::size_t>(L.meet(y, z))]) {
            compatible = false;
            break;
          }
        }
      }
    }
    if (compatible) out.push_back(canonicalize(a));

    // Next restricted growth string.
    int i = n - 1;
    for (; i > 0; --i) {
      int max_prefix = 0;
      for (int j = 0; j < i; ++j) max_prefix = std::max(max_prefix, a[static_cast<std::size_t>(j)]);
      if (a[static_cast<std::size_t>(i)] <= max_prefix) break;
    }
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) a[static_cast<std::size_t>(j)] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Congruence& x, const Congruence& y) {
    const int bx = x.block_count(), by = y.block_count();
    if (bx != by) return bx > by;
    return x.block_of < y.block_of;
  });
  return out;
}

namespace {

struct OrderMatrix {
  int n;
  std::vector<std::uint8_t> leq;
  bool at(int x, int y) const { return leq[static_cast<std::size_t>(x) * n + y] != 0; }
};

bool oracle_is_lattice(const OrderMatrix& m) {
  const int n = m.n;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      int lub_count = 0, glb_count = 0;
      for (int z = 0; z < n; ++z) {
        if (m.at(x, z) && m.at(y, z)) {
          bool minimal = true;
          for (int w = 0; w < n; ++w) {
            if (w != z && m.at(x, w) && m.at(y, w) && m.at(w, z)) {
              minimal = false;
              break;
            }
          }
          if (minimal) ++lub_count;
        }
        if (m.at(z, x) && m.at(z, y)) {
          bool maximal = true;
          for (int w = 0; w < n; ++w) {
            if (w != z && m.at(w, x) && m.at(w, y) && m.at(z, w)) {
              maximal = false;
              break;
            }
          }
          if (maximal) ++glb_count;
        }
      }
      if (lub_count != 1 || glb_count != 1) return false;
    }
  }
  return true;
}

bool oracle_orders_isomorphic(const OrderMatrix& a, const OrderMatrix& b) {
  const int n = a.n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n; ++y) {
        if (a.at(x, y) != b.at(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

int count_lattices_by_cover_search(int n) {
  if (n == 1) return 1;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<OrderMatrix> kept;
  const std::uint32_t total = 1u << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1u) adj[static_cast<std::size_t>(slots[k].first) * n + slots[k].second] = 1;
    }
    // Reachability closure of the cover candidates.
    OrderMatrix m{n, adj};
    for (int i = 0; i < n; ++i) m.leq[static_cast<std::size_t>(i) * n + i] = 1;
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        if (!m.at(i, k)) continue;
        for (int j = 0; j < n; ++j) {
          if (m.at(k, j)) m.leq[static_cast<std::size_t>(i) * n + j] = 1;
        }
      }
    }
    // Keep each labeled poset once: the edge set must be its own transitive
    // reduction (no edge implied by a two-step path).
    bool reduced = true;
    for (std::size_t k = 0; k < slots.size() && reduced; ++k) {
      if (!((mask >> k) & 1u)) continue;
      const auto [i, j] = slots[k];
      for (int w = 0; w < n; ++w) {
        if (w != i && w != j && m.at(i, w) && m.at(w, j)) {
          reduced = false;
          break;
        }
      }
    }
    if (!reduced) continue;

    // Unique bottom and top.
    int bottoms = 0, tops = 0;
    for (int x = 0; x < n; ++x) {
      bool least = true, greatest = true;
      for (int y = 0; y < n; ++y) {
        least = least && m.at(x, y);
        greatest = greatest && m.at(y, x);
      }
      bottoms += least;
      tops += greatest;
    }
    if (bottoms != 1 || tops != 1) continue;
    if (!oracle_is_lattice(m)) continue;

    bool fresh = true;
    for (const auto& other : kept) {
      if (oracle_orders_isomorphic(m, other)) {
        fresh = false;
        break;
      }
    }
    if (fresh) kept.push_back(std::move(m));
  }
  return static_cast<int>(kept.size());
}

bool isomorphic_orders(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.n != b.n) return false;
  return oracle_orders_isomorphic(OrderMatrix{a.n, a.leq_tab}, OrderMatrix{b.n, b.leq_tab});
}

}  // namespace allab::oracle
