#include "allab/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "allab/errors.hpp"

namespace allab {

namespace {

std::vector<std::pair<std::string, std::string>> pairs(
    std::initializer_list<std::pair<const char*, const char*>> xs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : xs) out.emplace_back(a, b);
  return out;
}

}  // namespace

FiniteLattice m3() {
  return build_from_covers(
      {"0", "a", "b", "c", "1"},
      pairs({{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}),
      {{"0", "1"}, {"a", "b"}, {"b", "c"}, {"c", "a"}, {"1", "0"}});
}

FiniteLattice fig2(Fig2Variant variant) {
  const std::vector<std::string> labels{"0", "a", "b", "c", "d", "e", "f", "g", "h", "1"};
  const auto covers = pairs({{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"},
                             {"a", "e"}, {"a", "f"}, {"b", "e"}, {"b", "g"},
                             {"c", "e"}, {"c", "h"}, {"d", "f"}, {"d", "g"}, {"d", "h"},
                             {"e", "1"}, {"f", "1"}, {"g", "1"}, {"h", "1"}});
  std::map<std::string, std::string> unary{{"0", "1"}, {"a", "g"}, {"b", "h"}, {"c", "f"},
                                           {"d", "e"}, {"e", "d"}, {"1", "0"}};
  if (variant == Fig2Variant::first) {
    unary["f"] = "c";
    unary["g"] = "a";
    unary["h"] = "b";
  } else {
    unary["f"] = "b";
    unary["g"] = "c";
    unary["h"] = "a";
  }
  return build_from_covers(labels, covers, unary);
}

FiniteLattice n5() {
  return build_from_covers(
      {"0", "a", "b", "c", "1"},
      pairs({{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}}),
      {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"c", "b"}, {"1", "0"}});
}

FiniteLattice chain(int k) {
  if (k < 1) throw Error("a chain needs at least one element");
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    if (i == 0) {
      labels.emplace_back("0");
    } else if (i == k - 1) {
      labels.emplace_back("1");
    } else {
      labels.emplace_back("c" + std::to_string(i));
    }
  }
  if (k == 1) labels = {"0"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i + 1 < k; ++i) covers.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(i + 1)]);
  std::map<std::string, std::string> unary;
  unary[labels.front()] = labels.back();
  unary[labels.back()] = labels.front();
  for (int i = 1; i + 1 < k; ++i) unary[labels[static_cast<std::size_t>(i)]] = labels[static_cast<std::size_t>(i)];
  return build_from_covers(labels, covers, unary);
}

FiniteLattice make_m_n(int n, const std::vector<int>& atom_perm) {
  if (n < 3) throw Error("make_m_n requires n >= 3");
  if (atom_perm.size() != static_cast<std::size_t>(n))
    throw NotADerangement("permutation size does not match the atom count");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const int img = atom_perm[static_cast<std::size_t>(i)];
    if (img < 0 || img >= n || hit[static_cast<std::size_t>(img)])
      throw NotADerangement("atom map is not a permutation");
    hit[static_cast<std::size_t>(img)] = true;
    if (img == i)
      throw NotADerangement("atom a" + std::to_string(i + 1) +
                            " is a fixed point (a ^ a' = a != 0)");
  }
  std::vector<std::string> labels{"0"};
  for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  labels.emplace_back("1");
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= n; ++i) {
    covers.emplace_back("0", labels[static_cast<std::size_t>(i)]);
    covers.emplace_back(labels[static_cast<std::size_t>(i)], "1");
  }
  std::map<std::string, std::string> unary{{"0", "1"}, {"1", "0"}};
  for (int i = 0; i < n; ++i)
    unary[labels[static_cast<std::size_t>(i + 1)]] =
        labels[static_cast<std::size_t>(atom_perm[static_cast<std::size_t>(i)] + 1)];
  return build_from_covers(labels, covers, unary);
}

std::vector<std::vector<int>> derangements_up_to_conjugacy(int n) {
  // Cycle types = partitions of n with every part >= 2, descending.
  std::vector<std::vector<int>> partitions;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      partitions.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 2; --part) {
      if (remaining - part == 1) continue;  // a leftover 1 would be a fixed point
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);

  std::vector<std::vector<int>> perms;
  for (const auto& p : partitions) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    int offset = 0;
    for (int len : p) {
      for (int i = 0; i < len; ++i)
        perm[static_cast<std::size_t>(offset + i)] = offset + (i + 1) % len;
      offset += len;
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

namespace {

std::uint64_t encode_order(int n, const std::vector<std::uint8_t>& leq,
                           const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (leq[static_cast<std::size_t>(x) * n + y])
        code |= 1ull << (perm[static_cast<std::size_t>(x)] * n + perm[static_cast<std::size_t>(y)]);
    }
  }
  return code;
}

// Minimal encoding over all relabelings that keep the bounds in place; a
// complete isomorphism invariant because isomorphisms preserve bounds.
std::uint64_t canonical_code(int n, const std::vector<std::uint8_t>& leq) {
  std::vector<int> middle;
  for (int i = 1; i + 1 < n; ++i) middle.push_back(i);
  std::vector<int> perm(static_cast<std::size_t>(n));
  perm[0] = 0;
  if (n > 1) perm[static_cast<std::size_t>(n - 1)] = n - 1;
  std::uint64_t best = UINT64_MAX;
  std::vector<int> target = middle;
  do {
    for (std::size_t i = 0; i < middle.size(); ++i)
      perm[static_cast<std::size_t>(middle[i])] = target[i];
    best = std::min(best, encode_order(n, leq, perm));
  } while (std::next_permutation(target.begin(), target.end()));
  return best;
}

}  // namespace

std::vector<FiniteLattice> enumerate_bounded_lattices(int n) {
  if (n < 1) throw Error("element count must be positive");
  if (n > 7) throw Error("exhaustive enumeration is capped at 7 elements");

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<int> identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;

  std::vector<FiniteLattice> out;
  if (n == 1) {
    out.push_back(lattice_from_leq(labels, {1}, identity));
    return out;
  }

  // Any bounded lattice admits a labeling along a linear extension: index 0
  // is the bottom, n-1 the top, and the order among the middle elements only
  // relates lower to higher indices. It therefore suffices to scan subsets of
  // middle pairs (i,j), i<j, closed under transitivity.
  std::vector<std::pair<int, int>> middle_pairs;
  for (int i = 1; i + 1 < n; ++i) {
    for (int j = i + 1; j + 1 < n; ++j) middle_pairs.emplace_back(i, j);
  }
  const std::uint32_t masks = 1u << middle_pairs.size();
  std::set<std::uint64_t> seen;

  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      leq[static_cast<std::size_t>(i) * n + i] = 1;
      leq[static_cast<std::size_t>(0) * n + i] = 1;
      leq[static_cast<std::size_t>(i) * n + (n - 1)] = 1;
    }
    for (std::size_t k = 0; k < middle_pairs.size(); ++k) {
      if ((mask >> k) & 1u)
        leq[static_cast<std::size_t>(middle_pairs[k].first) * n + middle_pairs[k].second] = 1;
    }
    // Transitivity among middle elements (relations through the bounds hold
    // automatically).
    bool transitive = true;
    for (int i = 1; i + 1 < n && transitive; ++i) {
      for (int j = i + 1; j + 1 < n && transitive; ++j) {
        if (!leq[static_cast<std::size_t>(i) * n + j]) continue;
        for (int k = j + 1; k + 1 < n; ++k) {
          if (leq[static_cast<std::size_t>(j) * n + k] && !leq[static_cast<std::size_t>(i) * n + k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (!transitive) continue;

    auto candidate = try_lattice_from_leq(labels, leq, identity);
    if (!candidate) continue;
    if (seen.insert(canonical_code(n, candidate->leq_tab)).second)
      out.push_back(std::move(*candidate));
  }
  return out;
}

const std::vector<NamedFixture>& fixtures() {
  static const std::vector<NamedFixture> fx = [] {
    std::vector<NamedFixture> v;
    v.push_back({"m3", m3(), "M3 with the cyclic atom complement a'=b, b'=c, c'=a"});
    v.push_back({"fig2_first", fig2(Fig2Variant::first),
                 "10-element modular variety member, involutive complement table"});
    v.push_back({"fig2_second", fig2(Fig2Variant::second),
                 "10-element modular variety member, non-involutive table (f'=b, g'=c, h'=a)"});
    v.push_back({"n5", n5(), "pentagon 0<a<c<1, 0<b<1 with a'=b, b'=a, c'=b"});
    for (int k = 4; k <= 6; ++k) {
      std::vector<int> cycle(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % k;
      v.push_back({"m" + std::to_string(k), make_m_n(k, cycle),
                   "M_" + std::to_string(k) + " with the full atom cycle as complement"});
    }
    return v;
  }();
  return fx;
}

}  // namespace allab
