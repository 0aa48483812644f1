#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "allab/lattice.hpp"
#include "allab/term.hpp"

namespace allab {

/// A partition of the carrier in canonical form: block_of[x] is the least
/// element index of x's block. Canonical form makes equality and set
/// membership structural.
struct Congruence {
  std::vector<int> block_of;

  int n() const { return static_cast<int>(block_of.size()); }
  bool related(int x, int y) const { return block_of[x] == block_of[y]; }
  int block_count() const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence& a, const Congruence& b) {
    return a.block_of <=> b.block_of;
  }
};

Congruence discrete(int n);  // every block a singleton
Congruence full(int n);      // one block

/// Canonicalize an arbitrary block assignment (equal ids = same block).
Congruence canonicalize(const std::vector<int>& assignment);

/// Build from explicit blocks; they must partition 0..n-1.
Congruence from_blocks(int n, const std::vector<std::vector<int>>& blocks);

/// Blocks as sorted index lists, ordered by least element.
std::vector<std::vector<int>> blocks_of(const Congruence& c);

bool refines(const Congruence& a, const Congruence& b);  // a <= b as relations
Congruence join(const Congruence& a, const Congruence& b);
Congruence meet(const Congruence& a, const Congruence& b);

/// Compatibility of a partition with v, ^ and '.
bool is_congruence(const FiniteLattice& L, const Congruence& part);

/// Least congruence collapsing a and b, by fixpoint closure: every merged
/// pair propagates through x v c, x ^ c (for every fixed c) and x'.
Congruence principal_congruence(const FiniteLattice& L, int a, int b);

/// The whole congruence lattice: join-closure of the principal congruences
/// plus the discrete one. Sorted by descending block count, then
/// lexicographically; deterministic.
std::vector<Congruence> all_congruences(const FiniteLattice& L);

struct CongruenceProperties {
  bool permutable = false;             // R o S = S o R for all congruences
  bool distributive = false;           // the congruence lattice is distributive
  bool regular = false;                // no two distinct congruences share a class
  bool simple = false;                 // exactly the two trivial congruences
  bool subdirectly_irreducible = false;  // meet of non-discrete congruences is non-discrete
};

CongruenceProperties check_congruence_properties(const FiniteLattice& L);

/// Exhaustive verification of the term conditions behind permutability,
/// distributivity and regularity:
///   p(x,x,z) = z and p(x,z,z) = x,
///   m(x,x,y) = m(x,y,x) = m(y,x,x) = x,
///   t1(x,y) ^ z = z and t1(x,y)' v z = z together hold iff x = y.
/// Throws NotInV when L is not a variety member.
struct Theorem2Verdict {
  bool malcev_ok = true;
  std::optional<Assignment> malcev_witness;
  bool majority_ok = true;
  std::optional<Assignment> majority_witness;
  bool regularity_ok = true;
  std::optional<std::array<int, 3>> regularity_witness;  // (x,y,z)
};

Theorem2Verdict verify_theorem2_terms(const FiniteLattice& L);

}  // namespace allab
