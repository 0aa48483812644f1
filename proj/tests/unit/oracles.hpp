#pragma once

// Test-only oracles. Each reimplements a result by a route independent of the
// library path it validates, so the two can disagree only on a real bug.

#include <cstdint>
#include <vector>

#include "allab/congruence.hpp"
#include "allab/lattice.hpp"

namespace allab::oracle {

/// Brute force over all n^n unary maps, keeping those with x ^ c(x) = 0 and
/// x v c(x) = 1. Checks all_complementations. Requires n^n to stay small.
std::vector<std::vector<int>> complement_maps(const FiniteLattice& L);

/// Searches all 5-element subsets closed under join and meet for a copy of
/// the pentagon (modularity oracle) or the diamond.
bool has_pentagon_sublattice(const FiniteLattice& L);
bool has_diamond_sublattice(const FiniteLattice& L);

/// Every congruence, found by scanning all partitions of the carrier
/// (restricted growth strings) and testing compatibility directly.
std::vector<Congruence> congruences_by_partition_scan(const FiniteLattice& L);

/// Bounded-lattice count up to isomorphism, by enumerating transitively
/// reduced acyclic cover sets, closing them, filtering lattices, and
/// deduplicating with a plain all-permutations isomorphism search.
int count_lattices_by_cover_search(int n);

/// Plain all-permutations order-isomorphism test (no pruning).
bool isomorphic_orders(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace allab::oracle
