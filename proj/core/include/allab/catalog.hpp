#pragma once

#include <string>
#include <vector>

#include "allab/lattice.hpp"

namespace allab {

/// The five-element modular lattice M3 (three atoms) with the cyclic
/// complement table a'=b, b'=c, c'=a.
FiniteLattice m3();

/// Which of the two complement tables the ten-element fixture carries; they
/// differ only on the images of f, g, h.
enum class Fig2Variant { first, second };

/// The ten-element modular lattice with atoms a,b,c,d, coatoms e,f,g,h and
/// the chosen complement table. The first table is an involution, the second
/// is not.
FiniteLattice fig2(Fig2Variant variant);

/// The pentagon 0 < a < c < 1, 0 < b < 1 with a'=b, b'=a, c'=b.
FiniteLattice n5();

/// Chain with k elements, 0' = top, top' = 0, everything else self-mapped.
FiniteLattice chain(int k);

/// M_n: bottom, n pairwise-incomparable atoms a1..an, top. atom_perm is a
/// permutation of 0..n-1 defining a_i' = a_{perm[i]}; it must be fixed-point
/// free (a fixed point would give a ^ a' = a != 0), else NotADerangement.
/// Requires n >= 3.
FiniteLattice make_m_n(int n, const std::vector<int>& atom_perm);

/// One fixed-point-free permutation of 0..n-1 per cycle type (parts >= 2),
/// deterministic order. Conjugate permutations give isomorphic algebras.
std::vector<std::vector<int>> derangements_up_to_conjugacy(int n);

/// Every bounded lattice with exactly n elements, one per isomorphism class,
/// in a deterministic order. The unary map of the results is the identity;
/// pair with all_complementations or replace_unary as needed. Supported for
/// 1 <= n <= 7 (the labeled search space explodes beyond that).
std::vector<FiniteLattice> enumerate_bounded_lattices(int n);

struct NamedFixture {
  std::string id;
  FiniteLattice lattice;
  std::string provenance;
};

/// The shipped fixtures (m3, fig2_first, fig2_second, n5, m4..m6 cyclic).
const std::vector<NamedFixture>& fixtures();

}  // namespace allab
