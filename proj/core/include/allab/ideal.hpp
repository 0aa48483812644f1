#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "allab/congruence.hpp"
#include "allab/lattice.hpp"
#include "allab/term.hpp"

namespace allab {

/// Subsets of the carrier as bitsets; bit i = element i. Carriers handled by
/// the ideal machinery are capped at 31 elements.
using ElemSet = std::uint32_t;

bool set_contains(ElemSet s, int x);
ElemSet set_insert(ElemSet s, int x);
int set_size(ElemSet s);
std::vector<int> set_elements(ElemSet s);

/// Labels of the members, ordered by element index.
std::vector<std::string> set_labels(const FiniteLattice& L, ElemSet s);

/// Parse a comma-separated label list ("e,1") into a subset.
ElemSet parse_label_set(const FiniteLattice& L, std::string_view text);

/// Value tables of the two witness terms behind the ideal machinery:
///   t1(x,y)   = (x ^ y) v (x v y)'
///   t(x,y,z)  = ((((x v y) ^ z)' v x) ^ (x v y))' v x) ^ (((x v y) ^ z)' v y) ^ (x v y)
/// t is the expensive one; both are memoized once per lattice.
struct IdealTermTables {
  int n = 0;
  std::vector<int> t1;  // n*n
  std::vector<int> t;   // n*n*n
  int t1_at(int x, int y) const { return t1[static_cast<std::size_t>(x) * n + y]; }
  int t_at(int x, int y, int z) const {
    return t[(static_cast<std::size_t>(x) * n + y) * n + z];
  }
};

IdealTermTables ideal_term_tables(const FiniteLattice& L);

/// The finite basis of ideal terms: three composite terms plus the constant 1.
/// x_vars are universally quantified over the carrier, y_vars range over the
/// candidate subset.
struct IdealBasisTerm {
  std::string name;
  TermPtr term;
  std::vector<std::string> x_vars;
  std::vector<std::string> y_vars;
};

const std::vector<IdealBasisTerm>& ideal_basis();

/// True iff 1 is in S and S is closed under the basis terms for every
/// x-assignment in L and y-assignment in S. Throws NotInV.
bool is_ideal(const FiniteLattice& L, ElemSet S);

/// Least ideal containing S (and 1), by fixpoint iteration of basis-term
/// images. Throws NotInV.
ElemSet ideal_closure(const FiniteLattice& L, ElemSet S);

/// Every subset passing is_ideal, sorted by size then lexicographically as
/// index lists. Uses subset enumeration for n <= 20 and congruence kernels
/// beyond that. Throws NotInV.
std::vector<ElemSet> all_ideals(const FiniteLattice& L);

/// The congruence {(x,y) : t1(x,y) in I}. Verifies before returning that the
/// relation is a congruence whose class of 1 is exactly I; a failure of that
/// verification throws InternalViolation (it cannot happen on variety
/// members). Throws NotAnIdeal when I fails is_ideal.
Congruence theta_of_ideal(const FiniteLattice& L, ElemSet I);

/// Checks that ideals and congruence kernels coincide: the set of classes of
/// 1 over all congruences equals all_ideals, and no two congruences share
/// their class of 1.
struct CoincidenceReport {
  bool holds = false;
  int ideal_count = 0;
  int kernel_count = 0;
  std::vector<ElemSet> ideals_without_kernel;
  std::vector<ElemSet> kernels_without_ideal;
  bool kernel_map_injective = true;
};

CoincidenceReport verify_kernel_coincidence(const FiniteLattice& L);

/// The eight auxiliary identities satisfied by the variety:
///   (i)    x v (x ^ y)' = 1
///   (ii)   y v (x ^ y)' = 1
///   (iii)  x = (x v y) ^ (x v (x v y)')
///   (iv)   y = (x v y) ^ (y v (x v y)')
///   (v)    (x v y) ^ t1(x,y) = x ^ y
///   (vi)   t1(x,x) = 1
///   (vii)  tBig(x,y,t1(x,y)) = x
///   (viii) tBig(x,y,1) = y
const std::array<Identity, 8>& lemma_lem1_identities();

struct Lemma1IdentitiesReport {
  std::array<CheckResult, 8> results;
  bool all_hold = true;
};

/// Exhaustively checks the eight identities. Throws NotInV.
Lemma1IdentitiesReport verify_lemma_lem1(const FiniteLattice& L);

}  // namespace allab
