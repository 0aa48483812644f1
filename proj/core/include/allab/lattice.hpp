#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace allab {

/// A finite bounded lattice with a total unary operation ' on the carrier.
///
/// Elements are contiguous indices 0..n-1; labels exist only for I/O. The
/// order, join and meet live in flat n*n tables, so every query is a lookup.
/// The unary map need not be a complementation (that is needed to run
/// adjointness experiments with arbitrary maps); `complemented` records
/// whether x ^ x' = 0 and x v x' = 1 was verified for every x at build time.
/// Instances are immutable after construction and safe to share across
/// threads.
struct FiniteLattice {
  int n = 0;
  std::vector<std::string> labels;
  int bottom = 0;
  int top = 0;
  bool complemented = false;

  std::vector<std::uint8_t> leq_tab;  // n*n, leq_tab[x*n+y] != 0 iff x <= y
  std::vector<int> join_tab;          // n*n
  std::vector<int> meet_tab;          // n*n
  std::vector<int> unary_map;         // size n, total

  bool leq(int x, int y) const { return leq_tab[static_cast<std::size_t>(x) * n + y] != 0; }
  int join(int x, int y) const { return join_tab[static_cast<std::size_t>(x) * n + y]; }
  int meet(int x, int y) const { return meet_tab[static_cast<std::size_t>(x) * n + y]; }
  int comp(int x) const { return unary_map[static_cast<std::size_t>(x)]; }

  const std::string& label(int x) const { return labels[static_cast<std::size_t>(x)]; }
  /// Index of a label; throws UnknownLabel.
  int index_of(std::string_view lbl) const;
};

struct ClassifierFlags {
  bool is_lattice = false;
  bool is_complemented = false;
  bool is_modular = false;
  bool is_distributive = false;
  bool unary_is_involution = false;
  bool unary_is_antitone = false;
  bool is_ortholattice = false;
  bool is_orthomodular = false;
};

/// Classifier verdicts plus the first counterexample (in lexicographic scan
/// order over element indices) for every flag that failed.
struct ClassifyReport {
  ClassifierFlags flags;
  std::optional<int> complemented_witness;              // x with x^x' != 0 or x v x' != 1
  std::optional<std::array<int, 3>> modular_witness;    // x<=z but x v (y^z) != (x v y)^z
  std::optional<std::array<int, 3>> distributive_witness;
  std::optional<int> involution_witness;                // x with (x')' != x
  std::optional<std::pair<int, int>> antitone_witness;  // x<=y but not y'<=x'
  std::optional<std::pair<int, int>> orthomodular_witness;  // x<=y but y != x v (y^x')
};

/// Build a lattice from its Hasse diagram. `leq` becomes the
/// reflexive-transitive closure of the cover pairs; join/meet tables are
/// computed and checked for uniqueness of suprema and infima.
///
/// Throws UnknownLabel, DuplicateLabel, PartialUnary, NotALattice (cover
/// cycles, or a pair without a unique least upper / greatest lower bound,
/// reported with its minimal bounds) and NoBounds.
FiniteLattice build_from_covers(const std::vector<std::string>& labels,
                                const std::vector<std::pair<std::string, std::string>>& covers,
                                const std::map<std::string, std::string>& unary);

/// Build from an explicit order matrix (row-major n*n). Throws NotALattice /
/// NoBounds like build_from_covers.
FiniteLattice lattice_from_leq(std::vector<std::string> labels, std::vector<std::uint8_t> leq,
                               std::vector<int> unary);

/// Non-throwing variant used by enumeration filters.
std::optional<FiniteLattice> try_lattice_from_leq(std::vector<std::string> labels,
                                                  std::vector<std::uint8_t> leq,
                                                  std::vector<int> unary);

/// Same carrier and tables, different unary map.
FiniteLattice replace_unary(const FiniteLattice& L, std::vector<int> unary);

/// Exhaustively re-checks every structural invariant (idempotency,
/// commutativity, associativity, absorption, the order/table correspondence
/// and the bounds). Throws InternalViolation with a description on failure.
void validate(const FiniteLattice& L);

/// Flags only; decided by exhaustive checks over pairs/triples.
ClassifierFlags classify(const FiniteLattice& L);

/// Flags plus first-failure witnesses.
ClassifyReport classify_report(const FiniteLattice& L);

/// All total maps c with x ^ c(x) = 0 and x v c(x) = 1 for every x, in
/// lexicographic order; empty if some element has no complement.
std::vector<std::vector<int>> all_complementations(const FiniteLattice& L);

/// Componentwise product; element (i,j) of L1 x L2 has index i*n2 + j.
FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b);

/// The cover relation of L (its reduced Hasse diagram), pairs (lower, upper)
/// ordered lexicographically by index.
std::vector<std::pair<int, int>> cover_pairs(const FiniteLattice& L);

/// Isomorphism as bounded lattices; `include_unary` additionally requires the
/// bijection to commute with '.
bool are_isomorphic(const FiniteLattice& a, const FiniteLattice& b, bool include_unary);

}  // namespace allab
