#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "allab/lattice.hpp"
#include "allab/term.hpp"

namespace allab {

/// x (.) y = (x v y') ^ y
int sasaki_product(const FiniteLattice& L, int x, int y);

/// x -> y = x' v (x ^ y)
int sasaki_residual(const FiniteLattice& L, int x, int y);

/// Whether the implication "x (.) y <= z  =>  x <= y -> z" (forward) or its
/// converse (backward) failed first.
enum class AdjointDirection : std::uint8_t { forward, backward };

struct AdjointReport {
  bool holds = true;
  std::optional<std::array<int, 3>> witness;  // first failing (x,y,z), lex order
  std::optional<AdjointDirection> direction;
  std::uint64_t triples_checked = 0;
};

/// Decides whether (.) and -> form an adjoint pair: x (.) y <= z iff
/// x <= y -> z for all triples. Scans triples lexicographically and stops at
/// the first failure. The unary map need not be a complementation.
AdjointReport check_adjoint(const FiniteLattice& L);

struct ConditionVerdict {
  bool holds = true;
  std::optional<Assignment> witness;
};

/// Verdicts of the six residuation conditions, each checked independently:
///   (a) x(.)y <= z  =>  x <= y->z
///   (b) x v y' = y' v ((x v y') ^ y)
///   (c) x' <= y  =>  y = x' v (y ^ x)
///   (d) x <= y->z  =>  x(.)y <= z
///   (e) x ^ y = x ^ ((x ^ y) v x')
///   (f) x <= y  =>  x = (y' v x) ^ y
/// On every complemented lattice (a), (b), (c) hold or fail together, and so
/// do (d), (e), (f); the two agreement booleans record that.
struct Theorem1Report {
  ConditionVerdict a, b, c, d, e, f;
  bool group_abc_agrees = true;
  bool group_def_agrees = true;
};

/// Throws NotComplemented when the unary map is not a complementation.
Theorem1Report check_theorem1(const FiniteLattice& L);

/// The six conditions as parsed statements, index 0..5 = (a)..(f).
const std::array<Statement, 6>& theorem1_conditions();

struct VarietyReport {
  bool complemented = false;
  std::optional<int> complement_witness;  // element without complement under '
  CheckResult identity_b;
  CheckResult identity_e;
  bool member = false;
};

/// Membership in the variety of complemented lattices whose Sasaki operations
/// are adjoint, decided by the identity characterization: complemented plus
/// identities (b) and (e). Equivalence with check_adjoint on complemented
/// lattices is exercised by tests, not assumed here.
VarietyReport check_variety(const FiniteLattice& L);

bool is_member_of_v(const FiniteLattice& L);

/// Adjointness of the Sasaki operations forces ' to be a complementation.
/// `vacuous` when adjointness fails, `confirmed` when it holds and ' is a
/// complementation, `violation` otherwise (must never occur).
enum class Lemma1Verdict : std::uint8_t { vacuous, confirmed, violation };

Lemma1Verdict check_lemma1(const FiniteLattice& L);

}  // namespace allab
