#pragma once

#include "mtc/bigint.hpp"
#include "mtc/minuscule_catalog.hpp"

#include <string_view>
#include <vector>

namespace mtc {

/// A candidate inclusion inner ⊆ outer ⊆ sl(U) of irreducible minuscule
/// representations on the same space U.
struct CandidatePair {
  IrrepDescriptor inner;
  IrrepDescriptor outer;
  BigInt ambient_dim;

  /// Throws std::invalid_argument unless both dimensions agree.
  static CandidatePair make(IrrepDescriptor inner, IrrepDescriptor outer);
};

enum class ExclusionStatus { Admissible, Excluded };

/// Which rule decided a pair. Rules are tried in declaration order.
enum class ExclusionRule {
  ExceptionalInner,
  OuterNotClassicalW1,
  TrivialInclusion,
  NotCoprime,
  SpinGcd,
  SpinD4,
  W1RigidD,
  W1RigidC,
  W1RigidB,
  FormMismatch,
  SelfDualA,
  DivisibilityA,
  RankMismatchA,
  AdmissibleA,
};

struct ExclusionVerdict {
  ExclusionStatus status;
  ExclusionRule rule;

  bool admissible() const { return status == ExclusionStatus::Admissible; }
  /// Stable citation tag of the rule, e.g. "Lemma6.3:spin-gcd>2".
  std::string_view reason() const;
};

std::string_view to_string(ExclusionStatus s);
std::string_view reason_tag(ExclusionRule rule);

/// The classical w_1 representations of dimension n with the given form
/// class: sl_n for NonSelfDual, sp_n for Symplectic, so_n for Orthogonal.
/// Throws std::invalid_argument for n <= 4.
std::vector<IrrepDescriptor> classical_outer_shapes(const BigInt& n, FormClass form);

/// Decides whether `pair.inner` may sit properly inside `pair.outer` given a
/// square-zero element of rank r in the inner algebra. The first rule that
/// fires is reported.
ExclusionVerdict check_pair(const CandidatePair& pair, const BigInt& r);

/// All minuscule representations of dimension n, sorted. The A_m family is
/// listed only up to duality (s <= (m+1)/2); exceptional and spin modules
/// are included. Throws std::out_of_range when n does not fit in a long.
std::vector<IrrepDescriptor> minuscule_of_dim(const BigInt& n);

/// Inner candidates of dimension n that admit a proper inclusion into one of
/// classical_outer_shapes(n, form). Empty means the inner algebra must equal
/// the outer one. Throws std::invalid_argument when gcd(r, n) != 1 or n <= 4.
std::vector<IrrepDescriptor> surviving_inners(const BigInt& n, FormClass form, const BigInt& r);

}  // namespace mtc
