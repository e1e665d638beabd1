#pragma once

#include "mtc/bigint.hpp"
#include "mtc/minuscule_catalog.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtc {

/// D = k imaginary quadratic.
/// D = k imaginary quadratic; both are split out because rules key on them.
enum class EndoType { I, II, III, IVImagQuad, IVOther, Q };

enum class Reduction { GoodOrUnknown, BadSemistableSplit };

struct Signature {
  long sigma;
  long rho;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Invariants of an abelian variety A over a number field.
struct AVDescriptor {
  long g = 1;
  EndoType endo_type = EndoType::Q;
  long endo_degree = 1;  // (D : Q)
  std::optional<Signature> signature;
  long toric_rank = 0;
  Reduction reduction = Reduction::GoodOrUnknown;
  bool simple = false;
  /// Caller asserts that the semisimple parts of the Hodge and Galois Lie
  /// algebras are simple, from knowledge outside these rules.
  bool simple_algebras = false;

  bool bad() const { return reduction == Reduction::BadSemistableSplit; }
};

std::string_view to_string(EndoType t);
/// Accepts I, II, III, k, IV, Q (the CLI spellings).
EndoType parse_endo_type(std::string_view text);

enum class Conclusion {
  MTAndDivisorial,
  MT,
  MTOrHodgeDivisorial,
  ExceptionPairHit,
  NotCovered,
  InputInconsistent,
};

std::string_view to_string(Conclusion c);

/// Higher is stronger; InputInconsistent ranks lowest.
int strength(Conclusion c);

enum class Rule {
  Ribet,             // R1
  FourfoldEndo,      // R2
  MinimalReduction,  // R3
  FourfoldBad,       // R4
  CoprimeK,          // R5
  CoprimeQ,          // R6
  RankTwoQ,          // R7
  Disjunction,       // R8
};

/// "R1".."R8"
std::string_view rule_id(Rule r);
/// Citation tag, e.g. "Thm6.4".
std::string_view citation(Rule r);
/// One-line statement of what the rule concludes and from which hypotheses.
std::string_view summary(Rule r);

struct FiredRule {
  Rule rule;
  Conclusion conclusion;
  std::string note;
};

/// The exclusion-engine query behind a coprime-rank rule.
struct ExclusionEvidence {
  Rule rule;
  BigInt n;
  FormClass form;
  BigInt r;
  std::vector<IrrepDescriptor> survivors;
};

struct UnmetRule {
  Rule rule;
  std::string reason;
};

struct Verdict {
  Conclusion conclusion = Conclusion::NotCovered;
  std::vector<std::string> citations;
  std::string notes;
  std::vector<FiredRule> fired;
  std::vector<ExclusionEvidence> evidence;
  std::vector<UnmetRule> unmet;
};

struct Inconsistency {
  std::string constraint;
  std::string citation;
};

/// std::nullopt when the descriptor is internally consistent.
std::optional<Inconsistency> validate(const AVDescriptor& d);

/// Runs R1..R8 in order and keeps every rule that fires; the conclusion is the
/// strongest fired one. Inconsistent input yields an InputInconsistent verdict.
Verdict decide(const AVDescriptor& d);

/// Multi-line human-readable report.
std::string explain(const Verdict& v);

/// One JSON object on a single line: conclusion, citations, notes.
std::string to_machine(const Verdict& v);

}  // namespace mtc
