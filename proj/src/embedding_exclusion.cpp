#include "mtc/embedding_exclusion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mtc {

namespace {

int as_rank(long x) {
  if (x > 1'000'000'000L) throw std::out_of_range("rank too large");
  return static_cast<int>(x);
}

bool is_classical_w1(const IrrepDescriptor& d) { return d.is_classical() && d.index() == 1; }

BigInt a_rank(int m, int s) {
  return binomial(static_cast<unsigned long>(m - 1), static_cast<unsigned long>(s - 1));
}

ExclusionVerdict excluded(ExclusionRule r) { return {ExclusionStatus::Excluded, r}; }
ExclusionVerdict admissible(ExclusionRule r) { return {ExclusionStatus::Admissible, r}; }

ExclusionVerdict check_type_a(const IrrepDescriptor& inner, const BigInt& r) {
  const int m = inner.rank();
  if (m + 1 == 2 * inner.index()) return excluded(ExclusionRule::SelfDualA);

  const int s = std::min(inner.index(), m + 1 - inner.index());
  const BigInt inner_rank = a_rank(m, s);
  const BigInt weight_product = BigInt(s) * (m + 1 - s);
  if (!mpz_divisible_p(weight_product.get_mpz_t(), inner_rank.get_mpz_t()))
    return excluded(ExclusionRule::DivisibilityA);
  if (r != inner_rank) return excluded(ExclusionRule::RankMismatchA);
  return admissible(ExclusionRule::AdmissibleA);
}

}  // namespace

CandidatePair CandidatePair::make(IrrepDescriptor inner, IrrepDescriptor outer) {
  if (inner.dim() != outer.dim())
    throw std::invalid_argument("dimension mismatch: " + inner.label() + " has dim " + inner.dim().get_str() +
                                ", " + outer.label() + " has dim " + outer.dim().get_str());
  BigInt n = inner.dim();
  return {std::move(inner), std::move(outer), std::move(n)};
}

std::string_view to_string(ExclusionStatus s) {
  return s == ExclusionStatus::Admissible ? "Admissible" : "Excluded";
}

std::string_view reason_tag(ExclusionRule rule) {
  switch (rule) {
    case ExclusionRule::ExceptionalInner: return "0.5.1:inner-not-exceptional";
    case ExclusionRule::OuterNotClassicalW1: return "Thm6.1:outer-classical-w1";
    case ExclusionRule::TrivialInclusion: return "6.2:no-proper-inclusion";
    case ExclusionRule::NotCoprime: return "6.2:gcd(r,n)=1";
    case ExclusionRule::SpinGcd: return "Lemma6.3:spin-gcd(r,n)>2";
    case ExclusionRule::SpinD4: return "Prop6.3:D4-spin";
    case ExclusionRule::W1RigidD: return "Prop6.3:D-w1-rigid";
    case ExclusionRule::W1RigidC: return "Prop6.3:C-w1-rigid";
    case ExclusionRule::W1RigidB: return "Prop6.3:B-w1-rigid";
    case ExclusionRule::FormMismatch: return "6.2:form-class-simultaneous";
    case ExclusionRule::SelfDualA: return "Prop6.3:A-self-dual";
    case ExclusionRule::DivisibilityA: return "Prop6.3:A-divisibility";
    case ExclusionRule::RankMismatchA: return "Prop6.3:A-rank-binom(m-1,s-1)";
    case ExclusionRule::AdmissibleA: return "Prop6.3:A-s=3,m=7-or-s=2";
  }
  return "?";
}

std::string_view ExclusionVerdict::reason() const { return reason_tag(rule); }

std::vector<IrrepDescriptor> classical_outer_shapes(const BigInt& n, FormClass form) {
  if (n <= 4) throw std::invalid_argument("classical_outer_shapes requires n > 4");
  const long dim = to_long(n, "dimension");
  std::vector<IrrepDescriptor> out;
  switch (form) {
    case FormClass::NonSelfDual: out.push_back(IrrepDescriptor::minuscule({Family::A, as_rank(dim - 1)}, 1)); break;
    case FormClass::Symplectic:
      if (dim % 2 == 0) out.push_back(IrrepDescriptor::minuscule({Family::C, as_rank(dim / 2)}, 1));
      break;
    case FormClass::Orthogonal:
      if (dim % 2 == 1) out.push_back(IrrepDescriptor::minuscule({Family::B, as_rank((dim - 1) / 2)}, 1));
      else out.push_back(IrrepDescriptor::minuscule({Family::D, as_rank(dim / 2)}, 1));
      break;
  }
  return out;
}

ExclusionVerdict check_pair(const CandidatePair& pair, const BigInt& r) {
  if (r < 1) throw std::invalid_argument("nilpotent rank must be positive");
  const auto& inner = pair.inner;
  const auto& outer = pair.outer;

  if (inner.is_exceptional()) return excluded(ExclusionRule::ExceptionalInner);
  if (!is_classical_w1(outer)) return excluded(ExclusionRule::OuterNotClassicalW1);
  if (inner == outer) return admissible(ExclusionRule::TrivialInclusion);
  if (gcd(r, pair.ambient_dim) != 1) return excluded(ExclusionRule::NotCoprime);

  if (inner.is_spin()) return excluded(inner.rank() > 4 ? ExclusionRule::SpinGcd : ExclusionRule::SpinD4);
  if (inner.index() == 1) {
    if (inner.family() == Family::D) return excluded(ExclusionRule::W1RigidD);
    if (inner.family() == Family::C) return excluded(ExclusionRule::W1RigidC);
    if (inner.family() == Family::B) return excluded(ExclusionRule::W1RigidB);
  }
  if (inner.form() != outer.form()) return excluded(ExclusionRule::FormMismatch);
  return check_type_a(inner, r);
}

std::vector<IrrepDescriptor> minuscule_of_dim(const BigInt& n) {
  const long dim = to_long(n, "dimension");
  std::vector<IrrepDescriptor> out;
  if (dim < 2) return out;

  out.push_back(IrrepDescriptor::minuscule({Family::A, as_rank(dim - 1)}, 1));
  for (unsigned long s = 2; binomial(2 * s, s) <= n; ++s) {
    unsigned long lo = 2 * s;
    auto hi = static_cast<unsigned long>(dim);
    while (lo < hi) {
      const unsigned long mid = lo + (hi - lo) / 2;
      if (binomial(mid, s) < n) lo = mid + 1;
      else hi = mid;
    }
    if (binomial(lo, s) == n)
      out.push_back(IrrepDescriptor::minuscule({Family::A, as_rank(static_cast<long>(lo) - 1)}, static_cast<int>(s)));
  }

  if (dim % 2 == 1 && dim >= 5) out.push_back(IrrepDescriptor::minuscule({Family::B, as_rank((dim - 1) / 2)}, 1));
  if (dim % 2 == 0 && dim >= 4) out.push_back(IrrepDescriptor::minuscule({Family::C, as_rank(dim / 2)}, 1));
  if (dim % 2 == 0 && dim >= 6) out.push_back(IrrepDescriptor::minuscule({Family::D, as_rank(dim / 2)}, 1));
  if (dim >= 4 && (dim & (dim - 1)) == 0) {
    const int m = std::countr_zero(static_cast<unsigned long>(dim)) + 1;
    out.push_back(IrrepDescriptor::minuscule({Family::D, m}, m - 1));
    out.push_back(IrrepDescriptor::minuscule({Family::D, m}, m));
  }
  if (dim == 27) {
    out.push_back(IrrepDescriptor::minuscule({Family::E, 6}, 1));
    out.push_back(IrrepDescriptor::minuscule({Family::E, 6}, 6));
  }
  if (dim == 56) out.push_back(IrrepDescriptor::minuscule({Family::E, 7}, 7));

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IrrepDescriptor> surviving_inners(const BigInt& n, FormClass form, const BigInt& r) {
  if (n <= 4) throw std::invalid_argument("surviving_inners requires n > 4");
  if (r < 1) throw std::invalid_argument("nilpotent rank must be positive");
  if (gcd(r, n) != 1)
    throw std::invalid_argument("surviving_inners requires gcd(r, n) = 1, got r = " + r.get_str() +
                                ", n = " + n.get_str());
  const auto outers = classical_outer_shapes(n, form);
  std::vector<IrrepDescriptor> out;
  for (const auto& inner : minuscule_of_dim(n)) {
    for (const auto& outer : outers) {
      if (inner == outer) continue;
      if (check_pair(CandidatePair::make(inner, outer), r).admissible()) {
        out.push_back(inner);
        break;
      }
    }
  }
  return out;
}

}  // namespace mtc
