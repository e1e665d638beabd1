#pragma once

#include "mtc/rational_matrix.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace mtc {

/// A 2g-dimensional Q-vector space with a nondegenerate alternating form.
class SymplecticSpace {
 public:
  /// Throws std::invalid_argument unless `form` is square, of even size,
  /// skew-symmetric and nondegenerate.
  explicit SymplecticSpace(QMatrix form);

  /// The form adapted to a toric rank r: basis W (r) | M (2g-2r) | T (r),
  /// with W and T dually paired and M carrying a standard symplectic block.
  static SymplecticSpace adapted(int g, int r);

  std::size_t dim() const { return form_.rows(); }
  const QMatrix& form() const { return form_; }

  /// True iff p^T form p == form.
  bool preserved_by(const QMatrix& p) const;

 private:
  QMatrix form_;
};

/// Square-zero matrix.
class Nilpotent {
 public:
  /// Throws std::domain_error when m * m != 0.
  explicit Nilpotent(QMatrix m);

  const QMatrix& matrix() const { return m_; }
  std::size_t rank() const { return mtc::rank(m_); }

 private:
  QMatrix m_;
};

/// Local monodromy data on a symplectic space. Subspaces are column spans:
/// inertia_invariants (V^I, dim 2g - r) ⊇ toric_sub (W, dim r), and lift (T,
/// dim r) with V = V^I ⊕ T. `monodromy` is the unipotent N.
struct SpecializationInstance {
  SymplecticSpace space;
  QMatrix inertia_invariants;
  QMatrix toric_sub;
  QMatrix lift;
  QMatrix monodromy;
  int toric_rank;

  int genus() const { return static_cast<int>(space.dim() / 2); }
};

/// Builds the block-form instance N = [[1, 0, B], [0, 1, 0], [0, 0, 1]] with a
/// random symmetric invertible B, then conjugates everything by a random
/// element of the symplectic group. Deterministic in `seed`.
/// Throws std::invalid_argument unless 1 <= r <= g.
SpecializationInstance build_instance(int g, int r, std::uint64_t seed);

/// A seeded random element of Sp(adapted(g, r)).
QMatrix random_symplectic(int g, int r, std::uint64_t seed);

/// Applies the change of basis p (which must preserve the form) to all data.
SpecializationInstance conjugate(const SpecializationInstance& inst, const QMatrix& p);

/// Replaces W by a seeded random r-dimensional subspace of V^I.
SpecializationInstance perturb_toric_sub(const SpecializationInstance& inst, std::uint64_t seed);

/// W == (V^I)^⊥ with respect to the form.
bool verify_orthogonality(const SpecializationInstance& inst);

/// tau = N - 1. Throws std::domain_error when tau^2 != 0.
Nilpotent monodromy_log(const SpecializationInstance& inst);

/// tau(V) ⊆ W, tau(V^I) = 0 and tau restricted to T is a bijection onto W.
bool verify_filtration(const SpecializationInstance& inst);

struct InstanceReport {
  bool tau_square_zero = false;
  bool tau_rank_is_r = false;
  bool inertia_dim = false;      // dim V^I == 2g - r
  bool toric_in_inertia = false;  // W ⊆ V^I, dim W == r
  bool lift_complement = false;  // V^I ⊕ T == V
  bool preserves_form = false;   // N is symplectic
  bool orthogonality = false;
  bool filtration = false;
  bool quotient_iso = false;  // tau: T -> W bijective

  bool all() const;
};

InstanceReport check_invariants(const SpecializationInstance& inst);

/// (name, value) pairs in a fixed order, for reporting.
std::vector<std::pair<std::string_view, bool>> report_fields(const InstanceReport& r);

}  // namespace mtc
