#pragma once

#include "mtc/bigint.hpp"
#include "mtc/minuscule_catalog.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mtc {

/// Rank data of the quadratic (square-zero) root elements of a minuscule
/// representation. D_m spin modules record a second admissible rank.
struct QuadraticRankProfile {
  IrrepDescriptor irrep;
  BigInt min_rank;
  std::optional<BigInt> alternate_rank;

  /// min_rank followed by alternate_rank when present.
  std::vector<BigInt> ranks() const;
};

/// std::nullopt for the exceptional E6/E7 modules: those can never occur as
/// the inner algebra, so callers must exclude them rather than read a rank.
std::optional<QuadraticRankProfile> quadratic_profile(const IrrepDescriptor& irrep);

/// Shorthand for quadratic_profile(irrep)->min_rank.
std::optional<BigInt> quadratic_min_rank(const IrrepDescriptor& irrep);

/// Invariant form carried by an outer tensor product of irreducibles.
FormClass tensor_form(std::span<const FormClass> factors);

/// A semisimple irreducible shape: the outer tensor product of its factors.
struct AlgebraShape {
  std::vector<IrrepDescriptor> factors;

  bool is_simple() const { return factors.size() == 1; }
  BigInt dim() const;
  FormClass form() const;
  /// "A:7:1" or "A:4:1 x A:1:1"
  std::string label() const;

  friend bool operator==(const AlgebraShape&, const AlgebraShape&) = default;
};

/// Faithful irreducible simple shapes of dimension n that contain a
/// transvection (rank-1 square-zero element).
struct TransvectionShapes {
  std::vector<IrrepDescriptor> shapes;
  /// Any semisimple algebra containing a transvection is simple.
  bool forces_simple = true;
  /// n == 2: sp_2 = sl_2, so the symplectic case is the A_1 entry.
  bool symplectic_is_special_linear = false;
};

/// sl(U) and, for even n, sp(U). Throws std::invalid_argument for n < 2.
TransvectionShapes transvection_constraint(const BigInt& n);

/// Classical irreducible shapes of dimension n >= 8 containing a square-zero
/// element of rank 2: sl(U), sp(U), so(U), and a x sl_2 with
/// a in {sl_{n/2}, sp_{n/2}}. Throws std::invalid_argument for n < 8.
std::vector<AlgebraShape> rank2_constraint(const BigInt& n);

std::vector<AlgebraShape> filter_by_form(const std::vector<AlgebraShape>& shapes, FormClass form);

}  // namespace mtc
