#pragma once

#include "mtc/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mtc {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(std::string_view text);

/// A simple Lie type X_m. Construction validates the rank range of the family
/// (A_m m>=1, B_m/C_m m>=2, D_m m>=3, E_6/E_7/E_8, F_4, G_2).
class LieType {
 public:
  LieType(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool is_classical() const;
  bool is_exceptional() const { return !is_classical(); }

  /// "A7", "E6", ...
  std::string label() const;

  /// Inverse of label(); also accepts "A:7".
  static LieType parse(std::string_view text);

  friend auto operator<=>(const LieType&, const LieType&) = default;

 private:
  Family family_;
  int rank_;
};

/// Integral weight in the basis of fundamental weights.
class Weight {
 public:
  explicit Weight(std::vector<long> coords) : coords_(std::move(coords)) {}

  /// The fundamental weight w_s (1-based) of a rank-`rank` algebra.
  static Weight fundamental(int rank, int s);

  std::size_t size() const { return coords_.size(); }
  long operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<long>& coords() const { return coords_; }

  bool is_dominant() const;

  /// s when the weight is exactly w_s, otherwise 0.
  int fundamental_index() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<long> coords_;
};

enum class FormClass { Orthogonal, Symplectic, NonSelfDual };

std::string_view to_string(FormClass f);
FormClass parse_form_class(std::string_view text);

/// A positive root written in the simple-root basis, together with its coroot
/// in the simple-coroot basis. Pairing a weight with the coroot is then the
/// dot product of the weight coordinates with `coroot`.
struct Root {
  std::vector<long> coeffs;
  std::vector<long> coroot;

  long height() const;
  friend bool operator==(const Root&, const Root&) = default;
};

std::vector<Root> positive_roots(const LieType& t);

/// Cartan matrix, entry (i, j) = <alpha_i, alpha_j^vee>.
std::vector<std::vector<long>> cartan_matrix(const LieType& t);

/// Dimension of the irreducible module of highest weight `w` via the Weyl
/// dimension formula. Throws std::invalid_argument for non-dominant weights.
BigInt weyl_dim(const LieType& t, const Weight& w);

/// -w0 as a permutation of fundamental-weight indices: entry s-1 holds the
/// (1-based) image of s.
std::vector<int> duality_involution(const LieType& t);

/// The dominant weight -w0(w), i.e. the highest weight of the dual module.
Weight dual_weight(const LieType& t, const Weight& w);

/// <w, 2 rho^vee>, the sum of <w, alpha^vee> over positive roots.
BigInt two_rho_pairing(const LieType& t, const Weight& w);

/// Throws std::invalid_argument for non-dominant weights.
FormClass form_class(const LieType& t, const Weight& w);

/// Debug dump: one positive root per line, simple-root coordinates.
std::string roots_to_text(const LieType& t);

}  // namespace mtc
