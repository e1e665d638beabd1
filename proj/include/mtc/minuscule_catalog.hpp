#pragma once

#include "mtc/bigint.hpp"
#include "mtc/root_systems.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mtc {

/// A minuscule irreducible representation (X_m, w_s) with its dimension and
/// the class of its invariant form. Values are only produced for weights in
/// the minuscule table; dimension and form come from closed forms.
class IrrepDescriptor {
 public:
  /// Throws std::invalid_argument when w_s is not minuscule for `t`.
  static IrrepDescriptor minuscule(const LieType& t, int s);

  /// Parses "A:7:3" (family:rank:weight index); "A7:3" is accepted too.
  static IrrepDescriptor parse(std::string_view text);

  const LieType& lie_type() const { return type_; }
  Family family() const { return type_.family(); }
  int rank() const { return type_.rank(); }
  int index() const { return index_; }
  Weight weight() const { return Weight::fundamental(type_.rank(), index_); }
  const BigInt& dim() const { return dim_; }
  FormClass form() const { return form_; }

  bool is_classical() const { return type_.is_classical(); }
  bool is_exceptional() const { return type_.is_exceptional(); }
  /// D_m with w_{m-1} or w_m.
  bool is_spin() const;

  /// "A:7:3"
  std::string label() const;

  friend bool operator==(const IrrepDescriptor& a, const IrrepDescriptor& b) {
    return a.type_ == b.type_ && a.index_ == b.index_;
  }
  friend std::strong_ordering operator<=>(const IrrepDescriptor& a, const IrrepDescriptor& b) {
    if (auto c = a.type_ <=> b.type_; c != 0) return c;
    return a.index_ <=> b.index_;
  }

 private:
  IrrepDescriptor(LieType t, int s, BigInt dim, FormClass form)
      : type_(t), index_(s), dim_(std::move(dim)), form_(form) {}

  LieType type_;
  int index_;
  BigInt dim_;
  FormClass form_;
};

/// Every minuscule fundamental weight of `t`, in increasing index order.
/// Empty for E8, F4 and G2.
std::vector<IrrepDescriptor> enumerate_minuscule(const LieType& t);

/// True iff `w` is one of the weights listed by enumerate_minuscule(t).
/// Throws std::invalid_argument for non-dominant weights.
bool is_minuscule(const LieType& t, const Weight& w);

/// "family rank weight_index dim form_class"
std::string catalog_line(const IrrepDescriptor& d);

/// JSON array of objects with keys family, rank, weight, dim, form.
/// `dim` is a decimal string.
std::string catalog_json(const std::vector<IrrepDescriptor>& entries);

}  // namespace mtc
