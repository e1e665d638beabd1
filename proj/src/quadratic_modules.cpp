#include "mtc/quadratic_modules.hpp"

#include <stdexcept>

namespace mtc {

namespace {

BigInt pow2(long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

int as_rank(const BigInt& x) { return static_cast<int>(to_long(x, "rank")); }

}  // namespace

std::vector<BigInt> QuadraticRankProfile::ranks() const {
  std::vector<BigInt> out{min_rank};
  if (alternate_rank) out.push_back(*alternate_rank);
  return out;
}

std::optional<QuadraticRankProfile> quadratic_profile(const IrrepDescriptor& irrep) {
  const int m = irrep.rank();
  const int s = irrep.index();
  switch (irrep.family()) {
    case Family::A:
      return QuadraticRankProfile{
          irrep, binomial(static_cast<unsigned long>(m - 1), static_cast<unsigned long>(s - 1)), {}};
    case Family::B: return QuadraticRankProfile{irrep, BigInt(2), {}};
    case Family::C: return QuadraticRankProfile{irrep, BigInt(1), {}};
    case Family::D:
      if (s == 1) return QuadraticRankProfile{irrep, BigInt(2), {}};
      return QuadraticRankProfile{irrep, pow2(m - 3), pow2(m - 2)};
    default: return std::nullopt;
  }
}

std::optional<BigInt> quadratic_min_rank(const IrrepDescriptor& irrep) {
  auto p = quadratic_profile(irrep);
  if (!p) return std::nullopt;
  return p->min_rank;
}

FormClass tensor_form(std::span<const FormClass> factors) {
  int symplectic = 0;
  for (FormClass f : factors) {
    if (f == FormClass::NonSelfDual) return FormClass::NonSelfDual;
    if (f == FormClass::Symplectic) ++symplectic;
  }
  return symplectic % 2 ? FormClass::Symplectic : FormClass::Orthogonal;
}

BigInt AlgebraShape::dim() const {
  BigInt d = 1;
  for (const auto& f : factors) d *= f.dim();
  return d;
}

FormClass AlgebraShape::form() const {
  std::vector<FormClass> forms;
  for (const auto& f : factors) forms.push_back(f.form());
  return tensor_form(forms);
}

std::string AlgebraShape::label() const {
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : " x ") + f.label();
  return out;
}

TransvectionShapes transvection_constraint(const BigInt& n) {
  if (n < 2) throw std::invalid_argument("transvection_constraint requires n >= 2");
  const int dim = as_rank(n);
  TransvectionShapes out;
  out.shapes.push_back(IrrepDescriptor::minuscule({Family::A, dim - 1}, 1));
  if (dim == 2) {
    out.symplectic_is_special_linear = true;
  } else if (dim % 2 == 0) {
    out.shapes.push_back(IrrepDescriptor::minuscule({Family::C, dim / 2}, 1));
  }
  return out;
}

std::vector<AlgebraShape> rank2_constraint(const BigInt& n) {
  if (n < 8) throw std::invalid_argument("rank2_constraint requires n >= 8");
  const int dim = as_rank(n);
  const auto simple = [](Family f, int rank) { return AlgebraShape{{IrrepDescriptor::minuscule({f, rank}, 1)}}; };

  std::vector<AlgebraShape> out;
  out.push_back(simple(Family::A, dim - 1));
  if (dim % 2 == 0) {
    out.push_back(simple(Family::C, dim / 2));
    out.push_back(simple(Family::D, dim / 2));
  } else {
    out.push_back(simple(Family::B, (dim - 1) / 2));
  }

  if (dim % 2 == 0) {
    const int half = dim / 2;
    const auto sl2 = IrrepDescriptor::minuscule({Family::A, 1}, 1);
    out.push_back({{IrrepDescriptor::minuscule({Family::A, half - 1}, 1), sl2}});
    if (half % 2 == 0) out.push_back({{IrrepDescriptor::minuscule({Family::C, half / 2}, 1), sl2}});
  }
  return out;
}

std::vector<AlgebraShape> filter_by_form(const std::vector<AlgebraShape>& shapes, FormClass form) {
  std::vector<AlgebraShape> out;
  for (const auto& s : shapes)
    if (s.form() == form) out.push_back(s);
  return out;
}

}  // namespace mtc
