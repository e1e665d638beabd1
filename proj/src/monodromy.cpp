#include "mtc/monodromy.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace mtc {

namespace {

constexpr long kEntryBound = 9;

class EntrySource {
 public:
  explicit EntrySource(std::uint64_t seed) : gen_(seed), dist_(-kEntryBound, kEntryBound) {}
  long operator()() { return dist_(gen_); }

 private:
  std::mt19937_64 gen_;
  std::uniform_int_distribution<long> dist_;
};

QMatrix random_symmetric(std::size_t n, EntrySource& next) {
  QMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = next();
  return s;
}

// Adapted index -> Darboux index (e_0..e_{g-1}, f_0..f_{g-1}) with
// form(e_a, f_a) = 1. W pairs with T, the middle block pairs with itself.
std::vector<std::size_t> darboux_order(int g, int r) {
  const auto n = static_cast<std::size_t>(2 * g);
  const auto rr = static_cast<std::size_t>(r);
  const auto k = static_cast<std::size_t>(g - r);
  const auto gg = static_cast<std::size_t>(g);
  std::vector<std::size_t> d(n);
  for (std::size_t i = 0; i < rr; ++i) {
    d[i] = i;               // w_i -> e_i
    d[n - rr + i] = gg + i;  // t_i -> f_i
  }
  for (std::size_t j = 0; j < k; ++j) {
    d[rr + j] = rr + j;          // m_j -> e_{r+j}
    d[rr + k + j] = gg + rr + j;  // m_{k+j} -> f_{r+j}
  }
  return d;
}

void require_toric_range(int g, int r) {
  if (g < 1 || r < 1 || r > g)
    throw std::invalid_argument("toric rank must satisfy 1 <= r <= g, got g = " + std::to_string(g) +
                                ", r = " + std::to_string(r));
}

QMatrix identity_columns(std::size_t n, std::size_t first, std::size_t count) {
  return QMatrix::identity(n).columns(first, count);
}

}  // namespace

SymplecticSpace::SymplecticSpace(QMatrix form) : form_(std::move(form)) {
  if (!form_.is_square() || form_.rows() == 0 || form_.rows() % 2 != 0)
    throw std::invalid_argument("symplectic form must be square of positive even size");
  if (!(form_.transpose() == QMatrix::zero(form_.rows(), form_.cols()) - form_))
    throw std::invalid_argument("form is not skew-symmetric");
  if (determinant(form_) == 0) throw std::invalid_argument("form is degenerate");
}

SymplecticSpace SymplecticSpace::adapted(int g, int r) {
  require_toric_range(g, r);
  const auto d = darboux_order(g, r);
  const auto n = d.size();
  const auto gg = static_cast<std::size_t>(g);
  QMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i] < gg && d[j] == d[i] + gg) form(i, j) = 1;
      if (d[j] < gg && d[i] == d[j] + gg) form(i, j) = -1;
    }
  return SymplecticSpace(std::move(form));
}

bool SymplecticSpace::preserved_by(const QMatrix& p) const {
  return p.rows() == dim() && p.cols() == dim() && p.transpose() * form_ * p == form_;
}

Nilpotent::Nilpotent(QMatrix m) : m_(std::move(m)) {
  if (!m_.is_square() || !(m_ * m_).is_zero()) throw std::domain_error("matrix does not square to zero");
}

QMatrix random_symplectic(int g, int r, std::uint64_t seed) {
  require_toric_range(g, r);
  EntrySource next(seed ^ 0x5bd1e995ULL);
  const auto gg = static_cast<std::size_t>(g);
  const auto n = 2 * gg;

  // Product of unipotent block-triangular factors [[1, S], [0, 1]] and
  // [[1, 0], [S, 1]] with S symmetric, in Darboux coordinates.
  QMatrix m = QMatrix::identity(n);
  for (int factor = 0; factor < 3; ++factor) {
    const QMatrix s = random_symmetric(gg, next);
    QMatrix f = QMatrix::identity(n);
    const bool upper = factor % 2 == 0;
    for (std::size_t i = 0; i < gg; ++i)
      for (std::size_t j = 0; j < gg; ++j) {
        if (upper) f(i, gg + j) = s(i, j);
        else f(gg + i, j) = s(i, j);
      }
    m = m * f;
  }

  const auto d = darboux_order(g, r);
  QMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = m(d[i], d[j]);
  return p;
}

SpecializationInstance build_instance(int g, int r, std::uint64_t seed) {
  require_toric_range(g, r);
  const auto n = static_cast<std::size_t>(2 * g);
  const auto rr = static_cast<std::size_t>(r);
  EntrySource next(seed);

  QMatrix pairing;
  do {
    pairing = random_symmetric(rr, next);
  } while (determinant(pairing) == 0);

  QMatrix n0 = QMatrix::identity(n);
  for (std::size_t i = 0; i < rr; ++i)
    for (std::size_t j = 0; j < rr; ++j) n0(i, n - rr + j) = pairing(i, j);

  SpecializationInstance block{SymplecticSpace::adapted(g, r),
                               identity_columns(n, 0, n - rr),
                               identity_columns(n, 0, rr),
                               identity_columns(n, n - rr, rr),
                               std::move(n0),
                               r};
  return conjugate(block, random_symplectic(g, r, seed));
}

SpecializationInstance conjugate(const SpecializationInstance& inst, const QMatrix& p) {
  if (!inst.space.preserved_by(p)) throw std::invalid_argument("change of basis does not preserve the form");
  return {inst.space,         p * inst.inertia_invariants, p * inst.toric_sub, p * inst.lift,
          p * inst.monodromy * inverse(p), inst.toric_rank};
}

SpecializationInstance perturb_toric_sub(const SpecializationInstance& inst, std::uint64_t seed) {
  EntrySource next(seed ^ 0x9e3779b97f4a7c15ULL);
  const auto r = static_cast<std::size_t>(inst.toric_rank);
  const std::size_t k = inst.inertia_invariants.cols();
  SpecializationInstance out = inst;
  do {
    QMatrix mix(k, r);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < r; ++j) mix(i, j) = next();
    out.toric_sub = inst.inertia_invariants * mix;
  } while (rank(out.toric_sub) != r);
  return out;
}

bool verify_orthogonality(const SpecializationInstance& inst) {
  const QMatrix perp = kernel(inst.inertia_invariants.transpose() * inst.space.form());
  return same_span(perp, inst.toric_sub);
}

Nilpotent monodromy_log(const SpecializationInstance& inst) {
  return Nilpotent(inst.monodromy - QMatrix::identity(inst.space.dim()));
}

bool verify_filtration(const SpecializationInstance& inst) {
  const QMatrix tau = inst.monodromy - QMatrix::identity(inst.space.dim());
  const auto r = static_cast<std::size_t>(inst.toric_rank);
  if (!span_contains(inst.toric_sub, tau)) return false;
  if (!(tau * inst.inertia_invariants).is_zero()) return false;
  return rank(inst.toric_sub) == r && rank(tau * inst.lift) == r;
}

bool InstanceReport::all() const {
  for (const auto& [name, ok] : report_fields(*this))
    if (!ok) return false;
  return true;
}

InstanceReport check_invariants(const SpecializationInstance& inst) {
  const std::size_t n = inst.space.dim();
  const auto r = static_cast<std::size_t>(inst.toric_rank);
  const QMatrix tau = inst.monodromy - QMatrix::identity(n);

  InstanceReport rep;
  rep.tau_square_zero = (tau * tau).is_zero();
  rep.tau_rank_is_r = rank(tau) == r;
  rep.inertia_dim = rank(inst.inertia_invariants) == n - r;
  rep.toric_in_inertia = rank(inst.toric_sub) == r && span_contains(inst.inertia_invariants, inst.toric_sub);
  rep.lift_complement = rank(inst.lift) == r && rank(hconcat(inst.inertia_invariants, inst.lift)) == n;
  rep.preserves_form = inst.space.preserved_by(inst.monodromy);
  rep.orthogonality = verify_orthogonality(inst);
  rep.filtration = verify_filtration(inst);
  const QMatrix image = tau * inst.lift;
  rep.quotient_iso = rank(image) == r && same_span(image, inst.toric_sub);
  return rep;
}

std::vector<std::pair<std::string_view, bool>> report_fields(const InstanceReport& r) {
  return {{"tau_square_zero", r.tau_square_zero},   {"tau_rank_is_r", r.tau_rank_is_r},
          {"inertia_dim", r.inertia_dim},           {"toric_in_inertia", r.toric_in_inertia},
          {"lift_complement", r.lift_complement},   {"preserves_form", r.preserves_form},
          {"orthogonality", r.orthogonality},       {"filtration", r.filtration},
          {"quotient_iso", r.quotient_iso}};
}

}  // namespace mtc
