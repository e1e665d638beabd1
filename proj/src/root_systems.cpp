#include "mtc/root_systems.hpp"

#include "mtc/rational_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtc {

namespace {

// Ambient vectors carry doubled coordinates.
using Vec = std::vector<long>;

long dot(const Vec& a, const Vec& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0L);
}

Vec unit(std::size_t dim, std::size_t i, long scale = 2) {
  Vec v(dim, 0);
  v[i] = scale;
  return v;
}

Vec combine(const Vec& a, long ca, const Vec& b, long cb) {
  Vec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = ca * a[i] + cb * b[i];
  return v;
}

struct Ambient {
  std::vector<Vec> simple;
  std::vector<Vec> roots;  // all roots, both signs
};

// +-e_i +- e_j for i < j
void add_long_roots(std::size_t n, std::vector<Vec>& out) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (long si : {1L, -1L})
        for (long sj : {1L, -1L}) out.push_back(combine(unit(n, i), si, unit(n, j), sj));
}

Ambient ambient_A(std::size_t m) {
  Ambient a;
  const std::size_t n = m + 1;
  for (std::size_t i = 0; i < m; ++i) a.simple.push_back(combine(unit(n, i), 1, unit(n, i + 1), -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a.roots.push_back(combine(unit(n, i), 1, unit(n, j), -1));
  return a;
}

Ambient ambient_BCD(Family f, std::size_t m) {
  Ambient a;
  for (std::size_t i = 0; i + 1 < m; ++i) a.simple.push_back(combine(unit(m, i), 1, unit(m, i + 1), -1));
  if (f == Family::B) a.simple.push_back(unit(m, m - 1));
  if (f == Family::C) a.simple.push_back(unit(m, m - 1, 4));
  if (f == Family::D) a.simple.push_back(combine(unit(m, m - 2), 1, unit(m, m - 1), 1));
  add_long_roots(m, a.roots);
  if (f != Family::D)
    for (std::size_t i = 0; i < m; ++i)
      for (long s : {1L, -1L}) a.roots.push_back(unit(m, i, f == Family::B ? 2 * s : 4 * s));
  return a;
}

Ambient ambient_E8() {
  Ambient a;
  const std::size_t n = 8;
  a.simple.push_back({1, -1, -1, -1, -1, -1, -1, 1});
  a.simple.push_back(combine(unit(n, 0), 1, unit(n, 1), 1));
  a.simple.push_back(combine(unit(n, 1), 1, unit(n, 0), -1));
  for (std::size_t i = 2; i < 7; ++i) a.simple.push_back(combine(unit(n, i), 1, unit(n, i - 1), -1));
  add_long_roots(n, a.roots);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) % 2) continue;
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1U ? -1 : 1;
    a.roots.push_back(v);
  }
  return a;
}

Ambient ambient_F4() {
  Ambient a;
  const std::size_t n = 4;
  a.simple.push_back(combine(unit(n, 1), 1, unit(n, 2), -1));
  a.simple.push_back(combine(unit(n, 2), 1, unit(n, 3), -1));
  a.simple.push_back(unit(n, 3));
  a.simple.push_back({1, -1, -1, -1});
  add_long_roots(n, a.roots);
  for (std::size_t i = 0; i < n; ++i)
    for (long s : {1L, -1L}) a.roots.push_back(unit(n, i, 2 * s));
  for (unsigned mask = 0; mask < 16; ++mask) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1U ? -1 : 1;
    a.roots.push_back(v);
  }
  return a;
}

Ambient ambient_G2() {
  Ambient a;
  a.simple = {{2, -2, 0}, {-4, 2, 2}};
  const std::vector<Vec> half = {{2, -2, 0}, {2, 0, -2}, {0, 2, -2}, {4, -2, -2}, {-2, 4, -2}, {-2, -2, 4}};
  for (const auto& v : half) {
    a.roots.push_back(v);
    a.roots.push_back(combine(v, -1, v, 0));
  }
  return a;
}

Ambient ambient_for(const LieType& t) {
  const auto m = static_cast<std::size_t>(t.rank());
  switch (t.family()) {
    case Family::A: return ambient_A(m);
    case Family::B:
    case Family::C:
    case Family::D: return ambient_BCD(t.family(), m);
    case Family::E: return ambient_E8();
    case Family::F: return ambient_F4();
    case Family::G: return ambient_G2();
  }
  throw std::logic_error("unreachable family");
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw std::invalid_argument("unknown Lie family '" + std::string(text) + "'");
}

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid Lie type " + std::string(1, family_letter(family)) +
                                std::to_string(rank));
}

bool LieType::is_classical() const {
  return family_ == Family::A || family_ == Family::B || family_ == Family::C || family_ == Family::D;
}

std::string LieType::label() const { return family_letter(family_) + std::to_string(rank_); }

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad Lie type '" + std::string(text) + "'");
  std::string_view digits = text.substr(text[1] == ':' ? 2 : 1);
  int rank = 0;
  for (char c : digits) {
    if (c < '0' || c > '9' || rank > 100000)
      throw std::invalid_argument("bad Lie type '" + std::string(text) + "'");
    rank = rank * 10 + (c - '0');
  }
  if (digits.empty()) throw std::invalid_argument("bad Lie type '" + std::string(text) + "'");
  return {parse_family(text.substr(0, 1)), rank};
}

Weight Weight::fundamental(int rank, int s) {
  if (s < 1 || s > rank) throw std::invalid_argument("fundamental weight index out of range");
  std::vector<long> c(static_cast<std::size_t>(rank), 0);
  c[static_cast<std::size_t>(s - 1)] = 1;
  return Weight(std::move(c));
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](long x) { return x >= 0; });
}

int Weight::fundamental_index() const {
  int index = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (coords_[i] != 1 || index != 0) return 0;
    index = static_cast<int>(i) + 1;
  }
  return index;
}

std::string_view to_string(FormClass f) {
  switch (f) {
    case FormClass::Orthogonal: return "Orthogonal";
    case FormClass::Symplectic: return "Symplectic";
    case FormClass::NonSelfDual: return "NonSelfDual";
  }
  return "?";
}

FormClass parse_form_class(std::string_view text) {
  if (text == "orth" || text == "Orthogonal" || text == "orthogonal") return FormClass::Orthogonal;
  if (text == "symp" || text == "Symplectic" || text == "symplectic") return FormClass::Symplectic;
  if (text == "nsd" || text == "NonSelfDual" || text == "non-self-dual") return FormClass::NonSelfDual;
  throw std::invalid_argument("unknown form class '" + std::string(text) + "'");
}

long Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0L); }

std::vector<Root> positive_roots(const LieType& t) {
  const Ambient amb = ambient_for(t);
  const std::size_t n = amb.simple.size();
  const auto rank = static_cast<std::size_t>(t.rank());

  QMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = dot(amb.simple[i], amb.simple[j]);
  const QMatrix gram_inv = inverse(gram);

  std::vector<Root> out;
  for (const Vec& alpha : amb.roots) {
    std::vector<Rational> pairings(n);
    for (std::size_t j = 0; j < n; ++j) pairings[j] = dot(alpha, amb.simple[j]);
    Root root;
    bool positive = true;
    for (std::size_t i = 0; i < n && positive; ++i) {
      Rational c = 0;
      for (std::size_t j = 0; j < n; ++j) c += gram_inv(i, j) * pairings[j];
      if (c.get_den() != 1) throw std::logic_error("non-integral root coordinate");
      if (c < 0 || (i >= rank && c != 0)) positive = false;
      root.coeffs.push_back(c.get_num().get_si());
    }
    if (!positive) continue;
    root.coeffs.resize(rank);

    const long norm = dot(alpha, alpha);
    for (std::size_t i = 0; i < rank; ++i) {
      const long num = root.coeffs[i] * dot(amb.simple[i], amb.simple[i]);
      if (num % norm != 0) throw std::logic_error("non-integral coroot coordinate");
      root.coroot.push_back(num / norm);
    }
    out.push_back(std::move(root));
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    return a.height() != b.height() ? a.height() < b.height() : a.coeffs > b.coeffs;
  });
  return out;
}

std::vector<std::vector<long>> cartan_matrix(const LieType& t) {
  const Ambient amb = ambient_for(t);
  const auto n = static_cast<std::size_t>(t.rank());
  std::vector<std::vector<long>> a(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = 2 * dot(amb.simple[i], amb.simple[j]) / dot(amb.simple[j], amb.simple[j]);
  return a;
}

namespace {

void require_dominant(const LieType& t, const Weight& w) {
  if (w.size() != static_cast<std::size_t>(t.rank()))
    throw std::invalid_argument("weight length does not match rank of " + t.label());
  if (!w.is_dominant()) throw std::invalid_argument("weight is not dominant");
}

}  // namespace

BigInt weyl_dim(const LieType& t, const Weight& w) {
  require_dominant(t, w);
  BigInt num = 1;
  BigInt den = 1;
  for (const Root& r : positive_roots(t)) {
    long shifted = 0;
    long rho = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      shifted += r.coroot[i] * (w[i] + 1);
      rho += r.coroot[i];
    }
    num *= shifted;
    den *= rho;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("Weyl product is not integral");
  return num / den;
}

std::vector<int> duality_involution(const LieType& t) {
  const int m = t.rank();
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  switch (t.family()) {
    case Family::A:
      for (int s = 1; s <= m; ++s) p[static_cast<std::size_t>(s - 1)] = m + 1 - s;
      break;
    case Family::D:
      if (m % 2 == 1) std::swap(p[static_cast<std::size_t>(m - 2)], p[static_cast<std::size_t>(m - 1)]);
      break;
    case Family::E:
      if (m == 6) {
        std::swap(p[0], p[5]);
        std::swap(p[2], p[4]);
      }
      break;
    default: break;
  }
  return p;
}

Weight dual_weight(const LieType& t, const Weight& w) {
  require_dominant(t, w);
  const auto p = duality_involution(t);
  std::vector<long> c(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) c[static_cast<std::size_t>(p[i] - 1)] = w[i];
  return Weight(std::move(c));
}

BigInt two_rho_pairing(const LieType& t, const Weight& w) {
  require_dominant(t, w);
  BigInt total = 0;
  for (const Root& r : positive_roots(t))
    for (std::size_t i = 0; i < w.size(); ++i) total += r.coroot[i] * w[i];
  return total;
}

FormClass form_class(const LieType& t, const Weight& w) {
  if (dual_weight(t, w) != w) return FormClass::NonSelfDual;
  return mpz_even_p(two_rho_pairing(t, w).get_mpz_t()) ? FormClass::Orthogonal : FormClass::Symplectic;
}

std::string roots_to_text(const LieType& t) {
  std::ostringstream os;
  for (const Root& r : positive_roots(t)) {
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) os << (i ? " " : "") << r.coeffs[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace mtc
