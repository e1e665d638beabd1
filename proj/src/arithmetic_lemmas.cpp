#include "mtc/arithmetic_lemmas.hpp"

#include "mtc/bigint.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mtc {

std::vector<IndexPair> divisibility_solutions(long m_max) {
  if (m_max < 5) throw std::invalid_argument("divisibility_solutions requires m_max >= 5");
  std::vector<IndexPair> out;
  for (long m = 5; m <= m_max; ++m) {
    for (long s = 2; 2 * s < m + 1; ++s) {
      const BigInt r = binomial(static_cast<unsigned long>(m - 1), static_cast<unsigned long>(s - 1));
      const BigInt w = BigInt(s) * BigInt(m + 1 - s);
      if (mpz_divisible_p(w.get_mpz_t(), r.get_mpz_t())) out.push_back({m, s});
    }
  }
  return out;
}

std::vector<long> gcd_mod4_check(long m_max) {
  if (m_max < 4) throw std::invalid_argument("gcd_mod4_check requires m_max >= 4");
  std::vector<long> out;
  for (long m = 4; m <= m_max; ++m) {
    const BigInt g = gcd(BigInt(m - 1), BigInt(m) * BigInt(m + 1) / 2);
    if (g == 1) out.push_back(m);
  }
  return out;
}

std::string_view to_string(ExceptionSource s) {
  return s == ExceptionSource::Sporadic ? "sporadic" : "family";
}

std::vector<ExceptionPair> exception_pairs(long g_max) {
  if (g_max < 10) throw std::invalid_argument("exception_pairs requires g_max >= 10");
  std::vector<ExceptionPair> out;
  if (g_max >= 56) out.push_back({56, 15, ExceptionSource::Sporadic, 7});
  for (long m = 4; m * (m + 1) / 2 <= g_max; ++m) {
    const long g = m * (m + 1) / 2;
    const long r = m - 1;
    if (std::gcd(g, r) == 1) out.push_back({g, r, ExceptionSource::Family, m});
  }
  std::sort(out.begin(), out.end(), [](const ExceptionPair& a, const ExceptionPair& b) {
    return std::pair(a.g, a.r) < std::pair(b.g, b.r);
  });
  return out;
}

bool is_exception_pair(long g, long r) {
  const auto pairs = exception_pairs(std::max(g, 10L));
  return std::any_of(pairs.begin(), pairs.end(), [&](const ExceptionPair& p) { return p.g == g && p.r == r; });
}

}  // namespace mtc
