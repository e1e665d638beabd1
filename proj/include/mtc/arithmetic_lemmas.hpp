#pragma once

#include <compare>
#include <string_view>
#include <utility>
#include <vector>

namespace mtc {

/// Exhaustive searches behind the exclusion of (A_m, w_s) inner algebras.
/// Every routine is a plain loop over its bounds; nothing is short-circuited
/// by a closed form.

struct IndexPair {
  long m;
  long s;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// All (m, s) with 5 <= m <= m_max, 2 <= s < (m+1)/2 and
/// binom(m-1, s-1) | s(m+1-s), sorted. Throws std::invalid_argument for m_max < 5.
std::vector<IndexPair> divisibility_solutions(long m_max);

/// All m in [4, m_max] with gcd(m-1, m(m+1)/2) = 1, sorted.
/// Throws std::invalid_argument for m_max < 4.
std::vector<long> gcd_mod4_check(long m_max);

enum class ExceptionSource {
  Sporadic,  // (56, 15), from (A_7, w_3)
  Family,    // (m(m+1)/2, m-1), from (A_m, w_2)
};

std::string_view to_string(ExceptionSource s);

/// A pair (g, r) for which the coprime-rank argument leaves an (A_m, w_s)
/// inner algebra standing. `m` is the A-rank behind the pair (7 for Sporadic).
struct ExceptionPair {
  long g;
  long r;
  ExceptionSource source;
  long m;

  friend bool operator==(const ExceptionPair&, const ExceptionPair&) = default;
};

/// Exception pairs with g <= g_max, sorted by (g, r). Family members with
/// gcd(r, g) != 1 are omitted. Throws std::invalid_argument for g_max < 10.
std::vector<ExceptionPair> exception_pairs(long g_max);

/// Membership in exception_pairs(max(g, 10)).
bool is_exception_pair(long g, long r);

}  // namespace mtc
