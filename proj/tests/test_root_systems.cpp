#include "mtc/root_systems.hpp"

#include "oracles/cartan_oracle.hpp"

#include <doctest.h>

#include <random>
#include <set>

using mtc::Family;
using mtc::FormClass;
using mtc::LieType;
using mtc::Weight;

namespace {

std::vector<LieType> types_up_to(int max_rank) {
  std::vector<LieType> out;
  for (int m = 1; m <= max_rank; ++m) out.emplace_back(Family::A, m);
  for (int m = 2; m <= max_rank; ++m) out.emplace_back(Family::B, m);
  for (int m = 2; m <= max_rank; ++m) out.emplace_back(Family::C, m);
  for (int m = 3; m <= max_rank; ++m) out.emplace_back(Family::D, m);
  for (int m : {6, 7, 8})
    if (m <= max_rank) out.emplace_back(Family::E, m);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

oracle::Mat oracle_k(const LieType& t) {
  return oracle::pairing_matrix(mtc::family_letter(t.family()), t.rank());
}

}  // namespace

TEST_CASE("positive roots and coroots match the root-string oracle") {
  for (const auto& t : types_up_to(12)) {
    CAPTURE(t.label());
    const auto k = oracle_k(t);
    const auto expected_roots = oracle::positive_roots(k);
    const auto expected_coroots = oracle::positive_coroots(k);
    std::set<oracle::Vec> roots;
    std::set<oracle::Vec> coroots;
    for (const auto& a : mtc::positive_roots(t)) {
      roots.insert(a.coeffs);
      coroots.insert(a.coroot);
      long pairing = 0;
      for (int i = 0; i < t.rank(); ++i)
        for (int j = 0; j < t.rank(); ++j) pairing += a.coroot[i] * a.coeffs[j] * k[i][j];
      CHECK(pairing == 2);
    }
    CHECK(mtc::positive_roots(t).size() == expected_roots.size());
    CHECK(roots == std::set<oracle::Vec>(expected_roots.begin(), expected_roots.end()));
    CHECK(coroots == std::set<oracle::Vec>(expected_coroots.begin(), expected_coroots.end()));
  }
}

TEST_CASE("positive root counts") {
  CHECK(mtc::positive_roots(LieType(Family::A, 7)).size() == 28);
  CHECK(mtc::positive_roots(LieType(Family::E, 6)).size() == 36);
  CHECK(mtc::positive_roots(LieType(Family::E, 7)).size() == 63);
  CHECK(mtc::positive_roots(LieType(Family::E, 8)).size() == 120);
  CHECK(mtc::positive_roots(LieType(Family::F, 4)).size() == 24);
  CHECK(mtc::positive_roots(LieType(Family::G, 2)).size() == 6);
  for (int m = 2; m <= 12; ++m) {
    CHECK(mtc::positive_roots(LieType(Family::B, m)).size() == static_cast<std::size_t>(m * m));
    CHECK(mtc::positive_roots(LieType(Family::C, m)).size() == static_cast<std::size_t>(m * m));
  }
  for (int m = 3; m <= 12; ++m)
    CHECK(mtc::positive_roots(LieType(Family::D, m)).size() == static_cast<std::size_t>(m * (m - 1)));
}

TEST_CASE("cartan matrix is the transpose of the oracle pairing matrix") {
  for (const auto& t : types_up_to(10)) {
    CAPTURE(t.label());
    CHECK(mtc::cartan_matrix(t) == oracle::transpose(oracle_k(t)));
  }
}

TEST_CASE("weyl_dim matches the coroot oracle on fundamental weights") {
  for (const auto& t : types_up_to(9)) {
    CAPTURE(t.label());
    for (int s = 1; s <= t.rank(); ++s) {
      CAPTURE(s);
      const Weight w = Weight::fundamental(t.rank(), s);
      CHECK(mtc::weyl_dim(t, w) == oracle::weyl_dim(oracle_k(t), w.coords()));
    }
  }
}

TEST_CASE("weyl_dim matches the coroot oracle on random dominant weights") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coord(0, 3);
  for (const auto& t : types_up_to(6)) {
    CAPTURE(t.label());
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<long> c(static_cast<std::size_t>(t.rank()));
      for (auto& x : c) x = coord(rng);
      CAPTURE(c);
      CHECK(mtc::weyl_dim(t, Weight(c)) == oracle::weyl_dim(oracle_k(t), c));
    }
  }
}

TEST_CASE("weyl_dim known values") {
  CHECK(mtc::weyl_dim(LieType(Family::E, 8), Weight::fundamental(8, 8)) == 248);
  CHECK(mtc::weyl_dim(LieType(Family::F, 4), Weight::fundamental(4, 4)) == 26);
  CHECK(mtc::weyl_dim(LieType(Family::G, 2), Weight::fundamental(2, 1)) == 7);
  CHECK(mtc::weyl_dim(LieType(Family::E, 7), Weight::fundamental(7, 7)) == 56);
  CHECK(mtc::weyl_dim(LieType(Family::A, 3), Weight({0, 0, 0})) == 1);
  CHECK_THROWS_AS((void)mtc::weyl_dim(LieType(Family::A, 2), Weight({1, -1})), std::invalid_argument);
}

TEST_CASE("duality involution matches the longest-element oracle") {
  for (const auto& t : types_up_to(12)) {
    CAPTURE(t.label());
    CHECK(mtc::duality_involution(t) == oracle::minus_w0(oracle_k(t)));
  }
}

TEST_CASE("duality involution examples") {
  CHECK(mtc::duality_involution(LieType(Family::A, 7))[2] == 5);
  CHECK(mtc::duality_involution(LieType(Family::B, 5)) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(mtc::duality_involution(LieType(Family::E, 6))[0] == 6);
  CHECK(mtc::duality_involution(LieType(Family::D, 5))[3] == 5);
  CHECK(mtc::duality_involution(LieType(Family::D, 6))[4] == 5);
  CHECK(mtc::dual_weight(LieType(Family::A, 4), Weight({2, 1, 0, 0})) == Weight({0, 0, 1, 2}));
}

TEST_CASE("form class agrees with the parity oracle") {
  for (const auto& t : types_up_to(9)) {
    CAPTURE(t.label());
    const auto k = oracle_k(t);
    const auto perm = oracle::minus_w0(k);
    for (int s = 1; s <= t.rank(); ++s) {
      CAPTURE(s);
      const Weight w = Weight::fundamental(t.rank(), s);
      const long parity = oracle::two_rho_pairing(k, w.coords());
      CHECK(mtc::two_rho_pairing(t, w) == parity);
      FormClass expected = FormClass::NonSelfDual;
      if (perm[s - 1] == s) expected = parity % 2 == 0 ? FormClass::Orthogonal : FormClass::Symplectic;
      CHECK(mtc::form_class(t, w) == expected);
    }
  }
}

TEST_CASE("form class examples") {
  CHECK(mtc::form_class(LieType(Family::A, 3), Weight::fundamental(3, 2)) == FormClass::Orthogonal);
  CHECK(mtc::form_class(LieType(Family::A, 5), Weight::fundamental(5, 3)) == FormClass::Symplectic);
  CHECK(mtc::form_class(LieType(Family::A, 1), Weight::fundamental(1, 1)) == FormClass::Symplectic);
  CHECK(mtc::form_class(LieType(Family::C, 4), Weight::fundamental(4, 1)) == FormClass::Symplectic);
  CHECK(mtc::form_class(LieType(Family::E, 7), Weight::fundamental(7, 7)) == FormClass::Symplectic);
  CHECK(mtc::form_class(LieType(Family::E, 6), Weight::fundamental(6, 1)) == FormClass::NonSelfDual);
  CHECK(mtc::form_class(LieType(Family::A, 3), Weight({1, 0, 1})) == FormClass::Orthogonal);
  CHECK_THROWS_AS((void)mtc::form_class(LieType(Family::A, 2), Weight({-1, 0})), std::invalid_argument);
}

TEST_CASE("lie type validation and parsing") {
  CHECK_THROWS_AS(LieType(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(LieType(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(LieType(Family::C, 1), std::invalid_argument);
  CHECK_THROWS_AS(LieType(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(LieType(Family::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(LieType(Family::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(LieType(Family::F, 3), std::invalid_argument);
  CHECK_THROWS_AS(LieType(Family::G, 3), std::invalid_argument);
  CHECK(LieType::parse("A7") == LieType(Family::A, 7));
  CHECK(LieType::parse("D:12") == LieType(Family::D, 12));
  CHECK(LieType(Family::E, 6).label() == "E6");
  CHECK(LieType(Family::E, 6).is_exceptional());
  CHECK(LieType(Family::C, 3).is_classical());
  CHECK_THROWS((void)LieType::parse("X3"));
  CHECK_THROWS((void)LieType::parse("A"));
}

TEST_CASE("weights") {
  CHECK(Weight::fundamental(4, 2) == Weight({0, 1, 0, 0}));
  CHECK(Weight::fundamental(4, 2).fundamental_index() == 2);
  CHECK(Weight({2, 0, 0}).fundamental_index() == 0);
  CHECK(Weight({0, 0, 0}).fundamental_index() == 0);
  CHECK(Weight({0, 3, 1}).is_dominant());
  CHECK_FALSE(Weight({0, -1, 1}).is_dominant());
  CHECK(mtc::parse_form_class("nsd") == FormClass::NonSelfDual);
  CHECK(mtc::parse_form_class("symp") == FormClass::Symplectic);
  CHECK(mtc::parse_form_class("orth") == FormClass::Orthogonal);
  CHECK(mtc::to_string(FormClass::Orthogonal) == "Orthogonal");
}

TEST_CASE("roots_to_text lists one root per line") {
  const std::string text = mtc::roots_to_text(LieType(Family::A, 2));
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}
