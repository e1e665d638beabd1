#include "mtc/minuscule_catalog.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>

namespace mtc {

namespace {

struct Entry {
  BigInt dim;
  FormClass form;
};

BigInt pow2(long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

// The minuscule table with closed-form dimensions.
std::optional<Entry> table_entry(const LieType& t, int s) {
  const int m = t.rank();
  if (s < 1 || s > m) return std::nullopt;
  switch (t.family()) {
    case Family::A: {
      const auto dim = binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(s));
      if (m + 1 != 2 * s) return Entry{dim, FormClass::NonSelfDual};
      return Entry{dim, s % 2 == 0 ? FormClass::Orthogonal : FormClass::Symplectic};
    }
    case Family::B:
      if (s == 1) return Entry{BigInt(2 * m + 1), FormClass::Orthogonal};
      return std::nullopt;
    case Family::C:
      if (s == 1) return Entry{BigInt(2 * m), FormClass::Symplectic};
      return std::nullopt;
    case Family::D:
      if (s == 1) return Entry{BigInt(2 * m), FormClass::Orthogonal};
      if (s == m - 1 || s == m) {
        FormClass f = FormClass::NonSelfDual;
        if (m % 4 == 0) f = FormClass::Orthogonal;
        if (m % 4 == 2) f = FormClass::Symplectic;
        return Entry{pow2(m - 1), f};
      }
      return std::nullopt;
    case Family::E:
      if (m == 6 && (s == 1 || s == 6)) return Entry{BigInt(27), FormClass::NonSelfDual};
      if (m == 7 && s == 7) return Entry{BigInt(56), FormClass::Symplectic};
      return std::nullopt;
    case Family::F:
    case Family::G: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

IrrepDescriptor IrrepDescriptor::minuscule(const LieType& t, int s) {
  auto e = table_entry(t, s);
  if (!e)
    throw std::invalid_argument("w" + std::to_string(s) + " is not a minuscule weight of " + t.label());
  return IrrepDescriptor(t, s, std::move(e->dim), e->form);
}

IrrepDescriptor IrrepDescriptor::parse(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon + 1 == text.size())
    throw std::invalid_argument("expected family:rank:weight, got '" + std::string(text) + "'");
  const std::string idx(text.substr(colon + 1));
  int s = 0;
  try {
    std::size_t used = 0;
    s = std::stoi(idx, &used);
    if (used != idx.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad weight index in '" + std::string(text) + "'");
  }
  return minuscule(LieType::parse(text.substr(0, colon)), s);
}

bool IrrepDescriptor::is_spin() const {
  return family() == Family::D && (index_ == rank() || index_ == rank() - 1);
}

std::string IrrepDescriptor::label() const {
  return std::string(1, family_letter(family())) + ":" + std::to_string(rank()) + ":" +
         std::to_string(index_);
}

std::vector<IrrepDescriptor> enumerate_minuscule(const LieType& t) {
  std::vector<IrrepDescriptor> out;
  for (int s = 1; s <= t.rank(); ++s)
    if (table_entry(t, s)) out.push_back(IrrepDescriptor::minuscule(t, s));
  return out;
}

bool is_minuscule(const LieType& t, const Weight& w) {
  if (w.size() != static_cast<std::size_t>(t.rank()))
    throw std::invalid_argument("weight length does not match rank of " + t.label());
  if (!w.is_dominant()) throw std::invalid_argument("weight is not dominant");
  const int s = w.fundamental_index();
  return s != 0 && table_entry(t, s).has_value();
}

std::string catalog_line(const IrrepDescriptor& d) {
  return std::string(1, family_letter(d.family())) + " " + std::to_string(d.rank()) + " " +
         std::to_string(d.index()) + " " + d.dim().get_str() + " " + std::string(to_string(d.form()));
}

std::string catalog_json(const std::vector<IrrepDescriptor>& entries) {
  auto arr = nlohmann::json::array();
  for (const auto& d : entries) {
    arr.push_back({{"family", std::string(1, family_letter(d.family()))},
                   {"rank", d.rank()},
                   {"weight", d.index()},
                   {"dim", d.dim().get_str()},
                   {"form", std::string(to_string(d.form()))}});
  }
  return arr.dump();
}

}  // namespace mtc
