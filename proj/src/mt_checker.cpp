#include "mtc/mt_checker.hpp"

#include "mtc/arithmetic_lemmas.hpp"
#include "mtc/embedding_exclusion.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtc {

std::string_view to_string(EndoType t) {
  switch (t) {
    case EndoType::I: return "I";
    case EndoType::II: return "II";
    case EndoType::III: return "III";
    case EndoType::IVImagQuad: return "k";
    case EndoType::IVOther: return "IV";
    case EndoType::Q: return "Q";
  }
  return "?";
}

EndoType parse_endo_type(std::string_view text) {
  if (text == "I") return EndoType::I;
  if (text == "II") return EndoType::II;
  if (text == "III") return EndoType::III;
  if (text == "k" || text == "IV-imag-quad") return EndoType::IVImagQuad;
  if (text == "IV" || text == "IV-other") return EndoType::IVOther;
  if (text == "Q") return EndoType::Q;
  throw std::invalid_argument("unknown endomorphism type '" + std::string(text) + "'");
}

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::MTAndDivisorial: return "MT_and_divisorial";
    case Conclusion::MT: return "MT";
    case Conclusion::MTOrHodgeDivisorial: return "MT_or_HodgeDivisorial";
    case Conclusion::ExceptionPairHit: return "ExceptionPairHit";
    case Conclusion::NotCovered: return "NotCovered";
    case Conclusion::InputInconsistent: return "InputInconsistent";
  }
  return "?";
}

int strength(Conclusion c) {
  switch (c) {
    case Conclusion::MTAndDivisorial: return 5;
    case Conclusion::MT: return 4;
    case Conclusion::MTOrHodgeDivisorial: return 3;
    case Conclusion::ExceptionPairHit: return 2;
    case Conclusion::NotCovered: return 1;
    case Conclusion::InputInconsistent: return 0;
  }
  return 0;
}

std::string_view rule_id(Rule r) {
  static constexpr std::string_view ids[] = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"};
  return ids[static_cast<int>(r)];
}

std::string_view citation(Rule r) {
  static constexpr std::string_view tags[] = {"Thm1.2", "Thm2.4", "Thm5.1", "Thm5.2",
                                              "Thm6.4", "Thm6.5", "Thm6.6", "Thm7.1"};
  return tags[static_cast<int>(r)];
}

std::string_view summary(Rule r) {
  switch (r) {
    case Rule::Ribet: return "D = k with coprime k-signature: Tate cycles generated by divisors";
    case Rule::FourfoldEndo: return "simple 4-fold with End° != Q: MT";
    case Rule::MinimalReduction: return "simple, D in {Q, k}, minimal bad reduction: MT (divisorial when D = Q)";
    case Rule::FourfoldBad: return "simple 4-fold, D = Q, toric rank 1..3: Hodge and Tate cycles divisorial";
    case Rule::CoprimeK: return "D = k, toric rank 2r with gcd(r, g) = 1: MT outside the exception pairs";
    case Rule::CoprimeQ: return "D = Q, toric rank prime to 2g: MT";
    case Rule::RankTwoQ: return "simple, D = Q, toric rank 2: MT";
    case Rule::Disjunction: return "simple algebras, type I/II or non-Weil D = k: MT or Hodge cycles divisorial";
  }
  return "?";
}

namespace {

long gcd_l(long a, long b) { return std::gcd(a, b); }

bool is_type_iv(EndoType t) { return t == EndoType::IVImagQuad || t == EndoType::IVOther; }

class Evaluator {
 public:
  explicit Evaluator(const AVDescriptor& d) : d_(d) {}

  Verdict run() {
    ribet();
    fourfold_endo();
    minimal_reduction();
    fourfold_bad();
    coprime_k();
    coprime_q();
    rank_two_q();
    disjunction();
    finish();
    return std::move(v_);
  }

 private:
  void fire(Rule r, Conclusion c, std::string note) {
    v_.fired.push_back({r, c, std::move(note)});
    if (strength(c) > strength(v_.conclusion)) v_.conclusion = c;
  }
  void unmet(Rule r, std::string reason) { v_.unmet.push_back({r, std::move(reason)}); }

  bool is_k() const { return d_.endo_type == EndoType::IVImagQuad; }
  bool is_q() const { return d_.endo_type == EndoType::Q; }

  void ribet() {
    if (!is_k()) return unmet(Rule::Ribet, "End° is not an imaginary quadratic field");
    if (!d_.signature) return unmet(Rule::Ribet, "no k-signature given");
    const long c = gcd_l(d_.signature->sigma, d_.signature->rho);
    if (c != 1) return unmet(Rule::Ribet, "gcd(m_sigma, m_rho) = " + std::to_string(c));
    fire(Rule::Ribet, Conclusion::MTAndDivisorial, "Ribet type");
  }

  void fourfold_endo() {
    if (d_.g != 4) return unmet(Rule::FourfoldEndo, "g != 4");
    if (!d_.simple) return unmet(Rule::FourfoldEndo, "A not known to be simple");
    if (is_q()) return unmet(Rule::FourfoldEndo, "End° = Q");
    fire(Rule::FourfoldEndo, Conclusion::MT, "4-fold with End° != Q");
  }

  void minimal_reduction() {
    if (!d_.bad()) return unmet(Rule::MinimalReduction, "no bad semistable split reduction");
    if (!d_.simple) return unmet(Rule::MinimalReduction, "A not known to be simple");
    if (is_q() && d_.toric_rank == 1)
      return fire(Rule::MinimalReduction, Conclusion::MTAndDivisorial, "minimal reduction, D = Q, toric rank 1");
    if (is_k() && d_.toric_rank == 2)
      return fire(Rule::MinimalReduction, Conclusion::MT, "minimal reduction, D = k, toric rank 2");
    unmet(Rule::MinimalReduction, "reduction is not minimal for D in {Q, k}");
  }

  void fourfold_bad() {
    if (d_.g != 4 || !d_.simple || !is_q()) return unmet(Rule::FourfoldBad, "not a simple 4-fold with End° = Q");
    if (!d_.bad()) return unmet(Rule::FourfoldBad, "no bad semistable split reduction");
    if (d_.toric_rank < 1 || d_.toric_rank > 3)
      return unmet(Rule::FourfoldBad, "toric rank " + std::to_string(d_.toric_rank) + " (purely multiplicative)");
    fire(Rule::FourfoldBad, Conclusion::MTAndDivisorial, "4-fold, D = Q, bad not purely multiplicative");
  }

  void record_survivors(Rule rule, long n, FormClass form, long r) {
    if (n <= 4 || n > 1'000'000'000L) return;
    v_.evidence.push_back({rule, BigInt(n), form, BigInt(r), surviving_inners(BigInt(n), form, BigInt(r))});
  }

  void coprime_k() {
    if (!is_k()) return unmet(Rule::CoprimeK, "End° is not an imaginary quadratic field");
    if (!d_.bad()) return unmet(Rule::CoprimeK, "no bad semistable split reduction");
    if (d_.toric_rank % 2 != 0) return unmet(Rule::CoprimeK, "toric rank is odd");
    const long r = d_.toric_rank / 2;
    if (gcd_l(r, d_.g) != 1) return unmet(Rule::CoprimeK, "gcd(r, g) = " + std::to_string(gcd_l(r, d_.g)));
    const std::string pair = "(g, r) = (" + std::to_string(d_.g) + ", " + std::to_string(r) + ")";
    record_survivors(Rule::CoprimeK, d_.g, FormClass::NonSelfDual, r);
    if (is_exception_pair(d_.g, r)) return fire(Rule::CoprimeK, Conclusion::ExceptionPairHit, pair + " is an exception pair");
    fire(Rule::CoprimeK, Conclusion::MT, pair + " coprime, not an exception");
  }

  void coprime_q() {
    if (!is_q()) return unmet(Rule::CoprimeQ, "End° != Q");
    if (!d_.bad()) return unmet(Rule::CoprimeQ, "no bad semistable split reduction");
    const long c = gcd_l(d_.toric_rank, 2 * d_.g);
    if (c != 1) return unmet(Rule::CoprimeQ, "gcd(toric rank, 2g) = " + std::to_string(c));
    record_survivors(Rule::CoprimeQ, 2 * d_.g, FormClass::Symplectic, d_.toric_rank);
    fire(Rule::CoprimeQ, Conclusion::MT, "toric rank " + std::to_string(d_.toric_rank) + " prime to 2g");
  }

  void rank_two_q() {
    if (!is_q() || !d_.simple) return unmet(Rule::RankTwoQ, "not simple with End° = Q");
    if (!d_.bad() || d_.toric_rank != 2) return unmet(Rule::RankTwoQ, "toric rank is not 2");
    fire(Rule::RankTwoQ, Conclusion::MT, "D = Q, toric rank 2");
  }

  // How the Hodge and Galois Lie algebras are known to be simple, if at all.
  std::optional<std::string> simplicity_route() const {
    if (d_.simple_algebras) return "simplicity asserted";
    if (!d_.bad()) return std::nullopt;
    const long e = d_.endo_degree;
    switch (d_.endo_type) {
      case EndoType::Q:
      case EndoType::I:
        if (d_.toric_rank % e == 0 && (2 * d_.g) % e == 0 && gcd_l(d_.toric_rank / e, 2 * d_.g / e) == 1)
          return "gcd(toric rank / e, 2g / e) = 1";
        return std::nullopt;
      case EndoType::IVImagQuad:
        if (d_.toric_rank % 2 == 0 && gcd_l(d_.toric_rank / 2, d_.g) == 1) return "gcd(toric rank / 2, g) = 1";
        return std::nullopt;
      default: return std::nullopt;
    }
  }

  void disjunction() {
    if (!d_.simple) return unmet(Rule::Disjunction, "A not known to be simple");
    const bool eligible_type = d_.endo_type == EndoType::I || d_.endo_type == EndoType::II || is_q() ||
                               (is_k() && d_.signature && d_.signature->sigma != d_.signature->rho);
    if (!eligible_type) return unmet(Rule::Disjunction, "not type I/II and not a non-Weil D = k");
    const auto route = simplicity_route();
    if (!route) return unmet(Rule::Disjunction, "simplicity of the Lie algebras not inferable");
    if (strength(v_.conclusion) >= strength(Conclusion::MTOrHodgeDivisorial))
      return unmet(Rule::Disjunction, "a stronger rule already fired");
    fire(Rule::Disjunction, Conclusion::MTOrHodgeDivisorial, *route);
  }

  void finish() {
    std::vector<std::string> notes;
    for (const auto& f : v_.fired) {
      v_.citations.emplace_back(citation(f.rule));
      notes.push_back(std::string(rule_id(f.rule)) + ": " + f.note);
    }
    if (v_.fired.empty()) notes.emplace_back("no rule applies");
    if (is_k() && d_.signature && (d_.signature->sigma == 0 || d_.signature->rho == 0))
      notes.emplace_back("k-signature (0, g): CM type, MT known independently");
    for (std::size_t i = 0; i < notes.size(); ++i) v_.notes += (i ? "; " : "") + notes[i];
  }

  const AVDescriptor& d_;
  Verdict v_;
};

}  // namespace

std::optional<Inconsistency> validate(const AVDescriptor& d) {
  const auto fail = [](std::string what, std::string tag) {
    return std::optional<Inconsistency>(Inconsistency{std::move(what), std::move(tag)});
  };
  if (d.g < 1) return fail("g must be positive", "0.0");
  if (d.endo_degree < 1) return fail("endomorphism degree must be positive", "0.0");
  if (d.toric_rank < 0) return fail("toric rank must be non-negative", "3.0.1");
  if (d.endo_type == EndoType::Q && d.endo_degree != 1) return fail("D = Q requires degree 1", "0.0");
  if (d.endo_type == EndoType::IVImagQuad && d.endo_degree != 2) return fail("D = k requires degree 2", "0.0");
  if ((2 * d.g) % d.endo_degree != 0) return fail("(D:Q) must divide 2g", "0.0");
  if (d.signature) {
    if (!is_type_iv(d.endo_type)) return fail("k-signature given for a non type IV algebra", "0.2");
    if (d.signature->sigma < 0 || d.signature->rho < 0) return fail("signature entries must be non-negative", "0.2");
    if (d.signature->sigma + d.signature->rho != d.g) return fail("m_sigma + m_rho must equal g", "0.2");
  }
  if (d.toric_rank > d.g) return fail("toric rank exceeds g", "3.1");
  if (d.bad() && d.toric_rank < 1) return fail("bad reduction requires toric rank >= 1", "3.4.2");
  if (!d.bad() && d.toric_rank > 0) return fail("positive toric rank requires bad semistable split reduction", "3.0.1");
  if (d.bad() && d.toric_rank % d.endo_degree != 0) return fail("(D:Q) must divide the toric rank", "3.0.2");
  return std::nullopt;
}

Verdict decide(const AVDescriptor& d) {
  if (auto bad = validate(d)) {
    Verdict v;
    v.conclusion = Conclusion::InputInconsistent;
    v.citations.push_back(bad->citation);
    v.notes = bad->constraint;
    return v;
  }
  return Evaluator(d).run();
}

std::string explain(const Verdict& v) {
  std::ostringstream os;
  os << "conclusion: " << to_string(v.conclusion) << '\n';
  if (v.conclusion == Conclusion::InputInconsistent) {
    os << "input inconsistent [" << (v.citations.empty() ? "" : v.citations.front()) << "]: " << v.notes << '\n';
    return os.str();
  }
  if (!v.fired.empty()) {
    os << "rules fired:\n";
    for (const auto& f : v.fired) {
      os << "  " << rule_id(f.rule) << " [" << citation(f.rule) << "] " << summary(f.rule) << '\n'
         << "     -> " << to_string(f.conclusion) << " (" << f.note << ")\n";
      for (const auto& e : v.evidence) {
        if (e.rule != f.rule) continue;
        os << "     survivors: ";
        if (e.survivors.empty()) os << "none";
        for (std::size_t i = 0; i < e.survivors.size(); ++i) os << (i ? ", " : "") << e.survivors[i].label();
        os << " [n=" << e.n << ", " << to_string(e.form) << ", r=" << e.r << "]\n";
      }
    }
  }
  if (!v.unmet.empty()) {
    os << "rules not applicable:\n";
    for (const auto& u : v.unmet) os << "  " << rule_id(u.rule) << " [" << citation(u.rule) << "]: " << u.reason << '\n';
  }
  os << "notes: " << v.notes << '\n';
  return os.str();
}

std::string to_machine(const Verdict& v) {
  nlohmann::json j = {{"conclusion", std::string(to_string(v.conclusion))},
                      {"citations", v.citations},
                      {"notes", v.notes}};
  return j.dump();
}

}  // namespace mtc
