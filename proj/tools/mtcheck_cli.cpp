#include "mtc/arithmetic_lemmas.hpp"
#include "mtc/descriptor_flags.hpp"
#include "mtc/embedding_exclusion.hpp"
#include "mtc/minuscule_catalog.hpp"
#include "mtc/monodromy.hpp"
#include "mtc/mt_checker.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitInconsistent = 2;

int run_catalog(const std::string& family, int rank, const std::string& format) {
  const mtc::LieType t(mtc::parse_family(family), rank);
  const auto entries = mtc::enumerate_minuscule(t);
  if (format == "json") {
    std::cout << mtc::catalog_json(entries) << '\n';
  } else {
    for (const auto& e : entries) std::cout << mtc::catalog_line(e) << '\n';
  }
  return 0;
}

int run_pair(const std::string& inner, const std::string& outer, const std::string& r) {
  const auto pair = mtc::CandidatePair::make(mtc::IrrepDescriptor::parse(inner),
                                             mtc::IrrepDescriptor::parse(outer));
  const auto v = mtc::check_pair(pair, mtc::parse_bigint(r));
  std::cout << mtc::to_string(v.status) << ' ' << v.reason() << '\n';
  return 0;
}

int run_survivors(const std::string& n, const std::string& form, const std::string& r) {
  const auto found = mtc::surviving_inners(mtc::parse_bigint(n), mtc::parse_form_class(form),
                                           mtc::parse_bigint(r));
  if (found.empty()) std::cout << "none\n";
  for (const auto& d : found) std::cout << mtc::catalog_line(d) << '\n';
  return 0;
}

int run_lemma(long m_max, bool mod4) {
  if (mod4) {
    for (long m : mtc::gcd_mod4_check(m_max)) std::cout << m << '\n';
  } else {
    for (const auto& p : mtc::divisibility_solutions(m_max)) std::cout << p.m << ' ' << p.s << '\n';
  }
  return 0;
}

int run_exceptions(long g_max) {
  for (const auto& e : mtc::exception_pairs(g_max))
    std::cout << e.g << ' ' << e.r << ' ' << mtc::to_string(e.source) << '\n';
  return 0;
}

int run_monodromy(int g, int r, std::uint64_t seed, int trials) {
  std::vector<std::pair<std::string, int>> passes;
  for (int t = 0; t < trials; ++t) {
    const auto inst = mtc::build_instance(g, r, seed + static_cast<std::uint64_t>(t));
    const auto fields = mtc::report_fields(mtc::check_invariants(inst));
    if (passes.empty())
      for (const auto& [name, ok] : fields) passes.emplace_back(std::string(name), 0);
    for (std::size_t i = 0; i < fields.size(); ++i) passes[i].second += fields[i].second ? 1 : 0;
  }
  bool all = true;
  for (const auto& [name, count] : passes) {
    std::cout << name << ' ' << (count == trials ? "pass" : "FAIL") << ' ' << count << '/' << trials
              << '\n';
    all = all && count == trials;
  }
  return all ? 0 : 1;
}

void print_verdict(const mtc::Verdict& v, const std::string& format) {
  if (format == "machine") {
    std::cout << mtc::to_machine(v) << '\n';
  } else {
    std::cout << mtc::explain(v);
  }
}

int run_check_file(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  bool inconsistent = false;
  bool first = true;
  for (const auto& rec : mtc::run_batch(in)) {
    inconsistent = inconsistent || rec.verdict.conclusion == mtc::Conclusion::InputInconsistent;
    if (format != "machine") {
      if (!first) std::cout << '\n';
      std::cout << "descriptor: " << rec.line << '\n';
    }
    first = false;
    print_verdict(rec.verdict, format);
  }
  return inconsistent ? kExitInconsistent : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minuscule embeddings, monodromy models and Mumford-Tate verdicts"};
  app.require_subcommand(1);

  std::string family;
  int rank = 0;
  std::string format = "text";
  auto* catalog = app.add_subcommand("catalog", "list minuscule weights of one Lie type");
  catalog->add_option("--family", family, "A, B, C, D, E, F or G")->required();
  catalog->add_option("--rank", rank)->required();
  catalog->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string inner;
  std::string outer;
  std::string rank_tau;
  auto* pair = app.add_subcommand("pair", "decide one inner/outer candidate pair");
  pair->add_option("--inner", inner, "family:rank:weight")->required();
  pair->add_option("--outer", outer, "family:rank:weight")->required();
  pair->add_option("--rank-tau", rank_tau, "rank of the square-zero element")->required();

  std::string dim;
  std::string form;
  auto* survivors = app.add_subcommand("survivors", "inner algebras left standing");
  survivors->add_option("--dim", dim)->required();
  survivors->add_option("--form", form)->required()->check(CLI::IsMember({"nsd", "symp", "orth"}));
  survivors->add_option("--rank-tau", rank_tau)->required();

  long m_max = 500;
  bool mod4 = false;
  auto* lemma = app.add_subcommand("lemma", "divisibility search, or the gcd check with --mod4");
  lemma->add_option("--mmax", m_max);
  lemma->add_flag("--mod4", mod4);

  long g_max = 5000;
  auto* exceptions = app.add_subcommand("exceptions", "exception pairs (g, r)");
  exceptions->add_option("--gmax", g_max);

  int g = 0;
  int r = 0;
  std::uint64_t seed = 0;
  int trials = 1;
  auto* monodromy = app.add_subcommand("monodromy", "build seeded instances and check invariants");
  monodromy->add_option("--g", g)->required();
  monodromy->add_option("--r", r)->required();
  monodromy->add_option("--seed", seed)->required();
  monodromy->add_option("--trials", trials)->check(CLI::PositiveNumber);

  mtc::DescriptorFlags flags;
  std::string batch;
  std::string check_format = "text";
  auto* check = app.add_subcommand("check", "verdict for an abelian-variety descriptor");
  mtc::add_descriptor_options(*check, flags, false);
  check->add_option("--format", check_format)->check(CLI::IsMember({"text", "machine"}));
  check->add_option("--file", batch, "one flag set per line");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*catalog) return run_catalog(family, rank, format);
    if (*pair) return run_pair(inner, outer, rank_tau);
    if (*survivors) return run_survivors(dim, form, rank_tau);
    if (*lemma) return run_lemma(m_max, mod4);
    if (*exceptions) return run_exceptions(g_max);
    if (*monodromy) return run_monodromy(g, r, seed, trials);
    if (*check) {
      if (!batch.empty()) return run_check_file(batch, check_format);
      for (const char* name : {"--g", "--endo", "--toric-rank"})
        if (check->count(name) == 0) throw std::invalid_argument(std::string(name) + " is required");
      const auto v = mtc::decide(mtc::to_descriptor(flags));
      print_verdict(v, check_format);
      return v.conclusion == mtc::Conclusion::InputInconsistent ? kExitInconsistent : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
