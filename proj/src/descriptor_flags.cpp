#include "mtc/descriptor_flags.hpp"

#include <CLI11.hpp>

#include <istream>
#include <stdexcept>

namespace mtc {

void add_descriptor_options(CLI::App& app, DescriptorFlags& flags, bool required) {
  app.add_option("--g", flags.g, "dimension of A")->required(required);
  app.add_option("--endo", flags.endo, "End° type: I, II, III, k, IV or Q")
      ->required(required)
      ->check(CLI::IsMember({"I", "II", "III", "k", "IV", "Q"}));
  app.add_option("--degree", flags.degree, "(D : Q); defaults to 1 for Q and 2 for k");
  app.add_option("--signature", flags.signature, "k-signature as m_sigma,m_rho");
  app.add_option("--toric-rank", flags.toric_rank, "toric rank of the reduction")->required(required);
  app.add_flag("--bad-semistable-split", flags.bad_semistable_split, "bad semistable split reduction");
  app.add_flag("--simple", flags.simple, "A is absolutely simple");
  app.add_flag("--simple-algebras", flags.simple_algebras,
               "assert that the Hodge and Galois Lie algebras are simple");
}

AVDescriptor to_descriptor(const DescriptorFlags& flags) {
  AVDescriptor d;
  d.g = flags.g;
  d.endo_type = parse_endo_type(flags.endo);
  if (flags.degree) {
    d.endo_degree = *flags.degree;
  } else if (d.endo_type == EndoType::Q) {
    d.endo_degree = 1;
  } else if (d.endo_type == EndoType::IVImagQuad) {
    d.endo_degree = 2;
  } else {
    throw std::invalid_argument("--degree is required for endo type " + flags.endo);
  }
  if (!flags.signature.empty()) {
    const auto comma = flags.signature.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--signature expects a,b");
    try {
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const std::string a = flags.signature.substr(0, comma);
      const std::string b = flags.signature.substr(comma + 1);
      const long sigma = std::stol(a, &used_a);
      const long rho = std::stol(b, &used_b);
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing");
      d.signature = Signature{sigma, rho};
    } catch (const std::exception&) {
      throw std::invalid_argument("--signature expects a,b, got '" + flags.signature + "'");
    }
  }
  d.toric_rank = flags.toric_rank;
  d.reduction = flags.bad_semistable_split ? Reduction::BadSemistableSplit : Reduction::GoodOrUnknown;
  d.simple = flags.simple;
  d.simple_algebras = flags.simple_algebras;
  return d;
}

AVDescriptor parse_descriptor_line(const std::string& line) {
  CLI::App app{"descriptor"};
  DescriptorFlags flags;
  add_descriptor_options(app, flags);
  try {
    app.parse(line, false);
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument("cannot parse descriptor '" + line + "': " + e.what());
  }
  return to_descriptor(flags);
}

std::vector<BatchRecord> run_batch(std::istream& in) {
  std::vector<BatchRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    line = line.substr(start, line.find_last_not_of(" \t\r") - start + 1);
    BatchRecord rec{line, {}};
    try {
      rec.verdict = decide(parse_descriptor_line(line));
    } catch (const std::exception& e) {
      rec.verdict.conclusion = Conclusion::InputInconsistent;
      rec.verdict.citations = {"input"};
      rec.verdict.notes = e.what();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace mtc
