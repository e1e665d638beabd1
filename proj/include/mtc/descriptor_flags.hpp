#pragma once

#include "mtc/mt_checker.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace mtc {

/// Raw option values of the `check` flag set, before interpretation.
struct DescriptorFlags {
  long g = 0;
  std::string endo;
  std::optional<long> degree;
  std::string signature;  // "a,b" or empty
  long toric_rank = 0;
  bool bad_semistable_split = false;
  bool simple = false;
  bool simple_algebras = false;
};

/// Registers --g --endo --degree --signature --toric-rank
/// --bad-semistable-split --simple --simple-algebras on `app`. With
/// `required` false the caller checks for --g, --endo and --toric-rank itself.
void add_descriptor_options(CLI::App& app, DescriptorFlags& flags, bool required = true);

/// Throws std::invalid_argument on malformed values. --degree defaults to 1
/// for Q and 2 for k and is required otherwise.
AVDescriptor to_descriptor(const DescriptorFlags& flags);

/// Parses one batch line holding a full flag set, e.g.
/// "--g 4 --endo Q --toric-rank 2 --bad-semistable-split --simple".
/// Throws std::invalid_argument on any parse failure.
AVDescriptor parse_descriptor_line(const std::string& line);

struct BatchRecord {
  std::string line;
  Verdict verdict;
};

/// One record per non-blank line not starting with '#'. Lines that fail to
/// parse become InputInconsistent verdicts citing "input".
std::vector<BatchRecord> run_batch(std::istream& in);

}  // namespace mtc
