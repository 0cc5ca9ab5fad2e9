#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "golden.hpp"
#include "nakayama/exceptional.hpp"

namespace nakayama::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kDefaultMaxRank = 9;

enum class Format { Text, Json, Csv };

/// One enumerated sequence with its tuple and forest shape, all as text.
struct OutputRecord {
  std::string sequence;
  std::string phi;
  std::string forest_shape;
};

OutputRecord make_record(const ExceptionalSequence& e);

std::string render(int rank, const std::vector<OutputRecord>& records, Format format);

/// Round-trip and counting checks for one rank, plus the golden table when
/// given. Writes one line per check to `report`; returns true iff all pass.
bool verify(Rank rank, const std::optional<GoldenTable>& golden, std::ostream& report);

/// Entry point behind main(). `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nakayama::cli
