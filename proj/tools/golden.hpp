#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nakayama::cli {

/// One reference row: sequence and tuple text in their original spelling
/// ("([1],[2])" / "(1,2)" in the small tables, "[[1],[2],...]" in the rank-4
/// list).
struct GoldenRow {
  std::string sequence;
  std::string phi;

  friend bool operator==(const GoldenRow&, const GoldenRow&) = default;
};

struct GoldenTable {
  int rank = 0;
  std::vector<GoldenRow> rows;
};

/// Embedded table for ranks 2, 3 and 4; empty for other ranks.
std::optional<GoldenTable> golden_table(int rank);

/// Rewrites an outer "(...)" to "[...]" so both spellings parse
/// with the canonical sequence grammar.
std::string normalize_sequence_text(const std::string& text);

/// Strips surrounding parentheses from a tuple: "(1,2)" -> "1,2".
std::string normalize_tuple_text(const std::string& text);

}  // namespace nakayama::cli
