#include "golden.hpp"

namespace nakayama::cli {

namespace {

const GoldenTable kRank2{2,
                         {
                             {"([1],[2])", "(1,2)"},
                             {"([1,2],[1])", "(2,2)"},
                             {"([2],[1,2])", "(1,1)"},
                         }};

const GoldenTable kRank3{3,
                         {
                             {"([1],[2],[3])", "(1,2,3)"},
                             {"([3],[2,3],[1,2])", "(1,1,1)"},
                             {"([2,3],[2],[1,2])", "(2,2,2)"},
                             {"([2,3],[1,2],[1])", "(3,3,3)"},
                             {"([1,2],[1],[3])", "(2,2,3)"},
                             {"([1],[2,3],[2])", "(1,3,3)"},
                             {"([1],[3],[2,3])", "(1,2,2)"},
                             {"([2],[1,2],[3])", "(1,1,3)"},
                             {"([2],[3],[1,2])", "(1,2,1)"},
                             {"([2,3],[1],[2])", "(3,2,3)"},
                         }};

const GoldenTable kRank4{4,
                         {
                             {"[[1],[2,3],[2],[4]]", "(1,3,3,4)"},
                             {"[[3,4],[3],[2,3],[1,2]]", "(2,2,2,2)"},
                             {"[[3,4],[2],[3],[1,2]]", "(3,2,3,2)"},
                             {"[[3,4],[2],[1,2],[3]]", "(4,2,2,4)"},
                             {"[[3,4],[1],[3],[2,3]]", "(3,2,3,3)"},
                             {"[[3,4],[1],[2],[3]]", "(4,2,3,4)"},
                             {"[[3,4],[1],[2,3],[2]]", "(4,2,4,4)"},
                             {"[[3,4],[2,3],[2],[1,2]]", "(3,3,3,3)"},
                             {"[[3,4],[2,3],[1],[2]]", "(4,4,3,4)"},
                             {"[[2],[4],[1,2],[3,4]]", "(1,2,1,2)"},
                             {"[[2],[4],[3,4],[1,2]]", "(1,2,2,1)"},
                             {"[[3],[2,3],[1,2],[4]]", "(1,1,1,4)"},
                             {"[[3],[2,3],[4],[1,2]]", "(1,1,3,1)"},
                             {"[[3],[4],[2,3],[1,2]]", "(1,2,1,1)"},
                             {"[[4],[3,4],[2,3],[1,2]]", "(1,1,1,1)"},
                             {"[[1],[3,4],[2,3],[2]]", "(1,4,4,4)"},
                             {"[[1],[3,4],[2],[3]]", "(1,4,3,4)"},
                             {"[[1],[3,4],[3],[2,3]]", "(1,3,3,3)"},
                             {"[[1],[2],[3,4],[3]]", "(1,2,4,4)"},
                             {"[[1],[2],[4],[3,4]]", "(1,2,3,3)"},
                             {"[[1],[3],[2,3],[4]]", "(1,2,2,4)"},
                             {"[[1],[3],[4],[2,3]]", "(1,2,3,2)"},
                             {"[[1],[4],[3,4],[2,3]]", "(1,2,2,2)"},
                             {"[[2],[1,2],[3,4],[3]]", "(1,1,4,4)"},
                             {"[[2],[1,2],[3],[4]]", "(1,1,3,4)"},
                             {"[[2],[3,4],[1,2],[3]]", "(1,4,1,4)"},
                             {"[[2],[3,4],[3],[1,2]]", "(1,3,3,1)"},
                             {"[[2],[3],[1,2],[4]]", "(1,2,1,4)"},
                             {"[[2],[3],[4],[1,2]]", "(1,2,3,1)"},
                             {"[[3,4],[2,3],[1,2],[1]]", "(4,4,4,4)"},
                             {"[[3,4],[1,2],[1],[3]]", "(4,3,3,4)"},
                             {"[[2,3],[2],[4],[1,2]]", "(2,2,3,2)"},
                             {"[[2,3],[2],[1,2],[4]]", "(2,2,2,4)"},
                             {"[[2,3],[1],[2],[4]]", "(3,2,3,4)"},
                             {"[[2,3],[1,2],[1],[4]]", "(3,3,3,4)"},
                             {"[[1,2],[1],[4],[3,4]]", "(2,2,3,3)"},
                             {"[[1,2],[1],[3],[4]]", "(2,2,3,4)"},
                             {"[[1,2],[1],[3,4],[3]]", "(2,2,4,4)"},
                             {"[[1,2],[3,4],[1],[3]]", "(3,4,3,4)"},
                             {"[[1],[2],[3],[4]]", "(1,2,3,4)"},
                             {"[[2],[1,2],[4],[3,4]]", "(1,1,3,3)"},
                         }};

}  // namespace

std::optional<GoldenTable> golden_table(int rank) {
  switch (rank) {
    case 2: return kRank2;
    case 3: return kRank3;
    case 4: return kRank4;
    default: return std::nullopt;
  }
}

std::string normalize_sequence_text(const std::string& text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    return "[" + text.substr(1, text.size() - 2) + "]";
  return text;
}

std::string normalize_tuple_text(const std::string& text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') return text.substr(1, text.size() - 2);
  return text;
}

}  // namespace nakayama::cli
