#include "cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nakayama/bijection.hpp"
#include "nakayama/counting.hpp"
#include "nakayama/error.hpp"
#include "nakayama/forests.hpp"

namespace nakayama::cli {

namespace {

/// Usage-level failure: bad argument values that CLI11 itself accepts.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_enumerable(int rank, int max_rank) {
  if (rank > max_rank)
    throw UsageError("rank " + std::to_string(rank) + " exceeds the enumeration limit " + std::to_string(max_rank) +
                     " (raise it with --max-rank)");
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<int> parse_counts(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  for (std::string field; std::getline(in, field, ',');) out.push_back(std::stoi(field));
  return out;
}

}  // namespace

OutputRecord make_record(const ExceptionalSequence& e) {
  const auto a = phi(e);
  return {to_string(e), to_string(a), to_string(shape(forest_from_function(a)))};
}

std::string render(int rank, const std::vector<OutputRecord>& records, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Text:
      for (const auto& r : records) out << r.sequence << "  phi=" << r.phi << "  shape=" << r.forest_shape << "\n";
      break;
    case Format::Csv:
      out << "sequence,phi,shape\n";
      for (const auto& r : records)
        out << csv_field(r.sequence) << "," << csv_field(r.phi) << "," << csv_field(r.forest_shape) << "\n";
      break;
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["rank"] = rank;
      doc["sequences"] = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json row;
        row["modules"] = nlohmann::ordered_json::array();
        for (const auto& m : parse_modules(r.sequence)) row["modules"].push_back(to_string(m));
        row["phi"] = parse_tuple(r.phi);
        row["shape"] = parse_counts(r.forest_shape);
        doc["sequences"].push_back(std::move(row));
      }
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

bool verify(Rank rank, const std::optional<GoldenTable>& golden, std::ostream& report) {
  bool all_ok = true;
  auto check = [&](bool ok, const std::string& what) {
    report << (ok ? "ok    " : "FAIL  ") << what << "\n";
    all_ok &= ok;
  };

  const auto sequences = enumerate_complete(rank);
  const auto functions = enumerate_idempotent(rank);
  const BigInt expected = count_formula(rank);
  check(BigInt(sequences.size()) == expected,
        "enumerated " + std::to_string(sequences.size()) + " sequences, formula gives " + to_string(expected));
  check(BigInt(functions.size()) == expected,
        "enumerated " + std::to_string(functions.size()) + " idempotent functions, formula gives " + to_string(expected));

  std::size_t bad = 0;
  for (const auto& e : sequences) {
    try {
      if (!(gamma(phi(e)) == e)) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  check(bad == 0, "gamma(phi(E)) = E for every sequence (" + std::to_string(bad) + " failures)");

  bad = 0;
  for (const auto& a : functions) {
    try {
      if (!(phi(gamma(a)) == a)) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  check(bad == 0, "phi(gamma(A)) = A for every idempotent function (" + std::to_string(bad) + " failures)");

  if (!golden) {
    report << "note  no reference table for rank " << rank.value() << "\n";
    return all_ok;
  }
  check(golden->rank == rank.value(), "golden table rank " + std::to_string(golden->rank));

  std::set<std::pair<std::vector<Indec>, std::vector<int>>> reference;
  for (const auto& row : golden->rows) {
    const std::string label = "row " + row.sequence + " -> " + row.phi;
    try {
      const auto e = parse_complete_sequence(normalize_sequence_text(row.sequence));
      const auto stored = parse_tuple(normalize_tuple_text(row.phi));
      if (e.rank() != rank) {
        check(false, label + ": wrong rank");
        continue;
      }
      const auto computed = phi(e);
      check(computed.values() == stored, label + (computed.values() == stored ? "" : ": phi is " + to_string(computed)));
      if (!reference.emplace(e.items(), stored).second) check(false, label + ": duplicate row");
    } catch (const std::exception& ex) {
      check(false, label + ": " + ex.what());
    }
  }

  std::set<std::pair<std::vector<Indec>, std::vector<int>>> computed;
  for (const auto& e : sequences) computed.emplace(e.items(), phi(e).values());
  check(reference == computed, "reference rows equal the enumerated set (" + std::to_string(reference.size()) + " vs " +
                                   std::to_string(computed.size()) + ")");
  return all_ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exceptional sequences of radical-square-zero linear Nakayama algebras"};
  app.require_subcommand(1);

  int rank = 0;
  int max_rank = kDefaultMaxRank;
  std::string format_name = "text";
  std::string method_name = "formula";
  std::string sequence_text;
  std::string function_text;
  bool shapes_only = false;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every complete exceptional sequence");
  enumerate_cmd->add_option("--rank", rank, "Rank n")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--format", format_name, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate_cmd->add_option("--max-rank", max_rank, "Enumeration limit")->check(CLI::PositiveNumber);

  auto* count_cmd = app.add_subcommand("count", "Count complete exceptional sequences");
  count_cmd->add_option("--rank", rank, "Rank n")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--method", method_name, "formula or enumerate")
      ->check(CLI::IsMember({"formula", "enumerate"}));
  count_cmd->add_option("--max-rank", max_rank, "Enumeration limit")->check(CLI::PositiveNumber);

  auto* phi_cmd = app.add_subcommand("phi", "Idempotent function of a complete exceptional sequence");
  phi_cmd->add_option("--sequence", sequence_text, "e.g. [[3],[2,3],[1,2]]")->required();

  auto* gamma_cmd = app.add_subcommand("gamma", "Exceptional sequence of an idempotent function");
  gamma_cmd->add_option("--function", function_text, "e.g. 7,2,2,4,4,7,7")->required();

  auto* forests_cmd = app.add_subcommand("forests", "Height-at-most-one labeled forests");
  forests_cmd->add_option("--rank", rank, "Rank n")->required()->check(CLI::PositiveNumber);
  forests_cmd->add_flag("--shapes", shapes_only, "Only list unlabeled shapes with labeled counts");
  forests_cmd->add_option("--max-rank", max_rank, "Enumeration limit")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Check round-trips, counts and reference tables");
  verify_cmd->add_option("--rank", rank, "Rank n")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-rank", max_rank, "Enumeration limit")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate_cmd->parsed()) {
      require_enumerable(rank, max_rank);
      std::vector<OutputRecord> records;
      for (const auto& e : enumerate_complete(Rank(rank))) records.push_back(make_record(e));
      const Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;
      out << render(rank, records, format);
    } else if (count_cmd->parsed()) {
      if (method_name == "enumerate") require_enumerable(rank, max_rank);
      const auto result = count(Rank(rank), method_name == "enumerate" ? CountMethod::Enumeration : CountMethod::Formula);
      out << to_string(result.value) << "\n";
    } else if (phi_cmd->parsed()) {
      out << to_string(phi(parse_complete_sequence(sequence_text))) << "\n";
    } else if (gamma_cmd->parsed()) {
      out << to_string(gamma(IdempotentFunction(parse_tuple(function_text)))) << "\n";
    } else if (forests_cmd->parsed()) {
      if (shapes_only) {
        for (const auto& s : enumerate_shapes(Rank(rank)))
          out << to_string(s) << "  " << to_string(count_labeled_with_shape(s)) << "\n";
        out << "total  " << to_string(count_formula(Rank(rank))) << "\n";
      } else {
        require_enumerable(rank, max_rank);
        for (const auto& a : enumerate_idempotent(Rank(rank))) {
          const auto f = forest_from_function(a);
          out << to_string(f) << "  shape=" << to_string(shape(f)) << "\n";
        }
      }
    } else if (verify_cmd->parsed()) {
      require_enumerable(rank, max_rank);
      return verify(Rank(rank), golden_table(rank), out) ? kExitOk : kExitVerificationFailed;
    }
  } catch (const std::invalid_argument& e) {  // includes ParseError
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace nakayama::cli
