// pardes command line front end: table generation, identity verification,
// Genocchi utilities, bijection and pattern inspection.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <string>

#include "pardes/bijections.hpp"
#include "pardes/closed_form.hpp"
#include "pardes/genocchi.hpp"
#include "pardes/operators.hpp"
#include "pardes/patterns.hpp"
#include "pardes/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pardes;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw CLI::ValidationError("--format", "expected text, json or csv");
}

ordered_json coefficients_json(const BivariatePolynomial& poly) {
  ordered_json arr = ordered_json::array();
  for (const auto& [key, value] : poly.terms())
    arr.push_back({{"z", key.z}, {"x", key.x}, {"value", value.str()}});
  return arr;
}

void print_poly(const BivariatePolynomial& poly, Format format, Family family, int n) {
  switch (format) {
    case Format::Text:
      std::cout << to_string(poly) << "\n";
      break;
    case Format::Json: {
      ordered_json doc = {{"family", to_string(family)},
                          {"n", n},
                          {"coefficients", coefficients_json(poly)}};
      std::cout << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "z,x,value\n";
      for (const auto& [key, value] : poly.terms())
        std::cout << key.z << ',' << key.x << ',' << value.str() << "\n";
      break;
  }
}

int print_report(const VerificationReport& report, Format format) {
  switch (format) {
    case Format::Text:
      for (const auto& rec : report.records) {
        const char* status = rec.expected_deviation ? "NOTE" : (rec.pass ? "PASS" : "FAIL");
        std::cout << "[" << status << "] " << report.suite << ": " << rec.identity;
        if (rec.n > 0) std::cout << " (n=" << rec.n << ")";
        if (!rec.pass || rec.expected_deviation)
          std::cout << "  computed=" << rec.left << " reference=" << rec.right;
        if (!rec.note.empty()) std::cout << "  [" << rec.note << "]";
        std::cout << "\n";
      }
      std::cout << report.suite << ": "
                << (report.passed() ? "all checks passed" : "CHECKS FAILED") << " ("
                << report.records.size() << " records, " << report.failure_count()
                << " failures)\n";
      break;
    case Format::Json: {
      ordered_json records = ordered_json::array();
      for (const auto& rec : report.records)
        records.push_back({{"identity", rec.identity},
                           {"n", rec.n},
                           {"status", rec.pass ? "pass" : "fail"},
                           {"expected_deviation", rec.expected_deviation},
                           {"left", rec.left},
                           {"right", rec.right},
                           {"note", rec.note}});
      ordered_json doc = {{"suite", report.suite},
                          {"passed", report.passed()},
                          {"records", records}};
      std::cout << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "suite,identity,n,status,expected_deviation,left,right\n";
      for (const auto& rec : report.records)
        std::cout << report.suite << ",\"" << rec.identity << "\"," << rec.n << ','
                  << (rec.pass ? "pass" : "fail") << ','
                  << (rec.expected_deviation ? 1 : 0) << ',' << rec.left << ','
                  << rec.right << "\n";
      break;
  }
  return report.passed() ? 0 : 1;
}

void print_pairs(const std::vector<std::pair<Permutation, Permutation>>& pairs,
                 Format format) {
  switch (format) {
    case Format::Text:
      for (const auto& [from, to] : pairs)
        std::cout << to_string(from) << " -> " << to_string(to) << "\n";
      break;
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& [from, to] : pairs)
        arr.push_back({{"from", from.values()}, {"to", to.values()}});
      std::cout << ordered_json{{"pairs", arr}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "from,to\n";
      for (const auto& [from, to] : pairs)
        std::cout << '"' << to_string(from) << "\",\"" << to_string(to) << "\"\n";
      break;
  }
}

int run_table(Family family, int n, bool closed, Format format) {
  const BivariatePolynomial poly =
      closed ? closed_form_poly(family, n) : family_poly(family, n);
  print_poly(poly, format, family, n);
  return 0;
}

int run_verify(const std::string& suite, int max_n, Format format) {
  if (suite == "list") {
    for (const std::string& id : registered_suites()) std::cout << id << "\n";
    return 0;
  }
  if (suite == "all") {
    bool all_pass = true;
    for (const std::string& id : registered_suites()) {
      const auto report = run_identity_suite(id, max_n);
      if (print_report(report, format) != 0) all_pass = false;
    }
    return all_pass ? 0 : 1;
  }
  return print_report(run_identity_suite(suite, max_n), format);
}

int run_genocchi(int count, bool check, Format format) {
  const auto table = genocchi_sequence(count);
  switch (format) {
    case Format::Text: {
      std::string line;
      for (const auto& v : table.values) {
        if (!line.empty()) line += ' ';
        line += v.str();
      }
      std::cout << line << "\n";
      break;
    }
    case Format::Json: {
      ordered_json values = ordered_json::array();
      for (const auto& v : table.values) values.push_back(v.str());
      std::cout << ordered_json{{"count", count}, {"values", values}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "index,value\n";
      for (std::size_t i = 0; i < table.values.size(); ++i)
        std::cout << i + 1 << ',' << table.values[i].str() << "\n";
      break;
  }
  if (check) return print_report(run_identity_suite("genocchi", 0), format);
  return 0;
}

int run_bijection(const std::string& name, int n, const std::string& apply_arg,
                  Format format) {
  const bool has_arg = !apply_arg.empty();
  const auto arg = [&] { return parse_permutation(apply_arg); };

  if (name == "alpha" || name == "beta") {
    const MatchingTable& table = name == "alpha" ? alpha_table(n) : beta_table(n);
    if (has_arg) {
      const Permutation image = table.apply(arg());
      if (format == Format::Json)
        std::cout << ordered_json{{"result", image.values()}}.dump(2) << "\n";
      else
        std::cout << to_string(image) << "\n";
      return 0;
    }
    print_pairs(table.pairs(), format);
    return 0;
  }

  const auto apply_one = [&](const Permutation& sigma)
      -> std::pair<std::string, Permutation> {
    if (name == "r-symmetry") return {"", r_symmetry(sigma)};
    if (name == "p-complement") return {"", p_complement(sigma)};
    if (name == "r-split") {
      const auto [tag, pi] = r_split(sigma);
      return {to_string(tag), pi};
    }
    throw CLI::ValidationError("--name", "unknown bijection '" + name + "'");
  };

  if (has_arg) {
    const auto [tag, image] = apply_one(arg());
    if (format == Format::Json) {
      ordered_json doc = {{"result", image.values()}};
      if (!tag.empty()) doc["tag"] = tag;
      std::cout << doc.dump(2) << "\n";
    } else {
      if (!tag.empty()) std::cout << tag << ": ";
      std::cout << to_string(image) << "\n";
    }
    return 0;
  }

  std::vector<std::pair<Permutation, Permutation>> pairs;
  for_each_perm(n, [&](std::span<const int> p) {
    const Permutation sigma{std::vector<int>(p.begin(), p.end())};
    if (name == "p-complement" && sigma.values()[0] % 2 == 0) return;
    pairs.emplace_back(sigma, apply_one(sigma).second);
  });
  print_pairs(pairs, format);
  return 0;
}

int run_pattern(const std::string& perm_text, const std::string& pattern_text,
                Format format) {
  const Permutation sigma = parse_permutation(perm_text);
  const ParityPattern pattern = ParityPattern::parse(pattern_text);
  const int count = count_consecutive_matches(sigma, pattern);
  if (format == Format::Json) {
    ordered_json doc = {{"perm", sigma.values()},
                        {"pattern", pattern.to_string()},
                        {"count", count},
                        {"avoided", count == 0}};
    std::cout << doc.dump(2) << "\n";
  } else if (format == Format::Csv) {
    std::cout << "pattern,count\n\"" << pattern.to_string() << "\"," << count << "\n";
  } else {
    std::cout << count << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("PARITY_DESCENTS_MAX_N")) {
    try {
      set_enumeration_cap(std::stoi(cap));
    } catch (const std::exception&) {
      std::cerr << "pardes: ignoring invalid PARITY_DESCENTS_MAX_N='" << cap << "'\n";
    }
  }

  CLI::App app{"Exact distributions of parity-refined descent statistics"};
  app.require_subcommand(1);
  std::string format_name = "text";
  const auto with_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format: text, json or csv")
        ->capture_default_str();
    return cmd;
  };

  auto* table_cmd =
      with_format(app.add_subcommand("table", "Print one distribution polynomial"));
  std::string family_name;
  int table_n = 1;
  bool closed = false;
  table_cmd->add_option("--family", family_name, "Family: R, P, Q or M")->required();
  table_cmd->add_option("--n", table_n, "Polynomial index n >= 1")->required();
  table_cmd->add_flag("--closed-form", closed,
                      "Evaluate the closed-form coefficients instead of the recursion");

  auto* verify_cmd =
      with_format(app.add_subcommand("verify", "Run registered identity suites"));
  std::string suite;
  int max_n = 0;
  verify_cmd->add_option("--suite", suite, "Suite id or 'all'")->required();
  verify_cmd->add_option("--max-n", max_n, "Upper size bound (0 = suite default)");

  auto* genocchi_cmd =
      with_format(app.add_subcommand("genocchi", "Print the integer sequence"));
  int count = 6;
  bool check = false;
  genocchi_cmd->add_option("--count", count, "How many values")->required();
  genocchi_cmd->add_flag("--check", check, "Also run the genocchi identity suite");

  auto* bij_cmd =
      with_format(app.add_subcommand("bijection", "Inspect or apply a bijection"));
  std::string bij_name, apply_arg;
  int bij_n = 0;
  bij_cmd->add_option("--name", bij_name,
                      "r-symmetry, r-split, p-complement, alpha or beta")
      ->required();
  bij_cmd->add_option("--n", bij_n, "Permutation size");
  bij_cmd->add_option("--apply", apply_arg, "Apply to one permutation, e.g. \"2 1\"");

  auto* pattern_cmd =
      with_format(app.add_subcommand("pattern", "Count consecutive pattern matches"));
  std::string perm_text, pattern_text;
  pattern_cmd->add_option("--perm", perm_text, "Permutation, e.g. \"2 5 3 1 4\"")
      ->required();
  pattern_cmd->add_option("--pattern", pattern_text, "Pattern, e.g. \"2e1*\"")
      ->required();

  try {
    app.parse(argc, argv);
    const Format format = parse_format(format_name);
    if (*table_cmd) return run_table(family_from_string(family_name), table_n, closed, format);
    if (*verify_cmd) return run_verify(suite, max_n, format);
    if (*genocchi_cmd) return run_genocchi(count, check, format);
    if (*bij_cmd) {
      if (apply_arg.empty() && bij_n <= 0)
        throw CLI::ValidationError("--n", "give --n or --apply");
      if (bij_n <= 0) bij_n = static_cast<int>(parse_permutation(apply_arg).size());
      return run_bijection(bij_name, bij_n, apply_arg, format);
    }
    if (*pattern_cmd) return run_pattern(perm_text, pattern_text, format);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CLI::Error& e) {
    std::cerr << "pardes: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "pardes: " << e.what() << "\n";
    return 2;
  } catch (const resource_limit_error& e) {
    std::cerr << "pardes: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pardes: internal error: " << e.what() << "\n";
    return 1;
  }
}
