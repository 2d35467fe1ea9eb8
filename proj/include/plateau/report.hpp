#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace plateau {

enum class CheckStatus { pass, fail, paper_discrepancy };

std::string_view to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::pass;
  std::string note;
};

struct RunReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  void add(std::string id, std::string expected, std::string actual, bool ok);
  void add_discrepancy(std::string id, std::string expected, std::string actual, std::string note);
  void append(const RunReport& other);

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
  nlohmann::ordered_json to_json() const;
};

inline constexpr std::string_view kSuites[] = {"delannoy", "vandermonde", "lemma41", "tables",
                                               "bijection", "asymptotics", "all"};

/// Runs a named suite. Returns nullopt for an unknown name.
std::optional<RunReport> run_suite(std::string_view suite, int workers = 1);

RunReport verify_delannoy();
RunReport verify_vandermonde();
RunReport verify_lemma41(int workers = 1);
RunReport verify_tables(int workers = 1);
RunReport verify_bijection();
RunReport verify_asymptotics(int workers = 1);

}  // namespace plateau
