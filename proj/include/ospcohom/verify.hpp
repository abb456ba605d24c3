#pragma once

// The acceptance checks, one function per criterion, shared by the CLI and the
// acceptance binary. Every check is exact.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ospcohom/scalar.hpp"

namespace ospcohom {

inline constexpr const char* engine_version = "ospcohom 1.0.0";

struct RunConfig {
  std::string subcommand = "verify";
  std::optional<Scalar> lambda;
  std::optional<Scalar> mu;
  Scalar lambda_min{-2};
  Scalar lambda_max{2};
  Scalar lambda_step{1, 2};
  std::optional<int> k;
  std::optional<int> order;   // N, default per cell
  std::optional<int> degree;  // M, default per cell
  bool relative = false;
  std::string format = "text";
  std::string out;
  int jobs = 1;
  std::string algebra = "osp12";
  std::string type = "11";

  /// lambda_min, lambda_min + step, ... <= lambda_max; throws std::invalid_argument for step <= 0.
  std::vector<Scalar> lambda_grid() const;
  /// Throws std::invalid_argument on violated invariants.
  void validate() const;
};

struct CaseResult {
  CaseResult() = default;
  explicit CaseResult(std::string i) : id(std::move(i)) {}
  std::string id;
  bool pass = true;
  nlohmann::json detail = nlohmann::json::object();
  nlohmann::json witness;  // null on success
};

struct CriterionResult {
  CriterionResult() = default;
  CriterionResult(int n, std::string t) : number(n), title(std::move(t)) {}
  int number = 0;
  std::string title;
  bool pass = true;
  std::vector<CaseResult> cases;
  std::vector<std::string> notes;
  void add(CaseResult c);
};

struct VerificationReport {
  std::string subcommand;
  std::vector<CriterionResult> criteria;
  nlohmann::json truncation = nlohmann::json::object();
  bool all_pass() const;
  int passed_cases() const;
  int failed_cases() const;
};
nlohmann::json to_json(const CaseResult& c);
nlohmann::json to_json(const CriterionResult& c);
nlohmann::json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

inline constexpr int criterion_count = 11;
/// Runs criterion n (1-based). Throws std::out_of_range for other n.
CriterionResult run_criterion(int n, const RunConfig& cfg);

VerificationReport run_verify_theorems(const RunConfig& cfg, const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace ospcohom
