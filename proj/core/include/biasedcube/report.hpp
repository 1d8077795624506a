#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace bcube {

// One evaluated "hypothesis implies conclusion" instance. Only hypothesis && !conclusion is a violation.
struct Outcome {
  std::string check;
  bool hypothesis = true;
  bool conclusion = true;
  double lhs = 0.0;
  double rhs = 0.0;
  nlohmann::json detail;

  bool violated() const { return hypothesis && !conclusion; }
};

class Report {
 public:
  void add(Outcome o) { outcomes_.push_back(std::move(o)); }
  // Records lhs <= rhs (with slack); when the hypothesis is false the conclusion is still evaluated but never counts.
  void inequality(std::string check, bool hypothesis, double lhs, double rhs, double tol,
                  nlohmann::json detail = nullptr);
  void identity(std::string check, double a, double b, double tol, nlohmann::json detail = nullptr);
  void note(std::string text) { notices_.push_back(std::move(text)); }

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const std::vector<std::string>& notices() const { return notices_; }
  const Outcome* find(std::string_view check) const;
  std::size_t violation_count() const;
  bool passed() const { return violation_count() == 0; }

  void append(const Report& other);
  nlohmann::json to_json() const;

  nlohmann::json data;  // free-form results (tables, computed quantities)

 private:
  std::vector<Outcome> outcomes_;
  std::vector<std::string> notices_;
};

struct Tally {
  std::size_t cases = 0;
  std::size_t hypothesis_satisfied = 0;
  std::size_t conclusion_held = 0;
  std::size_t violations = 0;
};

// Aggregate over many reports: per-check tallies plus violation witnesses.
class Summary {
 public:
  void absorb(const Report& r, const nlohmann::json& context = nullptr);
  void absorb(const Summary& s);

  std::size_t cases() const;
  std::size_t hypothesis_satisfied() const;
  std::size_t violation_count() const { return violations_.size(); }
  const std::map<std::string, Tally>& tallies() const { return tallies_; }
  const std::vector<nlohmann::json>& violations() const { return violations_; }
  const Tally& tally(const std::string& check) const;

  nlohmann::json tallies_json() const;

 private:
  std::map<std::string, Tally> tallies_;
  std::vector<nlohmann::json> violations_;
};

nlohmann::json outcome_to_json(const Outcome& o);

}  // namespace bcube
