#include "biasedcube/report.hpp"

#include "biasedcube/tolerance.hpp"

namespace bcube {

void Report::inequality(std::string check, bool hypothesis, double lhs, double rhs, double tol,
                        nlohmann::json detail) {
  Outcome o;
  o.check = std::move(check);
  o.hypothesis = hypothesis;
  o.lhs = lhs;
  o.rhs = rhs;
  o.conclusion = leq_with_slack(lhs, rhs, tol);
  o.detail = std::move(detail);
  outcomes_.push_back(std::move(o));
}

void Report::identity(std::string check, double a, double b, double tol, nlohmann::json detail) {
  Outcome o;
  o.check = std::move(check);
  o.lhs = a;
  o.rhs = b;
  o.conclusion = approx_equal(a, b, tol);
  o.detail = std::move(detail);
  outcomes_.push_back(std::move(o));
}

const Outcome* Report::find(std::string_view check) const {
  for (const auto& o : outcomes_)
    if (o.check == check) return &o;
  return nullptr;
}

std::size_t Report::violation_count() const {
  std::size_t v = 0;
  for (const auto& o : outcomes_) v += o.violated() ? 1 : 0;
  return v;
}

void Report::append(const Report& other) {
  outcomes_.insert(outcomes_.end(), other.outcomes_.begin(), other.outcomes_.end());
  notices_.insert(notices_.end(), other.notices_.begin(), other.notices_.end());
}

nlohmann::json outcome_to_json(const Outcome& o) {
  nlohmann::json j = {{"check", o.check},
                      {"hypothesis", o.hypothesis},
                      {"conclusion", o.conclusion},
                      {"lhs", o.lhs},
                      {"rhs", o.rhs}};
  if (!o.detail.is_null()) j["detail"] = o.detail;
  return j;
}

nlohmann::json Report::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& o : outcomes_) out.push_back(outcome_to_json(o));
  nlohmann::json j = {{"outcomes", out}, {"violations", violation_count()}};
  if (!notices_.empty()) j["notices"] = notices_;
  if (!data.is_null()) j["data"] = data;
  return j;
}

void Summary::absorb(const Report& r, const nlohmann::json& context) {
  for (const auto& o : r.outcomes()) {
    Tally& t = tallies_[o.check];
    ++t.cases;
    if (o.hypothesis) ++t.hypothesis_satisfied;
    if (o.conclusion) ++t.conclusion_held;
    if (o.violated()) {
      ++t.violations;
      nlohmann::json w = outcome_to_json(o);
      if (!context.is_null()) w["context"] = context;
      violations_.push_back(std::move(w));
    }
  }
}

void Summary::absorb(const Summary& s) {
  for (const auto& [k, v] : s.tallies_) {
    Tally& t = tallies_[k];
    t.cases += v.cases;
    t.hypothesis_satisfied += v.hypothesis_satisfied;
    t.conclusion_held += v.conclusion_held;
    t.violations += v.violations;
  }
  violations_.insert(violations_.end(), s.violations_.begin(), s.violations_.end());
}

std::size_t Summary::cases() const {
  std::size_t c = 0;
  for (const auto& [k, v] : tallies_) c += v.cases;
  return c;
}

std::size_t Summary::hypothesis_satisfied() const {
  std::size_t c = 0;
  for (const auto& [k, v] : tallies_) c += v.hypothesis_satisfied;
  return c;
}

const Tally& Summary::tally(const std::string& check) const {
  static const Tally empty;
  auto it = tallies_.find(check);
  return it == tallies_.end() ? empty : it->second;
}

nlohmann::json Summary::tallies_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : tallies_)
    j[k] = {{"cases", v.cases},
            {"hypothesis_satisfied", v.hypothesis_satisfied},
            {"conclusion_held", v.conclusion_held},
            {"violations", v.violations}};
  return j;
}

}  // namespace bcube
