#include "bicatkit/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace bk {

std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::Pass: return "PASS";
    case LawStatus::Fail: return "FAIL";
    case LawStatus::Error: return "ERROR";
  }
  return "?";
}

bool Report::all_pass() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawResult& r) { return r.status == LawStatus::Pass; });
}

void Report::merge(const Report& other) {
  laws.insert(laws.end(), other.laws.begin(), other.laws.end());
}

const LawResult* Report::find(const std::string& law) const {
  for (const auto& r : laws)
    if (r.law == law) return &r;
  return nullptr;
}

void Report::sort() {
  std::stable_sort(laws.begin(), laws.end(), [](const LawResult& a, const LawResult& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    return a.law < b.law;
  });
}

std::string Report::human() const {
  size_t w_suite = 5, w_law = 3;
  for (const auto& r : laws) {
    w_suite = std::max(w_suite, r.suite.size());
    w_law = std::max(w_law, r.law.size());
  }
  std::ostringstream out;
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  out << pad("suite", w_suite) << "  " << pad("law", w_law) << "  status  cases  ms\n";
  for (const auto& r : laws) {
    out << pad(r.suite, w_suite) << "  " << pad(r.law, w_law) << "  "
        << pad(to_string(r.status), 6) << "  " << pad(std::to_string(r.instances), 5) << "  "
        << static_cast<long>(r.millis) << "\n";
    if (!r.counterexample.empty()) out << "    counterexample: " << r.counterexample << "\n";
  }
  return out.str();
}

std::string Report::structured() const {
  Report copy = *this;
  copy.sort();
  std::ostringstream out;
  for (const auto& r : copy.laws) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["law"] = r.law;
    j["status"] = to_string(r.status);
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    j["instances"] = r.instances;
    j["cap"] = r.cap;
    out << j.dump() << "\n";
  }
  return out.str();
}

} // namespace bk
