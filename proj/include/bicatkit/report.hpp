#pragma once

#include <string>
#include <vector>

namespace bk {

enum class LawStatus { Pass, Fail, Error };

std::string to_string(LawStatus s);

struct LawResult {
  std::string suite;
  std::string law;
  LawStatus status = LawStatus::Pass;
  std::string counterexample; // rendered first failing case, empty on PASS
  size_t instances = 0;       // number of cases evaluated
  std::string cap;            // rendered sampling caps
  double millis = 0.0;
};

struct Report {
  std::vector<LawResult> laws;

  bool all_pass() const;
  void add(LawResult r) { laws.push_back(std::move(r)); }
  void merge(const Report& other);
  const LawResult* find(const std::string& law) const;

  // Rows sorted by (suite, law); the canonical order for output.
  void sort();

  std::string human() const;      // aligned table
  std::string structured() const; // one JSON record per law, sorted, newline separated
};

} // namespace bk
