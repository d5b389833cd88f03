#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicatkit/law_runner.hpp"
#include "bicatkit/span.hpp"

using namespace bk;

TEST_CASE("parallel kernel returns the same first failure as the serial reference") {
  auto f = [](size_t i) -> std::optional<std::string> {
    if (i % 37 == 21) return "bad " + std::to_string(i);
    return std::nullopt;
  };
  auto serial = run_cases_serial(5000, f);
  auto par = run_cases(5000, f, ExecMode::Parallel);
  REQUIRE(serial.has_value());
  REQUIRE(par.has_value());
  CHECK(serial->first == par->first);
  CHECK(serial->second == par->second);

  auto ok = [](size_t) -> std::optional<std::string> { return std::nullopt; };
  CHECK(!run_cases_serial(5000, ok).has_value());
  CHECK(!run_cases(5000, ok, ExecMode::Parallel).has_value());
}

TEST_CASE("whole suites agree between serial and parallel execution") {
  Bicat b = span_bicat();
  Sample s;
  s.obj_cap = 2;
  s.one_cap = 3;
  s.pair_cap = 100;
  set_default_exec_mode(ExecMode::Serial);
  Report serial = check_bicategory(b, s);
  set_default_exec_mode(ExecMode::Parallel);
  Report par = check_bicategory(b, s);
  REQUIRE(serial.laws.size() == par.laws.size());
  for (size_t i = 0; i < serial.laws.size(); ++i) {
    CHECK(serial.laws[i].law == par.laws[i].law);
    CHECK(serial.laws[i].status == par.laws[i].status);
    CHECK(serial.laws[i].counterexample == par.laws[i].counterexample);
    CHECK(serial.laws[i].instances == par.laws[i].instances);
  }
  // Byte-identical structured reports modulo timing, which is not serialized.
  CHECK(serial.structured() == par.structured());
}

TEST_CASE("exceptions in cases surface as ERROR results") {
  LawResult r = run_law("t", "boom", 10, [](size_t i) -> std::optional<std::string> {
    if (i == 3) throw std::runtime_error("exploded");
    return std::nullopt;
  });
  CHECK(r.status == LawStatus::Error);
  CHECK(r.counterexample.find("exploded") != std::string::npos);
}
