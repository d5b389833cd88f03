#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bicatkit/report.hpp"

namespace bk {

// One law instance: returns std::nullopt on success or a rendered
// counterexample on failure. Must be pure and thread-safe.
using LawCase = std::function<std::optional<std::string>(size_t index)>;

enum class ExecMode { Serial, Parallel };

// Global execution mode for all law suites. Defaults to Parallel; the
// BICATKIT_THREADS environment variable caps the worker count ("1" forces
// effectively serial evaluation but still goes through the parallel path).
ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode m);

// Evaluates `count` law instances and reports the first failure in index
// order, so serial and parallel runs produce identical results.
//
// run_cases_serial is the reference implementation; run_cases dispatches on
// the execution mode and uses the OpenMP kernel when parallel.
std::optional<std::pair<size_t, std::string>> run_cases_serial(size_t count, const LawCase& f);
std::optional<std::pair<size_t, std::string>> run_cases(size_t count, const LawCase& f,
                                                        ExecMode mode = default_exec_mode());

// Wraps run_cases into a LawResult with timing and cap annotation.
LawResult run_law(const std::string& suite, const std::string& law, size_t count,
                  const LawCase& f, const std::string& cap = "",
                  ExecMode mode = default_exec_mode());

int worker_count();

} // namespace bk
