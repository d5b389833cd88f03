#include "bicatkit/law_runner.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bk {

namespace {
ExecMode g_mode = ExecMode::Parallel;
}

ExecMode default_exec_mode() { return g_mode; }
void set_default_exec_mode(ExecMode m) { g_mode = m; }

int worker_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("BICATKIT_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
#else
  return 1;
#endif
}

std::optional<std::pair<size_t, std::string>> run_cases_serial(size_t count, const LawCase& f) {
  for (size_t i = 0; i < count; ++i)
    if (auto bad = f(i)) return std::make_pair(i, *bad);
  return std::nullopt;
}

std::optional<std::pair<size_t, std::string>> run_cases(size_t count, const LawCase& f,
                                                        ExecMode mode) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel && count > 1) {
    std::atomic<size_t> first_bad{count};
    std::vector<std::string> messages(count);
    std::exception_ptr error = nullptr;

#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      size_t idx = static_cast<size_t>(i);
      if (idx >= first_bad.load(std::memory_order_relaxed)) continue;
      try {
        if (auto bad = f(idx)) {
          messages[idx] = *bad;
          size_t cur = first_bad.load();
          while (idx < cur && !first_bad.compare_exchange_weak(cur, idx)) {
          }
        }
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    size_t bad = first_bad.load();
    if (bad < count) return std::make_pair(bad, messages[bad]);
    return std::nullopt;
  }
#endif
  (void)mode;
  return run_cases_serial(count, f);
}

LawResult run_law(const std::string& suite, const std::string& law, size_t count,
                  const LawCase& f, const std::string& cap, ExecMode mode) {
  LawResult r;
  r.suite = suite;
  r.law = law;
  r.instances = count;
  r.cap = cap;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (auto bad = run_cases(count, f, mode)) {
      r.status = LawStatus::Fail;
      r.counterexample = "case " + std::to_string(bad->first) + ": " + bad->second;
    }
  } catch (const std::exception& e) {
    r.status = LawStatus::Error;
    r.counterexample = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

} // namespace bk
