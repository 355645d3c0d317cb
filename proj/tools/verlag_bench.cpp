// Benchmark comparing the serial reference kernels against the OpenMP-parallel
// ones: the verification sweep, the per-group oracle audit, and the trace
// congruence scan.
//
//   ./verlag_bench [--repeat N]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "verlag/sweep.hpp"

namespace {

using verlag::ExecMode;

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename Fn>
double timed(int repeat, Fn&& fn) {
  double best = 1e99;
  for (int r = 0; r < repeat; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, seconds(t0, t1));
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-24s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  int repeat = 1;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--repeat") == 0 && i + 1 < argc) repeat = std::atoi(argv[i + 1]);

  std::vector<verlag::MaxClassPresentation> cases;
  for (const auto& c : verlag::sweep_cases(2, 10, {})) cases.push_back(c);
  for (const auto& c : verlag::sweep_cases(3, 6, {})) cases.push_back(c);
  for (const auto& c : verlag::sweep_cases(5, 4, {})) cases.push_back(c);

  std::printf("threads: %d\n", verlag::effective_threads());
  std::printf("%-24s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    verlag::RunReport serial_report, parallel_report;
    double s = timed(repeat, [&] { serial_report = verlag::run_sweep(cases, ExecMode::serial); });
    double p =
        timed(repeat, [&] { parallel_report = verlag::run_sweep(cases, ExecMode::parallel); });
    report("verify sweep", s, p);
    if (serial_report.agreements != parallel_report.agreements ||
        serial_report.cases_run != parallel_report.cases_run) {
      std::printf("MISMATCH between serial and parallel sweep results\n");
      return 1;
    }
  }

  {
    verlag::MaxClassGroup big = verlag::build_max_class_group(
        verlag::validate_max(2, 10, 0, {}, 0, 1).expect());
    verlag::AuditReport sr, pr;
    double s = timed(repeat, [&] { sr = verlag::audit_group(big, ExecMode::serial); });
    double p = timed(repeat, [&] { pr = verlag::audit_group(big, ExecMode::parallel); });
    report("audit Q(1024)", s, p);
    if (sr.failures != pr.failures || sr.transversal_checks != pr.transversal_checks) {
      std::printf("MISMATCH between serial and parallel audit results\n");
      return 1;
    }
  }

  {
    verlag::MaxClassGroup g36 = verlag::build_max_class_group(
        verlag::validate_max(3, 6, 0, {}, 0, 1).expect());
    std::int64_t sv = 0, pv = 0;
    double s = timed(repeat,
                     [&] { sv = verlag::trace_congruence_violations(g36, ExecMode::serial); });
    double p = timed(repeat,
                     [&] { pv = verlag::trace_congruence_violations(g36, ExecMode::parallel); });
    report("trace scan 3^6", s, p);
    if (sv != pv) {
      std::printf("MISMATCH between serial and parallel trace scans\n");
      return 1;
    }
  }
  return 0;
}
