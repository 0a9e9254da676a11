#include <chrono>
#include <iostream>
#include <string>

#include "bpatlas/serialize.hpp"
#include "bpatlas/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Times the serial reference against the OpenMP path for atlas construction
// and the verification sweep, and checks that both produce identical output.

namespace {

using namespace bpatlas;
using clk = std::chrono::steady_clock;

double seconds_since(clk::time_point t0) {
  return std::chrono::duration<double>(clk::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int u = 20, v = 19;
  long depth = 8;
  if (argc >= 3) {
    u = std::stoi(argv[1]);
    v = std::stoi(argv[2]);
  }
  if (argc >= 4) depth = std::stol(argv[3]);

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif

  LevelParams lv = make_level(u, v);
  std::cout << "level u=" << u << " v=" << v << " ("
            << closed_form_counts(lv).untwistedHW << " weights)\n";

  auto t0 = clk::now();
  Atlas serial = build_atlas(lv, ExecutionPolicy::serial);
  double ts = seconds_since(t0);

  t0 = clk::now();
  Atlas parallel = build_atlas(lv, ExecutionPolicy::parallel);
  double tp = seconds_since(t0);

  std::cout << "atlas    serial " << ts << " s, parallel " << tp << " s, "
            << (serial == parallel ? "outputs identical" : "OUTPUTS DIFFER")
            << "\n";

  t0 = clk::now();
  VerifyReport rs = verify_level(lv, depth, ExecutionPolicy::serial);
  ts = seconds_since(t0);

  t0 = clk::now();
  VerifyReport rp = verify_level(lv, depth, ExecutionPolicy::parallel);
  tp = seconds_since(t0);

  bool same = rs.checks.size() == rp.checks.size();
  for (std::size_t i = 0; same && i < rs.checks.size(); ++i)
    same = rs.checks[i].pass == rp.checks[i].pass;
  std::cout << "verify   serial " << ts << " s, parallel " << tp << " s, "
            << (rs.all_pass() && rp.all_pass() ? "all checks pass"
                                               : "CHECK FAILURES")
            << (same ? "" : " (reports differ)") << "\n";
  return (serial == parallel && same && rs.all_pass()) ? 0 : 1;
}
