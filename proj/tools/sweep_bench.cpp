// Benchmark the parallel sweep kernels against their serial references.
//
//   permod-bench [--prime-cheb 7] [--prime-ex 7] [--jobs N] [--skip-serial]
//
// The serial reference runs each minor through the generic Q(zeta_p)
// elimination, so it is used at a smaller prime by default.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <iostream>

#include "permod/uncertainty.hpp"

using namespace permod;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <class F>
double timed(const char* label, F&& f) {
  auto t0 = clock_type::now();
  f();
  double s = seconds_since(t0);
  std::cout << "  " << label << ": " << s << " s\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sweep kernel benchmark"};
  uint32_t prime_cheb = 7, prime_cheb_serial = 5, prime_ex = 7;
  int jobs = 0;
  bool skip_serial = false;
  app.add_option("--prime-cheb", prime_cheb, "prime for the fast minor sweep");
  app.add_option("--prime-cheb-serial", prime_cheb_serial,
                 "prime for the serial reference sweep");
  app.add_option("--prime-ex", prime_ex, "prime for the exhaustive sweep");
  app.add_option("--jobs", jobs, "threads for the parallel kernels");
  app.add_flag("--skip-serial", skip_serial);
  CLI11_PARSE(app, argc, argv);
  if (jobs <= 0) jobs = omp_get_max_threads();

  std::cout << "chebotarev minor sweep\n";
  if (!skip_serial) {
    timed("serial reference (generic elimination)", [&] {
      auto rep = chebotarev_verify_serial(prime_cheb_serial);
      std::cout << "    p=" << rep.p << " minors=" << rep.minors_checked << "\n";
    });
  }
  timed("fast kernel, 1 thread", [&] {
    auto rep = chebotarev_verify(prime_cheb, std::nullopt, 1);
    std::cout << "    p=" << rep.p << " minors=" << rep.minors_checked << "\n";
  });
  timed("fast kernel, parallel", [&] {
    auto rep = chebotarev_verify(prime_cheb, std::nullopt, jobs);
    std::cout << "    p=" << rep.p << " minors=" << rep.minors_checked
              << " jobs=" << jobs << "\n";
  });

  std::cout << "theorem 6.4 exhaustive sweep\n";
  if (!skip_serial) {
    timed("serial reference (criterion per vector)", [&] {
      auto rep = exhaustive_6_4_serial(std::min(prime_ex, 5u));
      std::cout << "    p=" << rep.p << " vectors=" << rep.vectors_checked << "\n";
    });
  }
  timed("fast kernel, 1 thread", [&] {
    auto rep = exhaustive_6_4(prime_ex, 1);
    std::cout << "    p=" << rep.p << " vectors=" << rep.vectors_checked << "\n";
  });
  timed("fast kernel, parallel", [&] {
    auto rep = exhaustive_6_4(prime_ex, jobs);
    std::cout << "    p=" << rep.p << " vectors=" << rep.vectors_checked
              << " jobs=" << jobs << "\n";
  });
  return 0;
}
