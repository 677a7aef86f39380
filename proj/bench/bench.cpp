// Serial reference vs OpenMP kernels. Prints best-of-N wall times and checks
// that both variants agree.
#include "pqs/covers.hpp"
#include "pqs/forms.hpp"
#include "pqs/group.hpp"
#include "pqs/prodquot.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pqs;

namespace {

double best_ms(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

bool all_agree = true;

void row(const char* name, double serial, double parallel, bool agree) {
  all_agree = all_agree && agree;
  std::printf("%-28s %10.2f %10.2f %8.2fx  %s\n", name, serial, parallel, serial / parallel, agree ? "agree" : "DIFFER");
}

bool same_scan(const ScanReport& a, const ScanReport& b) {
  if (a.rows.size() != b.rows.size() || a.only_nodes != b.only_nodes || a.surface_rows != b.surface_rows) return false;
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    const auto &x = a.rows[k], &y = b.rows[k];
    if (x.images != y.images || x.only_nodes != y.only_nodes || !(x.node_count == y.node_count) || x.p_g != y.p_g ||
        x.k_squared != y.k_squared)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  const BuiltinGroup& bg = *builtin_group();
  const auto gens = bg.generators();
  const CoverDescriptor c1 = builtin_cover_c1(), c2 = builtin_cover_c2();

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP: both columns run serially\n");
#endif
  std::printf("%-28s %10s %10s %9s\n", "kernel (best of reps, ms)", "serial", "parallel", "speedup");

  {
    std::vector<GroupAutomorphism> s, p;
    double ts = best_ms(reps, [&] { s = enumerate_automorphisms_serial(bg.group(), gens); });
    double tp = best_ms(reps, [&] { p = enumerate_automorphisms(bg.group(), gens); });
    row("enumerate_automorphisms", ts, tp, s == p);
  }
  {
    ScanReport s, p;
    double ts = best_ms(reps, [&] { s = scan_automorphisms_serial(c1, c2); });
    double tp = best_ms(reps, [&] { p = scan_automorphisms(c1, c2); });
    row("scan_automorphisms", ts, tp, same_scan(s, p));
  }
  for (Curve c : {Curve::C1, Curve::C2}) {
    FormRepresentation s, p;
    double ts = best_ms(reps, [&] { s = FormRepresentation::build_serial(c); });
    double tp = best_ms(reps, [&] { p = FormRepresentation::build(c); });
    bool agree = s.size() == p.size();
    for (std::size_t g = 0; agree && g < s.size(); ++g) agree = s[g] == p[g];
    row(("FormRepresentation " + to_string(c)).c_str(), ts, tp, agree);

    std::optional<std::pair<int, int>> hs, hp;
    double vs = best_ms(reps, [&] { hs = verify_homomorphism_serial(s); });
    double vp = best_ms(reps, [&] { hp = verify_homomorphism(s); });
    row(("verify_homomorphism " + to_string(c)).c_str(), vs, vp, hs == hp && !hs);
  }
  return all_agree ? 0 : 1;
}
