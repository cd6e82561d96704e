// Times the table-scanning kernels in both execution modes and reports the
// parallel speedup. The serial path is the reference implementation; results
// are checked to agree before a timing is reported.
//
// Usage: ringlab_bench [n]
//   n: modulus used for the Zn scans (default 2048; axiom scans use
//      min(n, 512) because those are cubic).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ringlab/axioms.hpp"
#include "ringlab/classes.hpp"
#include "ringlab/cleanness.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/exec.hpp"

using namespace ringlab;

namespace {

constexpr int kReps = 3;

// Best-of-kReps wall time.
template <typename F>
double time_of(F&& f) {
    double best = 1e99;
    for (int i = 0; i < kReps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

template <typename F>
void row(const char* name, int order, F&& run) {
    bool agree = true;
    const double ts = time_of([&] { run(Exec::Serial); });
    const double tp = time_of([&] { agree = run(Exec::Parallel) && agree; });
    std::printf("%-28s n=%-5d serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, order,
                ts, tp, tp > 0 ? ts / tp : 0.0, agree ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 2048;
    const int cap = std::max(n, kDefaultCap);
    std::printf("threads available: %d\n", max_threads());

    auto zn_small = make_zn(std::min(n, 512), cap);
    auto zn = make_zn(n, cap);

    {
        AxiomReport ref;
        row("validate_axioms", zn_small->order(), [&](Exec e) {
            AxiomReport r = validate_axioms(*zn_small, e);
            if (e == Exec::Serial) {
                ref = r;
                return true;
            }
            return r.ok == ref.ok;
        });
    }

    for (ClassRole role : {ClassRole::Nilpotents, ClassRole::Units, ClassRole::ZeroDivisors,
                           ClassRole::Center}) {
        ElementSet ref;
        row(class_role_name(role), zn->order(), [&](Exec e) {
            ElementSet s = compute_class(*zn, role, e);
            if (e == Exec::Serial) {
                ref = std::move(s);
                return true;
            }
            return s.members == ref.members && s.aux == ref.aux;
        });
    }

    {
        ElementSet ref;
        row("jacobson_radical", zn->order(), [&](Exec e) {
            ElementSet s = jacobson_radical(*zn, e);
            if (e == Exec::Serial) {
                ref = std::move(s);
                return true;
            }
            return s.members == ref.members;
        });
    }
    {
        ElementSet ref;
        row("prime_radical", zn->order(), [&](Exec e) {
            ElementSet s = prime_radical(*zn, e);
            if (e == Exec::Serial) {
                ref = std::move(s);
                return true;
            }
            return s.members == ref.members;
        });
    }
    {
        RingVerdict ref;
        row("uniquely_weakly_nil_clean", zn->order(), [&](Exec e) {
            RingVerdict v = ring_predicate(*zn, RingMode::UniquelyWeaklyNilClean, e);
            if (e == Exec::Serial) {
                ref = v;
                return true;
            }
            return v.holds == ref.holds && v.counterexample == ref.counterexample;
        });
    }

    return 0;
}
