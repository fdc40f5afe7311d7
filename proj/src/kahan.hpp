#pragma once

// Compensated (Kahan) accumulation for complex doubles.  Private to the
// library sources; long alternating sums rely on it to keep rounding noise
// near one ulp of the true value instead of growing with term count.

#include "lcrit/numio.hpp"

namespace lcrit {

struct KahanSum {
    Cplx s{0.0, 0.0};
    Cplx c{0.0, 0.0};
    void add(const Cplx& x) {
        Cplx y = x - c;
        Cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

}  // namespace lcrit
