#pragma once

#include <string>

#include "oujordan/rational.hpp"

namespace oujordan {

// Full invariant sweep over both dimensions, levels 0..max_n. Cases are
// independent and may run in parallel; the log is assembled in case order,
// so identical options give byte-identical output.
struct VerifyOptions {
    int max_n = 6;
    Rational c = Rational(1);
    Rational sigma2 = Rational(1);
    unsigned threads = 0; // 0: hardware concurrency
};

struct VerifyResult {
    bool ok = false;
    std::string log;
};

VerifyResult run_verification_sweep(const VerifyOptions& options);

} // namespace oujordan
