#pragma once

#include <string>

#include "stirlab/bignat.hpp"
#include "stirlab/hpreal.hpp"

namespace stirlab {

// Total number-format rule for table cells. After rounding to sig_figs
// significant digits:
//   - zero renders as "0";
//   - values with 1 <= |v| < 100 render plain ("4.0", "1.7", "17");
//   - everything else renders as ASCII scientific "d.de<k>" with no '+' on
//     positive exponents ("1.3e-1", "8.6e-6", "4.2e6").
// Negative values get a leading '-'. Throws FormatError if the value cannot
// be represented faithfully (NaN).
std::string format_value(const HPReal& v, int sig_figs);

// Count column format: exact digits for single-digit values ("2"), otherwise
// the total 2-significant-figure rule above ("24", "1.2e2", "3.6e6",
// "8.3e5565708").
std::string format_bignat(const BigNat& v);

}  // namespace stirlab
