#pragma once

#include <string>
#include <vector>

namespace wenum::reference {

/// A published order-(n-5) derivative used as a golden vector: 32 entries
/// in the rho-basis text form, in increasing suffix-label order.
struct ReferenceVector {
    std::string code; // bundled code name, or "" when only a profile exists
    int n = 0;
    int t = 0;
    std::vector<std::string> entries;
};

const ReferenceVector& golay24_order19();
const ReferenceVector& qr48_order43();
const ReferenceVector& length72_order67();

/// The eight length-8 candidate distributions (CSV, lexicographic order)
/// and the y value the balance identity solves to for each.
const std::vector<std::string>& candidates8();
const std::vector<std::string>& candidate8_y_values();
/// CSVs of the candidates that survive (integer y): the two distributions
/// realized by actual codes.
const std::vector<std::string>& candidate8_survivors();

} // namespace wenum::reference
