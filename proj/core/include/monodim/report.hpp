#pragma once

#include <string>
#include <vector>

#include "monodim/bps.hpp"
#include "monodim/index.hpp"

namespace monodim {

/// Formats with 12 significant digits (stable golden files).
std::string format_sig12(double x);
/// Rounds a double to its 12-significant-digit decimal representation.
double round_sig12(double x);

/// JSON object with keys alpha, topological_index, defect, vdim, epsilon0,
/// u0_order, u1_order, advisories; keys sorted, floats at 12 significant
/// digits, byte-stable for identical inputs.
std::string vdim_report_json(const VdimReport& report);

std::string vdim_report_table(const VdimReport& report);

std::string bps_report_json(const BpsVerificationReport& report);
std::string bps_report_table(const BpsVerificationReport& report);

}  // namespace monodim
