// Deterministic text output helpers: shortest round-trip doubles, CSV rows.
#pragma once

#include <string>

namespace wavem {

// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

// CSV field joining with '.' decimal separator and no locale dependence.
std::string csv_row(std::initializer_list<std::string> fields);

}  // namespace wavem
