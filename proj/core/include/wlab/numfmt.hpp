#pragma once

#include <string>

namespace wlab {

// Shortest decimal representation that round-trips to the same double
// ('.' decimal point, no locale).
std::string format_double(double v);

}  // namespace wlab
