#pragma once

#include <string>

namespace advicegame {

// 17 significant digits, the shortest fixed precision that round-trips
// every double. All user-facing numeric output goes through this.
std::string format_number(double v);

}  // namespace advicegame
