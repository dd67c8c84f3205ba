#include "advicegame/format.hpp"

#include <cstdio>

namespace advicegame {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace advicegame
