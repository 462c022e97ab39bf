#pragma once

#include <cstddef>

namespace glat {

// Upper bound on enumerated objects; GLAT_MAX_ENUM overrides the default and
// set_max_enum(0) restores it.
std::size_t max_enum();
void set_max_enum(std::size_t limit);

}  // namespace glat
