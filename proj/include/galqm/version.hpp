#pragma once

#define GALQM_VERSION_MAJOR 0
#define GALQM_VERSION_MINOR 1
#define GALQM_VERSION_PATCH 0

namespace galqm {

inline constexpr const char* version_string = "0.1.0";

}  // namespace galqm
