#ifndef FDM_VERSION_HPP
#define FDM_VERSION_HPP

namespace fdm {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // FDM_VERSION_HPP
