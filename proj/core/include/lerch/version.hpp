#ifndef LERCH_VERSION_HPP
#define LERCH_VERSION_HPP

namespace lerch {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // LERCH_VERSION_HPP
