#ifndef RMF_VERSION_HPP
#define RMF_VERSION_HPP

namespace rmf {

inline constexpr const char* kToolName = "rmflab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace rmf

#endif
