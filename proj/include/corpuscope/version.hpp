#ifndef CORPUSCOPE_VERSION_HPP
#define CORPUSCOPE_VERSION_HPP

namespace corpuscope {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kStopwordListVersion = "corpuscope-en-v1";

}  // namespace corpuscope

#endif
