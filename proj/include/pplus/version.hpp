#ifndef PPLUS_VERSION_HPP
#define PPLUS_VERSION_HPP

namespace pplus {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
