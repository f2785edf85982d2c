#ifndef TREETP_VERSION_HPP
#define TREETP_VERSION_HPP

namespace treetp {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
