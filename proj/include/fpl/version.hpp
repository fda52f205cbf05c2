#ifndef FPL_VERSION_HPP_
#define FPL_VERSION_HPP_

#define FPL_VERSION "0.1.0"

namespace fpl {
// Bump whenever a change can alter any computed result; cached entries written
// under a different tag are discarded on read.
inline const char* version_tag() { return FPL_VERSION; }
}  // namespace fpl

#endif
