#ifndef RMF_CSVIO_HPP
#define RMF_CSVIO_HPP

#include <charconv>
#include <cstdint>
#include <string>

namespace rmf {

// Shortest round-trip decimal form; regression fixtures diff these bytes, so
// formatting must be locale-free and exact.
inline std::string fmt(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline std::string fmt(std::uint64_t x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline std::string fmt(int x) { return std::to_string(x); }

inline std::string fmt(bool x) { return x ? "1" : "0"; }

}  // namespace rmf

#endif
