#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace plt {

using Index = std::int64_t;

// Error taxonomy mirrored by the CLI exit codes: usage (1), data (2), numeric (3).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest decimal form that round-trips the exact double. Locale-free.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, const std::string& what) {
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw DataError("expected a number for " + what + ", got '" + std::string(text) + "'");
    return v;
}

inline Index parse_index(std::string_view text, const std::string& what) {
    Index v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw DataError("expected an integer for " + what + ", got '" + std::string(text) + "'");
    return v;
}

// splitmix64; used to derive per-node seeds from (tree seed, path) so that
// subtree construction order cannot affect results.
inline std::uint64_t mix_seed(std::uint64_t state, std::uint64_t salt) {
    std::uint64_t z = state + 0x9e3779b97f4a7c15ULL + salt * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace plt
