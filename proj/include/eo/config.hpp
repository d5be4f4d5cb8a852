#pragma once

// Resource ceilings. Precedence: explicit flags, then EO_* environment
// variables, then these defaults.

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace eo {

struct Limits {
    long max_edges = 6;
    long max_order = 64;
    long precision_bits = 256;
};

namespace detail {
inline long env_long(const char* name, long fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0')
        throw std::invalid_argument(std::string(name) + ": not an integer: " + s);
    return v;
}
} // namespace detail

inline Limits load_limits() {
    Limits l;
    l.max_edges = detail::env_long("EO_MAX_EDGES", l.max_edges);
    l.max_order = detail::env_long("EO_MAX_ORDER", l.max_order);
    l.precision_bits = detail::env_long("EO_PRECISION_BITS", l.precision_bits);
    return l;
}

} // namespace eo
