#include "bellmix/format.hpp"

#include "bellmix/errors.hpp"

#include <charconv>
#include <system_error>

namespace bellmix {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed number: '" + std::string(s) + "'");
    return v;
}

unsigned long long parse_u64(std::string_view s) {
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed integer: '" + std::string(s) + "'");
    return v;
}

} // namespace bellmix
