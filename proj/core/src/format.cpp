#include <cama/format.hpp>

#include <charconv>
#include <system_error>

namespace cama {

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (result.ec != std::errc{}) return "nan";
    return std::string(buffer, result.ptr);
}

}  // namespace cama
