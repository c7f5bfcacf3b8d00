#pragma once

#include <string>

namespace cama {

/// Shortest decimal text that reads back to the same double.
[[nodiscard]] std::string format_double(double value);

}  // namespace cama
