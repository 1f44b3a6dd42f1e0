#include "evc/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "evc/errors.hpp"

namespace evc {

SolverLimits SolverLimits::parse(std::string_view text) {
  SolverLimits limits;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw PreconditionError("bad limit '" + std::string(item) + "'");
    std::string_view key = item.substr(0, eq), value = item.substr(eq + 1);
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size() || parsed < 1 || parsed > 64)
      throw PreconditionError("limit value must be an integer in [1, 64]: '" + std::string(item) + "'");
    if (key == "exact") {
      limits.exact_max_vertices = parsed;
    } else if (key == "enum") {
      limits.enumeration_max_vertices = parsed;
    } else {
      throw PreconditionError("unknown limit '" + std::string(key) + "'");
    }
  }
  return limits;
}

SolverLimits SolverLimits::from_env() {
  const char* env = std::getenv("EVC_LIMITS");
  return env ? parse(env) : SolverLimits{};
}

}  // namespace evc
