#pragma once

#include <string_view>

namespace orbitope_kit::log {

enum class Level { kQuiet = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

/// Read once from ORBITOPE_KIT_LOG (quiet|warn|info|debug or 0-3); warn if unset.
Level level();
void set_level(Level l);

void warn(std::string_view message);
void info(std::string_view message);
void debug(std::string_view message);

}  // namespace orbitope_kit::log
