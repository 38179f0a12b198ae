#include "orbitope_kit/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace orbitope_kit::log {

namespace {

Level from_env() {
  const char* raw = std::getenv("ORBITOPE_KIT_LOG");
  if (raw == nullptr) return Level::kWarn;
  const std::string v(raw);
  if (v == "quiet" || v == "0") return Level::kQuiet;
  if (v == "info" || v == "2") return Level::kInfo;
  if (v == "debug" || v == "3") return Level::kDebug;
  return Level::kWarn;
}

std::atomic<int>& current() {
  static std::atomic<int> l{static_cast<int>(from_env())};
  return l;
}

void emit(Level l, std::string_view tag, std::string_view message) {
  if (static_cast<int>(l) > current().load()) return;
  static std::mutex mu;
  std::lock_guard lock(mu);
  std::cerr << "[orbitope-kit " << tag << "] " << message << '\n';
}

}  // namespace

Level level() { return static_cast<Level>(current().load()); }
void set_level(Level l) { current().store(static_cast<int>(l)); }

void warn(std::string_view message) { emit(Level::kWarn, "warn", message); }
void info(std::string_view message) { emit(Level::kInfo, "info", message); }
void debug(std::string_view message) { emit(Level::kDebug, "debug", message); }

}  // namespace orbitope_kit::log
