// Minimal stderr logger, level-filtered via EQUIBOUND_LOG (error|warn|info|debug).
#pragma once

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>

namespace equibound::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

inline Level threshold() {
  static const Level lvl = [] {
    const char* env = std::getenv("EQUIBOUND_LOG");
    if (!env) return Level::warn;
    std::string_view s(env);
    if (s == "error") return Level::error;
    if (s == "warn") return Level::warn;
    if (s == "info") return Level::info;
    if (s == "debug") return Level::debug;
    return Level::warn;
  }();
  return lvl;
}

inline void emit(Level lvl, std::string_view tag, std::string_view msg) {
  if (lvl > threshold()) return;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "equibound " << tag << ": " << msg << '\n';
}

inline void error(std::string_view msg) { emit(Level::error, "error", msg); }
inline void warn(std::string_view msg) { emit(Level::warn, "warning", msg); }
inline void info(std::string_view msg) { emit(Level::info, "info", msg); }
inline void debug(std::string_view msg) { emit(Level::debug, "debug", msg); }

}  // namespace equibound::log
