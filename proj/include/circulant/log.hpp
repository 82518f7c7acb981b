// Minimal stderr logging controlled by CML_LOG=debug|info.
#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace circulant::log {

enum class Level { off, info, debug };

inline Level level() {
  static const Level cached = [] {
    const char* env = std::getenv("CML_LOG");
    if (env == nullptr) return Level::off;
    const std::string_view v(env);
    if (v == "debug") return Level::debug;
    if (v == "info") return Level::info;
    return Level::off;
  }();
  return cached;
}

inline void info(std::string_view msg) {
  if (level() >= Level::info) std::cerr << "[info] " << msg << '\n';
}

inline void debug(std::string_view msg) {
  if (level() >= Level::debug) std::cerr << "[debug] " << msg << '\n';
}

}  // namespace circulant::log
