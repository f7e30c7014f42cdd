#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace csg::log {

enum class Level : int { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3 };

// Verbosity comes from the CSG_LOG env var (debug|info|warn|error), default info.
inline Level threshold() {
  static Level lvl = [] {
    const char* e = std::getenv("CSG_LOG");
    if (!e) return Level::kInfo;
    if (!std::strcmp(e, "debug")) return Level::kDebug;
    if (!std::strcmp(e, "warn")) return Level::kWarn;
    if (!std::strcmp(e, "error")) return Level::kError;
    return Level::kInfo;
  }();
  return lvl;
}

template <class... Args>
void emit(Level lvl, const char* tag, const char* fmt, Args... args) {
  if (lvl < threshold()) return;
  std::fprintf(stderr, "[%s] ", tag);
  std::fprintf(stderr, fmt, args...);
  std::fputc('\n', stderr);
}

template <class... Args>
void debug(const char* fmt, Args... args) { emit(Level::kDebug, "debug", fmt, args...); }
template <class... Args>
void info(const char* fmt, Args... args) { emit(Level::kInfo, "info", fmt, args...); }
template <class... Args>
void warn(const char* fmt, Args... args) { emit(Level::kWarn, "warn", fmt, args...); }
template <class... Args>
void error(const char* fmt, Args... args) { emit(Level::kError, "error", fmt, args...); }

}  // namespace csg::log
