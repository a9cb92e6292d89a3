// Copyright 2026 The continuum-alloc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "continuum/log.hpp"

#include <cstdlib>
#include <iostream>

namespace continuum {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("CONTINUUM_ALLOC_LOG");
    if (!env) return LogLevel::warn;
    const std::string v(env);
    if (v == "error") return LogLevel::error;
    if (v == "warn") return LogLevel::warn;
    if (v == "info") return LogLevel::info;
    if (v == "debug") return LogLevel::debug;
    return LogLevel::warn;
  }();
  return level;
}

void log(LogLevel level, const std::string& msg) {
  if (level > log_level()) return;
  const char* name = "warn";
  switch (level) {
    case LogLevel::error: name = "error"; break;
    case LogLevel::warn: name = "warn"; break;
    case LogLevel::info: name = "info"; break;
    case LogLevel::debug: name = "debug"; break;
  }
  std::cerr << name << ": " << msg << "\n";
}

}  // namespace continuum
