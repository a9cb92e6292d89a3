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

#pragma once

#include <string>

namespace continuum {

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

/// Level from CONTINUUM_ALLOC_LOG (error|warn|info|debug); defaults to warn.
LogLevel log_level();

/// Writes "<level>: <msg>" to standard error when level is enabled.
void log(LogLevel level, const std::string& msg);

inline void log_error(const std::string& m) { log(LogLevel::error, m); }
inline void log_warn(const std::string& m) { log(LogLevel::warn, m); }
inline void log_info(const std::string& m) { log(LogLevel::info, m); }
inline void log_debug(const std::string& m) { log(LogLevel::debug, m); }

}  // namespace continuum
