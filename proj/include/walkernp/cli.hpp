/*
 * Copyright 2026 The walkernp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WALKERNP_CLI_HPP
#define WALKERNP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wnp::cli {

// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kCrossRoute = 3 };

// Runs `walkernp <args...>`; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count from NP_THREADS, capped by the hardware; at least 1.
unsigned thread_cap();

}  // namespace wnp::cli

#endif  // WALKERNP_CLI_HPP
