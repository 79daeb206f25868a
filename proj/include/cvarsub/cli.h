// Copyright 2026 The Authors.
//
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

#ifndef CVARSUB_CLI_H_
#define CVARSUB_CLI_H_

namespace cvarsub::cli {

// Exit codes returned by Main.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `cvarsub` tool: gen / run / sweep / verify.
int Main(int argc, char** argv);

}  // namespace cvarsub::cli

#endif  // CVARSUB_CLI_H_
