/*
Copyright 2026 The gvmhom Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gvm {

enum class EmitFormat { Text, Dot, Json };

struct CliConfig {
    std::string command;  ///< orbit, sk, hasse or verify
    int k = 0;
    int n = 0;
    EmitFormat emit = EmitFormat::Text;
    std::string output;  ///< empty means standard output
    bool oracle = false;
    int max_rank = 7;
    int max_length = -1;
    std::string grid = "default";
    unsigned threads = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

/// Full command-line driver. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gvm
