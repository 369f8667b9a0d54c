// Copyright 2026 The qsimon Authors.
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsimon {

/// FNV-1a. Hashes canonical config dumps into the provenance header.
std::uint64_t fnv1a(std::string_view data);

/// Writes bytes exactly as given (binary mode), creating parent directories.
void write_text_file(const std::filesystem::path& path, std::string_view content);

std::string read_text_file(const std::filesystem::path& path);

/// "# key=value" comment lines prepended to CSV artifacts. Contains nothing
/// volatile, so reruns stay byte-identical.
std::string metadata_header(const std::vector<std::pair<std::string, std::string>>& kv);

} // namespace qsimon
