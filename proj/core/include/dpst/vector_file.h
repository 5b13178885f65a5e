// Copyright 2026 The dpst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPST_VECTOR_FILE_H_
#define DPST_VECTOR_FILE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dpst {

// DPSTVEC1 layout, all little-endian:
//   8 bytes  magic "DPSTVEC1"
//   u32      dimension
//   u64      row count
//   f32      count * dimension values, row-major
inline constexpr std::string_view kVectorFileMagic = "DPSTVEC1";

struct VectorMatrix {
  std::uint32_t dimension = 0;
  std::vector<float> values;

  std::size_t rows() const {
    return dimension == 0 ? 0 : values.size() / dimension;
  }
  std::span<const float> row(std::size_t i) const {
    return std::span<const float>(values).subspan(i * dimension, dimension);
  }
  friend bool operator==(const VectorMatrix&, const VectorMatrix&) = default;
};

void WriteVectorFile(const std::filesystem::path& path,
                     const VectorMatrix& matrix);
VectorMatrix ReadVectorFile(const std::filesystem::path& path);

// Companion key file: line i holds the key of row i.
void WriteKeyFile(const std::filesystem::path& path,
                  std::span<const std::string> keys);
std::vector<std::string> ReadKeyFile(const std::filesystem::path& path);

namespace internal {

// Little-endian primitives shared by the binary formats.
void AppendU32(std::string& out, std::uint32_t v);
void AppendU64(std::string& out, std::uint64_t v);
void AppendF32(std::string& out, float v);
std::uint32_t ReadU32(std::string_view bytes, std::size_t offset);
std::uint64_t ReadU64(std::string_view bytes, std::size_t offset);
float ReadF32(std::string_view bytes, std::size_t offset);

std::string ReadWholeFile(const std::filesystem::path& path);
void WriteWholeFile(const std::filesystem::path& path, std::string_view bytes);

}  // namespace internal
}  // namespace dpst

#endif  // DPST_VECTOR_FILE_H_
