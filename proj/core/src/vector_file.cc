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

#include "dpst/vector_file.h"

#include <bit>
#include <fstream>
#include <iterator>
#include <sstream>

#include "dpst/error.h"

namespace dpst {
namespace internal {

void AppendU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

void AppendU64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

void AppendF32(std::string& out, float v) {
  AppendU32(out, std::bit_cast<std::uint32_t>(v));
}

std::uint32_t ReadU32(std::string_view bytes, std::size_t offset) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(
             static_cast<unsigned char>(bytes[offset + i]))
         << (8 * i);
  }
  return v;
}

std::uint64_t ReadU64(std::string_view bytes, std::size_t offset) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(
             static_cast<unsigned char>(bytes[offset + i]))
         << (8 * i);
  }
  return v;
}

float ReadF32(std::string_view bytes, std::size_t offset) {
  return std::bit_cast<float>(ReadU32(bytes, offset));
}

std::string ReadWholeFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteWholeFile(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorCode::kIoError, "short write to " + path.string());
  }
}

}  // namespace internal

void WriteVectorFile(const std::filesystem::path& path,
                     const VectorMatrix& matrix) {
  if (matrix.dimension == 0 || matrix.values.size() % matrix.dimension != 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector matrix size is not a multiple of its dimension");
  }
  std::string bytes(kVectorFileMagic);
  bytes.reserve(20 + 4 * matrix.values.size());
  internal::AppendU32(bytes, matrix.dimension);
  internal::AppendU64(bytes, matrix.rows());
  for (float v : matrix.values) internal::AppendF32(bytes, v);
  internal::WriteWholeFile(path, bytes);
}

VectorMatrix ReadVectorFile(const std::filesystem::path& path) {
  const std::string bytes = internal::ReadWholeFile(path);
  constexpr std::size_t kHeader = 8 + 4 + 8;
  if (bytes.size() < kHeader ||
      std::string_view(bytes).substr(0, 8) != kVectorFileMagic) {
    throw Error(ErrorCode::kFormatError,
                path.string() + " is not a DPSTVEC1 file");
  }
  VectorMatrix m;
  m.dimension = internal::ReadU32(bytes, 8);
  const std::uint64_t count = internal::ReadU64(bytes, 12);
  const std::uint64_t expected = kHeader + 4 * count * m.dimension;
  if (m.dimension == 0 || bytes.size() != expected) {
    throw Error(ErrorCode::kFormatError,
                path.string() + ": payload size disagrees with header");
  }
  m.values.resize(count * m.dimension);
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    m.values[i] = internal::ReadF32(bytes, kHeader + 4 * i);
  }
  return m;
}

void WriteKeyFile(const std::filesystem::path& path,
                  std::span<const std::string> keys) {
  std::string out;
  for (const auto& k : keys) {
    if (k.find('\n') != std::string::npos) {
      throw Error(ErrorCode::kFormatError, "key contains a newline: " + k);
    }
    out.append(k).push_back('\n');
  }
  internal::WriteWholeFile(path, out);
}

std::vector<std::string> ReadKeyFile(const std::filesystem::path& path) {
  std::istringstream in(internal::ReadWholeFile(path));
  std::vector<std::string> keys;
  std::string line;
  while (std::getline(in, line)) keys.push_back(line);
  return keys;
}

}  // namespace dpst
