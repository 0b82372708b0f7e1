// Copyright 2026 The eVault Authors
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

#include "evault/encoding.hpp"

#include <limits>

#include "evault/error.hpp"

namespace evault {

Encoder& Encoder::u64(std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    buffer_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
  return *this;
}

void Encoder::be32(std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    buffer_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

Encoder& Encoder::count(std::size_t n) {
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("list too long for canonical encoding");
  }
  be32(static_cast<std::uint32_t>(n));
  return *this;
}

Encoder& Encoder::bytes(ByteView data) {
  count(data.size());
  buffer_.insert(buffer_.end(), data.begin(), data.end());
  return *this;
}

ByteView Decoder::take(std::size_t n) {
  if (remaining() < n) {
    throw Error(ErrorCode::DecodeError,
                "truncated input: need " + std::to_string(n) + " bytes, have " +
                    std::to_string(remaining()));
  }
  ByteView out = data_.subspan(offset_, n);
  offset_ += n;
  return out;
}

std::uint32_t Decoder::be32() {
  ByteView b = take(4);
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
         (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
}

std::uint64_t Decoder::u64() {
  ByteView b = take(8);
  std::uint64_t v = 0;
  for (std::uint8_t byte : b) v = (v << 8) | byte;
  return v;
}

bool Decoder::boolean() {
  std::uint64_t v = u64();
  if (v > 1) throw Error(ErrorCode::DecodeError, "boolean out of range");
  return v == 1;
}

std::size_t Decoder::count() {
  std::uint32_t n = be32();
  // Every element occupies at least one byte, so a count larger than the
  // remaining input is necessarily corrupt.
  if (n > remaining()) {
    throw Error(ErrorCode::DecodeError, "element count exceeds input size");
  }
  return n;
}

Bytes Decoder::bytes() {
  std::uint32_t n = be32();
  ByteView b = take(n);
  return Bytes(b.begin(), b.end());
}

std::string Decoder::text() {
  std::uint32_t n = be32();
  ByteView b = take(n);
  return std::string(b.begin(), b.end());
}

void Decoder::finish() const {
  if (remaining() != 0) {
    throw Error(ErrorCode::DecodeError,
                std::to_string(remaining()) + " trailing bytes");
  }
}

}  // namespace evault
