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

#ifndef EVAULT_ENCODING_HPP_
#define EVAULT_ENCODING_HPP_

// Canonical binary encoding used for every hash and signature in the system:
//   - integers are 8-byte big-endian (signed values as two's complement)
//   - variable byte strings and text carry a 4-byte big-endian length
//   - lists carry a 4-byte big-endian element count
//   - fixed-width values (hashes, keys, signatures) are written raw
// Fields are always written in declaration order.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "evault/hash.hpp"

namespace evault {

class Encoder {
 public:
  Encoder& u64(std::uint64_t v);
  Encoder& i64(std::int64_t v) { return u64(static_cast<std::uint64_t>(v)); }
  Encoder& boolean(bool v) { return u64(v ? 1 : 0); }
  Encoder& count(std::size_t n);
  Encoder& bytes(ByteView data);
  Encoder& text(std::string_view s) { return bytes(as_bytes(s)); }
  Encoder& hash(const Hash256& h) { return raw(h.bytes); }

  template <std::size_t N>
  Encoder& raw(const std::array<std::uint8_t, N>& fixed) {
    buffer_.insert(buffer_.end(), fixed.begin(), fixed.end());
    return *this;
  }

  const Bytes& buffer() const& { return buffer_; }
  Bytes take() { return std::move(buffer_); }

 private:
  void be32(std::uint32_t v);

  Bytes buffer_;
};

/// Strict reader: every method throws Error(DecodeError) on truncation, and
/// finish() rejects trailing bytes, so a buffer decodes to at most one value.
class Decoder {
 public:
  explicit Decoder(ByteView data) : data_(data) {}

  std::uint64_t u64();
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  bool boolean();
  std::size_t count();
  Bytes bytes();
  std::string text();
  Hash256 hash() {
    Hash256 h;
    h.bytes = raw<32>();
    return h;
  }

  template <std::size_t N>
  std::array<std::uint8_t, N> raw() {
    std::array<std::uint8_t, N> out{};
    ByteView src = take(N);
    std::copy(src.begin(), src.end(), out.begin());
    return out;
  }

  std::size_t remaining() const { return data_.size() - offset_; }
  void finish() const;

 private:
  ByteView take(std::size_t n);
  std::uint32_t be32();

  ByteView data_;
  std::size_t offset_ = 0;
};

}  // namespace evault

#endif  // EVAULT_ENCODING_HPP_
