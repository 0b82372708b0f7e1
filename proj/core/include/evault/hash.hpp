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

#ifndef EVAULT_HASH_HPP_
#define EVAULT_HASH_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evault {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

std::string to_hex(ByteView bytes);
/// Accepts upper or lower case; throws Error(BadHex) on odd length or
/// non-hex characters.
Bytes from_hex(std::string_view hex);

/// 32-byte Keccak-256 digest. Ordering is lexicographic over the bytes.
struct Hash256 {
  std::array<std::uint8_t, 32> bytes{};

  static constexpr std::size_t kSize = 32;

  std::string hex() const { return to_hex(bytes); }
  static Hash256 from_hex(std::string_view hex);
  bool is_zero() const;

  ByteView view() const { return bytes; }

  friend auto operator<=>(const Hash256&, const Hash256&) = default;
  friend bool operator==(const Hash256&, const Hash256&) = default;
};

/// Ethereum-style Keccak-256 (original 0x01 padding, not NIST SHA3-256).
Hash256 keccak256(ByteView data);
inline Hash256 keccak256(std::string_view text) {
  return keccak256(as_bytes(text));
}

/// Incremental form for streaming large files.
class Keccak256 {
 public:
  Keccak256();
  Keccak256& update(ByteView data);
  Hash256 finalize();

 private:
  std::array<std::uint64_t, 25> state_{};
  std::array<std::uint8_t, 136> buffer_{};
  std::size_t buffered_ = 0;
  bool finalized_ = false;
};

namespace detail {
// Sponge with a caller-chosen domain padding byte; 0x01 is Keccak, 0x06 is
// FIPS-202 SHA3. Exposed so tests can cross-check the permutation against
// an independent SHA3-256 implementation.
Hash256 keccak_sponge_256(ByteView data, std::uint8_t domain_pad);
void keccak_f1600(std::array<std::uint64_t, 25>& state);
}  // namespace detail

}  // namespace evault

template <>
struct std::hash<evault::Hash256> {
  std::size_t operator()(const evault::Hash256& h) const noexcept {
    std::size_t out = 0;
    for (std::size_t i = 0; i < sizeof(out); ++i) {
      out = (out << 8) | h.bytes[i];
    }
    return out;
  }
};

#endif  // EVAULT_HASH_HPP_
