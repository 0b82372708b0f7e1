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

#include "evault/hash.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "evault/error.hpp"

namespace evault {
namespace {

constexpr std::size_t kRate = 136;  // 1088-bit rate, 512-bit capacity

constexpr std::array<std::uint64_t, 24> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// Rotation offsets and lane permutation for the combined rho+pi step,
// walking the pi cycle starting from lane 1.
constexpr std::array<int, 24> kRho = {1,  3,  6,  10, 15, 21, 28, 36,
                                      45, 55, 2,  14, 27, 41, 56, 8,
                                      25, 43, 62, 18, 39, 61, 20, 44};
constexpr std::array<int, 24> kPi = {10, 7,  11, 17, 18, 3,  5,  16,
                                     8,  21, 24, 4,  15, 23, 19, 13,
                                     12, 2,  20, 14, 22, 9,  6,  1};

constexpr int kPrev[5] = {4, 0, 1, 2, 3};
constexpr int kNext[5] = {1, 2, 3, 4, 0};

inline std::uint64_t rotl(std::uint64_t x, int n) {
  return (x << n) | (x >> (64 - n));
}

inline std::uint64_t load_le64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  std::memcpy(&v, p, sizeof v);
  if constexpr (std::endian::native == std::endian::big) v = __builtin_bswap64(v);
  return v;
}

void absorb_block(std::array<std::uint64_t, 25>& state,
                  const std::uint8_t* block) {
  for (std::size_t i = 0; i < kRate / 8; ++i) {
    state[i] ^= load_le64(block + 8 * i);
  }
  detail::keccak_f1600(state);
}

Hash256 squeeze(const std::array<std::uint64_t, 25>& state) {
  Hash256 out;
  for (std::size_t i = 0; i < Hash256::kSize; ++i) {
    out.bytes[i] = static_cast<std::uint8_t>(state[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

namespace detail {

void keccak_f1600(std::array<std::uint64_t, 25>& a) {
  for (std::uint64_t rc : kRoundConstants) {
    // theta
    std::uint64_t c[5];
#pragma GCC unroll 5
    for (int x = 0; x < 5; ++x) {
      c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
    }
#pragma GCC unroll 5
    for (int x = 0; x < 5; ++x) {
      const std::uint64_t d = c[kPrev[x]] ^ rotl(c[kNext[x]], 1);
#pragma GCC unroll 5
      for (int y = 0; y < 25; y += 5) a[y + x] ^= d;
    }
    // rho + pi
    std::uint64_t current = a[1];
#pragma GCC unroll 24
    for (int i = 0; i < 24; ++i) {
      const int j = kPi[i];
      const std::uint64_t next = a[j];
      a[j] = rotl(current, kRho[i]);
      current = next;
    }
    // chi
#pragma GCC unroll 5
    for (int y = 0; y < 25; y += 5) {
      const std::uint64_t r0 = a[y], r1 = a[y + 1], r2 = a[y + 2], r3 = a[y + 3], r4 = a[y + 4];
      a[y] = r0 ^ (~r1 & r2);
      a[y + 1] = r1 ^ (~r2 & r3);
      a[y + 2] = r2 ^ (~r3 & r4);
      a[y + 3] = r3 ^ (~r4 & r0);
      a[y + 4] = r4 ^ (~r0 & r1);
    }
    // iota
    a[0] ^= rc;
  }
}

Hash256 keccak_sponge_256(ByteView data, std::uint8_t domain_pad) {
  std::array<std::uint64_t, 25> state{};
  std::size_t offset = 0;
  while (data.size() - offset >= kRate) {
    absorb_block(state, data.data() + offset);
    offset += kRate;
  }
  std::array<std::uint8_t, kRate> last{};
  std::size_t tail = data.size() - offset;
  if (tail > 0) std::memcpy(last.data(), data.data() + offset, tail);
  last[tail] ^= domain_pad;
  last[kRate - 1] ^= 0x80;
  absorb_block(state, last.data());
  return squeeze(state);
}

}  // namespace detail

std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::BadHex, "hex string has odd length");
  }
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::BadHex, "invalid hex character");
    }
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

Hash256 Hash256::from_hex(std::string_view hex) {
  if (hex.size() != 2 * kSize) {
    throw Error(ErrorCode::BadHex,
                "hash must be 64 hex characters, got " +
                    std::to_string(hex.size()));
  }
  Bytes raw = evault::from_hex(hex);
  Hash256 h;
  std::copy(raw.begin(), raw.end(), h.bytes.begin());
  return h;
}

bool Hash256::is_zero() const {
  return std::all_of(bytes.begin(), bytes.end(),
                     [](std::uint8_t b) { return b == 0; });
}

Hash256 keccak256(ByteView data) {
  return detail::keccak_sponge_256(data, 0x01);
}

Keccak256::Keccak256() = default;

Keccak256& Keccak256::update(ByteView data) {
  std::size_t offset = 0;
  if (buffered_ > 0) {
    std::size_t take = std::min(kRate - buffered_, data.size());
    std::memcpy(buffer_.data() + buffered_, data.data(), take);
    buffered_ += take;
    offset = take;
    if (buffered_ < kRate) return *this;
    absorb_block(state_, buffer_.data());
    buffered_ = 0;
  }
  while (data.size() - offset >= kRate) {
    absorb_block(state_, data.data() + offset);
    offset += kRate;
  }
  std::size_t tail = data.size() - offset;
  if (tail > 0) {
    std::memcpy(buffer_.data(), data.data() + offset, tail);
    buffered_ = tail;
  }
  return *this;
}

Hash256 Keccak256::finalize() {
  if (finalized_) {
    throw std::logic_error("Keccak256::finalize called twice");
  }
  finalized_ = true;
  std::fill(buffer_.begin() + static_cast<std::ptrdiff_t>(buffered_),
            buffer_.end(), 0);
  buffer_[buffered_] ^= 0x01;
  buffer_[kRate - 1] ^= 0x80;
  absorb_block(state_, buffer_.data());
  return squeeze(state_);
}

}  // namespace evault
