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

#ifndef EVAULT_IDENTITY_HPP_
#define EVAULT_IDENTITY_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "evault/hash.hpp"

namespace evault {

class Encoder;
class Decoder;

enum class Role : std::uint8_t { Judge = 0, Lawyer = 1, Citizen = 2, Registrar = 3 };

std::string_view role_name(Role role);
/// Case-insensitive; nullopt for anything that is not one of the four roles.
std::optional<Role> parse_role(std::string_view name);

struct IdentityDetails {
  std::string full_name;
  std::string national_id;  // opaque, never validated
  Role role = Role::Citizen;
  std::string contact;

  void encode(Encoder& enc) const;
  static IdentityDetails decode(Decoder& dec);
  friend bool operator==(const IdentityDetails&, const IdentityDetails&) = default;
};

struct Uid {
  Hash256 value;

  std::string hex() const { return value.hex(); }
  static Uid from_hex(std::string_view hex) { return {Hash256::from_hex(hex)}; }

  friend auto operator<=>(const Uid&, const Uid&) = default;
  friend bool operator==(const Uid&, const Uid&) = default;
};

/// keccak256 over the canonical encoding of the details. Throws
/// Error(EmptyField) if full_name or national_id is empty.
Uid derive_uid(const IdentityDetails& details);

struct VerifyKey {
  std::array<std::uint8_t, 32> bytes{};

  std::string hex() const { return to_hex(bytes); }
  static VerifyKey from_hex(std::string_view hex);

  friend auto operator<=>(const VerifyKey&, const VerifyKey&) = default;
  friend bool operator==(const VerifyKey&, const VerifyKey&) = default;
};

struct Signature {
  std::array<std::uint8_t, 64> bytes{};

  std::string hex() const { return to_hex(bytes); }
  static Signature from_hex(std::string_view hex);

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Ed25519 signing key. Holds secret material, wiped on destruction.
class SigningKey {
 public:
  static constexpr std::size_t kSeedSize = 32;

  /// Throws Error(BadSeedLength) unless seed is exactly 32 bytes.
  static SigningKey from_seed(ByteView seed);

  SigningKey(const SigningKey& other);
  SigningKey& operator=(const SigningKey& other);
  ~SigningKey();

  const VerifyKey& verify_key() const { return public_; }
  ByteView seed() const { return seed_; }
  Signature sign(ByteView message) const;

 private:
  SigningKey() = default;

  std::array<std::uint8_t, kSeedSize> seed_{};
  std::array<std::uint8_t, 64> secret_{};
  VerifyKey public_;
};

struct KeyPair {
  SigningKey signing;
  VerifyKey verify;
};

KeyPair generate_keypair(ByteView seed);
Signature sign(const SigningKey& key, ByteView message);

/// Never throws: wrong-length or malformed signatures simply fail.
bool verify(const VerifyKey& key, ByteView message, ByteView signature);
inline bool verify(const VerifyKey& key, ByteView message,
                   const Signature& signature) {
  return verify(key, message, ByteView(signature.bytes));
}

/// 32 bytes from the OS CSPRNG.
std::array<std::uint8_t, 32> random_seed();

struct Identity {
  Uid uid;
  Role role = Role::Citizen;
  VerifyKey public_key;
  std::uint64_t registered_at = 0;  // block height

  friend bool operator==(const Identity&, const Identity&) = default;
};

// Key files hold the raw 32-byte seed with mode 0600.
void write_seed_file(const std::filesystem::path& path, ByteView seed);
/// Throws Error(InsecureKeyFile) if group or other have any permission bits,
/// Error(BadSeedLength) if the file is not 32 bytes, Error(IoError) if unreadable.
SigningKey read_seed_file(const std::filesystem::path& path);

}  // namespace evault

template <>
struct std::hash<evault::Uid> {
  std::size_t operator()(const evault::Uid& u) const noexcept {
    return std::hash<evault::Hash256>{}(u.value);
  }
};

#endif  // EVAULT_IDENTITY_HPP_
