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

#include "evault/identity.hpp"

#include <sodium.h>
#include <sys/stat.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <system_error>

#include "evault/encoding.hpp"
#include "evault/error.hpp"

namespace evault {
namespace {

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("libsodium initialisation failed");
}

template <std::size_t N>
std::array<std::uint8_t, N> fixed_from_hex(std::string_view hex,
                                           const char* what) {
  Bytes raw = from_hex(hex);
  if (raw.size() != N) {
    throw Error(ErrorCode::BadHex, std::string(what) + " must be " +
                                       std::to_string(N) + " bytes");
  }
  std::array<std::uint8_t, N> out{};
  std::copy(raw.begin(), raw.end(), out.begin());
  return out;
}

}  // namespace

std::string_view role_name(Role role) {
  switch (role) {
    case Role::Judge:
      return "Judge";
    case Role::Lawyer:
      return "Lawyer";
    case Role::Citizen:
      return "Citizen";
    case Role::Registrar:
      return "Registrar";
  }
  return "Unknown";
}

std::optional<Role> parse_role(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "judge") return Role::Judge;
  if (lower == "lawyer") return Role::Lawyer;
  if (lower == "citizen") return Role::Citizen;
  if (lower == "registrar") return Role::Registrar;
  return std::nullopt;
}

void IdentityDetails::encode(Encoder& enc) const {
  enc.text(full_name).text(national_id).u64(static_cast<std::uint64_t>(role))
      .text(contact);
}

IdentityDetails IdentityDetails::decode(Decoder& dec) {
  IdentityDetails d;
  d.full_name = dec.text();
  d.national_id = dec.text();
  std::uint64_t role = dec.u64();
  if (role > static_cast<std::uint64_t>(Role::Registrar)) {
    throw Error(ErrorCode::DecodeError, "role tag out of range");
  }
  d.role = static_cast<Role>(role);
  d.contact = dec.text();
  return d;
}

Uid derive_uid(const IdentityDetails& details) {
  if (details.full_name.empty()) {
    throw Error(ErrorCode::EmptyField, "full_name must not be empty");
  }
  if (details.national_id.empty()) {
    throw Error(ErrorCode::EmptyField, "national_id must not be empty");
  }
  Encoder enc;
  details.encode(enc);
  return {keccak256(enc.buffer())};
}

VerifyKey VerifyKey::from_hex(std::string_view hex) {
  return {fixed_from_hex<32>(hex, "verification key")};
}

Signature Signature::from_hex(std::string_view hex) {
  return {fixed_from_hex<64>(hex, "signature")};
}

SigningKey SigningKey::from_seed(ByteView seed) {
  if (seed.size() != kSeedSize) {
    throw Error(ErrorCode::BadSeedLength,
                "seed must be 32 bytes, got " + std::to_string(seed.size()));
  }
  ensure_sodium();
  SigningKey key;
  std::copy(seed.begin(), seed.end(), key.seed_.begin());
  crypto_sign_seed_keypair(key.public_.bytes.data(), key.secret_.data(),
                           key.seed_.data());
  return key;
}

SigningKey::SigningKey(const SigningKey& other) = default;
SigningKey& SigningKey::operator=(const SigningKey& other) = default;

SigningKey::~SigningKey() {
  sodium_memzero(seed_.data(), seed_.size());
  sodium_memzero(secret_.data(), secret_.size());
}

Signature SigningKey::sign(ByteView message) const {
  Signature sig;
  crypto_sign_detached(sig.bytes.data(), nullptr, message.data(),
                       message.size(), secret_.data());
  return sig;
}

KeyPair generate_keypair(ByteView seed) {
  SigningKey key = SigningKey::from_seed(seed);
  VerifyKey vk = key.verify_key();
  return {std::move(key), vk};
}

Signature sign(const SigningKey& key, ByteView message) {
  return key.sign(message);
}

bool verify(const VerifyKey& key, ByteView message, ByteView signature) {
  if (signature.size() != crypto_sign_BYTES) return false;
  ensure_sodium();
  return crypto_sign_verify_detached(signature.data(), message.data(),
                                     message.size(), key.bytes.data()) == 0;
}

std::array<std::uint8_t, 32> random_seed() {
  ensure_sodium();
  std::array<std::uint8_t, 32> out{};
  randombytes_buf(out.data(), out.size());
  return out;
}

void write_seed_file(const std::filesystem::path& path, ByteView seed) {
  if (seed.size() != SigningKey::kSeedSize) {
    throw Error(ErrorCode::BadSeedLength, "seed must be 32 bytes");
  }
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(seed.data()),
              static_cast<std::streamsize>(seed.size()));
    if (!out) throw Error(ErrorCode::IoError, "short write to " + path.string());
  }
  std::error_code ec;
  std::filesystem::permissions(
      path, std::filesystem::perms::owner_read | std::filesystem::perms::owner_write,
      std::filesystem::perm_options::replace, ec);
  if (ec) {
    throw Error(ErrorCode::IoError, "cannot restrict mode of " + path.string());
  }
}

SigningKey read_seed_file(const std::filesystem::path& path) {
  struct stat st {};
  if (::stat(path.c_str(), &st) != 0) {
    throw Error(ErrorCode::IoError, "cannot stat key file " + path.string());
  }
  if ((st.st_mode & 077) != 0) {
    throw Error(ErrorCode::InsecureKeyFile,
                "key file " + path.string() +
                    " must be readable by its owner only (chmod 600)");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  Bytes seed((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  return SigningKey::from_seed(seed);
}

}  // namespace evault
