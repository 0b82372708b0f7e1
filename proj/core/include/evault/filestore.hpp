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

#ifndef EVAULT_FILESTORE_HPP_
#define EVAULT_FILESTORE_HPP_

// Off-chain object storage. Objects are split into fixed-size chunks, each
// chunk is encrypted under the hash of its own plaintext (convergent
// encryption), and ciphertexts are stored under their own hash. Identical
// chunks therefore collapse to one record, and the store never sees keys or
// plaintext. Keys live in the ObjectManifest, which stays with the client;
// only manifest_hash() goes on the ledger.

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "evault/hash.hpp"

namespace evault {

inline constexpr std::size_t kDefaultChunkSize = 64 * 1024;

using ChunkKey = std::array<std::uint8_t, 32>;

/// Throws Error(BadChunkSize) for chunk_size 0. Views alias `data`.
std::vector<ByteView> chunk_bytes(ByteView data, std::size_t chunk_size);

struct EncryptedChunk {
  ChunkKey key;  // keccak256(plaintext)
  Bytes ciphertext;
};

/// ChaCha20 under key = keccak256(plaintext) with an all-zero nonce. The
/// zero nonce is sound only because a key is never used for two different
/// plaintexts.
EncryptedChunk convergent_encrypt(ByteView plaintext);
Bytes convergent_decrypt(const ChunkKey& key, ByteView ciphertext);

/// Content-addressed ciphertext store. Implementations must make put()
/// idempotent per address.
class ChunkStore {
 public:
  virtual ~ChunkStore() = default;

  virtual bool contains(const Hash256& cipher_hash) const = 0;
  /// Returns true if the record was newly written. Throws
  /// Error(StoreWriteFailure) on I/O failure.
  virtual bool put(const Hash256& cipher_hash, ByteView ciphertext) = 0;
  virtual std::optional<Bytes> get(const Hash256& cipher_hash) const = 0;
  virtual std::size_t chunk_count() const = 0;
};

class MemoryChunkStore final : public ChunkStore {
 public:
  bool contains(const Hash256& cipher_hash) const override;
  bool put(const Hash256& cipher_hash, ByteView ciphertext) override;
  std::optional<Bytes> get(const Hash256& cipher_hash) const override;
  std::size_t chunk_count() const override;

  /// Test hook for corruption experiments.
  Bytes* mutable_record(const Hash256& cipher_hash);
  bool erase(const Hash256& cipher_hash);

 private:
  mutable std::mutex mu_;
  std::map<Hash256, Bytes> records_;
};

/// One file per chunk at <root>/<hex[0:2]>/<hex[2:4]>/<hex>. Writes go to a
/// temporary file first and are renamed into place, so readers never see a
/// partial chunk.
class DirectoryChunkStore final : public ChunkStore {
 public:
  explicit DirectoryChunkStore(std::filesystem::path root);

  bool contains(const Hash256& cipher_hash) const override;
  bool put(const Hash256& cipher_hash, ByteView ciphertext) override;
  std::optional<Bytes> get(const Hash256& cipher_hash) const override;
  /// Walks the directory tree; counts exactly the chunk files present.
  std::size_t chunk_count() const override;

  std::filesystem::path path_for(const Hash256& cipher_hash) const;
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path root_;
};

struct ManifestEntry {
  Hash256 cipher_hash;
  ChunkKey key;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct ObjectManifest {
  Hash256 content_hash;  // keccak256 of the whole plaintext
  std::uint64_t total_size = 0;
  std::uint64_t chunk_size = kDefaultChunkSize;
  std::vector<ManifestEntry> entries;

  /// Commitment stored on the ledger: hash of the encoding with every key
  /// omitted, so publishing it reveals nothing that decrypts the object.
  Hash256 manifest_hash() const;

  /// Full canonical encoding, keys included (client-side manifest file).
  Bytes encode() const;
  static ObjectManifest decode(ByteView data);

  /// Line-oriented export: three header lines followed by one
  /// "<index> <cipher_hash hex> <key hex>" line per entry.
  std::string to_text() const;
  static ObjectManifest from_text(std::string_view text);

  friend bool operator==(const ObjectManifest&, const ObjectManifest&) = default;
};

/// Client side of an upload: chunk + encrypt without touching a store.
struct PreparedObject {
  ObjectManifest manifest;
  std::vector<Bytes> ciphertexts;  // parallel to manifest.entries
};
PreparedObject prepare_object(ByteView data,
                              std::size_t chunk_size = kDefaultChunkSize);

struct PutResult {
  ObjectManifest manifest;
  std::size_t new_chunks = 0;
};

/// Throws Error(EmptyObject), Error(BadChunkSize), Error(StoreWriteFailure).
PutResult put_object(ChunkStore& store, ByteView data,
                     std::size_t chunk_size = kDefaultChunkSize);

/// Throws Error(MissingChunk) naming the absent address, or
/// Error(IntegrityFailure) if any chunk or the reassembled object fails its
/// hash check.
Bytes get_object(const ChunkStore& store, const ObjectManifest& manifest);

}  // namespace evault

#endif  // EVAULT_FILESTORE_HPP_
