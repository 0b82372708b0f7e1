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

#include "evault/filestore.hpp"

#include <fcntl.h>
#include <sodium.h>
#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <system_error>

#include "evault/encoding.hpp"
#include "evault/error.hpp"

namespace evault {
namespace fs = std::filesystem;
namespace {

void write_all_fd(int fd, ByteView data, const fs::path& path) {
  std::size_t written = 0;
  while (written < data.size()) {
    ssize_t n = ::write(fd, data.data() + written, data.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::StoreWriteFailure, "write failed for " + path.string());
    }
    written += static_cast<std::size_t>(n);
  }
}

fs::path temp_path_for(const fs::path& final_path) {
  static std::atomic<std::uint64_t> counter{0};
  return final_path.string() + ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(counter.fetch_add(1));
}

bool is_chunk_filename(const std::string& name) {
  if (name.size() != 64) return false;
  for (char c : name) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

void encode_header(Encoder& enc, const ObjectManifest& m) {
  enc.hash(m.content_hash).u64(m.total_size).u64(m.chunk_size);
  enc.count(m.entries.size());
}

std::string next_token(std::istringstream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) {
    throw Error(ErrorCode::DecodeError, std::string("manifest text missing ") + what);
  }
  return tok;
}

ChunkKey key_from_hex(std::string_view hex) {
  Hash256 h = Hash256::from_hex(hex);
  return h.bytes;
}

}  // namespace

std::vector<ByteView> chunk_bytes(ByteView data, std::size_t chunk_size) {
  if (chunk_size == 0) {
    throw Error(ErrorCode::BadChunkSize, "chunk_size must be at least 1");
  }
  std::vector<ByteView> out;
  out.reserve((data.size() + chunk_size - 1) / chunk_size);
  for (std::size_t off = 0; off < data.size(); off += chunk_size) {
    out.push_back(data.subspan(off, std::min(chunk_size, data.size() - off)));
  }
  return out;
}

EncryptedChunk convergent_encrypt(ByteView plaintext) {
  EncryptedChunk out;
  out.key = keccak256(plaintext).bytes;
  out.ciphertext.resize(plaintext.size());
  std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
  if (!plaintext.empty()) {
    crypto_stream_chacha20_ietf_xor(out.ciphertext.data(), plaintext.data(),
                                    plaintext.size(), nonce.data(), out.key.data());
  }
  return out;
}

Bytes convergent_decrypt(const ChunkKey& key, ByteView ciphertext) {
  Bytes out(ciphertext.size());
  std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
  if (!ciphertext.empty()) {
    crypto_stream_chacha20_ietf_xor(out.data(), ciphertext.data(), ciphertext.size(),
                                    nonce.data(), key.data());
  }
  return out;
}

bool MemoryChunkStore::contains(const Hash256& cipher_hash) const {
  std::lock_guard lock(mu_);
  return records_.count(cipher_hash) > 0;
}

bool MemoryChunkStore::put(const Hash256& cipher_hash, ByteView ciphertext) {
  std::lock_guard lock(mu_);
  return records_.emplace(cipher_hash, Bytes(ciphertext.begin(), ciphertext.end()))
      .second;
}

std::optional<Bytes> MemoryChunkStore::get(const Hash256& cipher_hash) const {
  std::lock_guard lock(mu_);
  auto it = records_.find(cipher_hash);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

std::size_t MemoryChunkStore::chunk_count() const {
  std::lock_guard lock(mu_);
  return records_.size();
}

Bytes* MemoryChunkStore::mutable_record(const Hash256& cipher_hash) {
  std::lock_guard lock(mu_);
  auto it = records_.find(cipher_hash);
  return it == records_.end() ? nullptr : &it->second;
}

bool MemoryChunkStore::erase(const Hash256& cipher_hash) {
  std::lock_guard lock(mu_);
  return records_.erase(cipher_hash) > 0;
}

DirectoryChunkStore::DirectoryChunkStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) {
    throw Error(ErrorCode::StoreWriteFailure,
                "cannot create chunk store at " + root_.string() + ": " + ec.message());
  }
}

fs::path DirectoryChunkStore::path_for(const Hash256& cipher_hash) const {
  std::string hex = cipher_hash.hex();
  return root_ / hex.substr(0, 2) / hex.substr(2, 2) / hex;
}

bool DirectoryChunkStore::contains(const Hash256& cipher_hash) const {
  std::error_code ec;
  return fs::is_regular_file(path_for(cipher_hash), ec);
}

bool DirectoryChunkStore::put(const Hash256& cipher_hash, ByteView ciphertext) {
  const fs::path final_path = path_for(cipher_hash);
  if (contains(cipher_hash)) return false;
  std::error_code ec;
  fs::create_directories(final_path.parent_path(), ec);
  if (ec) {
    throw Error(ErrorCode::StoreWriteFailure,
                "cannot create " + final_path.parent_path().string());
  }
  const fs::path tmp = temp_path_for(final_path);
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw Error(ErrorCode::StoreWriteFailure, "cannot create " + tmp.string());
  }
  try {
    write_all_fd(fd, ciphertext, tmp);
    if (::fsync(fd) != 0) {
      throw Error(ErrorCode::StoreWriteFailure, "fsync failed for " + tmp.string());
    }
  } catch (...) {
    ::close(fd);
    fs::remove(tmp, ec);
    throw;
  }
  ::close(fd);
  // A concurrent writer of the same address renames identical bytes over us,
  // which is harmless; report "new" only if we were first to land.
  const bool existed = contains(cipher_hash);
  fs::rename(tmp, final_path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::StoreWriteFailure, "cannot rename into " + final_path.string());
  }
  return !existed;
}

std::optional<Bytes> DirectoryChunkStore::get(const Hash256& cipher_hash) const {
  std::ifstream in(path_for(cipher_hash), std::ios::binary);
  if (!in) return std::nullopt;
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::size_t DirectoryChunkStore::chunk_count() const {
  std::size_t n = 0;
  std::error_code ec;
  for (auto it = fs::recursive_directory_iterator(root_, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file() && is_chunk_filename(it->path().filename().string())) {
      ++n;
    }
  }
  return n;
}

Hash256 ObjectManifest::manifest_hash() const {
  Encoder enc;
  encode_header(enc, *this);
  for (const ManifestEntry& e : entries) enc.hash(e.cipher_hash);
  return keccak256(enc.buffer());
}

Bytes ObjectManifest::encode() const {
  Encoder enc;
  encode_header(enc, *this);
  for (const ManifestEntry& e : entries) enc.hash(e.cipher_hash).raw(e.key);
  return enc.take();
}

ObjectManifest ObjectManifest::decode(ByteView data) {
  Decoder dec(data);
  ObjectManifest m;
  m.content_hash = dec.hash();
  m.total_size = dec.u64();
  m.chunk_size = dec.u64();
  std::size_t n = dec.count();
  m.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ManifestEntry e;
    e.cipher_hash = dec.hash();
    e.key = dec.raw<32>();
    m.entries.push_back(e);
  }
  dec.finish();
  return m;
}

std::string ObjectManifest::to_text() const {
  std::ostringstream out;
  out << "content_hash " << content_hash.hex() << "\n";
  out << "total_size " << total_size << "\n";
  out << "chunk_size " << chunk_size << "\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << i << " " << entries[i].cipher_hash.hex() << " " << to_hex(entries[i].key)
        << "\n";
  }
  return out.str();
}

ObjectManifest ObjectManifest::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  ObjectManifest m;
  auto expect_label = [&](const char* label) {
    if (next_token(in, label) != label) {
      throw Error(ErrorCode::DecodeError, std::string("manifest text expected ") + label);
    }
  };
  expect_label("content_hash");
  m.content_hash = Hash256::from_hex(next_token(in, "content hash value"));
  expect_label("total_size");
  m.total_size = std::stoull(next_token(in, "total size value"));
  expect_label("chunk_size");
  m.chunk_size = std::stoull(next_token(in, "chunk size value"));
  std::string index;
  while (in >> index) {
    if (std::stoull(index) != m.entries.size()) {
      throw Error(ErrorCode::DecodeError, "manifest entries out of order");
    }
    ManifestEntry e;
    e.cipher_hash = Hash256::from_hex(next_token(in, "cipher hash"));
    e.key = key_from_hex(next_token(in, "key"));
    m.entries.push_back(e);
  }
  return m;
}

PreparedObject prepare_object(ByteView data, std::size_t chunk_size) {
  if (data.empty()) throw Error(ErrorCode::EmptyObject, "cannot store an empty object");
  PreparedObject out;
  out.manifest.content_hash = keccak256(data);
  out.manifest.total_size = data.size();
  out.manifest.chunk_size = chunk_size;
  for (ByteView chunk : chunk_bytes(data, chunk_size)) {
    EncryptedChunk enc = convergent_encrypt(chunk);
    out.manifest.entries.push_back({keccak256(enc.ciphertext), enc.key});
    out.ciphertexts.push_back(std::move(enc.ciphertext));
  }
  return out;
}

PutResult put_object(ChunkStore& store, ByteView data, std::size_t chunk_size) {
  PreparedObject prepared = prepare_object(data, chunk_size);
  PutResult result;
  for (std::size_t i = 0; i < prepared.ciphertexts.size(); ++i) {
    if (store.put(prepared.manifest.entries[i].cipher_hash, prepared.ciphertexts[i])) {
      ++result.new_chunks;
    }
  }
  result.manifest = std::move(prepared.manifest);
  return result;
}

Bytes get_object(const ChunkStore& store, const ObjectManifest& manifest) {
  Bytes out;
  out.reserve(manifest.total_size);
  for (const ManifestEntry& e : manifest.entries) {
    std::optional<Bytes> cipher = store.get(e.cipher_hash);
    if (!cipher) {
      throw Error(ErrorCode::MissingChunk, "missing chunk " + e.cipher_hash.hex());
    }
    if (keccak256(*cipher) != e.cipher_hash) {
      throw Error(ErrorCode::IntegrityFailure,
                  "chunk " + e.cipher_hash.hex() + " does not match its address");
    }
    Bytes plain = convergent_decrypt(e.key, *cipher);
    out.insert(out.end(), plain.begin(), plain.end());
  }
  if (out.size() != manifest.total_size || keccak256(out) != manifest.content_hash) {
    throw Error(ErrorCode::IntegrityFailure,
                "reassembled object does not match content hash " +
                    manifest.content_hash.hex());
  }
  return out;
}

}  // namespace evault
