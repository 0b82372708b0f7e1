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

#include "evault/block_log.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <atomic>
#include <cstring>
#include <fstream>

#include "evault/contracts.hpp"
#include "evault/encoding.hpp"
#include "evault/error.hpp"

namespace evault {
namespace fs = std::filesystem;
namespace {

constexpr std::array<std::uint8_t, 4> kRecordMagic = {'E', 'V', 'B', '1'};
constexpr std::array<std::uint8_t, 4> kSnapshotMagic = {'E', 'V', 'S', '1'};
constexpr std::size_t kRecordHeader = 12;
constexpr std::size_t kRecordTrailer = 32;

void put_be32(Bytes& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

std::uint32_t get_be32(const std::uint8_t* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) |
         (std::uint32_t{p[2]} << 8) | std::uint32_t{p[3]};
}

std::uint32_t length_check(std::uint32_t len) {
  Bytes enc;
  put_be32(enc, len);
  Hash256 h = keccak256(enc);
  return get_be32(h.bytes.data());
}

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_fd_all(int fd, ByteView data, const fs::path& path) {
  std::size_t done = 0;
  while (done < data.size()) {
    ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::IoError, "write failed on " + path.string());
    }
    done += static_cast<std::size_t>(n);
  }
}

void fsync_dir(const fs::path& dir) {
  int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC);
  if (fd >= 0) {
    ::fsync(fd);
    ::close(fd);
  }
}

}  // namespace

Bytes encode_log_record(const Block& block) {
  Bytes payload = block.encode();
  Bytes out(kRecordMagic.begin(), kRecordMagic.end());
  const auto len = static_cast<std::uint32_t>(payload.size());
  put_be32(out, len);
  put_be32(out, length_check(len));
  out.insert(out.end(), payload.begin(), payload.end());
  Hash256 digest = keccak256(payload);
  out.insert(out.end(), digest.bytes.begin(), digest.bytes.end());
  return out;
}

BlockLog::BlockLog(fs::path path) : path_(std::move(path)) {
  fd_ = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) throw Error(ErrorCode::IoError, "cannot open block log " + path_.string());
  fsync_dir(path_.parent_path().empty() ? fs::path(".") : path_.parent_path());
}

BlockLog::~BlockLog() {
  if (fd_ >= 0) ::close(fd_);
}

void BlockLog::append(const Block& block) {
  Bytes record = encode_log_record(block);
  write_fd_all(fd_, record, path_);
  if (::fsync(fd_) != 0) throw Error(ErrorCode::IoError, "fsync failed on " + path_.string());
}

LogReadResult read_block_log(const fs::path& path) {
  LogReadResult out;
  if (!fs::exists(path)) return out;
  const Bytes data = read_file(path);
  std::size_t off = 0;
  while (off < data.size()) {
    const std::size_t left = data.size() - off;
    const std::uint8_t* p = data.data() + off;
    if (left < kRecordHeader) {
      if (std::memcmp(p, kRecordMagic.data(), std::min(left, kRecordMagic.size())) != 0) {
        throw Error(ErrorCode::CorruptLog, "bad record magic at offset " + std::to_string(off));
      }
      out.torn_bytes = left;
      break;
    }
    if (std::memcmp(p, kRecordMagic.data(), kRecordMagic.size()) != 0) {
      throw Error(ErrorCode::CorruptLog, "bad record magic at offset " + std::to_string(off));
    }
    const std::uint32_t len = get_be32(p + 4);
    if (get_be32(p + 8) != length_check(len)) {
      throw Error(ErrorCode::CorruptLog, "bad record length at offset " + std::to_string(off));
    }
    const std::size_t total = kRecordHeader + len + kRecordTrailer;
    if (left < total) {
      out.torn_bytes = left;
      break;
    }
    ByteView payload(p + kRecordHeader, len);
    Hash256 digest;
    std::memcpy(digest.bytes.data(), p + kRecordHeader + len, kRecordTrailer);
    if (keccak256(payload) != digest) {
      throw Error(ErrorCode::CorruptLog,
                  "record checksum mismatch at offset " + std::to_string(off));
    }
    try {
      out.blocks.push_back(Block::decode(payload));
    } catch (const Error& e) {
      throw Error(ErrorCode::CorruptLog, std::string("undecodable record: ") + e.what());
    }
    off += total;
    out.valid_bytes = off;
  }
  return out;
}

void write_snapshot(const fs::path& path, const StateSnapshot& snap) {
  Bytes body(kSnapshotMagic.begin(), kSnapshotMagic.end());
  Encoder enc;
  enc.u64(snap.height).hash(snap.tip_hash).bytes(snap.state.encode());
  const Bytes& fields = enc.buffer();
  body.insert(body.end(), fields.begin(), fields.end());
  Hash256 digest = keccak256(body);
  body.insert(body.end(), digest.bytes.begin(), digest.bytes.end());

  static std::atomic<std::uint64_t> counter{0};
  const fs::path tmp = path.string() + ".tmp." + std::to_string(counter.fetch_add(1));
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
  try {
    write_fd_all(fd, body, tmp);
    if (::fsync(fd) != 0) throw Error(ErrorCode::IoError, "fsync failed on " + tmp.string());
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot install snapshot " + path.string());
  fsync_dir(path.parent_path());
}

std::optional<StateSnapshot> read_snapshot(const fs::path& path) {
  if (!fs::exists(path)) return std::nullopt;
  const Bytes data = read_file(path);
  if (data.size() < kSnapshotMagic.size() + kRecordTrailer ||
      std::memcmp(data.data(), kSnapshotMagic.data(), kSnapshotMagic.size()) != 0) {
    throw Error(ErrorCode::CorruptLog, "snapshot header damaged");
  }
  ByteView body(data.data(), data.size() - kRecordTrailer);
  Hash256 digest;
  std::memcpy(digest.bytes.data(), data.data() + body.size(), kRecordTrailer);
  if (keccak256(body) != digest) throw Error(ErrorCode::CorruptLog, "snapshot checksum mismatch");
  try {
    Decoder dec(body.subspan(kSnapshotMagic.size()));
    StateSnapshot snap;
    snap.height = dec.u64();
    snap.tip_hash = dec.hash();
    Bytes state = dec.bytes();
    dec.finish();
    snap.state = WorldState::decode(state);
    return snap;
  } catch (const Error& e) {
    throw Error(ErrorCode::CorruptLog, std::string("snapshot undecodable: ") + e.what());
  }
}

Recovery recover(const fs::path& data_dir, const AuthoritySet& authorities,
                 unsigned work_bits) {
  const DataLayout layout{data_dir};
  Recovery out;
  LogReadResult log = read_block_log(layout.log());
  if (log.torn_bytes > 0) {
    std::error_code ec;
    fs::resize_file(layout.log(), log.valid_bytes, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot truncate torn log tail: " + ec.message());
    out.warnings.push_back("truncated " + std::to_string(log.torn_bytes) +
                           " bytes of a torn final record; recovered to height " +
                           std::to_string(log.blocks.size()));
  }

  Chain chain{genesis_block()};
  chain.insert(chain.end(), std::make_move_iterator(log.blocks.begin()),
               std::make_move_iterator(log.blocks.end()));
  ChainVerdict verdict = verify_chain(chain, authorities, work_bits);
  if (!verdict.ok()) {
    throw Error(ErrorCode::CorruptLog,
                "block log fails verification at height " +
                    std::to_string(*verdict.first_invalid_height) + " (" +
                    std::string(check_name(verdict.reason)) + ")");
  }

  WorldState state;
  std::size_t start = 1;
  std::optional<StateSnapshot> snap;
  try {
    snap = read_snapshot(layout.snapshot());
  } catch (const Error& e) {
    out.warnings.push_back(std::string("ignoring snapshot: ") + e.what());
  }
  if (snap && snap->height < chain.size() && chain[snap->height].hash() == snap->tip_hash) {
    state = std::move(snap->state);
    start = snap->height + 1;
    out.snapshot_height = snap->height;
  } else if (snap) {
    out.warnings.push_back("snapshot at height " + std::to_string(snap->height) +
                           " does not match the log; replaying from genesis");
  }
  for (std::size_t i = start; i < chain.size(); ++i) {
    if (auto r = apply_block(state, chain[i])) {
      throw Error(ErrorCode::CorruptLog, "block " + std::to_string(i) +
                                             " transaction " + std::to_string(r->tx_index) +
                                             " no longer applies: " + r->rejection.message);
    }
  }
  out.node.reset(std::move(chain), std::move(state));
  return out;
}

}  // namespace evault
