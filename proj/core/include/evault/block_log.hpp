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

#ifndef EVAULT_BLOCK_LOG_HPP_
#define EVAULT_BLOCK_LOG_HPP_

// Durable storage for a single node.
//
// blocks.log is a sequence of records, one per block after genesis:
//   "EVB1" | u32 BE payload length | u32 BE check(length) | payload | keccak256(payload)
// where check(length) is the first four bytes of keccak256 of the encoded
// length. A record that runs past end-of-file is a torn write and is
// truncated on recovery; any other damage is reported as CorruptLog.
//
// state.snapshot holds "EVS1" | u64 height | tip hash | u32 length | state
// encoding | keccak256 of everything before it.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "evault/authority.hpp"
#include "evault/block.hpp"
#include "evault/consensus.hpp"
#include "evault/world_state.hpp"

namespace evault {

class BlockLog {
 public:
  /// Opens (creating if needed) for append.
  explicit BlockLog(std::filesystem::path path);
  ~BlockLog();
  BlockLog(const BlockLog&) = delete;
  BlockLog& operator=(const BlockLog&) = delete;

  /// Writes one record and fsyncs before returning.
  void append(const Block& block);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  int fd_ = -1;
};

Bytes encode_log_record(const Block& block);

struct LogReadResult {
  std::vector<Block> blocks;  // excludes genesis
  std::uint64_t valid_bytes = 0;
  std::uint64_t torn_bytes = 0;  // trailing bytes of an incomplete record
};

/// Does not modify the file. Throws Error(CorruptLog) on non-torn damage.
LogReadResult read_block_log(const std::filesystem::path& path);

struct StateSnapshot {
  std::uint64_t height = 0;
  Hash256 tip_hash;
  WorldState state;
};

void write_snapshot(const std::filesystem::path& path, const StateSnapshot& snap);
/// nullopt if the file does not exist; throws Error(CorruptLog) if damaged.
std::optional<StateSnapshot> read_snapshot(const std::filesystem::path& path);

struct DataLayout {
  std::filesystem::path root;

  std::filesystem::path log() const { return root / "blocks.log"; }
  std::filesystem::path snapshot() const { return root / "state.snapshot"; }
  std::filesystem::path chunks() const { return root / "chunks"; }
  std::filesystem::path manifests() const { return root / "manifests"; }
  std::filesystem::path authority_key() const { return root / "authority.key"; }
};

struct Recovery {
  NodeState node;
  std::vector<std::string> warnings;
  std::optional<std::uint64_t> snapshot_height;  // set if a snapshot was used
};

/// Rebuilds the node from the data directory. A torn final record is
/// truncated away (and reported in warnings); a damaged log, a chain that
/// fails verification, or a transaction that no longer applies throws
/// Error(CorruptLog). A missing log yields the genesis-only state.
Recovery recover(const std::filesystem::path& data_dir, const AuthoritySet& authorities,
                 unsigned work_bits = 0);

}  // namespace evault

#endif  // EVAULT_BLOCK_LOG_HPP_
