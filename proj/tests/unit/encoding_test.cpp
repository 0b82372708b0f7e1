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

#include <gtest/gtest.h>

#include "evault/error.hpp"

namespace evault {
namespace {

TEST(EncoderTest, FixedLayout) {
  Encoder enc;
  enc.u64(0x0102030405060708ULL);
  enc.i64(-1);
  enc.text("hi");
  enc.count(3);
  enc.boolean(true);
  const Bytes want = {1, 2, 3, 4, 5, 6, 7, 8, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff,
                      0, 0, 0, 2, 'h', 'i', 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 1};
  EXPECT_EQ(enc.buffer(), want);
}

TEST(DecoderTest, RoundTrip) {
  Encoder enc;
  enc.u64(42);
  enc.i64(-7);
  enc.bytes(Bytes{9, 8, 7});
  enc.text("");
  enc.hash(keccak256("h"));
  const Bytes b = enc.take();
  Decoder dec(b);
  EXPECT_EQ(dec.u64(), 42u);
  EXPECT_EQ(dec.i64(), -7);
  EXPECT_EQ(dec.bytes(), (Bytes{9, 8, 7}));
  EXPECT_EQ(dec.text(), "");
  EXPECT_EQ(dec.hash(), keccak256("h"));
  EXPECT_NO_THROW(dec.finish());
}

TEST(DecoderTest, RejectsTruncationTrailingBytesAndHugeCounts) {
  Encoder enc;
  enc.u64(1);
  Bytes b = enc.take();
  {
    Decoder dec(ByteView(b).first(7));
    EXPECT_THROW(dec.u64(), Error);
  }
  b.push_back(0);
  {
    Decoder dec(b);
    dec.u64();
    EXPECT_THROW(dec.finish(), Error);
  }
  const Bytes huge = {0xff, 0xff, 0xff, 0xff};
  {
    Decoder dec(huge);
    EXPECT_THROW(dec.count(), Error);
  }
  const Bytes bad_bool = {0, 0, 0, 0, 0, 0, 0, 2};
  {
    Decoder dec(bad_bool);
    EXPECT_THROW(dec.boolean(), Error);
  }
}

}  // namespace
}  // namespace evault
