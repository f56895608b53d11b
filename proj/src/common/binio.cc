// common/binio.cc

// Copyright 2026  The ugp authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "common/binio.h"

#include <cstring>
#include <istream>
#include <ostream>

#include "common/error.h"

namespace ugp {

namespace {

void PutBytesLE(std::ostream &os, uint64_t v, int n) {
  char buf[8];
  for (int i = 0; i < n; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(buf, n);
  if (!os) UGP_RAISE(kIo) << "write failed";
}

uint64_t GetBytesLE(std::istream &is, int n) {
  char buf[8];
  is.read(buf, n);
  if (!is) UGP_RAISE(kIo) << "unexpected end of stream";
  uint64_t v = 0;
  for (int i = 0; i < n; ++i)
    v |= static_cast<uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
  return v;
}

}  // namespace

void WriteU8(std::ostream &os, uint8_t v) { PutBytesLE(os, v, 1); }
void WriteU32(std::ostream &os, uint32_t v) { PutBytesLE(os, v, 4); }
void WriteU64(std::ostream &os, uint64_t v) { PutBytesLE(os, v, 8); }
void WriteI64(std::ostream &os, int64_t v) {
  PutBytesLE(os, static_cast<uint64_t>(v), 8);
}

void WriteF32(std::ostream &os, float v) {
  uint32_t bits;
  std::memcpy(&bits, &v, 4);
  WriteU32(os, bits);
}

void WriteF64(std::ostream &os, double v) {
  uint64_t bits;
  std::memcpy(&bits, &v, 8);
  WriteU64(os, bits);
}

void WriteMagic(std::ostream &os, const char magic[4]) {
  os.write(magic, 4);
  if (!os) UGP_RAISE(kIo) << "write failed";
}

void WriteString(std::ostream &os, const std::string &s) {
  WriteU32(os, static_cast<uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
  if (!os) UGP_RAISE(kIo) << "write failed";
}

uint8_t ReadU8(std::istream &is) {
  return static_cast<uint8_t>(GetBytesLE(is, 1));
}
uint32_t ReadU32(std::istream &is) {
  return static_cast<uint32_t>(GetBytesLE(is, 4));
}
uint64_t ReadU64(std::istream &is) { return GetBytesLE(is, 8); }
int64_t ReadI64(std::istream &is) {
  return static_cast<int64_t>(GetBytesLE(is, 8));
}

float ReadF32(std::istream &is) {
  uint32_t bits = ReadU32(is);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

double ReadF64(std::istream &is) {
  uint64_t bits = ReadU64(is);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

void ExpectMagic(std::istream &is, const char magic[4]) {
  char buf[4];
  is.read(buf, 4);
  if (!is || std::memcmp(buf, magic, 4) != 0)
    UGP_RAISE(kIo) << "bad magic, expected " << std::string(magic, 4);
}

std::string ReadString(std::istream &is) {
  uint32_t len = ReadU32(is);
  std::string s(len, '\0');
  is.read(s.data(), len);
  if (!is) UGP_RAISE(kIo) << "unexpected end of stream";
  return s;
}

}  // namespace ugp
