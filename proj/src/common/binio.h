// common/binio.h

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

#ifndef UGP_COMMON_BINIO_H_
#define UGP_COMMON_BINIO_H_

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ugp {

// Little-endian primitives for the UGPF / UGPK / UGPT containers.

void WriteU8(std::ostream &os, uint8_t v);
void WriteU32(std::ostream &os, uint32_t v);
void WriteU64(std::ostream &os, uint64_t v);
void WriteI64(std::ostream &os, int64_t v);
void WriteF32(std::ostream &os, float v);
void WriteF64(std::ostream &os, double v);
void WriteMagic(std::ostream &os, const char magic[4]);
void WriteString(std::ostream &os, const std::string &s);  // u32 length + bytes

uint8_t ReadU8(std::istream &is);
uint32_t ReadU32(std::istream &is);
uint64_t ReadU64(std::istream &is);
int64_t ReadI64(std::istream &is);
float ReadF32(std::istream &is);
double ReadF64(std::istream &is);
void ExpectMagic(std::istream &is, const char magic[4]);
std::string ReadString(std::istream &is);

}  // namespace ugp

#endif  // UGP_COMMON_BINIO_H_
