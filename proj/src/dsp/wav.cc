// dsp/wav.cc

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

#include "dsp/wav.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "common/binio.h"
#include "common/error.h"

namespace ugp {
namespace dsp {

Audio ReadWav(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) UGP_RAISE(kIo) << "cannot open wav file: " << path;

  ExpectMagic(is, "RIFF");
  (void)ReadU32(is);  // riff chunk size
  ExpectMagic(is, "WAVE");

  uint16_t audio_format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  bool have_fmt = false;
  Audio out;

  // Walk chunks; "fmt " must precede "data".
  while (is.peek() != EOF) {
    char id[4];
    is.read(id, 4);
    if (!is) break;
    uint32_t size = ReadU32(is);
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (size < 16) UGP_RAISE(kIo) << path << ": malformed fmt chunk";
      char buf[16];
      is.read(buf, 16);
      if (!is) UGP_RAISE(kIo) << path << ": truncated fmt chunk";
      auto u16 = [&](int off) {
        return static_cast<uint16_t>(
            static_cast<unsigned char>(buf[off]) |
            (static_cast<unsigned char>(buf[off + 1]) << 8));
      };
      auto u32 = [&](int off) {
        return static_cast<uint32_t>(u16(off)) |
               (static_cast<uint32_t>(u16(off + 2)) << 16);
      };
      audio_format = u16(0);
      channels = u16(2);
      sample_rate = u32(4);
      bits = u16(14);
      if (size > 16) is.seekg(size - 16, std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      if (!have_fmt) UGP_RAISE(kIo) << path << ": data chunk before fmt";
      if (audio_format != 1 || bits != 16)
        UGP_RAISE(kIo) << path << ": only 16-bit PCM WAV is supported (format "
                       << audio_format << ", " << bits << " bits)";
      if (channels != 1)
        UGP_RAISE(kIo) << path << ": only mono WAV is supported (got "
                       << channels << " channels)";
      size_t n = size / 2;
      std::vector<char> raw(size);
      is.read(raw.data(), size);
      if (!is) UGP_RAISE(kIo) << path << ": truncated data chunk";
      out.samples.resize(n);
      for (size_t i = 0; i < n; ++i) {
        int16_t s = static_cast<int16_t>(
            static_cast<unsigned char>(raw[2 * i]) |
            (static_cast<unsigned char>(raw[2 * i + 1]) << 8));
        out.samples[i] = static_cast<double>(s) / 32768.0;
      }
      out.sample_rate = static_cast<int>(sample_rate);
      return out;
    } else {
      // skip unknown chunk (padded to even size)
      is.seekg(size + (size & 1), std::ios::cur);
    }
  }
  UGP_RAISE(kIo) << path << ": no data chunk found";
}

void WriteWav(const std::string &path, const Audio &audio) {
  if (audio.sample_rate <= 0)
    UGP_RAISE(kInvalidArgument) << "wav sample rate must be positive";
  std::ofstream os(path, std::ios::binary);
  if (!os) UGP_RAISE(kIo) << "cannot write wav file: " << path;

  const uint32_t n = static_cast<uint32_t>(audio.samples.size());
  const uint32_t data_bytes = n * 2;
  WriteMagic(os, "RIFF");
  WriteU32(os, 36 + data_bytes);
  WriteMagic(os, "WAVE");
  WriteMagic(os, "fmt ");
  WriteU32(os, 16);
  WriteU32(os, 1u | (1u << 16));  // PCM, mono
  WriteU32(os, static_cast<uint32_t>(audio.sample_rate));
  WriteU32(os, static_cast<uint32_t>(audio.sample_rate * 2));  // byte rate
  WriteU32(os, 2u | (16u << 16));  // block align, bits per sample
  WriteMagic(os, "data");
  WriteU32(os, data_bytes);
  for (double v : audio.samples) {
    double scaled = std::round(v * 32768.0);
    scaled = std::clamp(scaled, -32768.0, 32767.0);
    int16_t s = static_cast<int16_t>(scaled);
    WriteU8(os, static_cast<uint8_t>(s & 0xff));
    WriteU8(os, static_cast<uint8_t>((s >> 8) & 0xff));
  }
  if (!os) UGP_RAISE(kIo) << "write failed: " << path;
}

}  // namespace dsp
}  // namespace ugp
