// dsp/features.cc

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

#include "dsp/features.h"

#include <cmath>
#include <fstream>

#include "common/binio.h"
#include "common/error.h"

namespace ugp {
namespace dsp {

void FramingConfig::Validate() const {
  if (hop_ms <= 0.0 || hop_ms > frame_length_ms)
    UGP_RAISE(kInvalidArgument) << "framing requires 0 < hop <= frame length";
  if (n_cepstra > n_mel_filters)
    UGP_RAISE(kInvalidArgument) << "n_cepstra " << n_cepstra
                                << " > n_mel_filters " << n_mel_filters;
  if (log_floor <= 0.0) UGP_RAISE(kInvalidArgument) << "log_floor must be > 0";
  if (sample_rate <= 0) UGP_RAISE(kInvalidArgument) << "sample_rate must be > 0";
  if (delta_window < 1) UGP_RAISE(kInvalidArgument) << "delta_window must be >= 1";
}

int FramingConfig::FrameSamples() const {
  return static_cast<int>(std::llround(frame_length_ms * sample_rate / 1000.0));
}

int FramingConfig::HopSamples() const {
  return static_cast<int>(std::llround(hop_ms * sample_rate / 1000.0));
}

double FramingConfig::FrameRateHz() const {
  return static_cast<double>(sample_rate) / HopSamples();
}

int64_t FramingConfig::FrameCount(int64_t n_samples) const {
  const int64_t frame = FrameSamples();
  if (n_samples < frame) return 0;
  return 1 + (n_samples - frame) / HopSamples();
}

Mat AppendDeltas(const Mat &statics, int window) {
  if (window < 1) UGP_RAISE(kInvalidArgument) << "delta window must be >= 1";
  const int64_t t_count = statics.rows();
  const int64_t n = statics.cols();

  double denom = 0.0;
  for (int w = 1; w <= window; ++w) denom += 2.0 * w * w;

  auto deltas = [&](const Mat &src) {
    Mat d(t_count, n);
    for (int64_t t = 0; t < t_count; ++t) {
      for (int64_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int w = 1; w <= window; ++w) {
          int64_t lo = std::max<int64_t>(0, t - w);
          int64_t hi = std::min<int64_t>(t_count - 1, t + w);
          acc += w * (src(hi, j) - src(lo, j));
        }
        d(t, j) = acc / denom;
      }
    }
    return d;
  };

  Mat out(t_count, 3 * n);
  if (t_count == 0) return out;
  Mat d1 = deltas(statics);
  Mat d2 = deltas(d1);
  out.leftCols(n) = statics;
  out.middleCols(n, n) = d1;
  out.rightCols(n) = d2;
  return out;
}

void WriteFeatures(const std::string &path, const FeatureSequence &features) {
  std::ofstream os(path, std::ios::binary);
  if (!os) UGP_RAISE(kIo) << "cannot write feature file: " << path;
  WriteMagic(os, "UGPF");
  WriteU32(os, 1);
  WriteU32(os, static_cast<uint32_t>(features.T()));
  WriteU32(os, static_cast<uint32_t>(features.D()));
  WriteF64(os, features.frame_rate_hz);
  for (int64_t t = 0; t < features.T(); ++t)
    for (int64_t j = 0; j < features.D(); ++j)
      WriteF32(os, static_cast<float>(features.data(t, j)));
  if (!os) UGP_RAISE(kIo) << "write failed: " << path;
}

FeatureSequence ReadFeatures(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) UGP_RAISE(kIo) << "cannot open feature file: " << path;
  ExpectMagic(is, "UGPF");
  uint32_t version = ReadU32(is);
  if (version != 1) UGP_RAISE(kIo) << path << ": unsupported version " << version;
  uint32_t t_count = ReadU32(is);
  uint32_t d = ReadU32(is);
  FeatureSequence out;
  out.frame_rate_hz = ReadF64(is);
  out.data.resize(t_count, d);
  for (uint32_t t = 0; t < t_count; ++t)
    for (uint32_t j = 0; j < d; ++j) out.data(t, j) = ReadF32(is);
  if (out.frame_rate_hz > 0.0) out.source_duration_s = t_count / out.frame_rate_hz;
  return out;
}

}  // namespace dsp
}  // namespace ugp
