// dsp/features.h

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

#ifndef UGP_DSP_FEATURES_H_
#define UGP_DSP_FEATURES_H_

#include <cstdint>
#include <string>

#include "common/mat.h"

namespace ugp {
namespace dsp {

struct FramingConfig {
  double frame_length_ms = 25.0;
  double hop_ms = 10.0;
  double pre_emphasis = 0.97;
  int n_mel_filters = 26;
  int n_cepstra = 13;
  double log_floor = 1e-10;
  int sample_rate = 16000;
  int delta_window = 2;

  void Validate() const;
  int FrameSamples() const;
  int HopSamples() const;
  double FrameRateHz() const;
  // 1 + floor((N - frame) / hop) for N >= frame, else 0.
  int64_t FrameCount(int64_t n_samples) const;
};

// T x D matrix of per-frame features; houses one utterance's sequence.
struct FeatureSequence {
  Mat data;                    // T rows, D cols
  double frame_rate_hz = 0.0;
  double source_duration_s = 0.0;

  int64_t T() const { return data.rows(); }
  int64_t D() const { return data.cols(); }
};

// Delta/acceleration append: T x n -> T x 3n via regression over
// +/- window frames with edge replication.
Mat AppendDeltas(const Mat &statics, int window);

// Binary feature dump: magic "UGPF", version u32, T u32, D u32,
// frame_rate f64, then T*D little-endian f32 row-major.
void WriteFeatures(const std::string &path, const FeatureSequence &features);
FeatureSequence ReadFeatures(const std::string &path);

}  // namespace dsp
}  // namespace ugp

#endif  // UGP_DSP_FEATURES_H_
