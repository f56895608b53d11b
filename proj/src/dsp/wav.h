// dsp/wav.h

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

#ifndef UGP_DSP_WAV_H_
#define UGP_DSP_WAV_H_

#include <string>
#include <vector>

namespace ugp {
namespace dsp {

struct Audio {
  std::vector<double> samples;  // in [-1, 1)
  int sample_rate = 0;
  double DurationSeconds() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

// Mono 16-bit PCM only; anything else is rejected with a clear error.
Audio ReadWav(const std::string &path);
void WriteWav(const std::string &path, const Audio &audio);

}  // namespace dsp
}  // namespace ugp

#endif  // UGP_DSP_WAV_H_
