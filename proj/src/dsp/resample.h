// dsp/resample.h

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

#ifndef UGP_DSP_RESAMPLE_H_
#define UGP_DSP_RESAMPLE_H_

#include "dsp/wav.h"

namespace ugp {
namespace dsp {

// Windowed-sinc resampler (Kaiser beta 8, 16 zero-crossings). Output length
// is round(N * target / source). Equal rates return the input unchanged.
Audio Resample(const Audio &in, int target_rate);

}  // namespace dsp
}  // namespace ugp

#endif  // UGP_DSP_RESAMPLE_H_
