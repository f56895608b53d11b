// eval/metrics.h

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

#ifndef UGP_EVAL_METRICS_H_
#define UGP_EVAL_METRICS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ugp {
namespace eval {

using Seq = std::vector<int>;

// Unit-cost edit distance (insertions + deletions + substitutions).
int Levenshtein(const Seq &a, const Seq &b);

struct PerMatch {
  int distance;
  int ref_index;  // lowest index among minimum-distance references
};

// Minimum edit distance over multiple reference pronunciations.
// refs must be non-empty and every ref non-empty.
PerMatch BestReference(const Seq &pred, const std::vector<Seq> &refs);

// Micro-averaged corpus PER: total distance over total chosen-reference
// length.
class PerAccumulator {
 public:
  // Returns the per-item match (distance + chosen ref).
  PerMatch Add(const Seq &pred, const std::vector<Seq> &refs);
  double Value() const;
  int64_t total_distance() const { return total_distance_; }
  int64_t total_ref_len() const { return total_ref_len_; }
  const std::vector<int> &item_distances() const { return item_distances_; }

 private:
  int64_t total_distance_ = 0;
  int64_t total_ref_len_ = 0;
  std::vector<int> item_distances_;
};

// Exact-match error rate: fraction of items whose prediction equals none of
// its references.
double Wer(const std::vector<Seq> &preds,
           const std::vector<std::vector<Seq>> &refs);

// Mutual information normalized by the arithmetic mean of entropies.
// Both labelings single-class -> 1 by convention.
double Nmi(const std::vector<int> &a, const std::vector<int> &b);

// Sum over clusters of the majority gold count, over N.
double Purity(const std::vector<int> &clusters, const std::vector<int> &gold);

struct EvalReport {
  double per = 0.0;
  double wer = 0.0;
  int64_t n_items = 0;
  std::vector<int> per_item_distances;
  // Secondary metrics (nmi, purity, gold-mapped rates, ...) keyed by name.
  std::map<std::string, double> extra;

  std::string ToText() const;                    // one line per metric
  void WriteKvFile(const std::string &path) const;
  void WriteItemTsv(const std::string &path) const;
};

}  // namespace eval
}  // namespace ugp

#endif  // UGP_EVAL_METRICS_H_
