// eval/metrics.cc

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

#include "eval/metrics.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "common/error.h"

namespace ugp {
namespace eval {

int Levenshtein(const Seq &a, const Seq &b) {
  const size_t n = a.size(), m = b.size();
  if (n == 0) return static_cast<int>(m);
  if (m == 0) return static_cast<int>(n);
  std::vector<int> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (size_t j = 1; j <= m; ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

PerMatch BestReference(const Seq &pred, const std::vector<Seq> &refs) {
  if (refs.empty()) UGP_RAISE(kDomain) << "empty reference list";
  for (const Seq &r : refs)
    if (r.empty()) UGP_RAISE(kDomain) << "empty reference sequence";
  PerMatch best{Levenshtein(pred, refs[0]), 0};
  for (size_t i = 1; i < refs.size(); ++i) {
    int d = Levenshtein(pred, refs[i]);
    if (d < best.distance) best = {d, static_cast<int>(i)};
  }
  return best;
}

PerMatch PerAccumulator::Add(const Seq &pred, const std::vector<Seq> &refs) {
  PerMatch m = BestReference(pred, refs);
  total_distance_ += m.distance;
  total_ref_len_ += static_cast<int64_t>(refs[m.ref_index].size());
  item_distances_.push_back(m.distance);
  return m;
}

double PerAccumulator::Value() const {
  if (total_ref_len_ == 0) return 0.0;
  return static_cast<double>(total_distance_) /
         static_cast<double>(total_ref_len_);
}

double Wer(const std::vector<Seq> &preds,
           const std::vector<std::vector<Seq>> &refs) {
  if (preds.size() != refs.size() || preds.empty())
    UGP_RAISE(kDomain) << "wer: got " << preds.size() << " predictions and "
                       << refs.size() << " reference sets";
  int64_t misses = 0;
  for (size_t i = 0; i < preds.size(); ++i) {
    bool hit = false;
    for (const Seq &r : refs[i])
      if (preds[i] == r) {
        hit = true;
        break;
      }
    if (!hit) ++misses;
  }
  return static_cast<double>(misses) / static_cast<double>(preds.size());
}

namespace {

double Entropy(const std::map<int, int64_t> &counts, double n) {
  double h = 0.0;
  for (const auto &[label, c] : counts) {
    double p = static_cast<double>(c) / n;
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

}  // namespace

double Nmi(const std::vector<int> &a, const std::vector<int> &b) {
  if (a.size() != b.size() || a.empty())
    UGP_RAISE(kDomain) << "nmi: label sequences of length " << a.size()
                       << " vs " << b.size();
  const double n = static_cast<double>(a.size());
  std::map<int, int64_t> ca, cb;
  std::map<std::pair<int, int>, int64_t> joint;
  for (size_t i = 0; i < a.size(); ++i) {
    ++ca[a[i]];
    ++cb[b[i]];
    ++joint[{a[i], b[i]}];
  }
  double ha = Entropy(ca, n), hb = Entropy(cb, n);
  if (ha == 0.0 && hb == 0.0) return 1.0;  // both single-class
  double mi = 0.0;
  for (const auto &[ab, c] : joint) {
    double pij = static_cast<double>(c) / n;
    double pi = static_cast<double>(ca[ab.first]) / n;
    double qj = static_cast<double>(cb[ab.second]) / n;
    mi += pij * std::log(pij / (pi * qj));
  }
  double nmi = mi / (0.5 * (ha + hb));
  return std::clamp(nmi, 0.0, 1.0);
}

double Purity(const std::vector<int> &clusters, const std::vector<int> &gold) {
  if (clusters.size() != gold.size() || clusters.empty())
    UGP_RAISE(kDomain) << "purity: label sequences of length "
                       << clusters.size() << " vs " << gold.size();
  std::map<int, std::map<int, int64_t>> table;
  for (size_t i = 0; i < clusters.size(); ++i) ++table[clusters[i]][gold[i]];
  int64_t hits = 0;
  for (const auto &[c, row] : table) {
    int64_t best = 0;
    for (const auto &[g, cnt] : row) best = std::max(best, cnt);
    hits += best;
  }
  return static_cast<double>(hits) / static_cast<double>(clusters.size());
}

std::string EvalReport::ToText() const {
  std::ostringstream os;
  os.precision(6);
  os << "per " << per << "\n";
  os << "wer " << wer << "\n";
  os << "n_items " << n_items << "\n";
  for (const auto &[k, v] : extra) os << k << " " << v << "\n";
  return os.str();
}

void EvalReport::WriteKvFile(const std::string &path) const {
  std::ofstream os(path);
  if (!os) UGP_RAISE(kIo) << "cannot write report: " << path;
  os.precision(17);
  os << "per = " << per << "\n";
  os << "wer = " << wer << "\n";
  os << "n_items = " << n_items << "\n";
  for (const auto &[k, v] : extra) os << k << " = " << v << "\n";
}

void EvalReport::WriteItemTsv(const std::string &path) const {
  std::ofstream os(path);
  if (!os) UGP_RAISE(kIo) << "cannot write per-item file: " << path;
  os << "item\tdistance\n";
  for (size_t i = 0; i < per_item_distances.size(); ++i)
    os << i << "\t" << per_item_distances[i] << "\n";
}

}  // namespace eval
}  // namespace ugp
