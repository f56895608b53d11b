// common/kv.h

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

#ifndef UGP_COMMON_KV_H_
#define UGP_COMMON_KV_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ugp {

// Flat key-value store with dotted keys forming a tree ("dsp.hop_ms").
// The on-disk form is one "key = value" per line with '#' comments; keys are
// kept sorted so serialization is canonical and hashable.
class KvTree {
 public:
  KvTree() = default;

  static KvTree ParseFile(const std::string &path);
  static KvTree ParseString(const std::string &text);

  void Set(const std::string &key, const std::string &value);
  void SetInt(const std::string &key, int64_t v);
  void SetDouble(const std::string &key, double v);
  void SetBool(const std::string &key, bool v);

  bool Has(const std::string &key) const;
  // Getters throw kInvalidArgument when the key is missing or malformed.
  const std::string &GetString(const std::string &key) const;
  int64_t GetInt(const std::string &key) const;
  double GetDouble(const std::string &key) const;
  bool GetBool(const std::string &key) const;
  std::vector<int64_t> GetIntList(const std::string &key) const;  // comma-separated

  std::string GetStringOr(const std::string &key, const std::string &dflt) const;
  int64_t GetIntOr(const std::string &key, int64_t dflt) const;
  double GetDoubleOr(const std::string &key, double dflt) const;
  bool GetBoolOr(const std::string &key, bool dflt) const;

  // All entries whose key starts with `prefix` + '.', with the prefix
  // stripped.
  KvTree Subtree(const std::string &prefix) const;

  // Canonical text form: sorted "key = value" lines.
  std::string Serialize() const;
  void WriteFile(const std::string &path) const;

  // FNV-1a over the canonical serialization; stable cache key.
  uint64_t Hash() const;

  const std::map<std::string, std::string> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace ugp

#endif  // UGP_COMMON_KV_H_
