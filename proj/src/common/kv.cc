// common/kv.cc

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

#include "common/kv.h"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "common/error.h"

namespace ugp {

namespace {

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

KvTree KvTree::ParseFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) UGP_RAISE(kIo) << "cannot open config file: " << path;
  std::ostringstream ss;
  ss << is.rdbuf();
  return ParseString(ss.str());
}

KvTree KvTree::ParseString(const std::string &text) {
  KvTree kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      UGP_RAISE(kIo) << "config line " << lineno << ": missing '='";
    std::string key = Trim(line.substr(0, eq));
    std::string value = Trim(line.substr(eq + 1));
    if (key.empty()) UGP_RAISE(kIo) << "config line " << lineno << ": empty key";
    kv.entries_[key] = value;
  }
  return kv;
}

void KvTree::Set(const std::string &key, const std::string &value) {
  entries_[key] = value;
}

void KvTree::SetInt(const std::string &key, int64_t v) {
  entries_[key] = std::to_string(v);
}

void KvTree::SetDouble(const std::string &key, double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  entries_[key] = os.str();
}

void KvTree::SetBool(const std::string &key, bool v) {
  entries_[key] = v ? "true" : "false";
}

bool KvTree::Has(const std::string &key) const {
  return entries_.count(key) != 0;
}

const std::string &KvTree::GetString(const std::string &key) const {
  auto it = entries_.find(key);
  if (it == entries_.end())
    UGP_RAISE(kInvalidArgument) << "missing config key: " << key;
  return it->second;
}

int64_t KvTree::GetInt(const std::string &key) const {
  const std::string &s = GetString(key);
  errno = 0;
  char *end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end == s.c_str() || *end != '\0')
    UGP_RAISE(kInvalidArgument) << "config key " << key
                                << " is not an integer: '" << s << "'";
  return v;
}

double KvTree::GetDouble(const std::string &key) const {
  const std::string &s = GetString(key);
  errno = 0;
  char *end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end == s.c_str() || *end != '\0')
    UGP_RAISE(kInvalidArgument) << "config key " << key
                                << " is not a number: '" << s << "'";
  return v;
}

bool KvTree::GetBool(const std::string &key) const {
  const std::string &s = GetString(key);
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  UGP_RAISE(kInvalidArgument) << "config key " << key << " is not a bool: '"
                              << s << "'";
}

std::vector<int64_t> KvTree::GetIntList(const std::string &key) const {
  const std::string &s = GetString(key);
  std::vector<int64_t> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    item = Trim(item);
    if (item.empty()) continue;
    errno = 0;
    char *end = nullptr;
    long long v = std::strtoll(item.c_str(), &end, 10);
    if (errno != 0 || end == item.c_str() || *end != '\0')
      UGP_RAISE(kInvalidArgument) << "config key " << key
                                  << " has a non-integer element: '" << item
                                  << "'";
    out.push_back(v);
  }
  if (out.empty())
    UGP_RAISE(kInvalidArgument) << "config key " << key << " is an empty list";
  return out;
}

std::string KvTree::GetStringOr(const std::string &key,
                                const std::string &dflt) const {
  return Has(key) ? GetString(key) : dflt;
}
int64_t KvTree::GetIntOr(const std::string &key, int64_t dflt) const {
  return Has(key) ? GetInt(key) : dflt;
}
double KvTree::GetDoubleOr(const std::string &key, double dflt) const {
  return Has(key) ? GetDouble(key) : dflt;
}
bool KvTree::GetBoolOr(const std::string &key, bool dflt) const {
  return Has(key) ? GetBool(key) : dflt;
}

KvTree KvTree::Subtree(const std::string &prefix) const {
  KvTree out;
  std::string p = prefix + ".";
  for (const auto &[k, v] : entries_)
    if (k.size() > p.size() && k.compare(0, p.size(), p) == 0)
      out.entries_[k.substr(p.size())] = v;
  return out;
}

std::string KvTree::Serialize() const {
  std::ostringstream os;
  for (const auto &[k, v] : entries_) os << k << " = " << v << "\n";
  return os.str();
}

void KvTree::WriteFile(const std::string &path) const {
  std::ofstream os(path);
  if (!os) UGP_RAISE(kIo) << "cannot write config file: " << path;
  os << Serialize();
  if (!os) UGP_RAISE(kIo) << "write failed: " << path;
}

uint64_t KvTree::Hash() const {
  std::string text = Serialize();
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace ugp
