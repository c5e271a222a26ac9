//
// Copyright 2026 The rfidpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "rfidpriv/fleet.h"

#include <algorithm>
#include <set>

namespace rfidpriv {
namespace {

BitString DistinctDraw(Rng& rng, std::size_t bits, std::set<BitString>& seen) {
  for (;;) {
    BitString v = rng.Bits(bits);
    if (seen.insert(v).second) return v;
  }
}

BitString Hex(const nlohmann::json& j) {
  return BitString::FromHex(j.get<std::string>());
}

}  // namespace

ServerDirectory::ServerDirectory(
    std::vector<TagRecord> tags, std::vector<BitString> readers,
    std::map<BitString, std::vector<BitString>> authorizations)
    : tags_(std::move(tags)),
      readers_(std::move(readers)),
      authorizations_(std::move(authorizations)) {
  Validate();
}

void ServerDirectory::Validate() const {
  std::set<BitString> tids;
  for (const TagRecord& t : tags_) {
    if (!tids.insert(t.tid).second) {
      throw std::invalid_argument("duplicate TID " + t.tid.ToHex());
    }
  }
  for (const auto& [rid, allowed] : authorizations_) {
    if (!IsReader(rid)) {
      throw std::invalid_argument("authorization for unknown reader " +
                                  rid.ToHex());
    }
    for (const BitString& tid : allowed) {
      if (tids.count(tid) == 0) {
        throw std::invalid_argument("authorized TID " + tid.ToHex() +
                                    " is not in the directory");
      }
    }
  }
}

const TagRecord* ServerDirectory::FindTag(const BitString& tid) const {
  for (const TagRecord& t : tags_) {
    if (t.tid.SameAs(tid)) return &t;
  }
  return nullptr;
}

bool ServerDirectory::IsReader(const BitString& rid) const {
  return std::any_of(readers_.begin(), readers_.end(),
                     [&](const BitString& r) { return r.SameAs(rid); });
}

bool ServerDirectory::IsAuthorized(const BitString& rid,
                                   const BitString& tid) const {
  auto it = authorizations_.find(rid);
  if (it == authorizations_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const BitString& t) { return t.SameAs(tid); });
}

void ServerDirectory::AddTag(TagRecord tag, bool authorize_all_readers) {
  if (FindTag(tag.tid) != nullptr) {
    throw std::invalid_argument("duplicate TID " + tag.tid.ToHex());
  }
  if (authorize_all_readers) {
    for (const BitString& rid : readers_) {
      authorizations_[rid].push_back(tag.tid);
    }
  }
  tags_.push_back(std::move(tag));
}

void ServerDirectory::Deauthorize(const BitString& rid, const BitString& tid) {
  auto it = authorizations_.find(rid);
  if (it == authorizations_.end()) return;
  std::erase_if(it->second, [&](const BitString& t) { return t.SameAs(tid); });
}

ProvisionedSystem ProvisionSystem(const ProvisionOptions& options, Rng& rng) {
  if (options.n_tags == 0 || options.n_readers == 0) {
    throw std::invalid_argument("provisioning needs at least one tag and reader");
  }
  if (options.bits % 8 != 0 || options.bits == 0 ||
      options.bits > kMaxHashBits) {
    throw WidthError("identity width must be a positive multiple of 8 up to 256");
  }
  std::set<BitString> seen_tids;
  std::vector<TagRecord> tags;
  tags.reserve(options.n_tags);
  for (std::size_t i = 0; i < options.n_tags; ++i) {
    BitString tid = DistinctDraw(rng, options.bits, seen_tids);
    BitString kt = rng.Bits(options.bits);
    tags.push_back({std::move(tid), std::move(kt)});
  }

  std::set<BitString> seen_rids;
  std::vector<BitString> rids;
  std::map<BitString, std::vector<BitString>> auth;
  for (std::size_t r = 0; r < options.n_readers; ++r) {
    BitString rid = DistinctDraw(rng, options.bits, seen_rids);
    std::vector<BitString> allowed;
    if (options.tags_per_reader == 0 ||
        options.tags_per_reader >= options.n_tags) {
      for (const TagRecord& t : tags) allowed.push_back(t.tid);
    } else {
      std::vector<std::size_t> order(options.n_tags);
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      rng.Shuffle(order);
      order.resize(options.tags_per_reader);
      std::sort(order.begin(), order.end());
      for (std::size_t i : order) allowed.push_back(tags[i].tid);
    }
    auth.emplace(rid, std::move(allowed));
    rids.push_back(std::move(rid));
  }
  return {ServerDirectory(std::move(tags), rids, std::move(auth)), rids};
}

std::string_view CertSchemeName(CertScheme scheme) {
  switch (scheme) {
    case CertScheme::kTanF:
      return "tan-f";
    case CertScheme::kLeeH:
      return "lee-h";
    case CertScheme::kChunEnc:
      return "chun-enc";
  }
  return "?";
}

CertScheme ParseCertScheme(std::string_view name) {
  if (name == "tan-f") return CertScheme::kTanF;
  if (name == "lee-h") return CertScheme::kLeeH;
  if (name == "chun-enc") return CertScheme::kChunEnc;
  throw std::invalid_argument("unknown certification scheme '" +
                              std::string(name) + "'");
}

BitString Certification(CertScheme scheme, const BitString& rid,
                        const BitString& kt) {
  switch (scheme) {
    case CertScheme::kTanF:
      return HashFields(HashLabel::kF, {rid, kt}, rid.width());
    case CertScheme::kLeeH:
      return HashFields(HashLabel::kH, {rid, kt}, rid.width());
    case CertScheme::kChunEnc:
      break;
  }
  throw UnsupportedSchemeError(
      "the encrypted-certificate access list is not implemented");
}

AccessList DeriveAccessList(const ServerDirectory& dir, const BitString& rid,
                            CertScheme scheme) {
  if (scheme == CertScheme::kChunEnc) {
    throw UnsupportedSchemeError(
        "the encrypted-certificate access list is not implemented");
  }
  if (!dir.IsReader(rid)) {
    throw AuthorizationError("reader " + rid.ToHex() + " is not registered");
  }
  AccessList list{rid, scheme, {}};
  auto it = dir.authorizations().find(rid);
  if (it == dir.authorizations().end()) return list;
  for (const BitString& tid : it->second) {
    const TagRecord* tag = dir.FindTag(tid);
    list.entries.push_back({tid, Certification(scheme, rid, tag->kt)});
  }
  return list;
}

std::optional<BitString> LookupCert(const AccessList& list,
                                    const BitString& tid) {
  for (const AccessListEntry& e : list.entries) {
    if (e.tid.SameAs(tid)) return e.cert;
  }
  return std::nullopt;
}

nlohmann::ordered_json DirectoryToJson(const ServerDirectory& dir) {
  nlohmann::ordered_json j;
  j["tags"] = nlohmann::ordered_json::array();
  for (const TagRecord& t : dir.tags()) {
    j["tags"].push_back({{"tid", t.tid.ToHex()}, {"kt", t.kt.ToHex()}});
  }
  j["readers"] = nlohmann::ordered_json::array();
  for (const BitString& r : dir.readers()) j["readers"].push_back(r.ToHex());
  j["auth"] = nlohmann::ordered_json::object();
  // Reader order, not map order, so the file follows the readers list.
  for (const BitString& r : dir.readers()) {
    auto& tids = j["auth"][r.ToHex()] = nlohmann::ordered_json::array();
    auto it = dir.authorizations().find(r);
    if (it == dir.authorizations().end()) continue;
    for (const BitString& tid : it->second) tids.push_back(tid.ToHex());
  }
  return j;
}

ServerDirectory DirectoryFromJson(const nlohmann::json& j) {
  std::vector<TagRecord> tags;
  for (const auto& t : j.at("tags")) {
    tags.push_back({Hex(t.at("tid")), Hex(t.at("kt"))});
  }
  std::vector<BitString> readers;
  for (const auto& r : j.at("readers")) readers.push_back(Hex(r));
  std::map<BitString, std::vector<BitString>> auth;
  for (const auto& [rid, tids] : j.at("auth").items()) {
    auto& allowed = auth[BitString::FromHex(rid)];
    for (const auto& tid : tids) allowed.push_back(Hex(tid));
  }
  return ServerDirectory(std::move(tags), std::move(readers), std::move(auth));
}

nlohmann::ordered_json AccessListToJson(const AccessList& list) {
  nlohmann::ordered_json j;
  j["rid"] = list.rid.ToHex();
  j["scheme"] = std::string(CertSchemeName(list.scheme));
  j["entries"] = nlohmann::ordered_json::array();
  for (const AccessListEntry& e : list.entries) {
    j["entries"].push_back({{"tid", e.tid.ToHex()}, {"cert", e.cert.ToHex()}});
  }
  return j;
}

AccessList AccessListFromJson(const nlohmann::json& j) {
  AccessList list;
  list.rid = Hex(j.at("rid"));
  list.scheme = ParseCertScheme(j.at("scheme").get<std::string>());
  for (const auto& e : j.at("entries")) {
    list.entries.push_back({Hex(e.at("tid")), Hex(e.at("cert"))});
  }
  return list;
}

}  // namespace rfidpriv
