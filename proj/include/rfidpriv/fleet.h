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

#ifndef RFIDPRIV_FLEET_H_
#define RFIDPRIV_FLEET_H_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rfidpriv/bitstring.h"
#include "rfidpriv/crypto.h"
#include "rfidpriv/rng.h"

namespace rfidpriv {

class AuthorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedSchemeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TagRecord {
  BitString tid;
  BitString kt;
};

// The backend server's view of the fleet: every tag with its secret key, and
// which readers may authenticate which tags.
class ServerDirectory {
 public:
  ServerDirectory() = default;
  ServerDirectory(std::vector<TagRecord> tags, std::vector<BitString> readers,
                  std::map<BitString, std::vector<BitString>> authorizations);

  const std::vector<TagRecord>& tags() const { return tags_; }
  const std::vector<BitString>& readers() const { return readers_; }
  const std::map<BitString, std::vector<BitString>>& authorizations() const {
    return authorizations_;
  }

  const TagRecord* FindTag(const BitString& tid) const;
  bool IsReader(const BitString& rid) const;
  bool IsAuthorized(const BitString& rid, const BitString& tid) const;

  // Adds a tag, optionally authorizing it for every existing reader.
  void AddTag(TagRecord tag, bool authorize_all_readers);
  // Removes `tid` from `rid`'s authorization set; no-op if absent.
  void Deauthorize(const BitString& rid, const BitString& tid);

 private:
  void Validate() const;

  std::vector<TagRecord> tags_;
  std::vector<BitString> readers_;
  std::map<BitString, std::vector<BitString>> authorizations_;
};

struct ProvisionOptions {
  std::size_t n_tags = 1;
  std::size_t n_readers = 1;
  std::size_t bits = kDefaultBits;
  // Tags authorized per reader, drawn at random; 0 means every tag.
  std::size_t tags_per_reader = 0;
};

struct ProvisionedSystem {
  ServerDirectory directory;
  std::vector<BitString> rids;
};

ProvisionedSystem ProvisionSystem(const ProvisionOptions& options, Rng& rng);

// kChunEnc names the encrypted-certificate list variant; it is recognised but
// not implemented.
enum class CertScheme { kTanF, kLeeH, kChunEnc };

std::string_view CertSchemeName(CertScheme scheme);
CertScheme ParseCertScheme(std::string_view name);

struct AccessListEntry {
  BitString tid;
  BitString cert;
};

struct AccessList {
  BitString rid;
  CertScheme scheme = CertScheme::kTanF;
  std::vector<AccessListEntry> entries;
};

// Certification a reader holds for a tag: F(rid || kt) for Tan lists,
// H(rid || kt) for Lee lists.
BitString Certification(CertScheme scheme, const BitString& rid,
                        const BitString& kt);

// The reader-specific list: one entry per authorized tag, in authorization
// order. Throws AuthorizationError for an unknown reader and
// UnsupportedSchemeError for kChunEnc.
AccessList DeriveAccessList(const ServerDirectory& dir, const BitString& rid,
                            CertScheme scheme);

std::optional<BitString> LookupCert(const AccessList& list,
                                    const BitString& tid);

nlohmann::ordered_json DirectoryToJson(const ServerDirectory& dir);
ServerDirectory DirectoryFromJson(const nlohmann::json& j);
nlohmann::ordered_json AccessListToJson(const AccessList& list);
AccessList AccessListFromJson(const nlohmann::json& j);

}  // namespace rfidpriv

#endif  // RFIDPRIV_FLEET_H_
