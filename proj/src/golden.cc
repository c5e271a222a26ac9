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

#include "rfidpriv/golden.h"

#include "rfidpriv/crypto.h"

namespace rfidpriv {
namespace {

HashLabel ParseLabel(const std::string& s) {
  if (s == "H") return HashLabel::kH;
  if (s == "F") return HashLabel::kF;
  throw std::invalid_argument("unknown hash label '" + s + "'");
}

BitString HexField(const nlohmann::json& v, const char* key) {
  return BitString::FromHex(v.at(key).get<std::string>());
}

}  // namespace

GoldenReport CheckGoldenVectors(const nlohmann::json& doc) {
  GoldenReport report;
  const std::size_t bits = doc.value("bits", kDefaultBits);
  const auto none = nlohmann::json::array();

  for (const auto& v : doc.value("vectors", none)) {
    const BitString input = HexField(v, "input-hex");
    const std::string want = v.at("output-hex").get<std::string>();
    const std::string label = v.at("label").get<std::string>();
    const std::string got = Hash(ParseLabel(label), input.bytes(), bits).ToHex();
    ++report.checked;
    if (got != want) {
      report.failures.push_back("hash " + label + "(" + input.ToHex() +
                                "): got " + got + ", want " + want);
    }
  }

  for (const auto& v : doc.value("truncate", none)) {
    const BitString input = HexField(v, "input-hex");
    const std::size_t m = v.at("m").get<std::size_t>();
    const std::string want = v.at("output-hex").get<std::string>();
    const std::string got =
        TruncateLeft(Hash(ParseLabel(v.at("label").get<std::string>()),
                          input.bytes(), bits),
                     m)
            .ToHex();
    ++report.checked;
    if (got != want) {
      report.failures.push_back("truncate m=" + std::to_string(m) + ": got " +
                                got + ", want " + want);
    }
  }

  for (const auto& v : doc.value("concat", none)) {
    std::vector<BitString> fields;
    for (const auto& f : v.at("fields")) {
      fields.push_back(BitString::FromHex(f.get<std::string>()));
    }
    const std::string want = v.at("output-hex").get<std::string>();
    const auto encoded = Concat(fields);
    const std::string got =
        encoded.empty() ? "" : BitString::FromBytes(encoded).ToHex();
    ++report.checked;
    if (got != want) {
      report.failures.push_back("concat of " + std::to_string(fields.size()) +
                                " fields: got " + got + ", want " + want);
    }
  }
  return report;
}

}  // namespace rfidpriv
