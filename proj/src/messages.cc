// Copyright 2026 The EPRQDBA Authors
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

#include "eprqdba/messages.h"

#include <cstdio>

#include "eprqdba/errors.h"

namespace eprqdba {

const char *decision_name(Decision d) {
  switch (d) {
    case Decision::kZero:
      return "0";
    case Decision::kOne:
      return "1";
    case Decision::kAbort:
      return "abort";
  }
  return "?";
}

Decision parse_decision(const std::string &text) {
  if (text == "0") {
    return Decision::kZero;
  }
  if (text == "1") {
    return Decision::kOne;
  }
  if (text == "abort" || text == "bottom") {
    return Decision::kAbort;
  }
  throw ValidationError("not a decision: '" + text + "'");
}

std::string canonical_payload(const Payload &payload) {
  if (const auto *order = std::get_if<OrderMsg>(&payload)) {
    return "order=" + std::to_string(order->order) + ";vector=" + order->vector.to_string();
  }
  const auto &relay = std::get<RelayMsg>(payload);
  return std::string("prelim=") + decision_name(relay.prelim) +
         ";vector=" + relay.vector.to_string();
}

std::string payload_digest(const Payload &payload) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_payload(payload)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::size_t payload_symbols(const Payload &payload) {
  return std::visit([](const auto &msg) { return msg.vector.size(); }, payload);
}

}  // namespace eprqdba
