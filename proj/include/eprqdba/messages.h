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

#ifndef EPRQDBA_MESSAGES_H
#define EPRQDBA_MESSAGES_H

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "eprqdba/commandvec.h"
#include "eprqdba/config.h"

namespace eprqdba {

/// Three-valued outcome; kAbort is the detectable abort.
enum class Decision : std::uint8_t { kZero = 0, kOne = 1, kAbort = 2 };

inline Decision decision_of(Bit order) { return order ? Decision::kOne : Decision::kZero; }
/// Order carried by a non-abort decision.
inline std::optional<Bit> order_of(Decision d) {
  if (d == Decision::kAbort) {
    return std::nullopt;
  }
  return static_cast<Bit>(d == Decision::kOne);
}
/// "0", "1" or "abort".
const char *decision_name(Decision d);
Decision parse_decision(const std::string &text);

/// Round 1, commander to lieutenant.
struct OrderMsg {
  Bit order = 0;
  CommandVector vector;

  bool operator==(const OrderMsg &) const = default;
};

/// Round 2, lieutenant to lieutenant: preliminary decision plus the vector
/// received from the commander.
struct RelayMsg {
  Decision prelim = Decision::kAbort;
  CommandVector vector;

  bool operator==(const RelayMsg &) const = default;
};

using Payload = std::variant<OrderMsg, RelayMsg>;

struct RoundMessage {
  GeneralId sender = GeneralId::commander();
  GeneralId recipient = GeneralId::lieutenant(0);
  int round = 1;
  Payload payload;

  bool operator==(const RoundMessage &) const = default;
};

/// Canonical text of a payload, e.g. "order=0;vector=uu0100uu".
std::string canonical_payload(const Payload &payload);
/// FNV-1a 64 of the canonical payload as 16 hex digits.
std::string payload_digest(const Payload &payload);
/// Command vector symbols carried by a payload.
std::size_t payload_symbols(const Payload &payload);

}  // namespace eprqdba

#endif  // EPRQDBA_MESSAGES_H
