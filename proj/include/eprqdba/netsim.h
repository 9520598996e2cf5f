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

#ifndef EPRQDBA_NETSIM_H
#define EPRQDBA_NETSIM_H

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "eprqdba/config.h"
#include "eprqdba/messages.h"
#include "eprqdba/trace.h"

namespace eprqdba {

/// Optional fault injection applied at delivery time. Disabled by default.
struct FaultHooks {
  enum class Action { kDeliver, kDrop, kTruncate };
  std::function<Action(const RoundMessage &)> on_deliver;
};

/// Messages delivered at a round boundary, keyed by recipient.
struct AdvanceResult {
  bool run_complete = false;
  int round = 0;
  std::map<GeneralId, std::vector<RoundMessage>> delivered;
};

/// Synchronous round-based message fabric over pairwise authenticated channels.
///
/// Rounds are numbered 1..3. A message sent in round r becomes visible in the
/// recipient's inbox exactly when round r+1 starts. Sender identity is stamped
/// by the fabric. Per channel, delivery preserves send order.
///
/// send() may be called concurrently by different generals within a round;
/// advance_round() is the barrier and must not overlap with send().
class RoundFabric {
 public:
  static constexpr int kRounds = 3;

  RoundFabric(int n, std::string run_id, TraceLog *trace = nullptr, FaultHooks hooks = {});

  int round() const { return round_; }
  bool complete() const { return complete_; }
  int generals() const { return n_; }

  /// Queues a message for the next round boundary and records a send event.
  /// Throws ProtocolViolation after the run completed, in the last round,
  /// or when from == to; UsageError for unknown identities.
  void send(GeneralId from, GeneralId to, Payload payload);

  /// Messages delivered to `who` at the start of the current round.
  const std::vector<RoundMessage> &inbox(GeneralId who) const;

  /// Closes the current round. Before round 3 this delivers every queued
  /// message and opens the next round; from round 3 it completes the run.
  /// Throws ProtocolViolation once the run is complete.
  AdvanceResult advance_round();

 private:
  void require_known(GeneralId id) const;

  int n_;
  std::string run_id_;
  TraceLog *trace_;
  FaultHooks hooks_;
  int round_ = 1;
  bool complete_ = false;
  std::mutex mutex_;
  std::vector<RoundMessage> outbox_;
  std::map<GeneralId, std::vector<RoundMessage>> inboxes_;
};

}  // namespace eprqdba

#endif  // EPRQDBA_NETSIM_H
