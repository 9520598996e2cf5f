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

#include "eprqdba/netsim.h"

#include "eprqdba/errors.h"

namespace eprqdba {

namespace {

const std::vector<RoundMessage> kEmptyInbox;

TraceRecord message_record(const std::string &run_id, int round, TraceKind kind,
                           const RoundMessage &msg) {
  TraceRecord r;
  r.run_id = run_id;
  r.round = round;
  r.kind = kind;
  r.sender = msg.sender.str();
  r.recipient = msg.recipient.str();
  r.digest = payload_digest(msg.payload);
  r.symbols = payload_symbols(msg.payload);
  r.result = std::holds_alternative<OrderMsg>(msg.payload) ? "order" : "relay";
  return r;
}

}  // namespace

RoundFabric::RoundFabric(int n, std::string run_id, TraceLog *trace, FaultHooks hooks)
    : n_(n), run_id_(std::move(run_id)), trace_(trace), hooks_(std::move(hooks)) {
  if (n_ < 2) {
    throw UsageError("a fabric needs at least two generals");
  }
}

void RoundFabric::require_known(GeneralId id) const {
  if (!id.is_commander() && (id.index() < 0 || id.index() > n_ - 2)) {
    throw UsageError("unknown general " + id.str());
  }
}

void RoundFabric::send(GeneralId from, GeneralId to, Payload payload) {
  require_known(from);
  require_known(to);
  if (from == to) {
    throw ProtocolViolation("general " + from.str() + " cannot message itself");
  }
  std::lock_guard lock(mutex_);
  if (complete_) {
    throw ProtocolViolation("send after the run completed");
  }
  if (round_ >= kRounds) {
    throw ProtocolViolation("no messages may be sent in round " + std::to_string(round_));
  }
  RoundMessage msg{from, to, round_, std::move(payload)};
  if (trace_ != nullptr) {
    trace_->append(message_record(run_id_, round_, TraceKind::kSend, msg));
  }
  outbox_.push_back(std::move(msg));
}

const std::vector<RoundMessage> &RoundFabric::inbox(GeneralId who) const {
  auto it = inboxes_.find(who);
  return it == inboxes_.end() ? kEmptyInbox : it->second;
}

AdvanceResult RoundFabric::advance_round() {
  std::lock_guard lock(mutex_);
  if (complete_) {
    throw ProtocolViolation("run already complete");
  }
  AdvanceResult result;
  if (round_ == kRounds) {
    complete_ = true;
    inboxes_.clear();
    result.run_complete = true;
    result.round = round_;
    return result;
  }

  ++round_;
  inboxes_.clear();
  for (auto &msg : outbox_) {
    auto action = hooks_.on_deliver ? hooks_.on_deliver(msg) : FaultHooks::Action::kDeliver;
    if (action == FaultHooks::Action::kDrop) {
      if (trace_ != nullptr) {
        trace_->append(message_record(run_id_, round_, TraceKind::kDrop, msg));
      }
      continue;
    }
    if (action == FaultHooks::Action::kTruncate) {
      std::visit([](auto &p) { p.vector = CommandVector(); }, msg.payload);
    }
    if (trace_ != nullptr) {
      trace_->append(message_record(run_id_, round_, TraceKind::kDeliver, msg));
    }
    inboxes_[msg.recipient].push_back(msg);
  }
  outbox_.clear();
  result.round = round_;
  result.delivered = inboxes_;
  return result;
}

}  // namespace eprqdba
