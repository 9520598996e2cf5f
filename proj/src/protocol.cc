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

#include "eprqdba/protocol.h"

#include <algorithm>

#include "eprqdba/errors.h"

namespace eprqdba {

const char *rule_name(Rule rule) {
  switch (rule) {
    case Rule::kKeepUnanimous:
      return "keep-unanimous";
    case Rule::kKeepNoOpposition:
      return "keep-unopposed";
    case Rule::kAbortOnValidOpposing:
      return "abort-valid-opposing";
    case Rule::kKeepOpposingInvalid:
      return "keep-opposing-invalid";
    case Rule::kAdoptSingleSide:
      return "adopt-single-side";
    case Rule::kAbortSingleSideInvalid:
      return "abort-single-side-invalid";
    case Rule::kAdoptOnlyValidSide:
      return "adopt-only-valid-side";
    case Rule::kAbortBothOrNeither:
      return "abort-both-or-neither";
  }
  return "?";
}

const std::set<int> &DecisionSets::of(Decision d) const {
  switch (d) {
    case Decision::kZero:
      return zero;
    case Decision::kOne:
      return one;
    case Decision::kAbort:
      break;
  }
  return abort;
}

DecisionSets classify_decisions(const std::map<int, Decision> &decisions) {
  DecisionSets sets;
  for (const auto &[who, d] : decisions) {
    switch (d) {
      case Decision::kZero:
        sets.zero.insert(who);
        break;
      case Decision::kOne:
        sets.one.insert(who);
        break;
      case Decision::kAbort:
        sets.abort.insert(who);
        break;
    }
  }
  return sets;
}

std::vector<OrderMsg> commander_round1(const Register &a, Bit order) {
  std::vector<OrderMsg> out;
  out.reserve(a.width());
  for (std::size_t i = 0; i < a.width(); ++i) {
    out.push_back(OrderMsg{order, build_command_vector(a, static_cast<int>(i), order)});
  }
  return out;
}

Round2Output lieutenant_round2(LieutenantState &state, const std::optional<OrderMsg> &msg,
                               const TolerancePolicy &policy) {
  Round2Output out;
  state.order_msg = msg;
  const bool shaped = msg && msg->order <= 1 && msg->vector.width() == state.own.width() &&
                      msg->vector.tuples() == state.own.tuples();
  if (!msg) {
    out.missing_order = true;
  }
  if (shaped) {
    state.alice_verdict = check_alice(state.index, msg->order, msg->vector, state.own, policy);
    out.prelim = state.alice_verdict->passed ? decision_of(msg->order) : Decision::kAbort;
  } else {
    out.prelim = Decision::kAbort;
  }
  state.prelim = out.prelim;

  const CommandVector relayed = msg ? msg->vector : CommandVector();
  for (int j = 0; j < static_cast<int>(state.own.width()); ++j) {
    if (j != state.index) {
      out.relays[j] = RelayMsg{out.prelim, relayed};
    }
  }
  return out;
}

void receive_relay(LieutenantState &state, int sender, RelayMsg relay) {
  if (sender == state.index) {
    return;
  }
  const bool shaped =
      relay.vector.width() == state.own.width() && relay.vector.tuples() == state.own.tuples();
  if (!shaped && relay.prelim != Decision::kAbort) {
    relay = RelayMsg{Decision::kAbort, CommandVector()};
  }
  state.relays[sender] = std::move(relay);
}

Decision lieutenant_round3(LieutenantState &state, int lieutenant_count,
                           const TolerancePolicy &policy) {
  const int self = state.index;
  const Decision own = state.prelim.value_or(Decision::kAbort);

  std::map<int, Decision> claims;
  std::map<int, Decision> everyone{{self, own}};
  for (int j = 0; j < lieutenant_count; ++j) {
    if (j == self) {
      continue;
    }
    auto it = state.relays.find(j);
    Decision d = it == state.relays.end() ? Decision::kAbort : it->second.prelim;
    claims[j] = d;
    everyone[j] = d;
  }
  state.round2_sets = classify_decisions(everyone);
  state.observed_checks.clear();

  auto decide = [&](Decision d, Rule r) {
    state.final = d;
    state.rule = r;
    return d;
  };

  if (std::all_of(claims.begin(), claims.end(), [own](const auto &kv) { return kv.second == own; })) {
    return decide(own, Rule::kKeepUnanimous);
  }

  auto senders_claiming = [&](Bit order) {
    std::vector<int> out;
    for (const auto &[j, d] : claims) {
      if (d == decision_of(order)) {
        out.push_back(j);
      }
    }
    return out;
  };

  if (auto held = order_of(own)) {
    const Bit opposite = *held ^ 1;
    const auto opposing = senders_claiming(opposite);
    if (opposing.empty()) {
      return decide(own, Rule::kKeepNoOpposition);
    }
    bool any_valid = false;
    for (int j : opposing) {
      CheckVerdict v = check_lt_with_cv(self, j, opposite, state.relays.at(j).vector,
                                        state.order_msg->vector, policy);
      any_valid = any_valid || v.passed;
      state.observed_checks.push_back({j, opposite, std::move(v)});
    }
    return any_valid ? decide(Decision::kAbort, Rule::kAbortOnValidOpposing)
                     : decide(own, Rule::kKeepOpposingInvalid);
  }

  auto side_valid = [&](Bit order, const std::vector<int> &senders) {
    bool any_valid = false;
    for (int j : senders) {
      CheckVerdict v =
          check_lt_with_bv(self, j, order, state.relays.at(j).vector, state.own, policy);
      any_valid = any_valid || v.passed;
      state.observed_checks.push_back({j, order, std::move(v)});
    }
    return any_valid;
  };

  const auto zero_side = senders_claiming(0);
  const auto one_side = senders_claiming(1);
  if (zero_side.empty() || one_side.empty()) {
    const Bit order = zero_side.empty() ? 1 : 0;
    const bool valid = side_valid(order, zero_side.empty() ? one_side : zero_side);
    return valid ? decide(decision_of(order), Rule::kAdoptSingleSide)
                 : decide(Decision::kAbort, Rule::kAbortSingleSideInvalid);
  }
  const bool valid0 = side_valid(0, zero_side);
  const bool valid1 = side_valid(1, one_side);
  if (valid0 != valid1) {
    return decide(valid0 ? Decision::kZero : Decision::kOne, Rule::kAdoptOnlyValidSide);
  }
  return decide(Decision::kAbort, Rule::kAbortBothOrNeither);
}

DbaVerdict evaluate_dba(const std::map<int, Decision> &finals,
                        const std::map<int, Decision> &prelims, const std::set<int> &loyal,
                        int lieutenant_count, bool commander_loyal, Bit order) {
  if (loyal.empty()) {
    throw UsageError("DBA verdict is undefined without loyal lieutenants");
  }
  auto final_of = [&](int i) {
    auto it = finals.find(i);
    if (it == finals.end()) {
      throw UsageError("no final decision for loyal lieutenant " + std::to_string(i));
    }
    return it->second;
  };

  DbaVerdict v;
  const Decision first = final_of(*loyal.begin());
  v.consistency = std::all_of(loyal.begin(), loyal.end(), [&](int i) { return final_of(i) == first; });

  const Decision target = decision_of(order);
  if (commander_loyal) {
    v.follows_order =
        std::all_of(loyal.begin(), loyal.end(), [&](int i) { return final_of(i) == target; });
    const bool in_range = std::all_of(loyal.begin(), loyal.end(), [&](int i) {
      Decision d = final_of(i);
      return d == target || d == Decision::kAbort;
    });
    const bool all_accepted = std::all_of(loyal.begin(), loyal.end(), [&](int i) {
      auto it = prelims.find(i);
      return it != prelims.end() && it->second == target;
    });
    v.validity = in_range && (!all_accepted || v.follows_order);
  } else {
    v.validity = true;
  }
  v.all_loyal = commander_loyal && static_cast<int>(loyal.size()) == lieutenant_count;
  v.byzantine_agreement = v.all_loyal && v.follows_order;
  return v;
}

}  // namespace eprqdba
