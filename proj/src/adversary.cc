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

#include "eprqdba/adversary.h"

#include "eprqdba/errors.h"
#include "eprqdba/protocol.h"

namespace eprqdba {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

CommandVector random_valid_vector(std::size_t width, std::size_t tuples, int i_self, Bit target,
                                  Rng &rng) {
  CommandVector v = CommandVector::uncertain(width, tuples);
  for (std::size_t k = 0; k < tuples; ++k) {
    if (!rng.bit()) {
      continue;
    }
    for (std::size_t p = 0; p < width; ++p) {
      v.set_symbol(k, p,
                   static_cast<int>(p) == i_self ? trit_of(target) : trit_of(rng.bit()));
    }
  }
  v.set_meta(VectorMeta{target, i_self});
  return v;
}

std::vector<RoundMessage> relay_to_all(const LieutenantView &view, Decision claim,
                                       const CommandVector &vector) {
  std::vector<RoundMessage> out;
  for (int j = 0; j < view.lieutenant_count; ++j) {
    if (j != view.index) {
      out.push_back(RoundMessage{GeneralId::lieutenant(view.index), GeneralId::lieutenant(j), 2,
                                 RelayMsg{claim, vector}});
    }
  }
  return out;
}

std::vector<RoundMessage> orders_to_all(const std::vector<OrderMsg> &orders) {
  std::vector<RoundMessage> out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    out.push_back(RoundMessage{GeneralId::commander(), GeneralId::lieutenant(static_cast<int>(i)),
                               1, orders[i]});
  }
  return out;
}

}  // namespace

std::string strategy_name(const Strategy &strategy) {
  return std::visit(Overloaded{
                        [](const HonestBehavior &) { return "honest"; },
                        [](const EquivocatingCommander &) { return "equivocating"; },
                        [](const GarbageVectorCommander &) { return "garbage"; },
                        [](const MixedCommander &) { return "mixed"; },
                        [](const RandomFillForger &) { return "forger"; },
                        [](const DecisionLiar &) { return "liar"; },
                        [](const SilentTraitor &) { return "silent"; },
                    },
                    strategy);
}

bool is_honest(const Strategy &strategy) {
  return std::holds_alternative<HonestBehavior>(strategy);
}

bool is_commander_strategy(const Strategy &strategy) {
  return std::holds_alternative<HonestBehavior>(strategy) ||
         std::holds_alternative<EquivocatingCommander>(strategy) ||
         std::holds_alternative<GarbageVectorCommander>(strategy) ||
         std::holds_alternative<MixedCommander>(strategy) ||
         std::holds_alternative<SilentTraitor>(strategy);
}

bool is_lieutenant_strategy(const Strategy &strategy) {
  return std::holds_alternative<HonestBehavior>(strategy) ||
         std::holds_alternative<RandomFillForger>(strategy) ||
         std::holds_alternative<DecisionLiar>(strategy) ||
         std::holds_alternative<SilentTraitor>(strategy);
}

void PooledKnowledge::learn_register(const Register &a) {
  for (std::size_t p = 0; p < a.size() && p < bits.size(); ++p) {
    bits[p] = static_cast<std::int8_t>(a[p]);
  }
}

void PooledKnowledge::learn_vector(const CommandVector &v) {
  for (std::size_t p = 0; p < v.size() && p < bits.size(); ++p) {
    if (v[p] != Trit::kUncertain) {
      bits[p] = static_cast<std::int8_t>(v[p] == Trit::kOne);
    }
  }
}

void PooledKnowledge::learn_lieutenant(const Register &l, int index) {
  for (std::size_t k = 0; k < l.tuples(); ++k) {
    const std::size_t p = k * l.width() + static_cast<std::size_t>(index);
    if (p < bits.size()) {
      bits[p] = static_cast<std::int8_t>(l[p] ^ 1);
    }
  }
}

CommandVector forge_opposite_vector(const OrderMsg &own_msg, const Register &own_register,
                                    int i_self, Bit target, Rng &rng, ForgeryFill fill,
                                    const PooledKnowledge *pool) {
  if (own_msg.order == target) {
    throw UsageError("forgery target equals the received order");
  }
  const std::size_t width = own_register.width();
  const std::size_t tuples = own_register.tuples();
  const CommandVector &received = own_msg.vector;
  const bool usable = received.width() == width && received.tuples() == tuples &&
                      is_structurally_valid(received, i_self, own_msg.order);
  if (!usable) {
    return random_valid_vector(width, tuples, i_self, target, rng);
  }

  std::vector<std::size_t> revealed;
  for (std::size_t k = 0; k < tuples; ++k) {
    if (received.is_uncertain(k)) {
      revealed.push_back(k);
    }
  }

  CommandVector out = CommandVector::uncertain(width, tuples);
  for (std::size_t k : revealed) {
    out.set_symbol(k, static_cast<std::size_t>(i_self), trit_of(target));
  }
  for (std::size_t p = 0; p < width; ++p) {
    if (static_cast<int>(p) == i_self) {
      continue;
    }
    std::vector<std::size_t> unknown;
    for (std::size_t k : revealed) {
      const std::size_t pos = k * width + p;
      if (pool != nullptr && pos < pool->bits.size() && pool->bits[pos] >= 0) {
        out.set_symbol(k, p, trit_of(static_cast<Bit>(pool->bits[pos])));
      } else {
        unknown.push_back(k);
      }
    }
    if (fill == ForgeryFill::kUniform) {
      for (std::size_t k : unknown) {
        out.set_symbol(k, p, trit_of(rng.bit()));
      }
    } else {
      // Partial Fisher-Yates: the first half of `unknown` after shuffling holds 0.
      const std::size_t zeros = unknown.size() / 2;
      for (std::size_t s = 0; s < zeros; ++s) {
        std::size_t pick = s + rng.below(unknown.size() - s);
        std::swap(unknown[s], unknown[pick]);
      }
      for (std::size_t s = 0; s < unknown.size(); ++s) {
        out.set_symbol(unknown[s], p, s < zeros ? Trit::kZero : Trit::kOne);
      }
    }
  }
  out.set_meta(VectorMeta{target, i_self});
  return out;
}

CommandVector corrupt_command_vector(const Register &a, int i, Bit c, double rate, Rng &rng) {
  CommandVector v = build_command_vector(a, i, c);
  const auto place = static_cast<std::size_t>(i);
  auto false_reveal = [&](std::size_t k) {
    for (std::size_t p = 0; p < a.width(); ++p) {
      v.set_symbol(k, p, p == place ? trit_of(c) : trit_of(a.at(k, p)));
    }
  };

  bool lied = false;
  std::vector<std::size_t> uncertain;
  std::vector<std::size_t> definite;
  for (std::size_t k = 0; k < a.tuples(); ++k) {
    const bool was_uncertain = v.is_uncertain(k);
    (was_uncertain ? uncertain : definite).push_back(k);
    if (!rng.bernoulli(rate)) {
      continue;
    }
    if (was_uncertain) {
      false_reveal(k);
      lied = true;
    } else {
      v.set_tuple_uncertain(k);
    }
  }
  if (!lied) {
    if (!uncertain.empty()) {
      false_reveal(uncertain[rng.below(uncertain.size())]);
    } else {
      const std::size_t k = definite[rng.below(definite.size())];
      v.set_symbol(k, place, trit_of(c ^ 1));
    }
  }
  return v;
}

std::vector<RoundMessage> apply_strategy(const Strategy &strategy, const RoleContext &context,
                                         int round, Rng &rng) {
  if (const auto *cmd = std::get_if<CommanderView>(&context)) {
    if (!is_commander_strategy(strategy)) {
      throw UsageError("strategy '" + strategy_name(strategy) + "' cannot be played by the commander");
    }
    if (round != 1) {
      return {};
    }
    const Register &a = cmd->a;
    const auto width = static_cast<int>(a.width());
    return std::visit(
        Overloaded{
            [&](const HonestBehavior &) { return orders_to_all(commander_round1(a, cmd->order)); },
            [&](const EquivocatingCommander &s) {
              std::vector<OrderMsg> orders;
              for (int i = 0; i < width; ++i) {
                auto it = s.orders.find(i);
                Bit order = it == s.orders.end() ? cmd->order : it->second;
                orders.push_back(OrderMsg{order, build_command_vector(a, i, order)});
              }
              return orders_to_all(orders);
            },
            [&](const GarbageVectorCommander &s) {
              std::vector<OrderMsg> orders;
              for (int i = 0; i < width; ++i) {
                orders.push_back(OrderMsg{
                    cmd->order, corrupt_command_vector(a, i, cmd->order, s.corruption_rate, rng)});
              }
              return orders_to_all(orders);
            },
            [&](const MixedCommander &s) {
              std::vector<OrderMsg> orders;
              for (int i = 0; i < width; ++i) {
                orders.push_back(OrderMsg{
                    cmd->order, s.consistent.contains(i)
                                    ? build_command_vector(a, i, cmd->order)
                                    : corrupt_command_vector(a, i, cmd->order,
                                                             s.corruption_rate, rng)});
              }
              return orders_to_all(orders);
            },
            [&](const auto &) { return std::vector<RoundMessage>{}; },
        },
        strategy);
  }

  const auto &view = std::get<LieutenantView>(context);
  if (!is_lieutenant_strategy(strategy)) {
    throw UsageError("strategy '" + strategy_name(strategy) + "' cannot be played by a lieutenant");
  }
  if (round != 2) {
    return {};
  }
  const CommandVector received = view.received ? view.received->vector : CommandVector();
  return std::visit(
      Overloaded{
          [&](const HonestBehavior &) { return relay_to_all(view, view.honest_prelim, received); },
          [&](const RandomFillForger &s) {
            const Decision claim = decision_of(s.target);
            if (!view.received) {
              return relay_to_all(view, claim,
                                  random_valid_vector(view.own.width(), view.own.tuples(),
                                                      view.index, s.target, rng));
            }
            if (view.received->order == s.target) {
              return relay_to_all(view, claim, received);
            }
            return relay_to_all(view, claim,
                                forge_opposite_vector(*view.received, view.own, view.index,
                                                      s.target, rng, s.fill, view.pool));
          },
          [&](const DecisionLiar &s) { return relay_to_all(view, s.claimed, received); },
          [&](const auto &) { return std::vector<RoundMessage>{}; },
      },
      strategy);
}

}  // namespace eprqdba
