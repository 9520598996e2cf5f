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

#include "eprqdba/commandvec.h"

#include <algorithm>
#include <iterator>

#include "eprqdba/errors.h"

namespace eprqdba {

namespace {

void require_place(const CommandVector &v, int place) {
  if (place < 0 || static_cast<std::size_t>(place) >= v.width()) {
    throw UsageError("place " + std::to_string(place) + " outside tuple width " +
                     std::to_string(v.width()));
  }
}

}  // namespace

char trit_char(Trit t) {
  switch (t) {
    case Trit::kZero:
      return '0';
    case Trit::kOne:
      return '1';
    case Trit::kUncertain:
      return 'u';
  }
  return '?';
}

CommandVector::CommandVector(std::size_t width, std::size_t tuples, std::vector<Trit> symbols,
                             std::optional<VectorMeta> meta)
    : width_(width), tuples_(tuples), symbols_(std::move(symbols)), meta_(meta) {
  if (symbols_.size() != width_ * tuples_) {
    throw ValidationError("command vector length " + std::to_string(symbols_.size()) +
                          " is not " + std::to_string(width_) + " x " + std::to_string(tuples_));
  }
  for (Trit t : symbols_) {
    if (static_cast<std::uint8_t>(t) > 2) {
      throw ValidationError("command vector symbol out of range");
    }
  }
}

CommandVector CommandVector::uncertain(std::size_t width, std::size_t tuples) {
  return CommandVector(width, tuples, std::vector<Trit>(width * tuples, Trit::kUncertain));
}

CommandVector CommandVector::from_register(const Register &reg) {
  std::vector<Trit> symbols(reg.size());
  for (std::size_t p = 0; p < reg.size(); ++p) {
    symbols[p] = trit_of(reg[p]);
  }
  return CommandVector(reg.width(), reg.tuples(), std::move(symbols));
}

bool CommandVector::is_definite(std::size_t k) const {
  auto t = tuple(k);
  return std::none_of(t.begin(), t.end(), [](Trit s) { return s == Trit::kUncertain; });
}

bool CommandVector::is_uncertain(std::size_t k) const {
  auto t = tuple(k);
  return std::all_of(t.begin(), t.end(), [](Trit s) { return s == Trit::kUncertain; });
}

std::size_t CommandVector::uncertain_tuples() const {
  std::size_t count = 0;
  for (std::size_t k = 0; k < tuples_; ++k) {
    count += is_uncertain(k);
  }
  return count;
}

void CommandVector::set_tuple_uncertain(std::size_t k) {
  std::fill_n(symbols_.begin() + static_cast<std::ptrdiff_t>(k * width_), width_,
              Trit::kUncertain);
}

std::string CommandVector::to_string() const {
  std::string out(symbols_.size(), 'u');
  for (std::size_t p = 0; p < symbols_.size(); ++p) {
    out[symbols_.size() - 1 - p] = trit_char(symbols_[p]);
  }
  return out;
}

CommandVector CommandVector::from_string(std::size_t width, const std::string &text) {
  if (width == 0 || text.size() % width != 0) {
    throw ValidationError("command vector text length is not a multiple of the tuple width");
  }
  std::vector<Trit> symbols(text.size());
  for (std::size_t s = 0; s < text.size(); ++s) {
    Trit t;
    switch (text[s]) {
      case '0':
        t = Trit::kZero;
        break;
      case '1':
        t = Trit::kOne;
        break;
      case 'u':
        t = Trit::kUncertain;
        break;
      default:
        throw ValidationError(std::string("invalid command vector character '") + text[s] + "'");
    }
    symbols[text.size() - 1 - s] = t;
  }
  return CommandVector(width, text.size() / width, std::move(symbols));
}

PositionSet::PositionSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

bool PositionSet::contains(std::size_t k) const {
  return std::binary_search(indices_.begin(), indices_.end(), k);
}

CommandVector build_command_vector(const Register &a, int i, Bit c) {
  if (i < 0 || static_cast<std::size_t>(i) >= a.width()) {
    throw UsageError("lieutenant index " + std::to_string(i) + " out of range");
  }
  if (c > 1) {
    throw UsageError("order must be 0 or 1");
  }
  std::vector<Trit> symbols(a.size(), Trit::kUncertain);
  for (std::size_t k = 0; k < a.tuples(); ++k) {
    if (a.at(k, static_cast<std::size_t>(i)) == c) {
      for (std::size_t p = k * a.width(); p < (k + 1) * a.width(); ++p) {
        symbols[p] = trit_of(a[p]);
      }
    }
  }
  return CommandVector(a.width(), a.tuples(), std::move(symbols), VectorMeta{c, i});
}

PositionSet positions_single(const CommandVector &v, int i, Bit x) {
  require_place(v, i);
  std::vector<std::size_t> out;
  const Trit want = trit_of(x);
  for (std::size_t k = 0; k < v.tuples(); ++k) {
    if (v.at(k, static_cast<std::size_t>(i)) == want && v.is_definite(k)) {
      out.push_back(k);
    }
  }
  return PositionSet(std::move(out));
}

PositionSet positions_pair(const CommandVector &v, int i, Bit x, int j, Bit y) {
  if (i == j) {
    throw UsageError("positions_pair needs two distinct places");
  }
  require_place(v, i);
  require_place(v, j);
  std::vector<std::size_t> out;
  const Trit want_x = trit_of(x);
  const Trit want_y = trit_of(y);
  for (std::size_t k = 0; k < v.tuples(); ++k) {
    if (v.at(k, static_cast<std::size_t>(i)) == want_x &&
        v.at(k, static_cast<std::size_t>(j)) == want_y && v.is_definite(k)) {
      out.push_back(k);
    }
  }
  return PositionSet(std::move(out));
}

PositionSet symmetric_difference(const PositionSet &s1, const PositionSet &s2) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                std::back_inserter(out));
  return PositionSet(std::move(out));
}

bool is_structurally_valid(const CommandVector &v, int i, Bit c) {
  if (v.empty() || i < 0 || static_cast<std::size_t>(i) >= v.width() || c > 1) {
    return false;
  }
  const Trit want = trit_of(c);
  for (std::size_t k = 0; k < v.tuples(); ++k) {
    if (v.is_uncertain(k)) {
      continue;
    }
    if (!v.is_definite(k) || v.at(k, static_cast<std::size_t>(i)) != want) {
      return false;
    }
  }
  return true;
}

}  // namespace eprqdba
