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

#ifndef EPRQDBA_COMMANDVEC_H
#define EPRQDBA_COMMANDVEC_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eprqdba/config.h"
#include "eprqdba/registers.h"

namespace eprqdba {

/// 0, 1, or the uncertain symbol. Text form '0', '1', 'u'.
enum class Trit : std::uint8_t { kZero = 0, kOne = 1, kUncertain = 2 };

inline Trit trit_of(Bit b) { return b ? Trit::kOne : Trit::kZero; }
char trit_char(Trit t);

/// Claimed order and addressee attached to a command vector.
struct VectorMeta {
  Bit order = 0;
  int addressee = 0;

  bool operator==(const VectorMeta &) const = default;
};

/// Command vector: the commander's register with every tuple either revealed
/// in full or replaced by the all-uncertain tuple. Same layout and text
/// ordering as Register. A default-constructed vector is empty (zero tuples),
/// which stands for "no vector received".
class CommandVector {
 public:
  CommandVector() = default;
  CommandVector(std::size_t width, std::size_t tuples, std::vector<Trit> symbols,
                std::optional<VectorMeta> meta = std::nullopt);

  /// Every tuple uncertain.
  static CommandVector uncertain(std::size_t width, std::size_t tuples);
  /// Every tuple revealed, copied from the register.
  static CommandVector from_register(const Register &reg);

  std::size_t width() const { return width_; }
  std::size_t tuples() const { return tuples_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  Trit operator[](std::size_t position) const { return symbols_[position]; }
  Trit at(std::size_t tuple, std::size_t place) const { return symbols_[tuple * width_ + place]; }
  std::span<const Trit> tuple(std::size_t k) const {
    return std::span<const Trit>(symbols_).subspan(k * width_, width_);
  }
  const std::vector<Trit> &symbols() const { return symbols_; }

  /// All symbols of tuple k are 0/1.
  bool is_definite(std::size_t k) const;
  /// All symbols of tuple k are uncertain.
  bool is_uncertain(std::size_t k) const;
  std::size_t uncertain_tuples() const;

  void set_tuple_uncertain(std::size_t k);
  void set_symbol(std::size_t tuple, std::size_t place, Trit value) {
    symbols_[tuple * width_ + place] = value;
  }

  const std::optional<VectorMeta> &meta() const { return meta_; }
  void set_meta(std::optional<VectorMeta> meta) { meta_ = meta; }

  std::string to_string() const;
  static CommandVector from_string(std::size_t width, const std::string &text);

  /// Equality on symbols and shape; meta is ignored.
  bool same_symbols(const CommandVector &other) const {
    return width_ == other.width_ && symbols_ == other.symbols_;
  }
  bool operator==(const CommandVector &other) const = default;

 private:
  std::size_t width_ = 0;
  std::size_t tuples_ = 0;
  std::vector<Trit> symbols_;
  std::optional<VectorMeta> meta_;
};

/// Sorted set of tuple indices.
class PositionSet {
 public:
  PositionSet() = default;
  explicit PositionSet(std::vector<std::size_t> indices);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t k) const;
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  const std::vector<std::size_t> &indices() const { return indices_; }

  bool operator==(const PositionSet &) const = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Tuple k is a_k when a has bit c at place i, otherwise uncertain. Meta = (c, i).
/// Throws UsageError when i is not a place of the register.
CommandVector build_command_vector(const Register &a, int i, Bit c);

/// Definite tuples with bit x at place i.
PositionSet positions_single(const CommandVector &v, int i, Bit x);

/// Definite tuples with x at place i and y at place j. Throws UsageError when i == j.
PositionSet positions_pair(const CommandVector &v, int i, Bit x, int j, Bit y);

PositionSet symmetric_difference(const PositionSet &s1, const PositionSet &s2);

/// Every tuple is fully definite or fully uncertain, and every definite tuple
/// carries c at place i.
bool is_structurally_valid(const CommandVector &v, int i, Bit c);

}  // namespace eprqdba

#endif  // EPRQDBA_COMMANDVEC_H
