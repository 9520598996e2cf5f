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

#ifndef EPRQDBA_CHECKS_H
#define EPRQDBA_CHECKS_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eprqdba/commandvec.h"
#include "eprqdba/config.h"
#include "eprqdba/registers.h"

namespace eprqdba {

/// |count - expected| <= z * spread.
bool approx(double count, double expected, double spread, const TolerancePolicy &policy);

/// Binomial standard deviation of a count with success probability p over m tuples.
double binomial_spread(std::size_t m, double p);

enum class CheckKind { kAlice, kLtWithCommandVector, kLtWithBitVector };
const char *check_kind_name(CheckKind kind);

/// One evaluated condition of a check.
struct ConditionRecord {
  /// "structure", "half", "quarter[j=..,y=..]", "same_order", "opposite_order",
  /// "symmetric_difference" or "bit_mismatch".
  std::string name;
  bool passed = false;
  double observed = 0;
  double expected = 0;
  /// Largest accepted deviation from `expected` (0 for exact conditions).
  double bound = 0;
};

/// Outcome of one consistency check. Conditions are evaluated in order and
/// evaluation stops at the first failure.
struct CheckVerdict {
  CheckKind kind = CheckKind::kAlice;
  bool passed = false;
  std::vector<ConditionRecord> conditions;

  const ConditionRecord *failure() const;
  explicit operator bool() const { return passed; }
};

/// Lieutenant i checks the vector received from the commander for order c
/// against its own register:
///   (a) structurally valid for (i, c);
///   (b) |T^{i->c}| ~ m/2;
///   (c) |T^{i->c}_{j->y}| ~ m/4 for every other place j and y in {0, 1};
///   (d) at every tuple, the symbol at place i differs from the register bit.
/// Throws ValidationError when shapes differ.
CheckVerdict check_alice(int i, Bit c, const CommandVector &v_a, const Register &l,
                         const TolerancePolicy &policy);

/// Lieutenant i, holding a consistent vector v_a for order !c, checks the
/// vector v relayed by lieutenant j for order c:
///   (a) structurally valid for (j, c);
///   (b) |T^{i->c}_{j->c}(v)| ~ m/4;
///   (c) |T^{i->!c}_{j->c}(v)| ~ m/4;
///   (d) |T^{i->!c}_{j->c}(v_a) symdiff T^{i->!c}_{j->c}(v)| <= sd_max
///       (or ~ m/4 in paper-literal mode).
CheckVerdict check_lt_with_cv(int i, int j, Bit c, const CommandVector &v,
                              const CommandVector &v_a, const TolerancePolicy &policy);

/// Lieutenant i, without a consistent vector of its own, checks the vector v
/// relayed by lieutenant j for order c against its register l. Conditions
/// (a)-(c) as in check_lt_with_cv; (d) is the per-tuple bit mismatch at place i.
CheckVerdict check_lt_with_bv(int i, int j, Bit c, const CommandVector &v, const Register &l,
                              const TolerancePolicy &policy);

}  // namespace eprqdba

#endif  // EPRQDBA_CHECKS_H
