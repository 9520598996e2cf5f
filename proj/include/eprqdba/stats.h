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

#ifndef EPRQDBA_STATS_H
#define EPRQDBA_STATS_H

#include <cstdint>
#include <vector>

namespace eprqdba {

struct Interval {
  double lower = 0;
  double upper = 0;
  bool contains(double x) const { return lower <= x && x <= upper; }
};

/// Wilson score interval for a binomial proportion; z defaults to 95%.
/// Throws UsageError when trials == 0 or successes > trials.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = 1.959963984540054);

/// sqrt(p (1 - p) / trials).
double binomial_standard_error(double p, std::uint64_t trials);

struct ChiSquareResult {
  double statistic = 0;
  double dof = 0;
  double p_value = 1;
};

/// Two-sample homogeneity test on histograms over the same cells. Cells
/// empty in both samples are dropped. Throws UsageError when sizes differ or a
/// sample is empty.
ChiSquareResult chi_square_homogeneity(const std::vector<std::uint64_t> &a,
                                       const std::vector<std::uint64_t> &b);

/// Goodness of fit of observed counts against cell probabilities.
/// Throws UsageError when sizes differ or the probabilities do not sum to 1.
ChiSquareResult chi_square_goodness(const std::vector<std::uint64_t> &observed,
                                    const std::vector<double> &probabilities);

}  // namespace eprqdba

#endif  // EPRQDBA_STATS_H
