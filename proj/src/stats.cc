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

#include "eprqdba/stats.h"

#include <cmath>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "eprqdba/errors.h"

namespace eprqdba {

namespace {

ChiSquareResult finish(double statistic, double dof) {
  ChiSquareResult r;
  r.statistic = statistic;
  r.dof = dof;
  if (dof <= 0) {
    r.p_value = 1;
    return r;
  }
  boost::math::chi_squared dist(dof);
  r.p_value = boost::math::cdf(boost::math::complement(dist, statistic));
  return r;
}

}  // namespace

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0 || successes > trials) {
    throw UsageError("Wilson interval needs 0 <= successes <= trials and trials > 0");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  // The bounds are exactly 0 and 1 at the extremes; rounding would miss them.
  return Interval{successes == 0 ? 0.0 : std::max(0.0, centre - half),
                  successes == trials ? 1.0 : std::min(1.0, centre + half)};
}

double binomial_standard_error(double p, std::uint64_t trials) {
  if (trials == 0) {
    throw UsageError("standard error needs trials > 0");
  }
  return std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

ChiSquareResult chi_square_homogeneity(const std::vector<std::uint64_t> &a,
                                       const std::vector<std::uint64_t> &b) {
  if (a.size() != b.size()) {
    throw UsageError("histograms must have the same cells");
  }
  const double na = static_cast<double>(std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
  const double nb = static_cast<double>(std::accumulate(b.begin(), b.end(), std::uint64_t{0}));
  if (na == 0 || nb == 0) {
    throw UsageError("both samples must be non-empty");
  }
  const double total = na + nb;
  double statistic = 0;
  std::size_t cells = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double col = static_cast<double>(a[c] + b[c]);
    if (col == 0) {
      continue;
    }
    ++cells;
    const double ea = na * col / total;
    const double eb = nb * col / total;
    statistic += (a[c] - ea) * (a[c] - ea) / ea + (b[c] - eb) * (b[c] - eb) / eb;
  }
  return finish(statistic, static_cast<double>(cells) - 1);
}

ChiSquareResult chi_square_goodness(const std::vector<std::uint64_t> &observed,
                                    const std::vector<double> &probabilities) {
  if (observed.size() != probabilities.size()) {
    throw UsageError("observed counts and probabilities differ in size");
  }
  const double sum = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  if (std::abs(sum - 1) > 1e-9) {
    throw UsageError("cell probabilities must sum to 1");
  }
  const double n =
      static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  double statistic = 0;
  std::size_t cells = 0;
  for (std::size_t c = 0; c < observed.size(); ++c) {
    if (probabilities[c] <= 0) {
      if (observed[c] > 0) {
        return ChiSquareResult{std::numeric_limits<double>::infinity(), 0, 0};
      }
      continue;
    }
    ++cells;
    const double e = n * probabilities[c];
    statistic += (observed[c] - e) * (observed[c] - e) / e;
  }
  return finish(statistic, static_cast<double>(cells) - 1);
}

}  // namespace eprqdba
