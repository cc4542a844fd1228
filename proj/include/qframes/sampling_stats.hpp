// Copyright 2026 The qframes Authors
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

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qframes/rng.hpp"

namespace qframes {

/// Outcome tallies of L multinomial shots; sum(counts) == shots.
struct OutcomeCounts {
  std::vector<std::int64_t> counts;
  std::int64_t shots = 0;
};

/// Relative frequencies l_k / L.
struct RelFreq {
  Eigen::VectorXd values;
};

RelFreq rel_freq(const OutcomeCounts& counts);

/// First and second moments of the deviations d_k = l_k/L - p(k).
struct DeviationMoments {
  Eigen::VectorXd mean;    // identically zero
  Eigen::MatrixXd second;  // E[d_j d_k]
};

/// Binomial(n, p) sample from a single uniform draw, by CDF inversion walked
/// in the log domain. Deterministic given the generator state; part of the
/// reproducibility contract.
std::int64_t binomial_sample(std::int64_t n, double p, Rng& rng);

/// Multinomial counts via the conditional-binomial decomposition:
/// l_1 ~ Bin(L, p_1), then l_k ~ Bin(L - sum_{j<k} l_j, p_k / remaining mass).
/// One uniform draw per category; the algorithm (and hence the exact counts
/// produced by a seed) is fixed.
OutcomeCounts sample_counts(const Eigen::VectorXd& p, std::int64_t shots,
                            Rng& rng);
OutcomeCounts sample_counts(const Eigen::VectorXd& p, std::int64_t shots,
                            std::uint64_t seed);

/// Exact multinomial moments: E[d_k] = 0,
/// E[d_k^2] = p(k)(1 - p(k))/L, and E[d_j d_k] = -p(j) p(k)/L for j != k.
DeviationMoments deviation_moments_analytic(const Eigen::VectorXd& p,
                                            std::int64_t shots);

/// Second-moment matrix with the commonly mis-stated off-diagonal value
/// -p(j) p(k) (L-1)/L in place of -p(j) p(k)/L. Provided for side-by-side
/// comparison reports; it cannot arise from any multinomial law (its rows
/// do not sum to zero).
Eigen::MatrixXd deviation_moments_miscounted(const Eigen::VectorXd& p,
                                             std::int64_t shots);

/// Moments of the scaled coefficient errors e_k = d_k / sqrt(t_k):
/// entry (j, k) is E[d_j d_k] / sqrt(t_j t_k).
Eigen::MatrixXd coeff_error_moments(const Eigen::VectorXd& p,
                                    std::int64_t shots,
                                    const Eigen::VectorXd& traces);

/// Exact multinomial probability mass, computed in the log domain.
/// Convention 0^0 = 1; a positive count on a zero-probability category gives
/// mass 0.
double multinomial_pmf(const OutcomeCounts& counts, const Eigen::VectorXd& p);
double log_multinomial_pmf(const OutcomeCounts& counts,
                           const Eigen::VectorXd& p);  // may be -inf

}  // namespace qframes
