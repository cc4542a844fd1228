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

#include "qframes/sampling_stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qframes {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_probability_vector(const Eigen::VectorXd& p) {
  if (p.size() == 0 || !p.allFinite() || (p.array() < 0.0).any()) {
    throw std::invalid_argument("probabilities must be finite and >= 0");
  }
  if (std::abs(p.sum() - 1.0) > 1e-10) {
    throw std::invalid_argument("probabilities must sum to 1");
  }
}

double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

RelFreq rel_freq(const OutcomeCounts& counts) {
  if (counts.shots < 1) {
    throw std::invalid_argument("rel_freq requires at least one shot");
  }
  std::int64_t total = 0;
  Eigen::VectorXd values(static_cast<int>(counts.counts.size()));
  for (std::size_t k = 0; k < counts.counts.size(); ++k) {
    if (counts.counts[k] < 0) {
      throw std::invalid_argument("counts must be non-negative");
    }
    total += counts.counts[k];
    values[static_cast<int>(k)] =
        static_cast<double>(counts.counts[k]) / counts.shots;
  }
  if (total != counts.shots) {
    throw std::invalid_argument("counts must sum to the shot count");
  }
  return RelFreq{std::move(values)};
}

std::int64_t binomial_sample(std::int64_t n, double p, Rng& rng) {
  if (n < 0) throw std::invalid_argument("binomial_sample: n must be >= 0");
  if (n == 0) return 0;
  if (p <= 0.0) return 0;
  if (p >= 1.0) return n;

  const double u = rng.uniform();
  const double log_u = std::log(u);
  const double log_ratio = std::log(p) - std::log1p(-p);

  // CDF inversion; pmf recursion and accumulation both in the log domain so
  // large n does not underflow the k = 0 term.
  double log_pmf = static_cast<double>(n) * std::log1p(-p);
  double log_cdf = log_pmf;
  std::int64_t k = 0;
  while (k < n && log_u >= log_cdf) {
    log_pmf += std::log(static_cast<double>(n - k) / (k + 1)) + log_ratio;
    log_cdf = log_add_exp(log_cdf, log_pmf);
    ++k;
  }
  return k;
}

OutcomeCounts sample_counts(const Eigen::VectorXd& p, std::int64_t shots,
                            Rng& rng) {
  check_probability_vector(p);
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");

  const int m = static_cast<int>(p.size());
  OutcomeCounts result;
  result.counts.assign(m, 0);
  result.shots = shots;

  std::int64_t remaining = shots;
  double mass_left = 1.0;
  for (int k = 0; k < m - 1 && remaining > 0; ++k) {
    double conditional = mass_left > 0.0 ? p[k] / mass_left : 1.0;
    conditional = std::min(std::max(conditional, 0.0), 1.0);
    const std::int64_t taken = binomial_sample(remaining, conditional, rng);
    result.counts[k] = taken;
    remaining -= taken;
    mass_left -= p[k];
  }
  result.counts[m - 1] = remaining;
  return result;
}

OutcomeCounts sample_counts(const Eigen::VectorXd& p, std::int64_t shots,
                            std::uint64_t seed) {
  Rng rng(seed);
  return sample_counts(p, shots, rng);
}

DeviationMoments deviation_moments_analytic(const Eigen::VectorXd& p,
                                            std::int64_t shots) {
  check_probability_vector(p);
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const int m = static_cast<int>(p.size());
  DeviationMoments moments;
  moments.mean = Eigen::VectorXd::Zero(m);
  moments.second =
      (p.asDiagonal().toDenseMatrix() - p * p.transpose()) /
      static_cast<double>(shots);
  return moments;
}

Eigen::MatrixXd deviation_moments_miscounted(const Eigen::VectorXd& p,
                                             std::int64_t shots) {
  check_probability_vector(p);
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const double l = static_cast<double>(shots);
  Eigen::MatrixXd second = -(p * p.transpose()) * ((l - 1.0) / l);
  second.diagonal() = p.array() * (1.0 - p.array()) / l;
  return second;
}

Eigen::MatrixXd coeff_error_moments(const Eigen::VectorXd& p,
                                    std::int64_t shots,
                                    const Eigen::VectorXd& traces) {
  if (traces.size() != p.size() || (traces.array() <= 0.0).any()) {
    throw std::invalid_argument("traces must be positive and match p");
  }
  const Eigen::VectorXd inv_sqrt = traces.cwiseSqrt().cwiseInverse();
  const DeviationMoments moments = deviation_moments_analytic(p, shots);
  return inv_sqrt.asDiagonal() * moments.second * inv_sqrt.asDiagonal();
}

double log_multinomial_pmf(const OutcomeCounts& counts,
                           const Eigen::VectorXd& p) {
  check_probability_vector(p);
  if (static_cast<int>(counts.counts.size()) != p.size()) {
    throw std::invalid_argument("counts/probability length mismatch");
  }
  std::int64_t total = 0;
  double log_mass = 0.0;
  for (std::size_t k = 0; k < counts.counts.size(); ++k) {
    const std::int64_t c = counts.counts[k];
    if (c < 0) throw std::invalid_argument("counts must be non-negative");
    total += c;
    if (c == 0) continue;  // 0^0 = 1
    const double pk = p[static_cast<int>(k)];
    if (pk == 0.0) return -kInf;
    log_mass += c * std::log(pk) - std::lgamma(static_cast<double>(c) + 1.0);
  }
  if (total != counts.shots) {
    throw std::invalid_argument("counts must sum to the shot count");
  }
  log_mass += std::lgamma(static_cast<double>(counts.shots) + 1.0);
  return log_mass;
}

double multinomial_pmf(const OutcomeCounts& counts, const Eigen::VectorXd& p) {
  const double log_mass = log_multinomial_pmf(counts, p);
  return log_mass == -kInf ? 0.0 : std::exp(log_mass);
}

}  // namespace qframes
