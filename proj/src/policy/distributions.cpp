// Copyright 2026 The coredse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coredse/policy/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coredse/error.hpp"
#include "coredse/policy/special_functions.hpp"

namespace coredse::policy {

namespace {

void CheckMatching(const DistributionSet& a, std::size_t n, const char* what) {
  if (a.size() != n) {
    throw ShapeError(std::string(what) + ": " + std::to_string(a.size()) + " heads vs " + std::to_string(n));
  }
}

std::size_t OutputWidth(const HeadDistribution& h) {
  if (const auto* c = std::get_if<CategoricalDist>(&h)) return c->probs.size();
  return 2;
}

std::size_t CategoryIndex(double raw, std::size_t k) {
  if (!std::isfinite(raw) || raw < 0.0 || raw >= static_cast<double>(k) || raw != std::floor(raw)) {
    throw DomainError("categorical action " + std::to_string(raw) + " is not a valid index");
  }
  return static_cast<std::size_t>(raw);
}

}  // namespace

CategoricalDist CategoricalFromLogits(std::span<const double> logits) {
  CategoricalDist d;
  const double max = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double l : logits) sum += std::exp(l - max);
  const double log_z = max + std::log(sum);
  d.log_probs.reserve(logits.size());
  d.probs.reserve(logits.size());
  for (double l : logits) {
    d.log_probs.push_back(l - log_z);
    d.probs.push_back(std::exp(l - log_z));
  }
  return d;
}

DistributionSet MakeDistributions(std::span<const double> raw, std::span<const space::HeadSpec> heads) {
  std::size_t width = 0;
  for (const auto& h : heads) width += static_cast<std::size_t>(h.output_width());
  if (width != raw.size()) {
    throw ShapeError("policy output width " + std::to_string(raw.size()) + ", heads need " +
                     std::to_string(width));
  }
  DistributionSet out;
  out.heads.reserve(heads.size());
  std::size_t o = 0;
  for (const auto& h : heads) {
    if (h.kind == space::HeadKind::kBeta) {
      out.heads.emplace_back(BetaDist{1.0 + Softplus(raw[o]), 1.0 + Softplus(raw[o + 1])});
    } else {
      out.heads.emplace_back(CategoricalFromLogits(raw.subspan(o, static_cast<std::size_t>(h.categories))));
    }
    o += static_cast<std::size_t>(h.output_width());
  }
  return out;
}

double BetaLogPdf(const BetaDist& d, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("beta log-density: x = " + std::to_string(x) + " outside (0, 1)");
  return (d.alpha - 1.0) * std::log(x) + (d.beta - 1.0) * std::log1p(-x) - LogBeta(d.alpha, d.beta);
}

double BetaEntropy(const BetaDist& d) {
  const double a = d.alpha;
  const double b = d.beta;
  return LogBeta(a, b) - (a - 1.0) * Digamma(a) - (b - 1.0) * Digamma(b) +
         (a + b - 2.0) * Digamma(a + b);
}

double BetaKl(const BetaDist& p, const BetaDist& q) {
  const double a = p.alpha;
  const double b = p.beta;
  return LogBeta(q.alpha, q.beta) - LogBeta(a, b) + (a - q.alpha) * Digamma(a) +
         (b - q.beta) * Digamma(b) + (q.alpha - a + q.beta - b) * Digamma(a + b);
}

double CategoricalEntropy(const CategoricalDist& d) {
  double h = 0.0;
  for (std::size_t i = 0; i < d.probs.size(); ++i) {
    if (d.probs[i] > 0.0) h -= d.probs[i] * d.log_probs[i];
  }
  return h;
}

double CategoricalKl(const CategoricalDist& p, const CategoricalDist& q) {
  if (p.probs.size() != q.probs.size()) throw ShapeError("categorical KL: size mismatch");
  double kl = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    if (p.probs[i] > 0.0) kl += p.probs[i] * (p.log_probs[i] - q.log_probs[i]);
  }
  return std::max(kl, 0.0);
}

space::CompoundAction Sample(const DistributionSet& dists, Rng& rng) {
  space::CompoundAction action;
  action.raw.reserve(dists.size());
  for (const auto& h : dists.heads) {
    if (const auto* b = std::get_if<BetaDist>(&h)) {
      action.raw.push_back(std::clamp(rng.Beta(b->alpha, b->beta), kActionEpsilon, 1.0 - kActionEpsilon));
    } else {
      const auto& c = std::get<CategoricalDist>(h);
      const double u = rng.Uniform();
      double cdf = 0.0;
      std::size_t pick = c.probs.size();
      for (std::size_t i = 0; i < c.probs.size(); ++i) {
        cdf += c.probs[i];
        if (u < cdf) {
          pick = i;
          break;
        }
      }
      if (pick == c.probs.size()) {
        // Rounding left u above the accumulated mass: take the last supported category.
        for (std::size_t i = c.probs.size(); i-- > 0;) {
          if (c.probs[i] > 0.0) {
            pick = i;
            break;
          }
        }
      }
      action.raw.push_back(static_cast<double>(pick));
    }
  }
  action.log_prob = LogProb(dists, action.raw);
  return action;
}

double LogProb(const DistributionSet& dists, std::span<const double> action) {
  CheckMatching(dists, action.size(), "log_prob");
  double lp = 0.0;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    if (const auto* b = std::get_if<BetaDist>(&dists.heads[i])) {
      lp += BetaLogPdf(*b, action[i]);
    } else {
      const auto& c = std::get<CategoricalDist>(dists.heads[i]);
      lp += c.log_probs[CategoryIndex(action[i], c.probs.size())];
    }
  }
  return lp;
}

double Entropy(const DistributionSet& dists) {
  double h = 0.0;
  for (const auto& head : dists.heads) {
    if (const auto* b = std::get_if<BetaDist>(&head)) {
      h += BetaEntropy(*b);
    } else {
      h += CategoricalEntropy(std::get<CategoricalDist>(head));
    }
  }
  return h;
}

double Kl(const DistributionSet& p, const DistributionSet& q) {
  CheckMatching(p, q.size(), "kl");
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (const auto* pb = std::get_if<BetaDist>(&p.heads[i])) {
      const auto* qb = std::get_if<BetaDist>(&q.heads[i]);
      if (qb == nullptr) throw ShapeError("kl: head kinds differ");
      kl += BetaKl(*pb, *qb);
    } else {
      const auto* qc = std::get_if<CategoricalDist>(&q.heads[i]);
      if (qc == nullptr) throw ShapeError("kl: head kinds differ");
      kl += CategoricalKl(std::get<CategoricalDist>(p.heads[i]), *qc);
    }
  }
  return kl;
}

void AccumulateLogProbGrad(std::span<const double> raw, const DistributionSet& dists,
                           std::span<const double> action, double scale, std::span<double> grad_raw) {
  CheckMatching(dists, action.size(), "log_prob gradient");
  std::size_t o = 0;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    const auto& head = dists.heads[i];
    if (const auto* b = std::get_if<BetaDist>(&head)) {
      const double x = action[i];
      if (!(x > 0.0 && x < 1.0)) throw DomainError("log_prob gradient: Beta action outside (0, 1)");
      const double psi_ab = Digamma(b->alpha + b->beta);
      const double d_alpha = std::log(x) - Digamma(b->alpha) + psi_ab;
      const double d_beta = std::log1p(-x) - Digamma(b->beta) + psi_ab;
      grad_raw[o] += scale * d_alpha * Sigmoid(raw[o]);
      grad_raw[o + 1] += scale * d_beta * Sigmoid(raw[o + 1]);
    } else {
      const auto& c = std::get<CategoricalDist>(head);
      const std::size_t pick = CategoryIndex(action[i], c.probs.size());
      for (std::size_t j = 0; j < c.probs.size(); ++j) {
        grad_raw[o + j] += scale * ((j == pick ? 1.0 : 0.0) - c.probs[j]);
      }
    }
    o += OutputWidth(head);
  }
}

void AccumulateEntropyGrad(std::span<const double> raw, const DistributionSet& dists, double scale,
                           std::span<double> grad_raw) {
  std::size_t o = 0;
  for (const auto& head : dists.heads) {
    if (const auto* b = std::get_if<BetaDist>(&head)) {
      const double a = b->alpha;
      const double bb = b->beta;
      const double tri_ab = (a + bb - 2.0) * Trigamma(a + bb);
      const double d_alpha = -(a - 1.0) * Trigamma(a) + tri_ab;
      const double d_beta = -(bb - 1.0) * Trigamma(bb) + tri_ab;
      grad_raw[o] += scale * d_alpha * Sigmoid(raw[o]);
      grad_raw[o + 1] += scale * d_beta * Sigmoid(raw[o + 1]);
    } else {
      const auto& c = std::get<CategoricalDist>(head);
      const double h = CategoricalEntropy(c);
      for (std::size_t j = 0; j < c.probs.size(); ++j) {
        if (c.probs[j] > 0.0) grad_raw[o + j] += scale * (-c.probs[j] * (c.log_probs[j] + h));
      }
    }
    o += OutputWidth(head);
  }
}

void AccumulateKlGrad(std::span<const double> raw, const DistributionSet& current,
                      const DistributionSet& fixed, double scale, std::span<double> grad_raw) {
  CheckMatching(current, fixed.size(), "kl gradient");
  std::size_t o = 0;
  for (std::size_t i = 0; i < current.size(); ++i) {
    const auto& head = current.heads[i];
    if (const auto* p = std::get_if<BetaDist>(&head)) {
      const auto& q = std::get<BetaDist>(fixed.heads[i]);
      const double a = p->alpha;
      const double b = p->beta;
      const double cross = (q.alpha - a + q.beta - b) * Trigamma(a + b);
      const double d_alpha = (a - q.alpha) * Trigamma(a) + cross;
      const double d_beta = (b - q.beta) * Trigamma(b) + cross;
      grad_raw[o] += scale * d_alpha * Sigmoid(raw[o]);
      grad_raw[o + 1] += scale * d_beta * Sigmoid(raw[o + 1]);
    } else {
      const auto& p_cat = std::get<CategoricalDist>(head);
      const auto& q_cat = std::get<CategoricalDist>(fixed.heads[i]);
      double kl = 0.0;
      for (std::size_t j = 0; j < p_cat.probs.size(); ++j) {
        kl += p_cat.probs[j] * (p_cat.log_probs[j] - q_cat.log_probs[j]);
      }
      for (std::size_t j = 0; j < p_cat.probs.size(); ++j) {
        grad_raw[o + j] += scale * p_cat.probs[j] * ((p_cat.log_probs[j] - q_cat.log_probs[j]) - kl);
      }
    }
    o += OutputWidth(head);
  }
}

}  // namespace coredse::policy
