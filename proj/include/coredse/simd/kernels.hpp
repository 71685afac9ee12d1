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

#pragma once

#include <cstddef>
#include <string_view>

// Dense double-precision kernels used by the policy network and the optimizer.
// A scalar reference implementation is always present; vectorized variants are
// selected at runtime from what the CPU reports.

namespace coredse::simd {

enum class Isa { kScalar, kAvx2 };

struct AdamStep {
  double learning_rate;
  double beta1;
  double beta2;
  double epsilon;
  double bias_correction1;  // 1 - beta1^t
  double bias_correction2;  // 1 - beta2^t
};

struct KernelTable {
  Isa isa;
  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // out[o] = bias[o] + dot(W[o, :], x) for a row-major (rows x cols) W
  void (*gemv)(const double* w, const double* bias, const double* x, double* out,
               std::size_t rows, std::size_t cols);
  // Gradient ascent step with bias-corrected moment estimates; updates
  // params, m and v in place.
  void (*adam)(double* params, const double* grad, double* m, double* v, std::size_t n,
               const AdamStep& step);
};

namespace scalar {
double Dot(const double* x, const double* y, std::size_t n);
void Axpy(double a, const double* x, double* y, std::size_t n);
void Gemv(const double* w, const double* bias, const double* x, double* out, std::size_t rows,
          std::size_t cols);
void Adam(double* params, const double* grad, double* m, double* v, std::size_t n,
          const AdamStep& step);
}  // namespace scalar

#if defined(COREDSE_HAVE_AVX2)
namespace avx2 {
double Dot(const double* x, const double* y, std::size_t n);
void Axpy(double a, const double* x, double* y, std::size_t n);
void Gemv(const double* w, const double* bias, const double* x, double* out, std::size_t rows,
          std::size_t cols);
void Adam(double* params, const double* grad, double* m, double* v, std::size_t n,
          const AdamStep& step);
}  // namespace avx2
#endif

// True when the ISA was compiled in and the running CPU supports it.
bool Supported(Isa isa);

// Table for a specific ISA. Throws ConfigError if the ISA is unsupported.
const KernelTable& Kernels(Isa isa);

// The table currently in use. Defaults to the best supported ISA, unless the
// environment variable CORE_DSE_SIMD is set to "scalar".
const KernelTable& Active();

// Override the active ISA (tests and the --simd flag).
void SetActive(Isa isa);

std::string_view Name(Isa isa);
Isa ParseIsa(std::string_view name);

}  // namespace coredse::simd
