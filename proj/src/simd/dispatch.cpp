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

#include <atomic>
#include <cstdlib>
#include <string>

#include "coredse/error.hpp"
#include "coredse/simd/kernels.hpp"

namespace coredse::simd {

namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, scalar::Dot, scalar::Axpy, scalar::Gemv,
                                   scalar::Adam};
#if defined(COREDSE_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Isa::kAvx2, avx2::Dot, avx2::Axpy, avx2::Gemv, avx2::Adam};
#endif

const KernelTable* DetectDefault() {
  if (const char* env = std::getenv("CORE_DSE_SIMD"); env != nullptr) {
    if (std::string(env) == "scalar") return &kScalarTable;
  }
#if defined(COREDSE_HAVE_AVX2)
  if (Supported(Isa::kAvx2)) return &kAvx2Table;
#endif
  return &kScalarTable;
}

std::atomic<const KernelTable*>& ActiveSlot() {
  static std::atomic<const KernelTable*> slot{DetectDefault()};
  return slot;
}

}  // namespace

bool Supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(COREDSE_HAVE_AVX2)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& Kernels(Isa isa) {
  if (!Supported(isa)) {
    throw ConfigError("SIMD variant '" + std::string(Name(isa)) + "' is not available on this CPU");
  }
#if defined(COREDSE_HAVE_AVX2)
  if (isa == Isa::kAvx2) return kAvx2Table;
#endif
  return kScalarTable;
}

const KernelTable& Active() { return *ActiveSlot().load(std::memory_order_acquire); }

void SetActive(Isa isa) { ActiveSlot().store(&Kernels(isa), std::memory_order_release); }

std::string_view Name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

Isa ParseIsa(std::string_view name) {
  if (name == "scalar") return Isa::kScalar;
  if (name == "avx2") return Isa::kAvx2;
  if (name == "auto") return DetectDefault()->isa;
  throw ConfigError("unknown SIMD variant '" + std::string(name) + "' (expected scalar, avx2 or auto)");
}

}  // namespace coredse::simd
