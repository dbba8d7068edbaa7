// Copyright 2026 The oqw Authors
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

#include "kernels_internal.hpp"
#include "oqw/error.hpp"

namespace oqw::kernels {
namespace {

bool cpu_supports(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(OQW_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::kNeon:
#if defined(OQW_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& initial_table() {
  Backend choice = best_backend();
  if (const char* env = std::getenv("OQW_KERNELS"); env != nullptr && *env != '\0') {
    // An unusable request falls back to the best backend rather than aborting
    // static initialization.
    try {
      const Backend requested = parse_backend(env);
      if (is_available(requested)) choice = requested;
    } catch (const DomainError&) {
    }
  }
  return table_for(choice);
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{&initial_table()};
  return slot;
}

}  // namespace

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

bool is_available(Backend backend) { return cpu_supports(backend); }

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::kScalar, Backend::kAvx2, Backend::kNeon}) {
    if (is_available(b)) out.push_back(b);
  }
  return out;
}

Backend best_backend() {
  if (is_available(Backend::kAvx2)) return Backend::kAvx2;
  if (is_available(Backend::kNeon)) return Backend::kNeon;
  return Backend::kScalar;
}

const KernelTable& table_for(Backend backend) {
  if (!is_available(backend)) {
    throw DomainError("kernel backend '" + std::string(to_string(backend)) +
                      "' is not available on this machine");
  }
  switch (backend) {
#if defined(OQW_HAVE_AVX2)
    case Backend::kAvx2:
      return detail::avx2_table();
#endif
#if defined(OQW_HAVE_NEON)
    case Backend::kNeon:
      return detail::neon_table();
#endif
    default:
      return detail::scalar_table();
  }
}

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

void set_active(Backend backend) {
  active_slot().store(&table_for(backend), std::memory_order_release);
}

Backend parse_backend(std::string_view name) {
  if (name == "scalar") return Backend::kScalar;
  if (name == "avx2") return Backend::kAvx2;
  if (name == "neon") return Backend::kNeon;
  if (name == "auto") return best_backend();
  throw DomainError("unknown kernel backend '" + std::string(name) + "'");
}

}  // namespace oqw::kernels
