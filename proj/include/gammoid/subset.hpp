// Copyright 2026 The Authors.
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

#include <bit>
#include <cstdint>
#include <compare>
#include <vector>

namespace gammoid {

// A set of element indices into an ordered ground set, stored as a
// characteristic mask. Ground sets never exceed 24 elements, so 32 bits
// are always enough.
class Subset {
 public:
  using Mask = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Mask mask) : mask_(mask) {}

  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }
  static constexpr Subset singleton(int i) { return Subset(Mask{1} << i); }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }
  constexpr bool is_subset_of(Subset other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  constexpr Subset with(int i) const { return Subset(mask_ | (Mask{1} << i)); }
  constexpr Subset without(int i) const {
    return Subset(mask_ & ~(Mask{1} << i));
  }

  constexpr Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  constexpr Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }
  constexpr Subset operator-(Subset o) const { return Subset(mask_ & ~o.mask_); }

  constexpr bool operator==(const Subset&) const = default;
  constexpr auto operator<=>(const Subset&) const = default;

  // Member indices in ascending order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

 private:
  Mask mask_ = 0;
};

}  // namespace gammoid
