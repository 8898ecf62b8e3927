// Copyright 2026 The ddp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

namespace ddp {

// Kahan compensated summation.  Long loss/weight sums must not drift, so the
// running budget totals and all verification oracles go through this instead
// of a bare double.
class KahanAccumulator {
 public:
  void add(double x) {
    const double y = x - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }

  // Scales the partial sum and its compensation term together.  Used for the
  // O(1) exponential-discount recurrence s_t = alpha * s_{t-1} + x_t.
  void scale(double factor) {
    sum_ *= factor;
    compensation_ *= factor;
  }

  void reset() {
    sum_ = 0.0;
    compensation_ = 0.0;
  }

  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace ddp
