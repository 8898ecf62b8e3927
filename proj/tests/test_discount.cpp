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

#include <cmath>
#include <limits>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "ddp/discount.hpp"
#include "ddp/rng.hpp"

using ddp::DiscountRegime;

TEST_CASE("undiscounted weights are identically one") {
  const DiscountRegime r = DiscountRegime::none();
  REQUIRE(r.weight(0) == 1.0);
  REQUIRE(r.weight(1) == 1.0);
  REQUIRE(r.weight(7) == 1.0);
  REQUIRE(r.weight(1000000) == 1.0);
  REQUIRE(r.reduces_to_undiscounted());
}

TEST_CASE("exponential weights are alpha^delay") {
  const DiscountRegime r = DiscountRegime::exponential(0.5);
  REQUIRE(r.weight(0) == 1.0);
  REQUIRE(r.weight(1) == 0.5);
  REQUIRE(r.weight(2) == 0.25);
  REQUIRE(r.weight(3) == 0.125);
  REQUIRE_THAT(DiscountRegime::exponential(0.9).weight(2),
               Catch::Matchers::WithinRel(0.81, 1e-14));
  REQUIRE(r.alpha() == 0.5);
  REQUIRE(!r.reduces_to_undiscounted());
}

TEST_CASE("hyperbolic weights are 1/(1 + beta*delay)") {
  const DiscountRegime r = DiscountRegime::hyperbolic(1.0);
  REQUIRE(r.weight(0) == 1.0);
  REQUIRE(r.weight(1) == 0.5);
  REQUIRE(r.weight(2) == 1.0 / 3.0);
  REQUIRE(r.weight(3) == 0.25);
  REQUIRE(DiscountRegime::hyperbolic(0.5).weight(4) == 1.0 / 3.0);
  REQUIRE(r.beta() == 1.0);
  REQUIRE(!r.reduces_to_undiscounted());
}

TEST_CASE("degenerate parameters reduce to the undiscounted regime") {
  const DiscountRegime exp1 = DiscountRegime::exponential(1.0);
  const DiscountRegime hyp0 = DiscountRegime::hyperbolic(0.0);
  for (std::uint64_t d : {0ull, 1ull, 5ull, 123456ull}) {
    REQUIRE(exp1.weight(d) == 1.0);
    REQUIRE(hyp0.weight(d) == 1.0);
  }
  REQUIRE(exp1.reduces_to_undiscounted());
  REQUIRE(hyp0.reduces_to_undiscounted());
}

TEST_CASE("discount parameter validation") {
  REQUIRE_THROWS_AS(DiscountRegime::exponential(0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(DiscountRegime::exponential(-0.2), std::invalid_argument);
  REQUIRE_THROWS_AS(DiscountRegime::exponential(1.0 + 1e-9),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(DiscountRegime::exponential(std::nan("")),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(DiscountRegime::hyperbolic(-0.1), std::invalid_argument);
  REQUIRE_THROWS_AS(
      DiscountRegime::hyperbolic(std::numeric_limits<double>::infinity()),
      std::invalid_argument);
  REQUIRE_THROWS_AS(DiscountRegime::hyperbolic(std::nan("")),
                    std::invalid_argument);
  // Accessor misuse is a programming error, not a domain error.
  REQUIRE_THROWS_AS(DiscountRegime::none().alpha(), std::logic_error);
  REQUIRE_THROWS_AS(DiscountRegime::exponential(0.5).beta(), std::logic_error);
}

TEST_CASE("weights never increase with age") {
  ddp::SplitMix64 g(17);
  for (int trial = 0; trial < 50; ++trial) {
    const double alpha = 0.01 + 0.99 * ddp::uniform_unit(g);
    const double beta = 5.0 * ddp::uniform_unit(g);
    const DiscountRegime regimes[]{DiscountRegime::none(),
                                   DiscountRegime::exponential(alpha),
                                   DiscountRegime::hyperbolic(beta)};
    for (const auto& r : regimes) {
      double prev = r.weight(0);
      REQUIRE(prev == 1.0);  // delay 0 is always weight 1
      for (std::uint64_t d = 1; d <= 100; ++d) {
        const double w = r.weight(d);
        REQUIRE(w <= prev);
        REQUIRE(w > 0.0);
        prev = w;
      }
    }
  }
}
