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
//
// Umbrella header for the whole library.
#pragma once

#include "ddp/csv.hpp"        // IWYU pragma: export
#include "ddp/dataset.hpp"    // IWYU pragma: export
#include "ddp/dates.hpp"      // IWYU pragma: export
#include "ddp/discount.hpp"   // IWYU pragma: export
#include "ddp/errors.hpp"     // IWYU pragma: export
#include "ddp/experiment.hpp" // IWYU pragma: export
#include "ddp/ingest.hpp"     // IWYU pragma: export
#include "ddp/ledger.hpp"     // IWYU pragma: export
#include "ddp/numeric.hpp"    // IWYU pragma: export
#include "ddp/rng.hpp"        // IWYU pragma: export
#include "ddp/schedule.hpp"   // IWYU pragma: export
#include "ddp/version.hpp"    // IWYU pragma: export
