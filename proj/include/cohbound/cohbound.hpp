// Copyright 2026 The cohbound Authors
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


// Umbrella header.

#ifndef COHBOUND_COHBOUND_HPP
#define COHBOUND_COHBOUND_HPP

#include "cohbound/audit.hpp"
#include "cohbound/coherence.hpp"
#include "cohbound/correlations.hpp"
#include "cohbound/fixtures.hpp"
#include "cohbound/measurement.hpp"
#include "cohbound/measurement_search.hpp"
#include "cohbound/miac.hpp"
#include "cohbound/nelder_mead.hpp"
#include "cohbound/qmatrix.hpp"
#include "cohbound/random.hpp"
#include "cohbound/reproduction.hpp"
#include "cohbound/state_file.hpp"
#include "cohbound/sweep.hpp"

#endif  // COHBOUND_COHBOUND_HPP
