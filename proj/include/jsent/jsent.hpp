// Copyright 2026 The jsent Authors
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

#pragma once

#include "jsent/bounds.hpp"
#include "jsent/entropy.hpp"
#include "jsent/error.hpp"
#include "jsent/estimators.hpp"
#include "jsent/experiment_io.hpp"
#include "jsent/pipeline.hpp"
#include "jsent/quantum.hpp"
#include "jsent/quantum_sim.hpp"
#include "jsent/random.hpp"
#include "jsent/risk.hpp"
#include "jsent/tables.hpp"
