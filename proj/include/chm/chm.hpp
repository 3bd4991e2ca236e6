// Copyright 2026 The CHM Authors
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

#pragma once

#include "chm/catalog.hpp"
#include "chm/cyclotomic.hpp"
#include "chm/defect.hpp"
#include "chm/equivalence.hpp"
#include "chm/erpairs.hpp"
#include "chm/family.hpp"
#include "chm/integer_rank.hpp"
#include "chm/io.hpp"
#include "chm/matching.hpp"
#include "chm/matrix.hpp"
#include "chm/modular.hpp"
#include "chm/mub.hpp"
#include "chm/phase.hpp"
#include "chm/repro.hpp"
#include "chm/scenarios.hpp"
