// Copyright 2026 The eef authors
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

#include "eef/allocation_model.hpp"
#include "eef/dominance.hpp"
#include "eef/engine.hpp"
#include "eef/errors.hpp"
#include "eef/fairness.hpp"
#include "eef/generator.hpp"
#include "eef/instance.hpp"
#include "eef/io.hpp"
#include "eef/model.hpp"
#include "eef/model_text.hpp"
#include "eef/numbers.hpp"
#include "eef/oracle.hpp"
#include "eef/pilp.hpp"
#include "eef/simplex.hpp"
#include "eef/solver.hpp"
#include "eef/verdict.hpp"
