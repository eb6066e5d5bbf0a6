// Copyright 2026 The RadonKit Authors
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

#include "radon/algebraic.hpp"
#include "radon/chart.hpp"
#include "radon/error.hpp"
#include "radon/generate.hpp"
#include "radon/hull.hpp"
#include "radon/hyperplane.hpp"
#include "radon/instance_io.hpp"
#include "radon/linalg.hpp"
#include "radon/oracle.hpp"
#include "radon/partition.hpp"
#include "radon/point.hpp"
#include "radon/predicates.hpp"
#include "radon/prng.hpp"
#include "radon/rational.hpp"
#include "radon/recursive.hpp"
#include "radon/simplex.hpp"
#include "radon/verify.hpp"
