// Copyright 2026 The LNDP Toolkit Authors
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

#ifndef LNDP_LNDP_HPP_
#define LNDP_LNDP_HPP_

#include "lndp/analysis.hpp"
#include "lndp/blur.hpp"
#include "lndp/distinguisher.hpp"
#include "lndp/errors.hpp"
#include "lndp/estimators.hpp"
#include "lndp/graph.hpp"
#include "lndp/linquery.hpp"
#include "lndp/mechanisms.hpp"
#include "lndp/random.hpp"

#endif  // LNDP_LNDP_HPP_
