// Copyright 2026 The mpkex Authors.
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

#ifndef MPKEX_MPKEX_HPP_
#define MPKEX_MPKEX_HPP_

#include "mpkex/baselines.hpp"
#include "mpkex/candidates.hpp"
#include "mpkex/corpus.hpp"
#include "mpkex/eval.hpp"
#include "mpkex/graph.hpp"
#include "mpkex/pipeline.hpp"
#include "mpkex/rank.hpp"
#include "mpkex/stem.hpp"
#include "mpkex/topics.hpp"

#endif  // MPKEX_MPKEX_HPP_
