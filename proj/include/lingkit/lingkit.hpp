// Copyright 2026 The lingkit Authors
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

#include "lingkit/core/corpus.hpp"
#include "lingkit/core/error.hpp"
#include "lingkit/core/language_tag.hpp"
#include "lingkit/core/parallel.hpp"
#include "lingkit/core/rng.hpp"
#include "lingkit/core/splits.hpp"
#include "lingkit/core/text.hpp"
#include "lingkit/core/unicode.hpp"
#include "lingkit/filter/foreign_filter.hpp"
#include "lingkit/lid/evaluate.hpp"
#include "lingkit/lid/features.hpp"
#include "lingkit/lid/model.hpp"
#include "lingkit/metrics/aggregate.hpp"
#include "lingkit/metrics/classification.hpp"
#include "lingkit/metrics/report.hpp"
#include "lingkit/metrics/spans.hpp"
#include "lingkit/similarity/jaccard.hpp"
#include "lingkit/subword/bpe.hpp"
#include "lingkit/subword/sampling.hpp"
#include "lingkit/subword/wordpiece.hpp"
