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

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace lingkit {

// Splits [0, n) into at most `threads` contiguous chunks and runs
// fn(chunk_index, begin, end) for each. Chunk boundaries depend only on n and
// the chunk count, so callers that merge per-chunk results in chunk order get
// thread-count independent output whenever the merge is order-insensitive
// (integer sums) or chunk-ordered (concatenation).
template <typename Fn>
void parallel_chunks(size_t n, unsigned threads, Fn&& fn) {
  if (n == 0) return;
  const size_t chunks = std::clamp<size_t>(threads == 0 ? 1 : threads, 1, n);
  if (chunks == 1) {
    fn(size_t{0}, size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (size_t c = 0; c < chunks; ++c) {
      const size_t begin = n * c / chunks;
      const size_t end = n * (c + 1) / chunks;
      workers.emplace_back([&, c, begin, end] {
        try {
          fn(c, begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

template <typename Fn>
void parallel_for(size_t n, unsigned threads, Fn&& fn) {
  parallel_chunks(n, threads, [&](size_t, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) fn(i);
  });
}

inline size_t chunk_count(size_t n, unsigned threads) {
  if (n == 0) return 0;
  return std::clamp<size_t>(threads == 0 ? 1 : threads, 1, n);
}

}  // namespace lingkit
