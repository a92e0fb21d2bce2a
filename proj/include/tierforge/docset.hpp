// Copyright 2026 The Authors.
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

// Exact document-id sets with two interchangeable representations:
// a dense bitset (fast word-wise union/intersection/popcount, the default
// for corpora up to kDefaultDenseThreshold documents) and a sorted-id
// array (compact for small match sets over large corpora). All set
// operations are exact; cardinality is kept in sync with the contents.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tierforge {

using DocId = std::uint32_t;

class DocSet {
 public:
  enum class Rep : std::uint8_t { kDense, kSparse };

  // Corpora at or below this many documents default to the dense bitset.
  static constexpr std::size_t kDefaultDenseThreshold = std::size_t{1} << 24;

  DocSet() = default;

  static Rep pick_rep(std::size_t universe,
                      std::size_t dense_threshold = kDefaultDenseThreshold) {
    return universe <= dense_threshold ? Rep::kDense : Rep::kSparse;
  }

  static DocSet empty(std::size_t universe, Rep rep);
  // `ids` must be strictly increasing and < universe.
  static DocSet from_sorted(std::vector<DocId> ids, std::size_t universe,
                            Rep rep);

  Rep rep() const { return rep_; }
  std::size_t universe() const { return universe_; }
  std::size_t count() const { return count_; }
  bool empty_set() const { return count_ == 0; }

  bool contains(DocId id) const;

  // Appends an id strictly greater than every id already present.
  void append(DocId id);

  // this |= other. Any representation mix is accepted.
  void union_in(const DocSet& other);

  // |this \ other|.
  std::size_t count_missing_in(const DocSet& other) const;

  // Set intersection; the result keeps this set's representation.
  DocSet intersect(const DocSet& other) const;

  DocSet to_rep(Rep rep) const;
  std::vector<DocId> ids() const;

  template <typename F>
  void for_each(F&& fn) const {
    if (rep_ == Rep::kSparse) {
      for (DocId id : ids_) fn(id);
      return;
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int tz = __builtin_ctzll(bits);
        fn(static_cast<DocId>(w * 64 + static_cast<std::size_t>(tz)));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const DocSet& other) const;

 private:
  Rep rep_ = Rep::kSparse;
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;  // dense only
  std::vector<DocId> ids_;            // sparse only, strictly increasing
};

}  // namespace tierforge
