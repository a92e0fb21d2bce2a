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

#include "tierforge/docset.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tierforge {

namespace {

std::size_t words_for(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

DocSet DocSet::empty(std::size_t universe, Rep rep) {
  DocSet s;
  s.rep_ = rep;
  s.universe_ = universe;
  if (rep == Rep::kDense) s.words_.assign(words_for(universe), 0);
  return s;
}

DocSet DocSet::from_sorted(std::vector<DocId> ids, std::size_t universe,
                           Rep rep) {
  DocSet s = empty(universe, rep);
  if (rep == Rep::kSparse) {
    s.count_ = ids.size();
    s.ids_ = std::move(ids);
    return s;
  }
  for (DocId id : ids) {
    assert(id < universe);
    s.words_[id / 64] |= std::uint64_t{1} << (id % 64);
  }
  s.count_ = ids.size();
  return s;
}

bool DocSet::contains(DocId id) const {
  if (static_cast<std::size_t>(id) >= universe_) return false;
  if (rep_ == Rep::kDense)
    return (words_[id / 64] >> (id % 64)) & std::uint64_t{1};
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

void DocSet::append(DocId id) {
  assert(static_cast<std::size_t>(id) < universe_);
  if (rep_ == Rep::kDense) {
    assert(!contains(id));
    words_[id / 64] |= std::uint64_t{1} << (id % 64);
  } else {
    assert(ids_.empty() || ids_.back() < id);
    ids_.push_back(id);
  }
  ++count_;
}

void DocSet::union_in(const DocSet& other) {
  assert(universe_ == other.universe_);
  if (rep_ == Rep::kDense && other.rep_ == Rep::kDense) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] |= other.words_[w];
      total += static_cast<std::size_t>(__builtin_popcountll(words_[w]));
    }
    count_ = total;
    return;
  }
  if (rep_ == Rep::kDense) {  // other sparse
    for (DocId id : other.ids_) {
      std::uint64_t& word = words_[id / 64];
      const std::uint64_t bit = std::uint64_t{1} << (id % 64);
      count_ += !(word & bit);
      word |= bit;
    }
    return;
  }
  // sparse accumulator: merge
  std::vector<DocId> other_ids = other.ids();
  std::vector<DocId> merged;
  merged.reserve(ids_.size() + other_ids.size());
  std::set_union(ids_.begin(), ids_.end(), other_ids.begin(), other_ids.end(),
                 std::back_inserter(merged));
  ids_ = std::move(merged);
  count_ = ids_.size();
}

std::size_t DocSet::count_missing_in(const DocSet& other) const {
  assert(universe_ == other.universe_);
  if (rep_ == Rep::kDense && other.rep_ == Rep::kDense) {
    std::size_t missing = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      missing +=
          static_cast<std::size_t>(__builtin_popcountll(words_[w] & ~other.words_[w]));
    return missing;
  }
  std::size_t missing = 0;
  for_each([&](DocId id) { missing += !other.contains(id); });
  return missing;
}

DocSet DocSet::intersect(const DocSet& other) const {
  assert(universe_ == other.universe_);
  DocSet out = empty(universe_, rep_);
  if (rep_ == Rep::kDense && other.rep_ == Rep::kDense) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      out.words_[w] = words_[w] & other.words_[w];
      total += static_cast<std::size_t>(__builtin_popcountll(out.words_[w]));
    }
    out.count_ = total;
    return out;
  }
  if (rep_ == Rep::kSparse && other.rep_ == Rep::kSparse) {
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(out.ids_));
    out.count_ = out.ids_.size();
    return out;
  }
  // Mixed: walk the sparse side, probe the dense side.
  const DocSet& sparse = rep_ == Rep::kSparse ? *this : other;
  const DocSet& dense = rep_ == Rep::kSparse ? other : *this;
  std::vector<DocId> hits;
  for (DocId id : sparse.ids_)
    if (dense.contains(id)) hits.push_back(id);
  return from_sorted(std::move(hits), universe_, rep_);
}

DocSet DocSet::to_rep(Rep rep) const {
  if (rep == rep_) return *this;
  return from_sorted(ids(), universe_, rep);
}

std::vector<DocId> DocSet::ids() const {
  if (rep_ == Rep::kSparse) return ids_;
  std::vector<DocId> out;
  out.reserve(count_);
  for_each([&](DocId id) { out.push_back(id); });
  return out;
}

bool DocSet::operator==(const DocSet& other) const {
  if (universe_ != other.universe_ || count_ != other.count_) return false;
  if (rep_ == other.rep_)
    return rep_ == Rep::kDense ? words_ == other.words_ : ids_ == other.ids_;
  return ids() == other.ids();
}

}  // namespace tierforge
