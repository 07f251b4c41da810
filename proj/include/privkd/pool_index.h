// privkd/pool_index.h

// Copyright 2026  privkd authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVKD_POOL_INDEX_H_
#define PRIVKD_POOL_INDEX_H_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "privkd/corpus.h"

namespace privkd {

enum class ConstraintKind { kWordExact, kPhoneMargin, kPhoneExact, kStateExact };

// The duration constraint a pool candidate must satisfy against an original
// word, from loosest to strictest:
//   word_exact   same word, equal total frames
//   phone_margin same word, same phone identity sequence, normalized L1
//                phone-duration distance <= margin (totals may differ)
//   phone_exact  same word, same phone identity sequence, identical
//                per-phone durations
//   state_exact  phone_exact plus identical HMM-state duration sequences
// margin is only meaningful for phone_margin and must be 0 elsewhere.
struct ConstraintLevel {
  ConstraintKind kind = ConstraintKind::kWordExact;
  double margin = 0.0;

  static ConstraintLevel WordExact() { return {ConstraintKind::kWordExact, 0.0}; }
  static ConstraintLevel PhoneMargin(double m);
  static ConstraintLevel PhoneExact() { return {ConstraintKind::kPhoneExact, 0.0}; }
  static ConstraintLevel StateExact() { return {ConstraintKind::kStateExact, 0.0}; }

  bool operator==(const ConstraintLevel&) const = default;
};

std::string ToString(ConstraintKind kind);
ConstraintKind ConstraintKindFromString(const std::string& s);

// Immutable multi-level index over the qualified data pool. Owns a copy of
// the pool records; every WordOccurrence it returns points into that copy
// and stays valid as long as the index is alive. Safe for unlimited
// concurrent queries after construction. Movable, not copyable.
class PoolIndex {
 public:
  // Validates the pool, drops stop-listed words, and indexes every remaining
  // word occurrence under its word/duration, phone-duration, phone-identity
  // and state-duration keys. Throws when a record is invalid, naming it.
  static PoolIndex Build(std::vector<UtteranceRecord> pool,
                         std::set<std::string> stop_list,
                         int states_per_phone = kDefaultStatesPerPhone);

  PoolIndex(PoolIndex&&) = default;
  PoolIndex& operator=(PoolIndex&&) = default;
  PoolIndex(const PoolIndex&) = delete;
  PoolIndex& operator=(const PoolIndex&) = delete;

  // All candidates satisfying the constraint, sorted by (utt_id, word_index).
  // Candidates from the utterance named by exclude_utt are skipped so a word
  // can never be its own privileged view. Empty result when nothing matches.
  std::vector<WordOccurrence> Query(const WordAlign& target,
                                    const ConstraintLevel& level,
                                    std::string_view exclude_utt = {}) const;

  const std::vector<UtteranceRecord>& pool() const { return pool_; }
  const std::set<std::string>& stop_list() const { return stop_list_; }
  std::size_t num_occurrences() const { return occurrences_.size(); }

 private:
  PoolIndex() = default;

  using CandidateList = std::vector<std::uint32_t>;  // indices into occurrences_

  std::vector<UtteranceRecord> pool_;
  std::set<std::string> stop_list_;
  std::vector<WordOccurrence> occurrences_;
  // Keys hash the word plus the full duration / identity sequence; queries
  // re-verify candidates exactly, which also resolves hash collisions.
  std::unordered_map<std::uint64_t, CandidateList> by_word_duration_;
  std::unordered_map<std::uint64_t, CandidateList> by_phone_seq_;
  std::unordered_map<std::uint64_t, CandidateList> by_phone_identity_;
  std::unordered_map<std::uint64_t, CandidateList> by_state_seq_;
};

// Operation-style wrappers around PoolIndex.
PoolIndex BuildIndex(std::vector<UtteranceRecord> pool,
                     std::set<std::string> stop_list,
                     int states_per_phone = kDefaultStatesPerPhone);
std::vector<WordOccurrence> QueryCandidates(const PoolIndex& index,
                                            const WordAlign& target,
                                            const ConstraintLevel& level,
                                            std::string_view exclude_utt = {});

// Definitionally direct linear scan over the pool; the testing oracle for
// QueryCandidates. Returns the same candidates in the same order. stop_list,
// when given, mirrors the index's stop-listing (it only matters when the
// target word itself is stop-listed).
std::vector<WordOccurrence> BruteForceCandidates(
    const std::vector<UtteranceRecord>& pool, const WordAlign& target,
    const ConstraintLevel& level, std::string_view exclude_utt = {},
    const std::set<std::string>* stop_list = nullptr);

}  // namespace privkd

#endif  // PRIVKD_POOL_INDEX_H_
