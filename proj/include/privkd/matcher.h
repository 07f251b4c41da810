// privkd/matcher.h

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

#ifndef PRIVKD_MATCHER_H_
#define PRIVKD_MATCHER_H_

#include <optional>
#include <vector>

#include "privkd/corpus.h"
#include "privkd/pool_index.h"

namespace privkd {

// Normalized L1 distance between the phone durations of two occurrences of
// the same word: mean over phones of |duration_a - duration_b| in frames.
// Symmetric; 0 iff the per-phone durations are identical. Throws
// "incomparable words" when the words or their phone identity sequences
// differ.
double PhoneDistance(const WordAlign& a, const WordAlign& b);

// Frame-to-frame mapping that reorganizes the selected pool word to the
// original word's duration. Phone pairs are resampled independently: target
// offset k of a phone with Lo frames reads source offset floor(k*Lq/Lo) of
// the paired source phone with Lq frames, so frames are copied (stretch) or
// dropped (shrink) in the context of their neighbors. The result has exactly
// the original word's frame count, offsets are non-decreasing, and every
// offset stays inside the paired phone's source span. Requires identical
// phone identity sequences.
std::vector<int> ReorganizeFrames(const WordAlign& selected,
                                  const WordAlign& original);

// Whole-word variant used for word-level matches, where phone sequences may
// differ: the word is treated as a single pseudo-phone. Identity whenever
// the totals are equal (always the case for word_exact candidates).
std::vector<int> ReorganizeFramesWholeWord(const WordAlign& selected,
                                           const WordAlign& original);

// Number of equal meta-attribute fields (gender, channel, style, domain),
// 0..4.
int MetaScore(const UtteranceMeta& a, const UtteranceMeta& b);

// The selected alternative for one original word occurrence.
struct MatchResult {
  WordOccurrence original;
  WordOccurrence selected;
  ConstraintLevel level;
  double distance = 0.0;  // normalized L1 phone distance; 0 for exact kinds
  int meta_score = 0;     // matching meta-attributes vs the original
  // One source frame offset (within the selected word) per original word
  // frame; non-decreasing.
  std::vector<int> frame_map;
};

// Picks the single best pool alternative for the target word, or nullopt
// when no candidate satisfies the constraint. The winner is the unique
// minimum of the total order (distance asc, meta_score desc, (utt_id,
// word_index) asc); meta is the target utterance's meta. Pure function of
// its inputs.
std::optional<MatchResult> MatchWord(const WordOccurrence& target,
                                     const PoolIndex& index,
                                     const ConstraintLevel& level,
                                     const UtteranceMeta& meta);

// Outcome for one original word occurrence; result is empty for unmatched
// words.
struct MatchOutcome {
  WordOccurrence original;
  std::optional<MatchResult> result;
};

// Per-word outcomes for a whole corpus, in corpus order, covering every
// original word occurrence that is not on the index's stop list.
struct MatchReport {
  ConstraintLevel level;
  std::vector<MatchOutcome> outcomes;

  int matched_count() const;
  int total_count() const { return static_cast<int>(outcomes.size()); }
  // matched_count / total_count; 0 when the corpus has no eligible words.
  double matching_ratio() const;
};

MatchReport MatchCorpus(const std::vector<UtteranceRecord>& originals,
                        const PoolIndex& index, const ConstraintLevel& level);

}  // namespace privkd

#endif  // PRIVKD_MATCHER_H_
