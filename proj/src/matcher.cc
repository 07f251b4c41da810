// privkd/matcher.cc

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

#include "privkd/matcher.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <tuple>

namespace privkd {

namespace {

void RequireComparable(const WordAlign& a, const WordAlign& b) {
  bool ok = a.word == b.word && a.phones.size() == b.phones.size();
  if (ok) {
    for (std::size_t i = 0; i < a.phones.size(); ++i) {
      if (a.phones[i].phone != b.phones[i].phone) {
        ok = false;
        break;
      }
    }
  }
  if (!ok) {
    throw std::runtime_error("incomparable words: '" + a.word + "' vs '" +
                             b.word + "' (word or phone sequences differ)");
  }
}

// floor(k * lq / lo) for each target offset k, shifted to the source span.
void AppendPhoneMap(int src_start, int lq, int lo, std::vector<int>* map) {
  for (int k = 0; k < lo; ++k) {
    const auto src = static_cast<std::int64_t>(k) * lq / lo;
    map->push_back(src_start + static_cast<int>(src));
  }
}

}  // namespace

double PhoneDistance(const WordAlign& a, const WordAlign& b) {
  RequireComparable(a, b);
  if (a.phones.empty())
    throw std::runtime_error("incomparable words: no phones");
  long long abs_sum = 0;
  for (std::size_t i = 0; i < a.phones.size(); ++i) {
    abs_sum += std::llabs(static_cast<long long>(a.phones[i].num_frames) -
                          static_cast<long long>(b.phones[i].num_frames));
  }
  return static_cast<double>(abs_sum) / static_cast<double>(a.phones.size());
}

std::vector<int> ReorganizeFrames(const WordAlign& selected,
                                  const WordAlign& original) {
  RequireComparable(selected, original);
  std::vector<int> map;
  map.reserve(original.num_frames);
  int src_start = 0;
  for (std::size_t i = 0; i < original.phones.size(); ++i) {
    const int lq = selected.phones[i].num_frames;
    const int lo = original.phones[i].num_frames;
    AppendPhoneMap(src_start, lq, lo, &map);
    src_start += lq;
  }
  return map;
}

std::vector<int> ReorganizeFramesWholeWord(const WordAlign& selected,
                                           const WordAlign& original) {
  std::vector<int> map;
  map.reserve(original.num_frames);
  AppendPhoneMap(0, selected.num_frames, original.num_frames, &map);
  return map;
}

int MetaScore(const UtteranceMeta& a, const UtteranceMeta& b) {
  int score = 0;
  if (a.gender == b.gender) ++score;
  if (a.channel == b.channel) ++score;
  if (a.style == b.style) ++score;
  if (a.domain_tag == b.domain_tag) ++score;
  return score;
}

std::optional<MatchResult> MatchWord(const WordOccurrence& target,
                                     const PoolIndex& index,
                                     const ConstraintLevel& level,
                                     const UtteranceMeta& meta) {
  if (target.word == nullptr)
    throw std::invalid_argument("MatchWord: unresolved target occurrence");
  const std::vector<WordOccurrence> candidates =
      index.Query(*target.word, level, target.utt_id);
  if (candidates.empty()) return std::nullopt;

  const WordOccurrence* best = nullptr;
  double best_distance = 0.0;
  int best_score = -1;
  for (const WordOccurrence& cand : candidates) {
    const double distance = level.kind == ConstraintKind::kPhoneMargin
                                ? PhoneDistance(*target.word, *cand.word)
                                : 0.0;
    const int score = MetaScore(meta, cand.utt->meta);
    // Candidates arrive sorted by (utt_id, word_index), so strict
    // improvement on (distance, -score) realizes the full total order.
    if (best == nullptr || distance < best_distance ||
        (distance == best_distance && score > best_score)) {
      best = &cand;
      best_distance = distance;
      best_score = score;
    }
  }

  MatchResult result;
  result.original = target;
  result.selected = *best;
  result.level = level;
  result.distance = best_distance;
  result.meta_score = best_score;
  result.frame_map =
      level.kind == ConstraintKind::kWordExact
          ? ReorganizeFramesWholeWord(*best->word, *target.word)
          : ReorganizeFrames(*best->word, *target.word);
  return result;
}

int MatchReport::matched_count() const {
  int n = 0;
  for (const MatchOutcome& o : outcomes) {
    if (o.result.has_value()) ++n;
  }
  return n;
}

double MatchReport::matching_ratio() const {
  if (outcomes.empty()) return 0.0;
  return static_cast<double>(matched_count()) /
         static_cast<double>(outcomes.size());
}

MatchReport MatchCorpus(const std::vector<UtteranceRecord>& originals,
                        const PoolIndex& index, const ConstraintLevel& level) {
  MatchReport report;
  report.level = level;
  for (const UtteranceRecord& rec : originals) {
    for (int wi = 0; wi < static_cast<int>(rec.words.size()); ++wi) {
      if (index.stop_list().count(rec.words[wi].word)) continue;
      const WordOccurrence occ = MakeOccurrence(rec, wi);
      report.outcomes.push_back(
          MatchOutcome{occ, MatchWord(occ, index, level, rec.meta)});
    }
  }
  return report;
}

}  // namespace privkd
