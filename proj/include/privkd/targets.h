// privkd/targets.h

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

#ifndef PRIVKD_TARGETS_H_
#define PRIVKD_TARGETS_H_

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace privkd {

// Sum tolerance for any distribution handled by the toolkit.
inline constexpr double kProbSumTolerance = 1e-6;

// Sparse top-K soft target for one 10 ms frame: (label, probability) entries
// in descending probability order (ties by ascending label). Probabilities
// are in (0, 1], labels unique, and the entries sum to 1 within
// kProbSumTolerance.
struct SoftTargetFrame {
  std::vector<std::pair<int, double>> entries;

  bool operator==(const SoftTargetFrame&) const = default;
};

// Returns an empty string when the frame satisfies every invariant above,
// otherwise a description of the first violation. max_entries <= 0 disables
// the entry-count check.
std::string CheckSoftTargetFrame(const SoftTargetFrame& frame, int max_entries);

SoftTargetFrame OneHotFrame(int label);

// A teacher posterior source. Implementations must return a vector of
// num_labels non-negative values summing to 1 within kProbSumTolerance.
class PosteriorSource {
 public:
  virtual ~PosteriorSource() = default;
  virtual std::vector<double> Posterior(std::span<const double> feature,
                                        int num_labels) const = 0;
};

enum class ViewSource { kOrig, kPool };

// One soft view of a frame. Pool views carry the provenance of the selected
// pool word; orig views leave pool_utt empty and pool_word at -1.
struct SoftView {
  ViewSource src = ViewSource::kOrig;
  std::string pool_utt;
  int pool_word = -1;
  SoftTargetFrame dist;

  bool operator==(const SoftView&) const = default;
};

// One frame of training material: the degraded-view feature vector, the hard
// label, and 1..2 soft views (at most one orig and one pool).
struct TrainingExample {
  std::string utt_id;
  int frame = 0;
  std::vector<double> feat;
  int hard = 0;
  std::vector<SoftView> views;

  bool operator==(const TrainingExample&) const = default;
};

// A labeled frame for evaluation.
struct LabeledFrame {
  std::vector<double> feat;
  int hard = 0;

  bool operator==(const LabeledFrame&) const = default;
};

// Per-utterance frame features and hard labels; feats and hard are parallel,
// one entry per frame.
struct UtteranceFrames {
  std::vector<std::vector<double>> feats;
  std::vector<int> hard;

  bool operator==(const UtteranceFrames&) const = default;
};

// Ordered maps keep downstream iteration and serialization deterministic.
using FeatureMap = std::map<std::string, UtteranceFrames>;
using SoftLabelMap = std::map<std::string, std::vector<SoftTargetFrame>>;

// Flattens a feature map into evaluation frames, ordered by utt_id then
// frame index.
std::vector<LabeledFrame> FlattenFrames(const FeatureMap& feats);

}  // namespace privkd

#endif  // PRIVKD_TARGETS_H_
