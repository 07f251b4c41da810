// privkd/targets.cc

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

#include "privkd/targets.h"

#include <cmath>
#include <set>

namespace privkd {

std::string CheckSoftTargetFrame(const SoftTargetFrame& frame,
                                 int max_entries) {
  if (frame.entries.empty()) return "no entries";
  if (max_entries > 0 &&
      static_cast<int>(frame.entries.size()) > max_entries) {
    return "more than " + std::to_string(max_entries) + " entries";
  }
  std::set<int> labels;
  double sum = 0.0;
  double prev = 2.0;
  for (const auto& [label, prob] : frame.entries) {
    if (label < 0) return "negative label " + std::to_string(label);
    if (!labels.insert(label).second)
      return "duplicate label " + std::to_string(label);
    if (!(prob > 0.0) || prob > 1.0)
      return "probability " + std::to_string(prob) + " outside (0, 1]";
    if (prob > prev) return "entries not in descending probability order";
    prev = prob;
    sum += prob;
  }
  if (std::abs(sum - 1.0) > kProbSumTolerance)
    return "probabilities sum to " + std::to_string(sum);
  return {};
}

SoftTargetFrame OneHotFrame(int label) {
  return SoftTargetFrame{{{label, 1.0}}};
}

std::vector<LabeledFrame> FlattenFrames(const FeatureMap& feats) {
  std::vector<LabeledFrame> out;
  for (const auto& [utt_id, frames] : feats) {
    for (std::size_t i = 0; i < frames.feats.size(); ++i) {
      out.push_back(LabeledFrame{frames.feats[i], frames.hard[i]});
    }
  }
  return out;
}

}  // namespace privkd
