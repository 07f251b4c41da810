// privkd/corpus.cc

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

#include "privkd/corpus.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace privkd {

namespace {

std::string WordTag(int word_index, const WordAlign& w) {
  return "word " + std::to_string(word_index) + " ('" + w.word + "')";
}

}  // namespace

WordOccurrence MakeOccurrence(const UtteranceRecord& rec, int word_index) {
  if (word_index < 0 || word_index >= static_cast<int>(rec.words.size())) {
    throw std::out_of_range("MakeOccurrence: word index " +
                            std::to_string(word_index) + " out of range for '" +
                            rec.utt_id + "'");
  }
  return WordOccurrence{rec.utt_id, word_index, &rec, &rec.words[word_index]};
}

std::vector<std::string> ValidateUtterance(const UtteranceRecord& rec,
                                           int states_per_phone) {
  std::vector<std::string> violations;
  auto add = [&](const std::string& msg) {
    violations.push_back("utterance '" + rec.utt_id + "': " + msg);
  };

  if (rec.num_frames < 0) add("negative num_frames");

  int prev_end = 0;
  for (int wi = 0; wi < static_cast<int>(rec.words.size()); ++wi) {
    const WordAlign& w = rec.words[wi];
    const std::string tag = WordTag(wi, w);

    if (w.num_frames < 1) add(tag + ": num_frames < 1");
    if (w.phones.empty()) add(tag + ": no phones");
    if (w.start_frame < 0) add(tag + ": negative start_frame");
    if (w.start_frame < prev_end)
      add(tag + ": overlaps or precedes the previous word");
    if (w.start_frame + w.num_frames > rec.num_frames)
      add(tag + ": span [" + std::to_string(w.start_frame) + ", " +
          std::to_string(w.start_frame + w.num_frames) +
          ") exceeds utterance num_frames " + std::to_string(rec.num_frames));
    prev_end = w.start_frame + w.num_frames;

    int phone_sum = 0;
    for (int pi = 0; pi < static_cast<int>(w.phones.size()); ++pi) {
      const PhoneAlign& p = w.phones[pi];
      const std::string ptag =
          tag + " phone " + std::to_string(pi) + " ('" + p.phone + "')";
      phone_sum += p.num_frames;

      if (static_cast<int>(p.state_durations.size()) != states_per_phone)
        add(ptag + ": " + std::to_string(p.state_durations.size()) +
            " states, expected " + std::to_string(states_per_phone));
      int state_sum = 0;
      for (int d : p.state_durations) {
        if (d < 1) add(ptag + ": state duration < 1");
        state_sum += d;
      }
      if (state_sum != p.num_frames)
        add(ptag + ": state sum " + std::to_string(state_sum) +
            " != num_frames " + std::to_string(p.num_frames));
    }
    if (!w.phones.empty() && phone_sum != w.num_frames)
      add(tag + ": phone sum " + std::to_string(phone_sum) + " != num_frames " +
          std::to_string(w.num_frames));
  }
  return violations;
}

int WordTotalFrames(const WordAlign& w) { return w.num_frames; }

double PhoneDurationMean(const std::vector<UtteranceRecord>& corpus) {
  long long total = 0;
  long long count = 0;
  for (const UtteranceRecord& rec : corpus) {
    for (const WordAlign& w : rec.words) {
      for (const PhoneAlign& p : w.phones) {
        total += p.num_frames;
        ++count;
      }
    }
  }
  if (count == 0) throw std::runtime_error("PhoneDurationMean: no phones");
  return static_cast<double>(total) / static_cast<double>(count);
}

std::string ToString(Gender g) {
  switch (g) {
    case Gender::kFemale: return "female";
    case Gender::kMale: return "male";
    case Gender::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string ToString(Channel c) {
  switch (c) {
    case Channel::kClose: return "close";
    case Channel::kFar: return "far";
    case Channel::kTelephone: return "telephone";
    case Channel::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string ToString(Style s) {
  switch (s) {
    case Style::kRead: return "read";
    case Style::kSpontaneous: return "spontaneous";
    case Style::kUnknown: return "unknown";
  }
  return "unknown";
}

Gender GenderFromString(const std::string& s) {
  if (s == "female") return Gender::kFemale;
  if (s == "male") return Gender::kMale;
  if (s == "unknown") return Gender::kUnknown;
  throw std::runtime_error("unknown gender value '" + s + "'");
}

Channel ChannelFromString(const std::string& s) {
  if (s == "close") return Channel::kClose;
  if (s == "far") return Channel::kFar;
  if (s == "telephone") return Channel::kTelephone;
  if (s == "unknown") return Channel::kUnknown;
  throw std::runtime_error("unknown channel value '" + s + "'");
}

Style StyleFromString(const std::string& s) {
  if (s == "read") return Style::kRead;
  if (s == "spontaneous") return Style::kSpontaneous;
  if (s == "unknown") return Style::kUnknown;
  throw std::runtime_error("unknown style value '" + s + "'");
}

}  // namespace privkd
