// privkd/corpus.h

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

#ifndef PRIVKD_CORPUS_H_
#define PRIVKD_CORPUS_H_

#include <string>
#include <vector>

namespace privkd {

// Frame-level forced-alignment data model shared by the whole toolkit.
// One frame is 10 ms; every duration is an integer frame count. All types
// are plain immutable values once constructed and are safe to share across
// threads.

inline constexpr int kDefaultStatesPerPhone = 3;

enum class Gender { kFemale, kMale, kUnknown };
enum class Channel { kClose, kFar, kTelephone, kUnknown };
enum class Style { kRead, kSpontaneous, kUnknown };

// Speaker/recording attributes. Used only to break ties between otherwise
// equally good pool candidates.
struct UtteranceMeta {
  Gender gender = Gender::kUnknown;
  Channel channel = Channel::kUnknown;
  Style style = Style::kUnknown;
  std::string domain_tag;

  bool operator==(const UtteranceMeta&) const = default;
};

// Alignment of one phone: total duration plus its per-HMM-state split
// (beginning/middle/end for the default 3-state topology). Invariants:
// num_frames == sum(state_durations), every state duration >= 1, and the
// state count equals the configured states-per-phone.
struct PhoneAlign {
  std::string phone;
  int num_frames = 0;
  std::vector<int> state_durations;

  bool operator==(const PhoneAlign&) const = default;
};

// Alignment of one word. num_frames must equal the sum of the phone
// durations; phones must be non-empty.
struct WordAlign {
  std::string word;
  int start_frame = 0;
  int num_frames = 0;
  std::vector<PhoneAlign> phones;

  bool operator==(const WordAlign&) const = default;
};

// One aligned utterance: the unit of both the original corpus and the
// qualified data pool. Word spans must be ordered, non-overlapping and
// contained in [0, num_frames).
struct UtteranceRecord {
  std::string utt_id;
  std::string speaker_id;
  UtteranceMeta meta;
  int num_frames = 0;
  std::vector<WordAlign> words;

  bool operator==(const UtteranceRecord&) const = default;
};

// Address of one word occurrence, plus resolved views into the owning
// corpus. The pointers stay valid for as long as the corpus they were
// resolved against is alive and unmodified; identity, equality and ordering
// use only (utt_id, word_index).
struct WordOccurrence {
  std::string utt_id;
  int word_index = -1;
  const UtteranceRecord* utt = nullptr;
  const WordAlign* word = nullptr;

  friend bool operator==(const WordOccurrence& a, const WordOccurrence& b) {
    return a.utt_id == b.utt_id && a.word_index == b.word_index;
  }
  friend bool operator<(const WordOccurrence& a, const WordOccurrence& b) {
    if (a.utt_id != b.utt_id) return a.utt_id < b.utt_id;
    return a.word_index < b.word_index;
  }
};

// Builds a resolved occurrence for rec.words[word_index]. The record must
// outlive the returned value.
WordOccurrence MakeOccurrence(const UtteranceRecord& rec, int word_index);

// Checks every type invariant of the record. Returns one human-readable
// description per violation, each naming the offending word/phone index;
// empty means the record is well formed. Violations are data, not errors.
std::vector<std::string> ValidateUtterance(
    const UtteranceRecord& rec, int states_per_phone = kDefaultStatesPerPhone);

// Total duration of a word in frames. Equals the phone-duration sum for any
// valid word.
int WordTotalFrames(const WordAlign& w);

// Arithmetic mean of phone durations over the whole corpus, in frames.
// Throws if the corpus contains no phones.
double PhoneDurationMean(const std::vector<UtteranceRecord>& corpus);

// Enum <-> string names used by the file formats and the CLI.
std::string ToString(Gender g);
std::string ToString(Channel c);
std::string ToString(Style s);
Gender GenderFromString(const std::string& s);
Channel ChannelFromString(const std::string& s);
Style StyleFromString(const std::string& s);

}  // namespace privkd

#endif  // PRIVKD_CORPUS_H_
