// privkd/align_io.h

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

#ifndef PRIVKD_ALIGN_IO_H_
#define PRIVKD_ALIGN_IO_H_

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "privkd/corpus.h"
#include "privkd/matcher.h"
#include "privkd/targets.h"

namespace privkd {

// Line-delimited JSON readers/writers for every file the toolkit exchanges.
// One record per line. Serialization is deterministic: equal inputs produce
// byte-identical outputs. Real values are canonicalized to 8 significant
// decimal digits, which makes parse(write(x)) an identity for values the
// toolkit itself produces and parse-write-parse idempotent in general.
// Parsers reject anything that violates the data-model invariants; they
// throw std::runtime_error with the offending line number and never accept
// a record that ValidateUtterance (or the frame checks) would flag.
//
// Line schemas:
//   alignments  {"utt_id":s,"speaker":s,"meta":{"gender":s,"channel":s,
//               "style":s,"domain":s},"num_frames":n,"words":[{"w":s,
//               "start":n,"frames":n,"phones":[{"p":s,"frames":n,
//               "states":[n,...]}]}]}
//   soft labels {"utt_id":s,"frames":[[[label,prob],...],...]}
//   manifest    {"utt_id":s,"frame":n,"feat":[x,...],"hard":n,"views":
//               [{"src":"orig"|"pool","pool_utt":s?,"pool_word":n?,
//               "dist":[[label,prob],...]}]}
//   features    {"utt_id":s,"hard":[n,...],"feat":[[x,...],...]}
//   matches     {"utt":s,"word":n,"w":s,"level":s,"margin":x,"matched":b,
//               "sel_utt":s?,"sel_word":n?,"distance":x?,"meta_score":n?,
//               "frame_map":[n,...]?}

// Canonical rounding applied to every real value that crosses a file
// boundary: 8 significant decimal digits.
double RoundSig8(double v);

inline constexpr int kDefaultTopK = 50;

std::vector<UtteranceRecord> ParseAlignments(
    std::istream& in, int states_per_phone = kDefaultStatesPerPhone);
void WriteAlignments(const std::vector<UtteranceRecord>& records,
                     std::ostream& out,
                     int states_per_phone = kDefaultStatesPerPhone);

// companion supplies the expected per-utterance frame counts; every utt_id
// in the file must exist there and cover exactly its num_frames frames.
SoftLabelMap ParseSoftLabels(std::istream& in,
                             const std::vector<UtteranceRecord>& companion,
                             int max_k = kDefaultTopK);
void WriteSoftLabels(const SoftLabelMap& labels, std::ostream& out);

std::vector<TrainingExample> ParseManifest(std::istream& in);
void WriteManifest(const std::vector<TrainingExample>& examples,
                   std::ostream& out);

FeatureMap ParseFeatures(std::istream& in);
void WriteFeatures(const FeatureMap& feats, std::ostream& out);

// Match reports round-trip with unresolved occurrences (addresses only;
// the utt/word pointers are left null).
MatchReport ParseMatchReport(std::istream& in);
void WriteMatchReport(const MatchReport& report, std::ostream& out);

// Plain text, one word per line; blank lines ignored.
std::set<std::string> ParseStopList(std::istream& in);
void WriteStopList(const std::set<std::string>& words, std::ostream& out);

}  // namespace privkd

#endif  // PRIVKD_ALIGN_IO_H_
