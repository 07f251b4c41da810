// privkd/pool_index.cc

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

#include "privkd/pool_index.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "privkd/matcher.h"

namespace privkd {

namespace {

// FNV-1a based key hashing. The salt separates the four key spaces.
constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t HashBytes(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) {
    h = (h ^ c) * kFnvPrime;
  }
  h = (h ^ 0xff) * kFnvPrime;  // terminator so "ab","c" != "a","bc"
  return h;
}

std::uint64_t HashInt(std::uint64_t h, int v) {
  auto u = static_cast<std::uint64_t>(static_cast<std::int64_t>(v));
  for (int i = 0; i < 8; ++i) {
    h = (h ^ (u & 0xff)) * kFnvPrime;
    u >>= 8;
  }
  return h;
}

std::uint64_t WordDurationKey(const WordAlign& w) {
  std::uint64_t h = HashInt(HashBytes(kFnvOffset, w.word), 1);
  return HashInt(h, w.num_frames);
}

std::uint64_t PhoneSeqKey(const WordAlign& w) {
  std::uint64_t h = HashInt(HashBytes(kFnvOffset, w.word), 2);
  for (const PhoneAlign& p : w.phones) h = HashInt(h, p.num_frames);
  return h;
}

std::uint64_t PhoneIdentityKey(const WordAlign& w) {
  std::uint64_t h = HashInt(HashBytes(kFnvOffset, w.word), 3);
  for (const PhoneAlign& p : w.phones) h = HashBytes(h, p.phone);
  return h;
}

std::uint64_t StateSeqKey(const WordAlign& w) {
  std::uint64_t h = HashInt(HashBytes(kFnvOffset, w.word), 4);
  for (const PhoneAlign& p : w.phones) {
    for (int d : p.state_durations) h = HashInt(h, d);
  }
  return h;
}

bool SamePhoneIdentities(const WordAlign& a, const WordAlign& b) {
  if (a.phones.size() != b.phones.size()) return false;
  for (std::size_t i = 0; i < a.phones.size(); ++i) {
    if (a.phones[i].phone != b.phones[i].phone) return false;
  }
  return true;
}

bool SamePhoneDurations(const WordAlign& a, const WordAlign& b) {
  if (a.phones.size() != b.phones.size()) return false;
  for (std::size_t i = 0; i < a.phones.size(); ++i) {
    if (a.phones[i].num_frames != b.phones[i].num_frames) return false;
  }
  return true;
}

bool SameStateDurations(const WordAlign& a, const WordAlign& b) {
  if (a.phones.size() != b.phones.size()) return false;
  for (std::size_t i = 0; i < a.phones.size(); ++i) {
    if (a.phones[i].state_durations != b.phones[i].state_durations)
      return false;
  }
  return true;
}

// Exact re-verification of a bucket candidate; doubles as hash-collision
// resolution.
bool Satisfies(const WordAlign& target, const WordAlign& cand,
               const ConstraintLevel& level) {
  if (cand.word != target.word) return false;
  switch (level.kind) {
    case ConstraintKind::kWordExact:
      return cand.num_frames == target.num_frames;
    case ConstraintKind::kPhoneMargin:
      return SamePhoneIdentities(target, cand) &&
             PhoneDistance(target, cand) <= level.margin;
    case ConstraintKind::kPhoneExact:
      return SamePhoneIdentities(target, cand) &&
             SamePhoneDurations(target, cand);
    case ConstraintKind::kStateExact:
      return SamePhoneIdentities(target, cand) &&
             SamePhoneDurations(target, cand) &&
             SameStateDurations(target, cand);
  }
  return false;
}

}  // namespace

ConstraintLevel ConstraintLevel::PhoneMargin(double m) {
  if (m < 0.0 || !std::isfinite(m))
    throw std::invalid_argument("phone margin must be a finite value >= 0");
  return {ConstraintKind::kPhoneMargin, m};
}

std::string ToString(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kWordExact: return "word_exact";
    case ConstraintKind::kPhoneMargin: return "phone_margin";
    case ConstraintKind::kPhoneExact: return "phone_exact";
    case ConstraintKind::kStateExact: return "state_exact";
  }
  return "word_exact";
}

ConstraintKind ConstraintKindFromString(const std::string& s) {
  if (s == "word_exact") return ConstraintKind::kWordExact;
  if (s == "phone_margin") return ConstraintKind::kPhoneMargin;
  if (s == "phone_exact") return ConstraintKind::kPhoneExact;
  if (s == "state_exact") return ConstraintKind::kStateExact;
  throw std::runtime_error("unknown constraint kind '" + s + "'");
}

PoolIndex PoolIndex::Build(std::vector<UtteranceRecord> pool,
                           std::set<std::string> stop_list,
                           int states_per_phone) {
  PoolIndex index;
  index.pool_ = std::move(pool);
  index.stop_list_ = std::move(stop_list);

  for (const UtteranceRecord& rec : index.pool_) {
    std::vector<std::string> violations =
        ValidateUtterance(rec, states_per_phone);
    if (!violations.empty()) {
      throw std::runtime_error("PoolIndex: invalid record: " + violations[0]);
    }
  }

  for (const UtteranceRecord& rec : index.pool_) {
    for (int wi = 0; wi < static_cast<int>(rec.words.size()); ++wi) {
      const WordAlign& w = rec.words[wi];
      if (index.stop_list_.count(w.word)) continue;
      const auto id = static_cast<std::uint32_t>(index.occurrences_.size());
      index.occurrences_.push_back(WordOccurrence{rec.utt_id, wi, &rec, &w});
      index.by_word_duration_[WordDurationKey(w)].push_back(id);
      index.by_phone_seq_[PhoneSeqKey(w)].push_back(id);
      index.by_phone_identity_[PhoneIdentityKey(w)].push_back(id);
      index.by_state_seq_[StateSeqKey(w)].push_back(id);
    }
  }

  auto by_occurrence = [&](std::uint32_t a, std::uint32_t b) {
    return index.occurrences_[a] < index.occurrences_[b];
  };
  for (auto* map : {&index.by_word_duration_, &index.by_phone_seq_,
                    &index.by_phone_identity_, &index.by_state_seq_}) {
    for (auto& [key, list] : *map) {
      std::sort(list.begin(), list.end(), by_occurrence);
    }
  }
  return index;
}

std::vector<WordOccurrence> PoolIndex::Query(const WordAlign& target,
                                             const ConstraintLevel& level,
                                             std::string_view exclude_utt) const {
  const std::unordered_map<std::uint64_t, CandidateList>* map = nullptr;
  std::uint64_t key = 0;
  switch (level.kind) {
    case ConstraintKind::kWordExact:
      map = &by_word_duration_;
      key = WordDurationKey(target);
      break;
    case ConstraintKind::kPhoneMargin:
      map = &by_phone_identity_;
      key = PhoneIdentityKey(target);
      break;
    case ConstraintKind::kPhoneExact:
      map = &by_phone_seq_;
      key = PhoneSeqKey(target);
      break;
    case ConstraintKind::kStateExact:
      map = &by_state_seq_;
      key = StateSeqKey(target);
      break;
  }

  std::vector<WordOccurrence> result;
  auto it = map->find(key);
  if (it == map->end()) return result;
  for (std::uint32_t id : it->second) {
    const WordOccurrence& occ = occurrences_[id];
    if (!exclude_utt.empty() && occ.utt_id == exclude_utt) continue;
    if (Satisfies(target, *occ.word, level)) result.push_back(occ);
  }
  return result;  // bucket lists are pre-sorted, filtering preserves order
}

PoolIndex BuildIndex(std::vector<UtteranceRecord> pool,
                     std::set<std::string> stop_list, int states_per_phone) {
  return PoolIndex::Build(std::move(pool), std::move(stop_list),
                          states_per_phone);
}

std::vector<WordOccurrence> QueryCandidates(const PoolIndex& index,
                                            const WordAlign& target,
                                            const ConstraintLevel& level,
                                            std::string_view exclude_utt) {
  return index.Query(target, level, exclude_utt);
}

std::vector<WordOccurrence> BruteForceCandidates(
    const std::vector<UtteranceRecord>& pool, const WordAlign& target,
    const ConstraintLevel& level, std::string_view exclude_utt,
    const std::set<std::string>* stop_list) {
  // Deliberately restates every predicate from first principles instead of
  // sharing PoolIndex's verification path.
  auto same_identities = [](const WordAlign& a, const WordAlign& b) {
    if (a.phones.size() != b.phones.size()) return false;
    for (std::size_t i = 0; i < a.phones.size(); ++i) {
      if (a.phones[i].phone != b.phones[i].phone) return false;
    }
    return true;
  };

  std::vector<WordOccurrence> result;
  for (const UtteranceRecord& rec : pool) {
    if (!exclude_utt.empty() && rec.utt_id == exclude_utt) continue;
    for (int wi = 0; wi < static_cast<int>(rec.words.size()); ++wi) {
      const WordAlign& cand = rec.words[wi];
      if (cand.word != target.word) continue;
      if (stop_list != nullptr && stop_list->count(cand.word)) continue;

      bool ok = false;
      switch (level.kind) {
        case ConstraintKind::kWordExact: {
          int ct = 0, tt = 0;
          for (const PhoneAlign& p : cand.phones) ct += p.num_frames;
          for (const PhoneAlign& p : target.phones) tt += p.num_frames;
          ok = ct == tt;
          break;
        }
        case ConstraintKind::kPhoneMargin: {
          if (!same_identities(target, cand)) break;
          long long abs_sum = 0;
          for (std::size_t i = 0; i < target.phones.size(); ++i) {
            abs_sum += std::llabs(static_cast<long long>(
                target.phones[i].num_frames - cand.phones[i].num_frames));
          }
          ok = static_cast<double>(abs_sum) /
                   static_cast<double>(target.phones.size()) <=
               level.margin;
          break;
        }
        case ConstraintKind::kPhoneExact: {
          if (!same_identities(target, cand)) break;
          ok = true;
          for (std::size_t i = 0; i < target.phones.size(); ++i) {
            if (target.phones[i].num_frames != cand.phones[i].num_frames) {
              ok = false;
              break;
            }
          }
          break;
        }
        case ConstraintKind::kStateExact: {
          if (!same_identities(target, cand)) break;
          ok = true;
          for (std::size_t i = 0; i < target.phones.size(); ++i) {
            if (target.phones[i].num_frames != cand.phones[i].num_frames ||
                target.phones[i].state_durations !=
                    cand.phones[i].state_durations) {
              ok = false;
              break;
            }
          }
          break;
        }
      }
      if (ok) result.push_back(WordOccurrence{rec.utt_id, wi, &rec, &cand});
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace privkd
