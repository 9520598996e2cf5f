// Copyright 2026 The EPRQDBA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPRQDBA_TRACE_H
#define EPRQDBA_TRACE_H

#include <cstddef>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace eprqdba {

/// Kinds of trace events.
enum class TraceKind { kSend, kDeliver, kDrop, kCheck, kRule, kDecision, kViolation };
const char *trace_kind_name(TraceKind kind);

/// One trace event. Serialized as a single JSON object with keys
/// run_id, round, kind, sender, recipient, digest, rule, result and, when
/// present, symbols and detail.
struct TraceRecord {
  std::string run_id;
  int round = 0;
  TraceKind kind = TraceKind::kSend;
  std::string sender;
  std::string recipient;
  std::string digest;
  std::string rule;
  std::string result;
  std::optional<std::size_t> symbols;
  nlohmann::json detail;

  nlohmann::json to_json() const;
};

/// Append-only event log. append() may be called from several threads.
class TraceLog {
 public:
  TraceLog() = default;
  TraceLog(const TraceLog &other);
  TraceLog &operator=(const TraceLog &other);

  void append(TraceRecord record);
  const std::vector<TraceRecord> &records() const { return records_; }
  std::size_t count(TraceKind kind) const;

  /// One JSON object per line.
  void write_jsonl(std::ostream &out) const;
  std::string to_jsonl() const;

 private:
  mutable std::mutex mutex_;
  std::vector<TraceRecord> records_;
};

}  // namespace eprqdba

#endif  // EPRQDBA_TRACE_H
