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

#include "eprqdba/trace.h"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace eprqdba {

const char *trace_kind_name(TraceKind kind) {
  switch (kind) {
    case TraceKind::kSend:
      return "send";
    case TraceKind::kDeliver:
      return "deliver";
    case TraceKind::kDrop:
      return "drop";
    case TraceKind::kCheck:
      return "check";
    case TraceKind::kRule:
      return "rule";
    case TraceKind::kDecision:
      return "decision";
    case TraceKind::kViolation:
      return "violation";
  }
  return "unknown";
}

nlohmann::json TraceRecord::to_json() const {
  nlohmann::json j = {
      {"run_id", run_id}, {"round", round},   {"kind", trace_kind_name(kind)},
      {"sender", sender}, {"recipient", recipient}, {"digest", digest},
      {"rule", rule},     {"result", result},
  };
  if (symbols) {
    j["symbols"] = *symbols;
  }
  if (!detail.is_null()) {
    j["detail"] = detail;
  }
  return j;
}

TraceLog::TraceLog(const TraceLog &other) {
  std::lock_guard lock(other.mutex_);
  records_ = other.records_;
}

TraceLog &TraceLog::operator=(const TraceLog &other) {
  if (this != &other) {
    std::scoped_lock lock(mutex_, other.mutex_);
    records_ = other.records_;
  }
  return *this;
}

void TraceLog::append(TraceRecord record) {
  std::lock_guard lock(mutex_);
  records_.push_back(std::move(record));
}

std::size_t TraceLog::count(TraceKind kind) const {
  std::lock_guard lock(mutex_);
  return static_cast<std::size_t>(std::count_if(
      records_.begin(), records_.end(), [kind](const TraceRecord &r) { return r.kind == kind; }));
}

void TraceLog::write_jsonl(std::ostream &out) const {
  std::lock_guard lock(mutex_);
  for (const auto &r : records_) {
    out << r.to_json().dump() << '\n';
  }
}

std::string TraceLog::to_jsonl() const {
  std::ostringstream out;
  write_jsonl(out);
  return out.str();
}

}  // namespace eprqdba
