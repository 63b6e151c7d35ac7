// Ordered session event log.
//
// Text form, one event per line:
//
//   <ordinal>\t<actor>\t<kind>\t<payload>
//
// preceded by the header line "# ghzqdc-transcript v1". The payload is a
// space-separated list of key=value tokens and never contains tabs or
// newlines. Event kinds starting with "announce" are public-channel
// messages.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ghzqdc {

enum class Verdict { Authenticated, AuthAborted, MessageDelivered, MessageDiscarded };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view s);

struct TranscriptEvent {
  std::size_t ordinal = 0;
  std::string actor;
  std::string kind;
  std::string payload;

  bool is_announcement() const { return kind.starts_with("announce"); }
  friend bool operator==(const TranscriptEvent&, const TranscriptEvent&) = default;
};

class SessionTranscript {
 public:
  static constexpr std::string_view kHeader = "# ghzqdc-transcript v1";

  const TranscriptEvent& append(std::string actor, std::string kind, std::string payload);
  void record_verdict(Verdict v, std::string payload);

  const std::vector<TranscriptEvent>& events() const { return events_; }
  std::optional<Verdict> final_verdict() const { return verdict_; }

  // First event with the given actor/kind, or nullptr.
  const TranscriptEvent* find(std::string_view actor, std::string_view kind) const;
  std::vector<const TranscriptEvent*> announcements() const;

  std::string to_text() const;
  static SessionTranscript from_text(std::string_view text);

  friend bool operator==(const SessionTranscript&, const SessionTranscript&) = default;

 private:
  std::vector<TranscriptEvent> events_;
  std::optional<Verdict> verdict_;
};

// Renders values for payload tokens.
std::string join_indices(const std::vector<std::size_t>& values);
template <typename Range, typename Fn>
std::string join_mapped(const Range& values, Fn&& fn) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out.push_back(',');
    out += fn(v);
  }
  return out.empty() ? "-" : out;
}

}  // namespace ghzqdc
