#include "ghzqdc/transcript.hpp"

#include <charconv>
#include <stdexcept>

namespace ghzqdc {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Authenticated: return "authenticated";
    case Verdict::AuthAborted: return "auth_aborted";
    case Verdict::MessageDelivered: return "message_delivered";
    case Verdict::MessageDiscarded: return "message_discarded";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view s) {
  for (Verdict v : {Verdict::Authenticated, Verdict::AuthAborted, Verdict::MessageDelivered,
                    Verdict::MessageDiscarded}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

namespace {

void check_field(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_of("\t\n") != std::string::npos) {
    throw std::invalid_argument(std::string("transcript ") + what + " must be non-empty without tabs/newlines");
  }
}

}  // namespace

const TranscriptEvent& SessionTranscript::append(std::string actor, std::string kind,
                                                 std::string payload) {
  check_field(actor, "actor");
  check_field(kind, "kind");
  if (payload.empty()) payload = "-";
  check_field(payload, "payload");
  events_.push_back({events_.size(), std::move(actor), std::move(kind), std::move(payload)});
  return events_.back();
}

void SessionTranscript::record_verdict(Verdict v, std::string payload) {
  append("session", "verdict", "value=" + std::string(to_string(v)) +
                                   (payload.empty() ? "" : " " + payload));
  verdict_ = v;
}

const TranscriptEvent* SessionTranscript::find(std::string_view actor, std::string_view kind) const {
  for (const auto& e : events_) {
    if (e.actor == actor && e.kind == kind) return &e;
  }
  return nullptr;
}

std::vector<const TranscriptEvent*> SessionTranscript::announcements() const {
  std::vector<const TranscriptEvent*> out;
  for (const auto& e : events_) {
    if (e.is_announcement()) out.push_back(&e);
  }
  return out;
}

std::string SessionTranscript::to_text() const {
  std::string out(kHeader);
  out.push_back('\n');
  for (const auto& e : events_) {
    out += std::to_string(e.ordinal);
    out.push_back('\t');
    out += e.actor;
    out.push_back('\t');
    out += e.kind;
    out.push_back('\t');
    out += e.payload;
    out.push_back('\n');
  }
  return out;
}

SessionTranscript SessionTranscript::from_text(std::string_view text) {
  SessionTranscript t;
  bool header_seen = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kHeader) throw std::invalid_argument("missing transcript header");
      header_seen = true;
      continue;
    }
    std::string_view fields[4];
    for (int f = 0; f < 3; ++f) {
      const auto tab = line.find('\t');
      if (tab == std::string_view::npos) throw std::invalid_argument("malformed transcript line");
      fields[f] = line.substr(0, tab);
      line.remove_prefix(tab + 1);
    }
    fields[3] = line;
    std::size_t ordinal = 0;
    const auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), ordinal);
    if (ec != std::errc() || ptr != fields[0].data() + fields[0].size() || ordinal != t.events_.size()) {
      throw std::invalid_argument("transcript ordinals must be consecutive from 0");
    }
    t.append(std::string(fields[1]), std::string(fields[2]), std::string(fields[3]));
    const auto& e = t.events_.back();
    if (e.kind == "verdict" && e.payload.starts_with("value=")) {
      const auto rest = std::string_view(e.payload).substr(6);
      t.verdict_ = parse_verdict(rest.substr(0, rest.find(' ')));
    }
  }
  if (!header_seen) throw std::invalid_argument("missing transcript header");
  return t;
}

std::string join_indices(const std::vector<std::size_t>& values) {
  return join_mapped(values, [](std::size_t v) { return std::to_string(v); });
}

}  // namespace ghzqdc
