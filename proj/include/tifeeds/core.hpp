#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tifeeds {

enum class Label { Exploitation, NonExploitation };
enum class LabelSource { Manual, RuleMined, Unlabeled };

const char* to_string(Label label);
const char* to_string(LabelSource source);

// Parses "exploitation" / "non-exploitation" (case-insensitive).
Label label_from_string(const std::string& s);

// Event tag of the form namespace:predicate=value. The namespace may be
// empty ("malware"), the value is optional ("tlp:white").
struct Tag {
    std::string raw;
    std::string ns;
    std::string predicate;
    std::optional<std::string> value;
};

// One timestamped attribute of an event: IP, hash, URL, free text, ...
struct IoC {
    std::string attr_id;
    std::string category;  // e.g. "network activity", "payload delivery"
    std::string attr_type; // e.g. "ip-dst", "sha256", "filename|sha256"
    std::string value;
    std::optional<std::string> comment;
    std::int64_t timestamp = 0; // unix seconds, >= 0
};

struct TiEvent {
    std::string event_id;
    std::string feed_id;
    std::string info;
    std::int64_t created_ts = 0;
    std::int64_t modified_ts = 0; // invariant: modified_ts >= created_ts
    std::optional<int> threat_level; // 1..4
    std::vector<Tag> tags;
    std::vector<IoC> attributes;
    std::optional<Label> label;
    LabelSource label_source = LabelSource::Unlabeled;
};

// Events sorted by (created_ts, event_id); feeds = distinct feed_id values.
struct Corpus {
    std::vector<TiEvent> events;
    std::set<std::string> feeds;
};

// Sorts, checks event_id uniqueness (throws Errc::duplicate_event_id) and
// fills the feed set.
Corpus make_corpus(std::vector<TiEvent> events);

std::string lowercase(std::string s);
std::string trim(const std::string& s);

} // namespace tifeeds
