#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tifeeds/core.hpp"

namespace tifeeds::ingest {

// Splits raw at the first ':' (namespace) and the first '=' after it (value).
// A tag without ':' keeps an empty namespace; a tag whose structural parse
// would leave an empty predicate falls back to predicate = whole string.
// Throws Errc::empty_tag when raw trims to nothing.
Tag parse_tag(std::string_view raw);

struct ParseLog {
    std::vector<std::string> warnings;
};

// Parses one MISP-style event JSON object. Unknown fields are ignored.
// Throws Errc::malformed_event / Errc::bad_timestamp.
TiEvent parse_event(const std::string& json_text, ParseLog* log = nullptr);

struct LoadOptions {
    std::optional<std::set<std::string>> feed_allowlist;
    bool strict = false; // abort on first malformed file instead of skip+report
    int threads = 1;     // file parse fan-out; merge order is deterministic
};

struct LoadFailure {
    std::string file;
    std::string error;
};

struct LoadReport {
    std::vector<LoadFailure> failures; // sorted by file name
    std::vector<std::string> warnings;
};

// Loads every *.json file under dir (one event per file).
Corpus load_corpus(const std::filesystem::path& dir, const LoadOptions& options = {},
                   LoadReport* report = nullptr);

// Same, from an explicit file list. The resulting corpus does not depend on
// the list order.
Corpus load_corpus_files(const std::vector<std::filesystem::path>& files,
                         const LoadOptions& options = {}, LoadReport* report = nullptr);

// MISP-style serialization; write_corpus_dir emits one <event_id>.json per event.
nlohmann::json event_to_json(const TiEvent& event);
nlohmann::json corpus_to_json(const Corpus& corpus);
void write_corpus_dir(const Corpus& corpus, const std::filesystem::path& dir);

} // namespace tifeeds::ingest
