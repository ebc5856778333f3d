#include "tifeeds/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tifeeds/error.hpp"
#include "tifeeds/parallel.hpp"

namespace tifeeds::ingest {

namespace fs = std::filesystem;
using nlohmann::json;

Tag parse_tag(std::string_view raw) {
    std::string trimmed = trim(std::string(raw));
    if (trimmed.empty()) throw Error(Errc::empty_tag, "tag is empty after trimming");

    Tag tag;
    tag.raw = trimmed;
    std::size_t colon = trimmed.find(':');
    std::size_t rest_begin = 0;
    if (colon != std::string::npos) {
        tag.ns = trimmed.substr(0, colon);
        rest_begin = colon + 1;
    }
    std::string rest = trimmed.substr(rest_begin);
    std::size_t eq = rest.find('=');
    if (eq != std::string::npos) {
        tag.predicate = rest.substr(0, eq);
        tag.value = rest.substr(eq + 1);
    } else {
        tag.predicate = rest;
    }
    if (tag.predicate.empty()) {
        // Structurally odd strings like "tlp:" or ":=x" become a bare predicate.
        tag.ns.clear();
        tag.predicate = trimmed;
        tag.value.reset();
    }
    return tag;
}

namespace {

std::int64_t parse_unix_seconds(const json& value, const char* field) {
    std::int64_t ts = 0;
    if (value.is_number_integer()) {
        ts = value.get<std::int64_t>();
    } else if (value.is_string()) {
        const std::string s = trim(value.get<std::string>());
        if (s.empty()) throw Error(Errc::bad_timestamp, std::string(field) + " is empty");
        std::size_t pos = 0;
        try {
            ts = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw Error(Errc::bad_timestamp, std::string(field) + " is not an integer: " + s);
        }
        if (pos != s.size()) {
            throw Error(Errc::bad_timestamp, std::string(field) + " is not an integer: " + s);
        }
    } else {
        throw Error(Errc::bad_timestamp, std::string(field) + " has a non-integer type");
    }
    if (ts < 0) throw Error(Errc::bad_timestamp, std::string(field) + " is negative");
    return ts;
}

const json& require(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw Error(Errc::malformed_event, std::string(where) + " is missing field '" + key + "'");
    }
    return *it;
}

std::string require_string(const json& obj, const char* key, const char* where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) {
        throw Error(Errc::malformed_event,
                    std::string(where) + " field '" + key + "' is not a string");
    }
    return v.get<std::string>();
}

} // namespace

TiEvent parse_event(const std::string& json_text, ParseLog* log) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(Errc::malformed_event, std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("Event") || !doc["Event"].is_object()) {
        throw Error(Errc::malformed_event, "top-level 'Event' object missing");
    }
    const json& ev = doc["Event"];

    TiEvent event;
    event.event_id = require_string(ev, "uuid", "Event");
    if (event.event_id.empty()) throw Error(Errc::malformed_event, "Event.uuid is empty");

    const json& orgc = require(ev, "Orgc", "Event");
    if (!orgc.is_object()) throw Error(Errc::malformed_event, "Event.Orgc is not an object");
    event.feed_id = require_string(orgc, "name", "Event.Orgc");
    if (event.feed_id.empty()) throw Error(Errc::malformed_event, "Event.Orgc.name is empty");

    event.info = require_string(ev, "info", "Event");

    // MISP keeps the last-modified time in Event.timestamp; the "date" field
    // is ignored when a timestamp is present. Both event timestamps map to it.
    std::int64_t ts = parse_unix_seconds(require(ev, "timestamp", "Event"), "Event.timestamp");
    event.created_ts = ts;
    event.modified_ts = ts;

    if (auto it = ev.find("threat_level_id"); it != ev.end() && !it->is_null()) {
        std::int64_t level = parse_unix_seconds(*it, "Event.threat_level_id");
        if (level < 1 || level > 4) {
            throw Error(Errc::malformed_event,
                        "Event.threat_level_id out of range: " + std::to_string(level));
        }
        event.threat_level = static_cast<int>(level);
    }

    if (auto it = ev.find("Tag"); it != ev.end()) {
        if (!it->is_array()) throw Error(Errc::malformed_event, "Event.Tag is not an array");
        for (const json& t : *it) {
            if (!t.is_object()) throw Error(Errc::malformed_event, "Event.Tag entry is not an object");
            event.tags.push_back(parse_tag(require_string(t, "name", "Event.Tag")));
        }
    }
    if (event.tags.empty() && log) {
        log->warnings.push_back("event " + event.event_id + " has no tags");
    }

    if (auto it = ev.find("Attribute"); it != ev.end()) {
        if (!it->is_array()) throw Error(Errc::malformed_event, "Event.Attribute is not an array");
        std::size_t index = 0;
        for (const json& a : *it) {
            if (!a.is_object()) {
                throw Error(Errc::malformed_event, "Event.Attribute entry is not an object");
            }
            IoC ioc;
            ioc.attr_type = require_string(a, "type", "Event.Attribute");
            ioc.category = require_string(a, "category", "Event.Attribute");
            ioc.value = require_string(a, "value", "Event.Attribute");
            if (ioc.value.empty()) {
                throw Error(Errc::malformed_event, "Event.Attribute.value is empty");
            }
            ioc.timestamp =
                parse_unix_seconds(require(a, "timestamp", "Event.Attribute"), "Attribute.timestamp");
            if (auto c = a.find("comment"); c != a.end() && c->is_string()) {
                std::string comment = c->get<std::string>();
                if (!comment.empty()) ioc.comment = std::move(comment);
            }
            if (auto u = a.find("uuid"); u != a.end() && u->is_string()) {
                ioc.attr_id = u->get<std::string>();
            } else {
                ioc.attr_id = event.event_id + ":" + std::to_string(index);
            }
            event.attributes.push_back(std::move(ioc));
            ++index;
        }
    }
    return event;
}

Corpus load_corpus_files(const std::vector<std::filesystem::path>& files,
                         const LoadOptions& options, LoadReport* report) {
    const std::size_t n = files.size();
    std::vector<std::optional<TiEvent>> slots(n);
    std::vector<std::string> errors(n);
    std::vector<std::vector<std::string>> warnings(n);

    // Read file contents up front (IO stays serial), parse in parallel.
    std::vector<std::string> contents(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::ifstream in(files[i], std::ios::binary);
        if (!in) {
            errors[i] = "IoFailure: cannot open file";
            continue;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        contents[i] = buffer.str();
    }

    parallel::for_index(static_cast<std::int64_t>(n), options.threads, [&](std::int64_t i) {
        if (!errors[i].empty()) return;
        try {
            ParseLog log;
            slots[i] = parse_event(contents[i], &log);
            warnings[i] = std::move(log.warnings);
        } catch (const Error& e) {
            errors[i] = e.what();
        }
    });

    // Deterministic merge: failures are keyed by file name, events get
    // re-sorted by make_corpus, so enumeration order never shows through.
    std::vector<TiEvent> events;
    std::vector<LoadFailure> failures;
    for (std::size_t i = 0; i < n; ++i) {
        if (!errors[i].empty()) {
            failures.push_back({files[i].filename().string(), errors[i]});
            continue;
        }
        TiEvent& event = *slots[i];
        if (options.feed_allowlist && !options.feed_allowlist->count(event.feed_id)) continue;
        events.push_back(std::move(event));
    }
    std::sort(failures.begin(), failures.end(),
              [](const LoadFailure& a, const LoadFailure& b) { return a.file < b.file; });

    if (options.strict && !failures.empty()) {
        throw Error(Errc::malformed_event, failures.front().file + ": " + failures.front().error);
    }
    if (report) {
        report->failures = std::move(failures);
        std::vector<std::pair<std::string, std::string>> tagged;
        for (std::size_t i = 0; i < n; ++i) {
            for (auto& w : warnings[i]) tagged.emplace_back(files[i].filename().string(), w);
        }
        std::sort(tagged.begin(), tagged.end());
        for (auto& [file, w] : tagged) report->warnings.push_back(w);
    }
    return make_corpus(std::move(events));
}

Corpus load_corpus(const std::filesystem::path& dir, const LoadOptions& options,
                   LoadReport* report) {
    if (!fs::exists(dir) || !fs::is_directory(dir)) {
        throw Error(Errc::io_failure, "not a directory: " + dir.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return load_corpus_files(files, options, report);
}

json event_to_json(const TiEvent& event) {
    json ev;
    ev["uuid"] = event.event_id;
    ev["Orgc"] = json{{"name", event.feed_id}};
    ev["info"] = event.info;
    ev["timestamp"] = std::to_string(event.created_ts);
    if (event.threat_level) ev["threat_level_id"] = std::to_string(*event.threat_level);
    json tags = json::array();
    for (const auto& t : event.tags) tags.push_back(json{{"name", t.raw}});
    ev["Tag"] = std::move(tags);
    json attrs = json::array();
    for (const auto& a : event.attributes) {
        json attr{{"uuid", a.attr_id},
                  {"type", a.attr_type},
                  {"category", a.category},
                  {"value", a.value},
                  {"timestamp", std::to_string(a.timestamp)}};
        if (a.comment) attr["comment"] = *a.comment;
        attrs.push_back(std::move(attr));
    }
    ev["Attribute"] = std::move(attrs);
    return json{{"Event", std::move(ev)}};
}

json corpus_to_json(const Corpus& corpus) {
    json events = json::array();
    for (const auto& e : corpus.events) events.push_back(event_to_json(e));
    return json{{"events", std::move(events)}};
}

void write_corpus_dir(const Corpus& corpus, const std::filesystem::path& dir) {
    fs::create_directories(dir);
    for (const auto& event : corpus.events) {
        std::ofstream out(dir / (event.event_id + ".json"));
        if (!out) throw Error(Errc::io_failure, "cannot write under " + dir.string());
        out << event_to_json(event).dump(2) << "\n";
    }
}

} // namespace tifeeds::ingest
