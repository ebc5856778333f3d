#include "tifeeds/core.hpp"

#include <algorithm>
#include <cctype>

#include "tifeeds/error.hpp"

namespace tifeeds {

const char* to_string(Errc code) {
    switch (code) {
        case Errc::empty_tag: return "EmptyTag";
        case Errc::malformed_event: return "MalformedEvent";
        case Errc::bad_timestamp: return "BadTimestamp";
        case Errc::duplicate_event_id: return "DuplicateEventId";
        case Errc::io_failure: return "IoFailure";
        case Errc::unknown_feed: return "UnknownFeed";
        case Errc::unknown_category: return "UnknownCategory";
        case Errc::unknown_event_id: return "UnknownEventId";
        case Errc::no_positives: return "NoPositives";
        case Errc::empty_corpus: return "EmptyCorpus";
        case Errc::degenerate_vocab: return "DegenerateVocab";
        case Errc::dim_mismatch: return "DimMismatch";
        case Errc::malformed_line: return "MalformedLine";
        case Errc::empty_training: return "EmptyTraining";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::too_few_events: return "TooFewEvents";
        case Errc::missing_vector: return "MissingVector";
        case Errc::unlabeled_event: return "UnlabeledEvent";
        case Errc::undefined_value: return "UndefinedValue";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

const char* to_string(Label label) {
    return label == Label::Exploitation ? "exploitation" : "non-exploitation";
}

const char* to_string(LabelSource source) {
    switch (source) {
        case LabelSource::Manual: return "manual";
        case LabelSource::RuleMined: return "rule-mined";
        case LabelSource::Unlabeled: return "unlabeled";
    }
    return "unlabeled";
}

Label label_from_string(const std::string& s) {
    std::string v = lowercase(trim(s));
    if (v == "exploitation") return Label::Exploitation;
    if (v == "non-exploitation") return Label::NonExploitation;
    throw Error(Errc::invalid_argument, "unknown label '" + s + "'");
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && is_space(s[begin])) ++begin;
    while (end > begin && is_space(s[end - 1])) --end;
    return s.substr(begin, end - begin);
}

Corpus make_corpus(std::vector<TiEvent> events) {
    std::stable_sort(events.begin(), events.end(), [](const TiEvent& a, const TiEvent& b) {
        if (a.created_ts != b.created_ts) return a.created_ts < b.created_ts;
        return a.event_id < b.event_id;
    });
    Corpus corpus;
    corpus.events = std::move(events);
    std::set<std::string> seen;
    for (const auto& e : corpus.events) {
        if (!seen.insert(e.event_id).second) {
            throw Error(Errc::duplicate_event_id, e.event_id);
        }
        corpus.feeds.insert(e.feed_id);
    }
    return corpus;
}

} // namespace tifeeds
