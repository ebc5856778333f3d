#pragma once

#include <stdexcept>
#include <string>

namespace tifeeds {

// Every failure mode the library reports, one code per named error condition.
enum class Errc {
    empty_tag,
    malformed_event,
    bad_timestamp,
    duplicate_event_id,
    io_failure,
    unknown_feed,
    unknown_category,
    unknown_event_id,
    no_positives,
    empty_corpus,
    degenerate_vocab,
    dim_mismatch,
    malformed_line,
    empty_training,
    length_mismatch,
    too_few_events,
    missing_vector,
    unlabeled_event,
    undefined_value,
    invalid_argument,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace tifeeds
