#pragma once

#include <stdexcept>
#include <string>

namespace hdpath {

// Parameters outside an operation's domain (n > d >= k violated, bad α/β, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed graph6 text or other unparsable input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A predicate whose definition excludes the given graph
// (essential 2-connectivity on a forest or a disconnected graph).
class NotApplicable : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A solver's stated hypotheses do not hold for the input instance.
class HypothesisViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exhaustive search refuted something a proven lemma guarantees.
// Carries the offending graph in graph6.
class LemmaViolation : public std::logic_error {
public:
    LemmaViolation(const std::string& what, std::string graph6)
        : std::logic_error(what), graph6_(std::move(graph6)) {}
    const std::string& graph6() const { return graph6_; }

private:
    std::string graph6_;
};

}  // namespace hdpath
