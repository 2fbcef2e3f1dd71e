#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ahecke {

struct CheckRecord {
    std::string check;    // what is compared
    std::string witness;  // element, class or module
    std::string lhs;
    std::string rhs;
    bool pass = false;

    bool operator==(const CheckRecord&) const = default;
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> instance;
    std::vector<CheckRecord> records;
    std::vector<std::string> notes;
    double wall_time = 0;  // seconds; not part of the compared payload

    bool pass() const;
    std::size_t failures() const;
    const CheckRecord* first_failure() const;
    void add(std::vector<CheckRecord> rs);
    void add(CheckRecord r) { records.push_back(std::move(r)); }

    bool operator==(const VerificationReport& o) const;
};

// JSON with fields suite, instance, records, notes, pass; wall_time only if requested.
std::string to_json(const VerificationReport& r, bool with_time = false);
VerificationReport report_from_json(const std::string& text);
// Human-readable table; failures are always listed, passing rows only when verbose.
std::string to_text(const VerificationReport& r, bool verbose = false);

}  // namespace ahecke
