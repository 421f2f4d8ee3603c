#pragma once

#include <string>
#include <vector>

namespace genstab {

enum class CheckStatus { Pass, Fail, Info };

struct CheckEntry {
    std::string check;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::Pass;
};

/// Named list of checks; the report passes when no entry fails.
struct VerificationReport {
    std::string case_id;
    std::vector<CheckEntry> entries;

    bool pass() const;
    /// Records an asserted check; returns ok.
    bool add(const std::string& check, const std::string& expected, const std::string& computed, bool ok);
    bool expect_equal(const std::string& check, const std::string& expected, const std::string& computed);
    bool expect_equal(const std::string& check, long expected, long computed);
    bool expect_true(const std::string& check, bool computed);
    /// Records a value that is reported but not asserted.
    void info(const std::string& check, const std::string& expected, const std::string& computed);
    void merge(const VerificationReport& other, const std::string& prefix = "");

    /// Aligned human-readable rendering.
    std::string to_text() const;
    /// Line-oriented key=value rendering with fields case, check, expected, computed, pass.
    std::string to_keyvalue() const;
    /// Inverse of to_keyvalue; throws std::invalid_argument on malformed input.
    static VerificationReport parse_keyvalue(const std::string& text);
};

std::string to_string(CheckStatus s);

}  // namespace genstab
