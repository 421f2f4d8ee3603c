#include "genstab/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "genstab/form.hpp"

namespace genstab {

namespace {

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    std::replace(s.begin(), s.end(), '\r', ' ');
    return s;
}

CheckStatus parse_status(const std::string& s) {
    if (s == "yes") return CheckStatus::Pass;
    if (s == "no") return CheckStatus::Fail;
    if (s == "info") return CheckStatus::Info;
    throw std::invalid_argument("report: bad pass value '" + s + "'");
}

}  // namespace

std::string to_string(FormKind f) { return f == FormKind::Orthogonal ? "orthogonal" : "symplectic"; }

FormKind parse_form_kind(const std::string& s) {
    if (s == "orthogonal") return FormKind::Orthogonal;
    if (s == "symplectic") return FormKind::Symplectic;
    throw std::invalid_argument("unknown form '" + s + "'");
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "yes";
        case CheckStatus::Fail: return "no";
        case CheckStatus::Info: return "info";
    }
    return "no";
}

bool VerificationReport::pass() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const CheckEntry& e) { return e.status == CheckStatus::Fail; });
}

bool VerificationReport::add(const std::string& check, const std::string& expected, const std::string& computed,
                             bool ok) {
    entries.push_back({one_line(check), one_line(expected), one_line(computed), ok ? CheckStatus::Pass : CheckStatus::Fail});
    return ok;
}

bool VerificationReport::expect_equal(const std::string& check, const std::string& expected,
                                      const std::string& computed) {
    return add(check, expected, computed, expected == computed);
}

bool VerificationReport::expect_equal(const std::string& check, long expected, long computed) {
    return add(check, std::to_string(expected), std::to_string(computed), expected == computed);
}

bool VerificationReport::expect_true(const std::string& check, bool computed) {
    return add(check, "true", computed ? "true" : "false", computed);
}

void VerificationReport::info(const std::string& check, const std::string& expected, const std::string& computed) {
    entries.push_back({one_line(check), one_line(expected), one_line(computed), CheckStatus::Info});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (auto e : other.entries) {
        e.check = prefix + e.check;
        entries.push_back(std::move(e));
    }
}

std::string VerificationReport::to_text() const {
    std::size_t w = 0;
    for (const auto& e : entries) w = std::max(w, e.check.size());
    std::ostringstream os;
    os << "case " << case_id << "\n";
    for (const auto& e : entries) {
        const char* tag = e.status == CheckStatus::Pass ? "PASS" : e.status == CheckStatus::Fail ? "FAIL" : "INFO";
        os << "  [" << tag << "] " << e.check << std::string(w - e.check.size(), ' ') << "  ";
        if (!e.expected.empty()) os << "expected " << e.expected << ", computed ";
        os << e.computed << "\n";
    }
    os << "overall " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\\') out += "\\\\";
        else if (c == '\n') out += "\\n";
        else out += c;
    }
    return out;
}

std::string unescape(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (++i == s.size()) throw std::invalid_argument("report: dangling escape");
        if (s[i] == 'n') out += '\n';
        else if (s[i] == '\\') out += '\\';
        else throw std::invalid_argument("report: unknown escape");
    }
    return out;
}

}  // namespace

std::string VerificationReport::to_keyvalue() const {
    std::ostringstream os;
    os << "case=" << escape(case_id) << "\n";
    for (const auto& e : entries) {
        os << "check=" << escape(e.check) << "\n"
           << "expected=" << escape(e.expected) << "\n"
           << "computed=" << escape(e.computed) << "\n"
           << "pass=" << to_string(e.status) << "\n";
    }
    os << "overall=" << (pass() ? "yes" : "no") << "\n";
    return os.str();
}

VerificationReport VerificationReport::parse_keyvalue(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::pair<std::string, std::string>> kv;
    while (std::getline(is, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("report: line without '=': " + line);
        kv.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    auto expect = [&](std::size_t i, const char* key) -> std::string {
        if (i >= kv.size() || kv[i].first != key) throw std::invalid_argument(std::string("report: expected key ") + key);
        return unescape(kv[i].second);
    };
    VerificationReport r;
    std::size_t i = 0;
    r.case_id = expect(i++, "case");
    while (i < kv.size() && kv[i].first == "check") {
        CheckEntry e;
        e.check = expect(i++, "check");
        e.expected = expect(i++, "expected");
        e.computed = expect(i++, "computed");
        e.status = parse_status(expect(i++, "pass"));
        r.entries.push_back(std::move(e));
    }
    const std::string overall = expect(i++, "overall");
    if (i != kv.size()) throw std::invalid_argument("report: trailing fields");
    if (overall != (r.pass() ? "yes" : "no")) throw std::invalid_argument("report: overall does not match entries");
    return r;
}

}  // namespace genstab
