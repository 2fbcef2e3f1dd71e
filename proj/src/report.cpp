#include "ahecke/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace ahecke {

using Json = nlohmann::ordered_json;

bool VerificationReport::pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
}

const CheckRecord* VerificationReport::first_failure() const {
    for (const auto& r : records)
        if (!r.pass) return &r;
    return nullptr;
}

void VerificationReport::add(std::vector<CheckRecord> rs) {
    for (auto& r : rs) records.push_back(std::move(r));
}

bool VerificationReport::operator==(const VerificationReport& o) const {
    return suite == o.suite && instance == o.instance && records == o.records && notes == o.notes;
}

std::string to_json(const VerificationReport& r, bool with_time) {
    Json j;
    j["suite"] = r.suite;
    Json inst = Json::object();
    for (const auto& [k, v] : r.instance) inst[k] = v;
    j["instance"] = inst;
    Json recs = Json::array();
    for (const auto& c : r.records)
        recs.push_back({{"check", c.check}, {"witness", c.witness}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    j["records"] = recs;
    j["notes"] = r.notes;
    j["pass"] = r.pass();
    if (with_time) j["wall_time"] = r.wall_time;
    return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
    Json j = Json::parse(text);
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& [k, v] : j.at("instance").items()) r.instance.emplace_back(k, v.get<std::string>());
    for (const auto& c : j.at("records"))
        r.records.push_back({c.at("check").get<std::string>(), c.at("witness").get<std::string>(),
                             c.at("lhs").get<std::string>(), c.at("rhs").get<std::string>(), c.at("pass").get<bool>()});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("wall_time")) r.wall_time = j.at("wall_time").get<double>();
    return r;
}

std::string to_text(const VerificationReport& r, bool verbose) {
    std::ostringstream os;
    os << "suite: " << r.suite << "\n";
    for (const auto& [k, v] : r.instance) os << "  " << k << ": " << v << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    std::size_t wc = 5, ww = 7;
    for (const auto& c : r.records) {
        wc = std::max(wc, c.check.size());
        ww = std::max(ww, c.witness.size());
    }
    wc = std::min<std::size_t>(wc, 40);
    ww = std::min<std::size_t>(ww, 40);
    bool header = false;
    for (const auto& c : r.records) {
        if (c.pass && !verbose) continue;
        if (!header) {
            os << "  " << std::left << std::setw(static_cast<int>(wc)) << "check" << "  " << std::setw(static_cast<int>(ww))
               << "witness" << "  lhs | rhs\n";
            header = true;
        }
        os << "  " << std::left << std::setw(static_cast<int>(wc)) << c.check << "  " << std::setw(static_cast<int>(ww))
           << c.witness << "  " << c.lhs << " | " << c.rhs << (c.pass ? "" : "   FAIL") << "\n";
    }
    os << "records: " << r.records.size() << ", failures: " << r.failures() << ", result: " << (r.pass() ? "PASS" : "FAIL")
       << "\n";
    return os.str();
}

}  // namespace ahecke
