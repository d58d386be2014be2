#include "neargroup/report.hpp"

#include <iomanip>
#include <sstream>

namespace neargroup {

FamilyResult& VerificationReport::family(const std::string& name) {
    for (auto& f : families_)
        if (f.family == name) return f;
    families_.push_back(FamilyResult{name, 0, 0, {}});
    return families_.back();
}

const FamilyResult* VerificationReport::find(const std::string& name) const {
    for (const auto& f : families_)
        if (f.family == name) return &f;
    return nullptr;
}

void VerificationReport::fail(const std::string& fam, const std::string& indices, const std::string& lhs, const std::string& rhs) {
    FamilyResult& f = family(fam);
    f.failure_count++;
    if (f.failures.size() < kMaxStoredFailures) f.failures.push_back(Failure{fam, indices, lhs, rhs});
}

void VerificationReport::check(const std::string& fam, bool ok, const std::string& indices, const std::string& lhs,
                               const std::string& rhs) {
    family(fam).checked++;
    if (!ok) fail(fam, indices, lhs, rhs);
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& f : other.families_) {
        FamilyResult& mine = family(f.family);
        mine.checked += f.checked;
        mine.failure_count += f.failure_count;
        for (const auto& x : f.failures)
            if (mine.failures.size() < kMaxStoredFailures) mine.failures.push_back(x);
    }
    seconds += other.seconds;
}

bool VerificationReport::passed() const { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const {
    std::size_t n = 0;
    for (const auto& f : families_) n += f.failure_count;
    return n;
}

std::vector<std::string> VerificationReport::failing_families() const {
    std::vector<std::string> out;
    for (const auto& f : families_)
        if (!f.passed()) out.push_back(f.family);
    return out;
}

json VerificationReport::to_json() const {
    json fams = json::array();
    for (const auto& f : families_) {
        json fails = json::array();
        for (const auto& x : f.failures)
            fails.push_back({{"eq", x.eq}, {"indices", x.indices}, {"lhs", x.lhs}, {"rhs", x.rhs}});
        fams.push_back({{"family", f.family},
                        {"status", f.passed() ? "pass" : "fail"},
                        {"checked", f.checked},
                        {"failure_count", f.failure_count},
                        {"failures", fails}});
    }
    return {{"schema", "neargroup-report"}, {"version", kReportSchemaVersion}, {"title", title},
            {"status", passed() ? "pass" : "fail"}, {"seconds", seconds}, {"families", fams}};
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    if (!title.empty()) os << title << "\n";
    for (const auto& f : families_) {
        os << "  " << std::left << std::setw(24) << f.family << (f.passed() ? "pass" : "FAIL") << "  (" << f.checked
           << " checked";
        if (!f.passed()) os << ", " << f.failure_count << " failed";
        os << ")\n";
        for (const auto& x : f.failures) os << "      " << x.indices << ": " << x.lhs << " != " << x.rhs << "\n";
    }
    os << (passed() ? "PASS" : "FAIL") << " in " << std::fixed << std::setprecision(3) << seconds << " s\n";
    return os.str();
}

}  // namespace neargroup
