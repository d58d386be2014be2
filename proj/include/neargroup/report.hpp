#pragma once

#include "neargroup/json_io.hpp"

#include <string>
#include <vector>

namespace neargroup {

struct Failure {
    std::string eq;
    std::string indices;
    std::string lhs, rhs;
};

struct FamilyResult {
    std::string family;
    std::size_t checked = 0;
    std::size_t failure_count = 0;
    std::vector<Failure> failures;  // first kMaxStoredFailures only
    bool passed() const { return failure_count == 0; }
};

constexpr std::size_t kMaxStoredFailures = 50;
constexpr int kReportSchemaVersion = 1;

class VerificationReport {
public:
    // Returns the family, creating it on first use.
    FamilyResult& family(const std::string& name);
    const FamilyResult* find(const std::string& name) const;
    void check(const std::string& family, bool ok, const std::string& indices, const std::string& lhs, const std::string& rhs);
    void count(const std::string& family) { family_ref(family).checked++; }
    void fail(const std::string& family, const std::string& indices, const std::string& lhs, const std::string& rhs);
    void merge(const VerificationReport& other);

    bool passed() const;
    std::size_t failure_count() const;
    std::vector<std::string> failing_families() const;
    const std::vector<FamilyResult>& families() const { return families_; }

    double seconds = 0.0;
    std::string title;

    json to_json() const;
    std::string to_text() const;

private:
    FamilyResult& family_ref(const std::string& name) { return family(name); }
    std::vector<FamilyResult> families_;
};

}  // namespace neargroup
