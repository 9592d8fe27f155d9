#pragma once

#include <string>
#include <vector>

namespace chowgamma {

/// One identity or property check. lhs/rhs/residual are serialized
/// polynomials or class functions; residual is "0" on success.
struct CheckRecord {
    std::string id;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string residual;
    std::string note;
};

class Report {
public:
    explicit Report(std::string suite = {}) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<CheckRecord>& checks() const { return checks_; }
    bool passed() const;
    std::size_t failures() const;

    void add(CheckRecord record) { checks_.push_back(std::move(record)); }
    void add(std::string id, bool pass, std::string lhs = {}, std::string rhs = {}, std::string residual = {},
             std::string note = {});
    /// Appends every record of other, prefixing ids with prefix.
    void append(const Report& other, const std::string& prefix = {});
    /// Orders records by id (digit runs compared numerically).
    void sort_by_id();

private:
    std::string suite_;
    std::vector<CheckRecord> checks_;
};

/// Lexicographic order in which maximal digit runs compare as numbers.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace chowgamma
