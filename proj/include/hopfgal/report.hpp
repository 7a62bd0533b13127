#pragma once

// Structured verdict trees. Every verifier in the library reports through
// this type; serialization is deterministic (insertion order, canonical
// scalar strings), which the CLI relies on for byte-identical output.

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfgal {

class Report {
public:
    enum class Status { pass, fail, value, implied };

    Report() = default;
    explicit Report(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    void pass(const std::string& item);
    void fail(const std::string& item, const std::string& witness);
    void check(const std::string& item, bool ok, const std::string& witness = "");
    void value(const std::string& item, const std::string& val);
    void implied(const std::string& item, const std::string& note);

    Report& child(const std::string& name);
    void adopt(Report sub);  // append an already-built subreport

    bool ok() const;
    int fail_count() const;
    std::string first_failure() const;

    void write(std::ostream& os, int indent = 0) const;
    std::string str() const;

private:
    struct Entry {
        std::string item;
        Status status;
        std::string detail;
    };

    std::string name_;
    std::vector<Entry> entries_;
    std::vector<Report> children_;
};

std::ostream& operator<<(std::ostream& os, const Report& r);

}  // namespace hopfgal
