#include "hopfgal/report.hpp"

#include <ostream>
#include <sstream>

namespace hopfgal {

void Report::pass(const std::string& item) { entries_.push_back({item, Status::pass, ""}); }

void Report::fail(const std::string& item, const std::string& witness) {
    entries_.push_back({item, Status::fail, witness});
}

void Report::check(const std::string& item, bool ok, const std::string& witness) {
    if (ok)
        pass(item);
    else
        fail(item, witness);
}

void Report::value(const std::string& item, const std::string& val) {
    entries_.push_back({item, Status::value, val});
}

void Report::implied(const std::string& item, const std::string& note) {
    entries_.push_back({item, Status::implied, note});
}

Report& Report::child(const std::string& name) {
    children_.emplace_back(name);
    return children_.back();
}

void Report::adopt(Report sub) { children_.push_back(std::move(sub)); }

bool Report::ok() const { return fail_count() == 0; }

int Report::fail_count() const {
    int n = 0;
    for (const auto& e : entries_)
        if (e.status == Status::fail) ++n;
    for (const auto& c : children_) n += c.fail_count();
    return n;
}

std::string Report::first_failure() const {
    for (const auto& e : entries_)
        if (e.status == Status::fail) return name_ + "/" + e.item;
    for (const auto& c : children_) {
        std::string f = c.first_failure();
        if (!f.empty()) return name_ + "/" + f;
    }
    return "";
}

void Report::write(std::ostream& os, int indent) const {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    os << pad << name_ << ": " << (ok() ? "PASS" : "FAIL") << "\n";
    for (const auto& e : entries_) {
        os << pad << "  " << e.item << ": ";
        switch (e.status) {
            case Status::pass: os << "pass"; break;
            case Status::fail: os << "FAIL"; break;
            case Status::value: os << e.detail; break;
            case Status::implied: os << "implied-by-theorem"; break;
        }
        if (e.status == Status::fail && !e.detail.empty()) os << " witness " << e.detail;
        if (e.status == Status::implied && !e.detail.empty()) os << " (" << e.detail << ")";
        os << "\n";
    }
    for (const auto& c : children_) c.write(os, indent + 1);
}

std::string Report::str() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Report& r) {
    r.write(os);
    return os;
}

}  // namespace hopfgal
