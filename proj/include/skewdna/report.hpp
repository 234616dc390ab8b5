#ifndef SKEWDNA_REPORT_HPP
#define SKEWDNA_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace skewdna {

// One verification outcome; status is "pass", "fail", or "info".
struct CheckRow {
    std::string check;
    std::string name;
    std::string status;
    std::string counterexample;  // or free-form detail for info rows
};

class Report {
   public:
    void add(std::string check, std::string name, std::string status,
             std::string counterexample = "") {
        rows_.push_back({std::move(check), std::move(name), std::move(status),
                         std::move(counterexample)});
    }

    void add_pass(std::string check, std::string name, std::string detail = "") {
        add(std::move(check), std::move(name), "pass", std::move(detail));
    }
    void add_fail(std::string check, std::string name, std::string counterexample = "") {
        add(std::move(check), std::move(name), "fail", std::move(counterexample));
    }
    void add_info(std::string check, std::string name, std::string detail = "") {
        add(std::move(check), std::move(name), "info", std::move(detail));
    }

    void merge(const Report& other) {
        rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
    }

    const std::vector<CheckRow>& rows() const { return rows_; }

    // info rows never fail a run
    bool ok() const {
        for (const auto& r : rows_)
            if (r.status == "fail") return false;
        return true;
    }

    void write_human(std::ostream& os) const {
        for (const auto& r : rows_) {
            std::string tag = r.status;
            for (char& c : tag) c = static_cast<char>(c - 'a' + 'A');
            os << "[" << tag << "] " << r.check << ": " << r.name;
            if (!r.counterexample.empty()) os << " -- " << r.counterexample;
            os << "\n";
        }
    }

    void write_csv(std::ostream& os) const {
        os << "check,name,status,counterexample\n";
        for (const auto& r : rows_)
            os << csv_field(r.check) << "," << csv_field(r.name) << "," << csv_field(r.status)
               << "," << csv_field(r.counterexample) << "\n";
    }

   private:
    static std::string csv_field(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        out += "\"";
        return out;
    }

    std::vector<CheckRow> rows_;
};

}  // namespace skewdna

#endif  // SKEWDNA_REPORT_HPP
