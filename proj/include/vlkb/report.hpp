#ifndef VLKB_REPORT_HPP
#define VLKB_REPORT_HPP

#include <string>
#include <vector>

namespace vlkb {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::string claim; // the identity or statement being verified
    std::vector<CheckLine> lines;

    bool pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        lines.push_back({name, ok, detail});
    }
};

} // namespace vlkb

#endif
