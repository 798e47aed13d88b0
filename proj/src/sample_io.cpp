#include "cplxinfo/sample_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace cplxinfo {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n\"");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n\"");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(trim(tok));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stod(s, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == s.size();
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

SampleSet parse_samples(const std::string& text, const std::string& label) {
    std::vector<std::string> lines;
    {
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) {
            line = trim(line);
            if (!line.empty()) lines.push_back(line);
        }
    }
    if (lines.empty()) throw ValidationError("no data in sample input '" + label + "'");

    // a non-numeric first line means a CSV header; find the `value` column
    double probe;
    std::size_t value_col = 0;
    bool csv_mode = false;
    if (!parse_number(lines.front(), probe)) {
        const auto header = split_csv(lines.front());
        const auto it = std::find_if(header.begin(), header.end(),
                                     [](const std::string& h) { return lower(h) == "value"; });
        if (it == header.end())
            throw ValidationError("sample file '" + label +
                                  "' has a header but no 'value' column");
        value_col = static_cast<std::size_t>(it - header.begin());
        csv_mode = true;
        lines.erase(lines.begin());
    }

    std::vector<double> values;
    values.reserve(lines.size());
    for (const std::string& line : lines) {
        std::string cell = line;
        if (csv_mode) {
            const auto fields = split_csv(line);
            if (value_col >= fields.size())
                throw ValidationError("short CSV row in '" + label + "': " + line);
            cell = fields[value_col];
        }
        double v;
        if (!parse_number(cell, v))
            throw ValidationError("bad sample value in '" + label + "': " + cell);
        values.push_back(v);
    }
    return make_sample_set(std::move(values), label);
}

SampleSet load_samples(const std::string& path, const std::string& label) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open sample file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_samples(buf.str(), label.empty() ? path : label);
}

} // namespace cplxinfo
