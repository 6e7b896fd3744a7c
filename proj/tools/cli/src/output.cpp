#include "dqpt_cli/output.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>

namespace dqpt::cli {

std::string format_number(double x) {
    if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

Cell::Cell(double x) : text(format_number(x)), value(x) {}
Cell::Cell(int x) : text(std::to_string(x)), value(x) {}
Cell::Cell(long long x) : text(std::to_string(x)), value(static_cast<double>(x)) {}
Cell::Cell(const ExtendedReal& x) : text(to_string(x)), value(x.as_double()) {}

namespace {

nlohmann::ordered_json to_json(const Cell& c) {
    if (!c.numeric || !std::isfinite(c.value)) return c.text;
    if (c.value == std::floor(c.value) && c.text.find_first_of(".e") == std::string::npos) {
        return static_cast<long long>(c.value);
    }
    return c.value;
}

} // namespace

void write_csv(const Document& doc, std::ostream& os) {
    os << "# dqpt " << doc.command << '\n';
    os << "# columns: ";
    for (std::size_t i = 0; i < doc.columns.size(); ++i) os << (i ? "," : "") << doc.columns[i];
    os << '\n';
    for (const Block& b : doc.blocks) {
        if (!b.label.empty()) {
            os << "# series";
            for (const auto& [k, v] : b.label) os << ' ' << k << '=' << v.text;
            os << '\n';
        }
        for (const auto& row : b.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].text;
            os << '\n';
        }
    }
}

void write_json(const Document& doc, std::ostream& os) {
    nlohmann::ordered_json j;
    j["command"] = "dqpt " + doc.command;
    j["columns"] = doc.columns;
    auto blocks = nlohmann::ordered_json::array();
    for (const Block& b : doc.blocks) {
        nlohmann::ordered_json jb;
        if (!b.label.empty()) {
            nlohmann::ordered_json label = nlohmann::ordered_json::object();
            for (const auto& [k, v] : b.label) label[k] = to_json(v);
            jb["series"] = label;
        }
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : b.rows) {
            auto r = nlohmann::ordered_json::array();
            for (const Cell& c : row) r.push_back(to_json(c));
            rows.push_back(std::move(r));
        }
        jb["rows"] = std::move(rows);
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    os << j.dump(2) << '\n';
}

} // namespace dqpt::cli
