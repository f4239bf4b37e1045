#include "cli/render.hpp"

#include <algorithm>

namespace polignac::cli {

namespace {

std::string render_table(const Report& r) {
    std::string out;
    std::size_t key_w = 0;
    for (const auto& [k, v] : r.fields) key_w = std::max(key_w, k.size());
    for (const auto& [k, v] : r.fields) {
        out += k + std::string(key_w - k.size() + 2, ' ') + v + '\n';
    }
    if (r.columns.empty()) return out;
    if (!r.fields.empty()) out += '\n';

    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
    for (const auto& row : r.rows) {
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            // right-align: every cell is numeric or short
            if (c > 0) s += "  ";
            s += std::string(width[c] - cells[c].size(), ' ') + cells[c];
        }
        out += s + '\n';
    };
    line(r.columns);
    for (const auto& row : r.rows) line(row);
    return out;
}

std::string render_csv(const Report& r) {
    std::string out;
    if (r.columns.empty()) {
        for (const auto& [k, v] : r.fields) out += k + ',' + v + '\n';
        return out;
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out += ',';
            out += cells[c];
        }
        out += '\n';
    };
    line(r.columns);
    for (const auto& row : r.rows) line(row);
    return out;
}

}  // namespace

std::string render(const Report& r, Format f) {
    switch (f) {
        case Format::Table:
            return render_table(r);
        case Format::Csv:
            return render_csv(r);
        case Format::Json: {
            nlohmann::ordered_json j;
            j["command"] = r.command;
            j["status"] = r.ok ? "ok" : "failure";
            for (const auto& [k, v] : r.json.items()) j[k] = v;
            return j.dump(2) + '\n';
        }
    }
    return {};
}

}  // namespace polignac::cli
