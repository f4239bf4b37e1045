#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace polignac::cli {

enum class Format { Table, Csv, Json };

// What a subcommand produced, independent of how it is printed.
struct Report {
    std::string command;
    bool ok = true;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::ordered_json json = nlohmann::ordered_json::object();

    void field(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
    }
};

std::string render(const Report& r, Format f);

}  // namespace polignac::cli
