#include "timeflip/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace timeflip {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    const int len = std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf, static_cast<std::size_t>(len));
}

void write_csv(std::ostream& os, const Table& table, const Provenance& prov) {
    os << "# command: " << prov.command << "\n";
    os << "# seed: " << prov.seed << "\n";
    os << "# version: " << prov.version << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << (c ? "," : "") << table.columns[c];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << format_number(row[c]);
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& table, const Provenance& prov) {
    nlohmann::ordered_json j;
    j["provenance"] = {{"command", prov.command},
                       {"seed", prov.seed},
                       {"version", prov.version}};
    j["table"] = table.name;
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json rec;
        for (std::size_t c = 0; c < row.size(); ++c) rec[table.columns[c]] = row[c];
        data.push_back(std::move(rec));
    }
    j["data"] = std::move(data);
    os << j.dump(2) << "\n";
}

std::vector<std::string> write_tables(const std::vector<Table>& tables,
                                      const std::string& out_dir,
                                      OutputFormat format,
                                      const Provenance& prov) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::vector<std::string> paths;
    for (const Table& t : tables) {
        const std::string ext = format == OutputFormat::csv ? ".csv" : ".json";
        const fs::path path = fs::path(out_dir) / (t.name + ext);
        std::ofstream os(path, std::ios::binary);  // binary: Unix newlines everywhere
        if (!os) throw std::runtime_error("cannot open output file " + path.string());
        if (format == OutputFormat::csv)
            write_csv(os, t, prov);
        else
            write_json(os, t, prov);
        paths.push_back(path.string());
    }
    return paths;
}

}  // namespace timeflip
