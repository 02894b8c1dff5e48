// Tabular output (CSV/JSON) with a provenance header, deterministic to the
// byte for a fixed configuration and seed.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace timeflip {

inline constexpr const char* kToolkitVersion = "0.1.0";

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct Provenance {
    std::string command;
    std::uint64_t seed;
    std::string version = kToolkitVersion;
};

enum class OutputFormat { csv, json };

/// 17 significant digits, '.' decimal separator, locale independent.
std::string format_number(double x);

void write_csv(std::ostream& os, const Table& table, const Provenance& prov);
void write_json(std::ostream& os, const Table& table, const Provenance& prov);

/// Writes `tables` to files under `out_dir` (one file per table, named
/// <table.name>.<ext>), creating the directory if needed.  Returns the
/// paths written.
std::vector<std::string> write_tables(const std::vector<Table>& tables,
                                      const std::string& out_dir,
                                      OutputFormat format,
                                      const Provenance& prov);

}  // namespace timeflip
