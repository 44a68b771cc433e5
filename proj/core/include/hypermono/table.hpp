#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hypermono {

/// Column-oriented numeric table behind the CSV/JSON emitters.  CSV output
/// uses 17 significant digits, '.' decimal separator and LF line endings so a
/// double round-trips exactly.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> comments;  // emitted as leading "# ..." lines

    void add_row(std::initializer_list<double> xs) { rows.emplace_back(xs); }
};

std::string format_double(double x);
void write_csv(std::ostream& os, const Table& t);
nlohmann::ordered_json to_json(const Table& t);

}  // namespace hypermono
