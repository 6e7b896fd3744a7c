#pragma once

#include "dqpt/extended_real.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dqpt::cli {

// Shortest round-trip decimal; "inf" / "-inf" for infinities.
std::string format_number(double x);

struct Cell {
    std::string text;
    bool numeric{true};
    double value{0.0};

    Cell(double x);
    Cell(int x);
    Cell(long long x);
    Cell(const ExtendedReal& x);
};

struct Block {
    std::vector<std::pair<std::string, Cell>> label;
    std::vector<std::vector<Cell>> rows;
};

struct Document {
    std::string command;  // normalized argument list, space separated
    std::vector<std::string> columns;
    std::vector<Block> blocks;
};

void write_csv(const Document& doc, std::ostream& os);
void write_json(const Document& doc, std::ostream& os);

} // namespace dqpt::cli
