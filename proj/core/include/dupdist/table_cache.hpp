#pragma once

#include <filesystem>
#include <iosfwd>

#include "dupdist/exact_engine.hpp"

namespace dupdist {

// Cache layout: "DDR1", version byte 0x01, max_n as little-endian u32, then
// for L = 1..max_n the ceil(2^L / 2) bytes of that level's nibble array.

void write_table(std::ostream& out, const DistanceTable& table);
/// Throws CacheError on a bad header, truncation or trailing bytes.
DistanceTable read_table(std::istream& in);

void save_table(const std::filesystem::path& path, const DistanceTable& table);
DistanceTable load_table(const std::filesystem::path& path);

}  // namespace dupdist
