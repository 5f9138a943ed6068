#include "dupdist/table_cache.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "dupdist/errors.hpp"

namespace dupdist {
namespace {

constexpr std::array<char, 4> kMagic = {'D', 'D', 'R', '1'};
constexpr std::uint8_t kVersion = 0x01;

}  // namespace

void write_table(std::ostream& out, const DistanceTable& table) {
  out.write(kMagic.data(), kMagic.size());
  out.put(static_cast<char>(kVersion));
  const auto n = static_cast<std::uint32_t>(table.max_n());
  const std::array<char, 4> le = {static_cast<char>(n & 0xFF), static_cast<char>((n >> 8) & 0xFF),
                                  static_cast<char>((n >> 16) & 0xFF),
                                  static_cast<char>((n >> 24) & 0xFF)};
  out.write(le.data(), le.size());
  for (int len = 1; len <= table.max_n(); ++len) {
    const auto& bytes = table.level(len).bytes();
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  if (!out) throw CacheError("failed writing table cache");
}

DistanceTable read_table(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw CacheError("table cache has a bad magic header");
  const int version = in.get();
  if (version != kVersion) throw CacheError("unsupported table cache version");
  std::array<unsigned char, 4> le{};
  in.read(reinterpret_cast<char*>(le.data()), le.size());
  if (!in) throw CacheError("table cache header is truncated");
  const std::uint32_t max_n = le[0] | (le[1] << 8) | (le[2] << 16) |
                              (static_cast<std::uint32_t>(le[3]) << 24);
  if (max_n < 1 || max_n > static_cast<std::uint32_t>(DistanceTable::kMaxLength)) {
    throw CacheError("table cache max_n " + std::to_string(max_n) + " out of range");
  }
  std::vector<NibbleArray> levels;
  levels.reserve(max_n);
  for (std::uint32_t len = 1; len <= max_n; ++len) {
    NibbleArray level(std::size_t{1} << len);
    auto& bytes = level.bytes();
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!in) throw CacheError("table cache is truncated at length " + std::to_string(len));
    levels.push_back(std::move(level));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw CacheError("table cache has trailing bytes");
  }
  return DistanceTable(static_cast<int>(max_n), std::move(levels));
}

void save_table(const std::filesystem::path& path, const DistanceTable& table) {
  const auto tmp = std::filesystem::path(path).concat(".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open " + tmp.string() + " for writing");
    write_table(out, table);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CacheError("cannot move cache into place: " + ec.message());
}

DistanceTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open " + path.string());
  return read_table(in);
}

}  // namespace dupdist
