#pragma once

// Binary container shared by every persisted object (flow solutions,
// concentration series, bases, ROM artifacts). Layout, all little-endian:
//
//   "URBR"  u32 version  char[4] kind  u32 block_count
//   block*: u16 name_len, name, u8 type (1 f64, 2 i64, 3 bytes), u64 count, payload
//   u64 FNV-1a checksum of all preceding bytes
//
// See docs/formats.md for the per-kind block lists.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace urbanrom {

inline constexpr std::uint32_t kContainerVersion = 1;

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a(std::span<const double> values, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t h);

class BinaryWriter {
 public:
  explicit BinaryWriter(std::string_view kind);

  void put(std::string_view name, std::span<const double> values);
  void put(std::string_view name, std::span<const std::int64_t> values);
  void put_scalar(std::string_view name, double value);
  void put_int(std::string_view name, std::int64_t value);
  void put_string(std::string_view name, std::string_view text);

  std::string bytes() const;
  void write(const std::string& path) const;

 private:
  std::string kind_;
  std::string body_;
  std::uint32_t blocks_ = 0;
};

class BinaryReader {
 public:
  static BinaryReader from_bytes(std::string bytes);
  static BinaryReader from_file(const std::string& path);

  const std::string& kind() const { return kind_; }
  void expect_kind(std::string_view kind) const;
  bool has(const std::string& name) const { return blocks_.count(name) != 0; }

  std::vector<double> doubles(const std::string& name) const;
  std::vector<std::int64_t> ints(const std::string& name) const;
  double scalar(const std::string& name) const;
  std::int64_t integer(const std::string& name) const;
  std::string string(const std::string& name) const;

 private:
  struct Block {
    std::uint8_t type;
    std::uint64_t count;
    std::string payload;
  };
  const Block& block(const std::string& name, std::uint8_t type) const;

  std::string kind_;
  std::map<std::string, Block> blocks_;
};

}  // namespace urbanrom
