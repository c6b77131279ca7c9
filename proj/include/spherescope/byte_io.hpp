#pragma once

#include <cstdint>
#include <string>

#include "spherescope/errors.hpp"

// Little-endian scalar (de)serialisation for canonical keys and cache files.
// Keys must be stable byte-for-byte across runs and platforms, so everything
// goes through these helpers rather than memcpy of host-order structs.

namespace spherescope::bytes {

inline void put_u8(std::string& out, std::uint8_t v) { out.push_back(static_cast<char>(v)); }

inline void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

inline void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void put_i32(std::string& out, std::int32_t v) { put_u32(out, static_cast<std::uint32_t>(v)); }

inline std::uint8_t get_u8(const std::string& s, std::size_t& pos) {
  if (pos + 1 > s.size()) fail(Errc::cache_format, "truncated byte stream");
  return static_cast<std::uint8_t>(s[pos++]);
}

inline std::uint16_t get_u16(const std::string& s, std::size_t& pos) {
  if (pos + 2 > s.size()) fail(Errc::cache_format, "truncated byte stream");
  std::uint16_t v = 0;
  for (int i = 0; i < 2; ++i) v |= static_cast<std::uint16_t>(static_cast<std::uint8_t>(s[pos++])) << (8 * i);
  return v;
}

inline std::uint32_t get_u32(const std::string& s, std::size_t& pos) {
  if (pos + 4 > s.size()) fail(Errc::cache_format, "truncated byte stream");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(s[pos++])) << (8 * i);
  return v;
}

inline std::uint64_t get_u64(const std::string& s, std::size_t& pos) {
  if (pos + 8 > s.size()) fail(Errc::cache_format, "truncated byte stream");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(s[pos++])) << (8 * i);
  return v;
}

inline std::int32_t get_i32(const std::string& s, std::size_t& pos) {
  return static_cast<std::int32_t>(get_u32(s, pos));
}

// In-place read/write of an i32 field inside a fixed-layout key.
inline std::int32_t read_i32_at(const std::string& s, std::size_t pos) {
  std::size_t p = pos;
  return get_i32(s, p);
}

inline void write_i32_at(std::string& s, std::size_t pos, std::int32_t v) {
  auto u = static_cast<std::uint32_t>(v);
  for (int i = 0; i < 4; ++i) s[pos + i] = static_cast<char>((u >> (8 * i)) & 0xff);
}

}  // namespace spherescope::bytes
