#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "neurognn/errors.hpp"

namespace neurognn {

// Explicit little-endian encoding so on-disk formats are byte-stable
// regardless of host order.

inline void write_u8(std::ostream& os, std::uint8_t v) {
  os.put(static_cast<char>(v));
}

inline void write_u16(std::ostream& os, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  os.write(b, 2);
}

inline void write_u32(std::ostream& os, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, 4);
}

inline void write_u64(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, 8);
}

inline void write_f32(std::ostream& os, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  write_u32(os, bits);
}

inline void write_f32_array(std::ostream& os, const float* data, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) write_f32(os, data[i]);
}

inline void write_string(std::ostream& os, const std::string& s) {
  if (s.size() > UINT16_MAX) throw SchemaError("string field too long for u16 length prefix");
  write_u16(os, static_cast<std::uint16_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::uint8_t read_u8(std::istream& is) {
  int c = is.get();
  if (c == EOF) throw SchemaError("unexpected end of file");
  return static_cast<std::uint8_t>(c);
}

inline std::uint16_t read_u16(std::istream& is) {
  std::uint16_t v = read_u8(is);
  v |= static_cast<std::uint16_t>(read_u8(is)) << 8;
  return v;
}

inline std::uint32_t read_u32(std::istream& is) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(read_u8(is)) << (8 * i);
  return v;
}

inline std::uint64_t read_u64(std::istream& is) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(read_u8(is)) << (8 * i);
  return v;
}

inline float read_f32(std::istream& is) {
  const std::uint32_t bits = read_u32(is);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

inline void read_f32_array(std::istream& is, float* data, std::size_t n) {
  std::vector<char> buf(n * 4);
  is.read(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (static_cast<std::size_t>(is.gcount()) != buf.size())
    throw SchemaError("unexpected end of file in float payload");
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t bits = 0;
    for (int b = 0; b < 4; ++b)
      bits |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(buf[i * 4 + b])) << (8 * b);
    std::memcpy(&data[i], &bits, 4);
  }
}

inline std::string read_string(std::istream& is) {
  const std::uint16_t n = read_u16(is);
  std::string s(n, '\0');
  is.read(s.data(), n);
  if (static_cast<std::size_t>(is.gcount()) != n) throw SchemaError("unexpected end of file in string");
  return s;
}

}  // namespace neurognn
