#pragma once

#include <cstdint>
#include <istream>
#include <ostream>

// Little-endian scalar readers/writers for the binary file formats.
namespace ppr::io {

inline void write_u8(std::ostream& out, std::uint8_t v) {
  out.put(static_cast<char>(v));
}

inline void write_u32le(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

inline void write_u64le(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

inline void write_f64le(std::ostream& out, double v) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(v));
  __builtin_memcpy(&bits, &v, sizeof(bits));
  write_u64le(out, bits);
}

inline std::uint8_t read_u8(std::istream& in) {
  return static_cast<std::uint8_t>(in.get());
}

inline std::uint32_t read_u32le(std::istream& in) {
  char b[4] = {};
  in.read(b, 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  return v;
}

inline std::uint64_t read_u64le(std::istream& in) {
  char b[8] = {};
  in.read(b, 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  return v;
}

inline double read_f64le(std::istream& in) {
  const std::uint64_t bits = read_u64le(in);
  double v;
  __builtin_memcpy(&v, &bits, sizeof(v));
  return v;
}

}  // namespace ppr::io
