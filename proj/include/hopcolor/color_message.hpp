// The Color message exchanged every round and its bit-exact codec.
//
// Wire layout, in order, all multi-octet integers big-endian:
//
//   offset  size  field
//   0       1     type            message type, 1 for Color
//   1       2     originator      address of the sending node
//   3       1     color           sender's color; 0xFF when uncolored
//   4       2     prio            sender's numeric priority
//   6       1     size_max2_prio1 entry count, 0..2
//   7       4*n1  max2_prio1      entries (prio: 2 octets, address: 2 octets),
//                                 highest priority first
//   .       1     size_max2_prio2 entry count, 0..2
//   .       4*n2  max2_prio2      entries as above
//   .       1     size_bitmap1    octet count b1
//   .       b1    color_bitmap1   octet k carries colors [8k, 8k+8);
//                                 bit i (value 1<<i) set <=> color 8k+i used
//   .       1     size_bitmap2    octet count b2
//   .       b2    color_bitmap2   same encoding
//
// Colors on the wire are capped at 254; 0xFF in the color octet is the
// uncolored sentinel. Encoders emit minimal bitmaps (no trailing zero
// octet); decoders accept padded ones.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopcolor/topology.hpp"
#include "hopcolor/validity.hpp"

namespace hopcolor {

inline constexpr std::uint8_t kUncoloredWire = 0xFF;
inline constexpr Color kMaxWireColor = 254;

// Numeric priority plus the address that breaks ties.
struct Priority {
  std::uint16_t prio = 0;
  NodeId address = 0;
  bool operator==(const Priority&) const = default;
};

// True iff a ranks strictly higher than b: larger prio wins, equal prio
// falls back to the smaller address.
inline bool beats(const Priority& a, const Priority& b) {
  if (a.prio != b.prio) return a.prio > b.prio;
  return a.address < b.address;
}

// Set of colors seen at some hop distance, stored normalized (no trailing
// zero octets in the wire image).
class ColorSet {
 public:
  void insert(Color c);
  bool contains(Color c) const;
  void merge(const ColorSet& other);
  void clear() { octets_.clear(); }
  bool empty() const;
  std::size_t size() const;
  Color smallest_absent() const;
  std::vector<Color> values() const;

  const std::vector<std::uint8_t>& octets() const { return octets_; }
  static ColorSet from_octets(std::span<const std::uint8_t> octets);

  bool operator==(const ColorSet&) const = default;

 private:
  std::vector<std::uint8_t> octets_;
};

struct ColorMessage {
  std::uint8_t type = 1;
  NodeId originator = 0;
  std::optional<Color> color;        // nullopt -> 0xFF on the wire
  std::uint16_t prio = 0;
  std::vector<Priority> max2_prio1;  // at most 2, highest first
  std::vector<Priority> max2_prio2;  // at most 2, highest first
  ColorSet bitmap1;                  // colors used at 1 hop
  ColorSet bitmap2;                  // colors used at 2 hops

  bool operator==(const ColorMessage&) const = default;
};

class EncodeError : public std::runtime_error {
 public:
  EncodeError(const std::string& field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

std::vector<std::uint8_t> encode(const ColorMessage& m);
ColorMessage decode(std::span<const std::uint8_t> octets);

}  // namespace hopcolor
