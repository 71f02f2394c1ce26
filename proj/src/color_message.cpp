#include "hopcolor/color_message.hpp"

#include <algorithm>

namespace hopcolor {

void ColorSet::insert(Color c) {
  std::size_t octet = c / 8;
  if (octet >= octets_.size()) octets_.resize(octet + 1, 0);
  octets_[octet] |= static_cast<std::uint8_t>(1u << (c % 8));
}

bool ColorSet::contains(Color c) const {
  std::size_t octet = c / 8;
  if (octet >= octets_.size()) return false;
  return octets_[octet] & (1u << (c % 8));
}

void ColorSet::merge(const ColorSet& other) {
  if (other.octets_.size() > octets_.size())
    octets_.resize(other.octets_.size(), 0);
  for (std::size_t i = 0; i < other.octets_.size(); ++i)
    octets_[i] |= other.octets_[i];
}

bool ColorSet::empty() const {
  for (auto o : octets_)
    if (o) return false;
  return true;
}

std::size_t ColorSet::size() const {
  std::size_t n = 0;
  for (auto o : octets_) n += __builtin_popcount(o);
  return n;
}

Color ColorSet::smallest_absent() const {
  for (std::size_t i = 0; i < octets_.size(); ++i) {
    if (octets_[i] == 0xFF) continue;
    for (unsigned bit = 0; bit < 8; ++bit)
      if (!(octets_[i] & (1u << bit)))
        return static_cast<Color>(i * 8 + bit);
  }
  return static_cast<Color>(octets_.size() * 8);
}

std::vector<Color> ColorSet::values() const {
  std::vector<Color> out;
  for (std::size_t i = 0; i < octets_.size(); ++i)
    for (unsigned bit = 0; bit < 8; ++bit)
      if (octets_[i] & (1u << bit)) out.push_back(static_cast<Color>(i * 8 + bit));
  return out;
}

ColorSet ColorSet::from_octets(std::span<const std::uint8_t> octets) {
  ColorSet s;
  s.octets_.assign(octets.begin(), octets.end());
  while (!s.octets_.empty() && s.octets_.back() == 0) s.octets_.pop_back();
  return s;
}

EncodeError::EncodeError(const std::string& field, const std::string& message)
    : std::runtime_error("encode: " + field + ": " + message), field_(field) {}

DecodeError::DecodeError(const std::string& field, const std::string& message)
    : std::runtime_error("decode: " + field + ": " + message), field_(field) {}

namespace {

void put_u8(std::vector<std::uint8_t>& out, std::uint8_t v) {
  out.push_back(v);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void put_priorities(std::vector<std::uint8_t>& out,
                    const std::vector<Priority>& entries,
                    const std::string& field) {
  if (entries.size() > 2)
    throw EncodeError(field, "at most 2 entries allowed");
  put_u8(out, static_cast<std::uint8_t>(entries.size()));
  for (const auto& p : entries) {
    if (p.address > 0xFFFF)
      throw EncodeError(field, "address exceeds 2 octets");
    put_u16(out, p.prio);
    put_u16(out, static_cast<std::uint16_t>(p.address));
  }
}

void put_bitmap(std::vector<std::uint8_t>& out, const ColorSet& bitmap,
                const std::string& field) {
  const auto& octets = bitmap.octets();
  if (octets.size() > 0xFF) throw EncodeError(field, "bitmap too long");
  put_u8(out, static_cast<std::uint8_t>(octets.size()));
  out.insert(out.end(), octets.begin(), octets.end());
}

struct Reader {
  std::span<const std::uint8_t> data;
  std::size_t pos = 0;

  std::uint8_t u8(const std::string& field) {
    if (pos + 1 > data.size()) throw DecodeError(field, "truncated");
    return data[pos++];
  }
  std::uint16_t u16(const std::string& field) {
    if (pos + 2 > data.size()) throw DecodeError(field, "truncated");
    std::uint16_t v = static_cast<std::uint16_t>(data[pos] << 8 | data[pos + 1]);
    pos += 2;
    return v;
  }
  std::span<const std::uint8_t> bytes(std::size_t n, const std::string& field) {
    if (pos + n > data.size()) throw DecodeError(field, "truncated");
    auto out = data.subspan(pos, n);
    pos += n;
    return out;
  }
};

std::vector<Priority> read_priorities(Reader& r, const std::string& size_field,
                                      const std::string& field) {
  std::uint8_t count = r.u8(size_field);
  if (count > 2)
    throw DecodeError(size_field, "entry count " + std::to_string(count) +
                                      " exceeds 2");
  std::vector<Priority> out;
  for (unsigned i = 0; i < count; ++i) {
    Priority p;
    p.prio = r.u16(field);
    p.address = r.u16(field);
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<std::uint8_t> encode(const ColorMessage& m) {
  std::vector<std::uint8_t> out;
  put_u8(out, m.type);
  if (m.originator > 0xFFFF)
    throw EncodeError("originator", "address exceeds 2 octets");
  put_u16(out, static_cast<std::uint16_t>(m.originator));
  if (m.color) {
    if (*m.color > kMaxWireColor)
      throw EncodeError("color", "color exceeds " +
                                     std::to_string(kMaxWireColor));
    put_u8(out, static_cast<std::uint8_t>(*m.color));
  } else {
    put_u8(out, kUncoloredWire);
  }
  put_u16(out, m.prio);
  put_priorities(out, m.max2_prio1, "max2_prio1");
  put_priorities(out, m.max2_prio2, "max2_prio2");
  put_bitmap(out, m.bitmap1, "color_bitmap1");
  put_bitmap(out, m.bitmap2, "color_bitmap2");
  return out;
}

ColorMessage decode(std::span<const std::uint8_t> octets) {
  Reader r{octets};
  ColorMessage m;
  m.type = r.u8("type");
  m.originator = r.u16("originator");
  std::uint8_t color = r.u8("color");
  if (color == kUncoloredWire)
    m.color = std::nullopt;
  else
    m.color = static_cast<Color>(color);
  m.prio = r.u16("prio");
  m.max2_prio1 = read_priorities(r, "size_max2_prio1", "max2_prio1");
  m.max2_prio2 = read_priorities(r, "size_max2_prio2", "max2_prio2");
  std::uint8_t b1 = r.u8("size_bitmap1");
  m.bitmap1 = ColorSet::from_octets(r.bytes(b1, "color_bitmap1"));
  std::uint8_t b2 = r.u8("size_bitmap2");
  m.bitmap2 = ColorSet::from_octets(r.bytes(b2, "color_bitmap2"));
  if (r.pos != octets.size())
    throw DecodeError("message", std::to_string(octets.size() - r.pos) +
                                     " trailing octets");
  return m;
}

}  // namespace hopcolor
