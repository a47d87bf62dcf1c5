#pragma once

// Signatures of every catalog row above orthotropy, transcribed by hand from
// the published classification so the library's enumeration can be compared
// against them row by row.

#include <map>
#include <string>

#include "ela/clips.hpp"

namespace table {

using ela::ClassLabel;
using ela::StructureSignature;

inline StructureSignature row(const char* overall, std::initializer_list<const char*> entries) {
  StructureSignature s;
  std::size_t i = 0;
  for (const char* e : entries) s.entries[i++] = ClassLabel::parse(e);
  s.overall = ClassLabel::parse(overall);
  return s;
}

inline const std::map<std::string, StructureSignature>& golden_rows() {
  static const std::map<std::string, StructureSignature> rows{
      {"SO(3)^g", row("SO(3)", {"SO(3)", "SO(3)", "SO(3)", "SO(3)", "SO(3)", "SO(3)"})},
      {"O^g", row("O", {"SO(3)", "SO(3)", "O", "SO(3)", "O", "O"})},
      {"O(2)^g", row("O(2)", {"O(2)", "O(2)", "O(2)", "O(2)", "O(2)", "O(2)"})},
      {"O(2)^e_1", row("O(2)", {"SO(3)", "O(2)", "O(2)", "O(2)", "O(2)", "O(2)"})},
      {"O(2)^e_2", row("O(2)", {"O(2)", "SO(3)", "O(2)", "O(2)", "O(2)", "O(2)"})},
      {"O(2)^e_3", row("O(2)", {"O(2)", "O(2)", "SO(3)", "O(2)", "O(2)", "O(2)"})},
      {"O(2)^e_4", row("O(2)", {"SO(3)", "SO(3)", "O(2)", "SO(3)", "O(2)", "O(2)"})},
      {"O(2)^e_5", row("O(2)", {"SO(3)", "O(2)", "SO(3)", "O(2)", "SO(3)", "O(2)"})},
      {"O(2)^e_6", row("O(2)", {"O(2)", "SO(3)", "SO(3)", "O(2)", "O(2)", "SO(3)"})},
      {"D4^g", row("D4", {"O(2)", "O(2)", "D4", "O(2)", "D4", "D4"})},
      {"D4^e_1", row("D4", {"SO(3)", "O(2)", "D4", "O(2)", "D4", "D4"})},
      {"D4^e_2", row("D4", {"O(2)", "SO(3)", "D4", "O(2)", "D4", "D4"})},
      {"D4^e_3", row("D4", {"O(2)", "O(2)", "O", "O(2)", "D4", "D4"})},
      {"D4^e_4", row("D4", {"SO(3)", "SO(3)", "D4", "SO(3)", "D4", "D4"})},
      {"D4^e_5", row("D4", {"SO(3)", "O(2)", "O", "O(2)", "O", "D4"})},
      {"D4^e_6", row("D4", {"O(2)", "SO(3)", "O", "O(2)", "D4", "O"})},
      {"D3^g", row("D3", {"O(2)", "O(2)", "D3", "O(2)", "D3", "D3"})},
      {"D3^e_1", row("D3", {"SO(3)", "O(2)", "D3", "O(2)", "D3", "D3"})},
      {"D3^e_2", row("D3", {"O(2)", "SO(3)", "D3", "O(2)", "D3", "D3"})},
      {"D3^e_3", row("D3", {"O(2)", "O(2)", "O", "O(2)", "D3", "D3"})},
      {"D3^e_4", row("D3", {"SO(3)", "SO(3)", "D3", "SO(3)", "D3", "D3"})},
      {"D3^e_5", row("D3", {"SO(3)", "O(2)", "O", "O(2)", "O", "D3"})},
      {"D3^e_6", row("D3", {"O(2)", "SO(3)", "O", "O(2)", "D3", "O"})},
  };
  return rows;
}

}  // namespace table
