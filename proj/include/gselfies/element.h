#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace gselfies {

// Atomic number doubles as the enumerator value.
enum class Element : std::uint8_t {
  kH = 1,
  kB = 5,
  kC = 6,
  kN = 7,
  kO = 8,
  kF = 9,
  kSi = 14,
  kP = 15,
  kS = 16,
  kCl = 17,
  kAs = 33,
  kSe = 34,
  kBr = 35,
  kTe = 52,
  kI = 53,
};

struct ElementInfo {
  Element element;
  std::string_view symbol;
  double atomic_weight;  // standard atomic weight, IUPAC conventional values
};

std::string_view element_symbol(Element e);
double atomic_weight(Element e);
int atomic_number(Element e);

std::optional<Element> element_from_symbol(std::string_view symbol);

// Elements the SMILES organic subset may write without brackets.
bool in_organic_subset(Element e);

}  // namespace gselfies
