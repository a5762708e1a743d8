#include "gselfies/element.h"

#include <array>

namespace gselfies {
namespace {

constexpr std::array<ElementInfo, 15> kElements = {{
    {Element::kH, "H", 1.008},
    {Element::kB, "B", 10.812},
    {Element::kC, "C", 12.011},
    {Element::kN, "N", 14.007},
    {Element::kO, "O", 15.999},
    {Element::kF, "F", 18.998},
    {Element::kSi, "Si", 28.086},
    {Element::kP, "P", 30.974},
    {Element::kS, "S", 32.067},
    {Element::kCl, "Cl", 35.453},
    {Element::kAs, "As", 74.922},
    {Element::kSe, "Se", 78.96},
    {Element::kBr, "Br", 79.904},
    {Element::kTe, "Te", 127.60},
    {Element::kI, "I", 126.904},
}};

const ElementInfo &info(Element e) {
  for (const auto &ei : kElements)
    if (ei.element == e) return ei;
  return kElements[0];
}

}  // namespace

std::string_view element_symbol(Element e) { return info(e).symbol; }

double atomic_weight(Element e) { return info(e).atomic_weight; }

int atomic_number(Element e) { return static_cast<int>(e); }

std::optional<Element> element_from_symbol(std::string_view symbol) {
  for (const auto &ei : kElements)
    if (ei.symbol == symbol) return ei.element;
  return std::nullopt;
}

bool in_organic_subset(Element e) {
  switch (e) {
  case Element::kB:
  case Element::kC:
  case Element::kN:
  case Element::kO:
  case Element::kP:
  case Element::kS:
  case Element::kF:
  case Element::kCl:
  case Element::kBr:
  case Element::kI:
    return true;
  default:
    return false;
  }
}

}  // namespace gselfies
