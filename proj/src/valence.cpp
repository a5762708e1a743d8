#include "gselfies/valence.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace gselfies {

const ValenceTable &ValenceTable::standard() {
  static const ValenceTable table = [] {
    ValenceTable t;
    t.set(Element::kB, {3, ChargeRule::kSubtract});
    t.set(Element::kC, {4, ChargeRule::kAbsolute});
    t.set(Element::kN, {3, ChargeRule::kAdd});
    t.set(Element::kO, {2, ChargeRule::kAdd});
    t.set(Element::kP, {5, ChargeRule::kAdd});
    t.set(Element::kS, {6, ChargeRule::kAdd});
    t.set(Element::kF, {1, ChargeRule::kAdd});
    t.set(Element::kCl, {1, ChargeRule::kAdd});
    t.set(Element::kBr, {1, ChargeRule::kAdd});
    t.set(Element::kI, {1, ChargeRule::kAdd});
    return t;
  }();
  return table;
}

std::optional<int> ValenceTable::max_valence(Element e, int charge) const {
  auto it = entries_.find(e);
  if (it == entries_.end()) return std::nullopt;
  int v = it->second.base_valence;
  switch (it->second.rule) {
  case ChargeRule::kAdd:
    v += charge;
    break;
  case ChargeRule::kSubtract:
    v -= charge;
    break;
  case ChargeRule::kAbsolute:
    v -= std::abs(charge);
    break;
  }
  return v < 0 ? 0 : v;
}

namespace {

ChargeRule parse_rule(const std::string &s) {
  if (s == "add") return ChargeRule::kAdd;
  if (s == "subtract") return ChargeRule::kSubtract;
  if (s == "absolute") return ChargeRule::kAbsolute;
  throw std::invalid_argument("unknown charge_rule '" + s + "'");
}

}  // namespace

ValenceTable ValenceTable::from_json(const std::string &text) {
  ValenceTable table = standard();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &ex) {
    throw std::invalid_argument(std::string("valence table: ") + ex.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("valence table: expected a JSON object");

  for (const auto &[symbol, value] : doc.items()) {
    auto element = element_from_symbol(symbol);
    if (!element)
      throw std::invalid_argument("valence table: unknown element '" + symbol +
                                  "'");
    Entry entry{0, ChargeRule::kAdd};
    if (auto it = table.entries_.find(*element); it != table.entries_.end())
      entry = it->second;
    if (value.is_number_integer()) {
      entry.base_valence = value.get<int>();
    } else if (value.is_object()) {
      if (!value.contains("valence") || !value["valence"].is_number_integer())
        throw std::invalid_argument("valence table: '" + symbol +
                                    "' needs an integer 'valence'");
      entry.base_valence = value["valence"].get<int>();
      if (value.contains("charge_rule"))
        entry.rule = parse_rule(value["charge_rule"].get<std::string>());
    } else {
      throw std::invalid_argument("valence table: bad entry for '" + symbol +
                                  "'");
    }
    if (entry.base_valence < 0 || entry.base_valence > 8)
      throw std::invalid_argument("valence table: valence out of range for '" +
                                  symbol + "'");
    table.set(*element, entry);
  }
  return table;
}

ValenceTable ValenceTable::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open valence table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

namespace {

std::vector<int> normal_valences(Element e, int charge) {
  // Isoelectronic shift: N+ behaves like C, O- like F, etc.
  int z = atomic_number(e);
  switch (e) {
  case Element::kH:
    return {1};
  case Element::kB:
    return {3 - charge};
  case Element::kC:
  case Element::kSi:
    return {4 - std::abs(charge)};
  case Element::kN:
  case Element::kP:
  case Element::kAs:
    if (charge == 0) return z == 7 ? std::vector<int>{3} : std::vector<int>{3, 5};
    return {3 + charge};
  case Element::kO:
  case Element::kS:
  case Element::kSe:
  case Element::kTe:
    if (charge == 0) return z == 8 ? std::vector<int>{2} : std::vector<int>{2, 4, 6};
    return {2 + charge};
  case Element::kF:
  case Element::kCl:
  case Element::kBr:
  case Element::kI:
    if (charge == 0) return z == 9 ? std::vector<int>{1} : std::vector<int>{1, 3, 5, 7};
    return {1 + charge};
  }
  return {0};
}

}  // namespace

int lowest_normal_valence(Element e, int charge) {
  int v = normal_valences(e, charge).front();
  return v < 0 ? 0 : v;
}

int implicit_hydrogen_count(Element e, int charge, int bond_order_sum) {
  for (int v : normal_valences(e, charge))
    if (v >= bond_order_sum) return v - bond_order_sum;
  return 0;
}

}  // namespace gselfies
