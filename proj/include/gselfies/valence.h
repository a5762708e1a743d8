#pragma once

#include <map>
#include <optional>
#include <string>

#include "gselfies/element.h"

namespace gselfies {

// How formal charge shifts an element's maximum valence.
enum class ChargeRule {
  kAdd,        // base + charge (N, O, P, S, halogens)
  kSubtract,   // base - charge (B)
  kAbsolute,   // base - |charge| (C)
};

// Maximum bonding capacity per (element, formal charge). Every robustness
// guarantee of the decoder is stated relative to one of these tables.
class ValenceTable {
public:
  struct Entry {
    int base_valence;
    ChargeRule rule;
  };

  // B3 C4 N3 O2 P5 S6 F/Cl/Br/I 1.
  static const ValenceTable &standard();

  // JSON object: {"C": 4, "N": {"valence": 3, "charge_rule": "add"}, ...}.
  // Entries not mentioned keep their standard values.
  static ValenceTable from_json(const std::string &text);
  static ValenceTable load(const std::string &path);

  bool supports(Element e) const { return entries_.contains(e); }

  // Max valence, clamped at zero; nullopt for unsupported elements.
  std::optional<int> max_valence(Element e, int charge) const;

  void set(Element e, Entry entry) { entries_[e] = entry; }

  const std::map<Element, Entry> &entries() const { return entries_; }

  bool operator==(const ValenceTable &) const = default;

private:
  std::map<Element, Entry> entries_;
};

inline bool operator==(const ValenceTable::Entry &a,
                       const ValenceTable::Entry &b) {
  return a.base_valence == b.base_valence && a.rule == b.rule;
}

// Lowest conventional valences used for hydrogen counting and aromatic
// pi-electron bookkeeping (S 2/4/6, P 3/5, ...). Independent of the decoder's
// maximum-valence table.
int implicit_hydrogen_count(Element e, int charge, int bond_order_sum);
int lowest_normal_valence(Element e, int charge);

}  // namespace gselfies
