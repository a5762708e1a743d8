#include "gselfies/group.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gselfies {

bool valid_group_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) && static_cast<unsigned char>(c) < 128;
  });
}

Group make_group(std::string name, std::string template_text,
                 std::optional<int> priority, int overload,
                 const ValenceTable &table) {
  if (!valid_group_name(name))
    throw GroupError("group name '" + name +
                     "' must match [A-Za-z][A-Za-z0-9]*");
  if (overload < 0 || overload > 15)
    throw GroupError("group '" + name + "': overload " + std::to_string(overload) +
                     " outside 0..15");
  ParsedSmiles parsed;
  try {
    parsed = parse_smiles(template_text, true, table);
  } catch (const SmilesError &ex) {
    throw GroupError("group '" + name + "': " + ex.what());
  }
  const int k = static_cast<int>(parsed.attachments.size());
  if (k == 0) throw GroupError("group '" + name + "' has no attachment points");
  if (k > kMaxAttachments)
    throw GroupError("group '" + name + "' has " + std::to_string(k) +
                     " attachment points; at most 16 are addressable");
  if (!is_connected(parsed.graph))
    throw GroupError("group '" + name + "': template is disconnected");
  for (const auto &m : parsed.attachments) {
    int fv = free_valence(parsed.graph, m.host_atom, table);
    if (m.valency_cap > fv)
      throw GroupError("group '" + name + "': attachment " +
                       std::to_string(m.attachment_index) + " has cap " +
                       std::to_string(m.valency_cap) + " but its host has free valence " +
                       std::to_string(fv));
  }
  Group g;
  g.name = std::move(name);
  g.templ = std::move(parsed.graph);
  g.attachments = std::move(parsed.attachments);
  g.priority = priority;
  g.overload_value = overload;
  g.template_text = std::move(template_text);
  return g;
}

void GroupSet::add(Group group) {
  if (by_name_.contains(group.name))
    throw GroupError("duplicate group name '" + group.name + "'");
  by_name_.emplace(group.name, groups_.size());
  groups_.push_back(std::move(group));
  rebuild_order();
}

const Group *GroupSet::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &groups_[it->second];
}

void GroupSet::rebuild_order() {
  order_.clear();
  for (const auto &g : groups_) order_.push_back(&g);
  std::sort(order_.begin(), order_.end(), [](const Group *a, const Group *b) {
    int pa = a->priority.value_or(0), pb = b->priority.value_or(0);
    if (pa != pb) return pa > pb;
    if (a->templ.num_atoms() != b->templ.num_atoms())
      return a->templ.num_atoms() > b->templ.num_atoms();
    return a->name < b->name;
  });
}

GroupSet groupset_from_json(std::string_view text, const ValenceTable &table) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &ex) {
    throw GroupError(std::string("group set: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array())
    throw GroupError("group set: expected {\"groups\": [...]}");
  GroupSet set(table);
  for (const auto &entry : doc["groups"]) {
    if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string() ||
        !entry.contains("template") || !entry["template"].is_string())
      throw GroupError("group set: each group needs string 'name' and 'template'");
    for (const auto &[key, _] : entry.items())
      if (key != "name" && key != "template" && key != "priority" && key != "overload")
        throw GroupError("group set: unknown key '" + key + "'");
    std::optional<int> priority;
    if (entry.contains("priority") && !entry["priority"].is_null()) {
      if (!entry["priority"].is_number_integer())
        throw GroupError("group set: 'priority' must be an integer");
      priority = entry["priority"].get<int>();
    }
    int overload = 0;
    if (entry.contains("overload")) {
      if (!entry["overload"].is_number_integer())
        throw GroupError("group set: 'overload' must be an integer");
      overload = entry["overload"].get<int>();
    }
    set.add(make_group(entry["name"].get<std::string>(),
                       entry["template"].get<std::string>(), priority, overload,
                       table));
  }
  return set;
}

std::string groupset_to_json(const GroupSet &set) {
  using ordered = nlohmann::ordered_json;
  ordered doc;
  doc["groups"] = ordered::array();
  for (const auto &g : set.groups()) {
    ordered entry;
    entry["name"] = g.name;
    entry["template"] = g.template_text;
    if (g.priority) entry["priority"] = *g.priority;
    entry["overload"] = g.overload_value;
    doc["groups"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

GroupSet load_groupset(const std::string &path, const ValenceTable &table) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open group set '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return groupset_from_json(ss.str(), table);
}

void save_groupset(const GroupSet &set, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write group set '" + path + "'");
  out << groupset_to_json(set);
}

std::vector<std::string> alphabet(const GroupSet &set) {
  static const char *kModifiers[] = {"", "=", "#", "/", "\\"};
  std::vector<std::string> out;
  for (const auto &[element, entry] : set.table().entries()) {
    std::string sym(element_symbol(element));
    for (int charge : {0, 1, -1}) {
      auto maxv = set.table().max_valence(element, charge);
      if (!maxv || *maxv < 1) continue;
      std::string payload = sym;
      if (charge) payload += charge > 0 ? "+1" : "-1";
      for (const char *m : kModifiers) out.push_back(std::string("[") + m + payload + "]");
    }
  }
  for (const char *m : {"", "=", "#"}) out.push_back(std::string("[") + m + "Branch]");
  out.push_back("[pop]");
  for (int x = 1; x <= 3; ++x)
    for (const char *m : {"", "=", "#"})
      out.push_back(std::string("[") + m + "Ring" + std::to_string(x) + "]");
  out.push_back("[->]");
  for (const auto &g : set.groups())
    for (int s = 0; s < g.num_attachments(); ++s)
      for (const char *m : {"", "=", "#"})
        out.push_back(std::string("[") + m + ":" + std::to_string(s) + g.name + "]");
  return out;
}

}  // namespace gselfies
