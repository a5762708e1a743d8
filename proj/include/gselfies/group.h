#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gselfies/molgraph.h"
#include "gselfies/smiles.h"
#include "gselfies/valence.h"

namespace gselfies {

class GroupError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Decoder digits are single base-16 digits, so relative indices can only
// address 16 attachment points.
inline constexpr int kMaxAttachments = 16;

struct Group {
  std::string name;
  MolGraph templ;
  std::vector<AttachmentMarker> attachments;  // indexed by attachment_index
  std::optional<int> priority;
  int overload_value = 0;
  std::string template_text;  // as given; kept for byte-stable saves

  int num_attachments() const { return static_cast<int>(attachments.size()); }
  bool operator==(const Group &) const = default;
};

bool valid_group_name(std::string_view name);

// Parses |template_text| with attachment markers and validates the result:
// name grammar, 1..16 attachment points, each cap within its host's free
// valence in the bare template, connected template, overload in 0..15.
Group make_group(std::string name, std::string template_text,
                 std::optional<int> priority = std::nullopt, int overload = 0,
                 const ValenceTable &table = ValenceTable::standard());

class GroupSet {
public:
  GroupSet() = default;
  explicit GroupSet(ValenceTable table) : table_(std::move(table)) {}

  // Throws GroupError on a duplicate name.
  void add(Group group);

  const Group *find(std::string_view name) const;
  std::size_t size() const { return groups_.size(); }
  bool empty() const { return groups_.empty(); }

  // Insertion order.
  const std::vector<Group> &groups() const { return groups_; }
  // Priority descending (missing = 0), atom count descending, then name.
  const std::vector<const Group *> &matching_order() const { return order_; }
  const ValenceTable &table() const { return table_; }

  bool operator==(const GroupSet &other) const {
    return groups_ == other.groups_ && table_ == other.table_;
  }

private:
  void rebuild_order();

  std::vector<Group> groups_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::vector<const Group *> order_;
  ValenceTable table_ = ValenceTable::standard();
};

// {"groups": [{"name", "template", "priority"?, "overload"?}]}
GroupSet groupset_from_json(std::string_view text,
                            const ValenceTable &table = ValenceTable::standard());
std::string groupset_to_json(const GroupSet &set);
GroupSet load_groupset(const std::string &path,
                       const ValenceTable &table = ValenceTable::standard());
void save_groupset(const GroupSet &set, const std::string &path);

// Token spellings of the dialect: atoms (supported elements, charges -1..+1,
// bond modifiers), structural tokens with modifiers, and [:S<name>] for
// every start index S of every group, with = and # variants.
std::vector<std::string> alphabet(const GroupSet &set);

}  // namespace gselfies
