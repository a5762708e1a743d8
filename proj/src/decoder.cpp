#include "gselfies/decoder.h"

#include <algorithm>
#include <optional>

namespace gselfies {

namespace {

struct Instance {
  const Group *group;
  int base;  // graph id of template atom 0
  std::vector<bool> occupied;
  std::vector<int> used;  // bond order spent per attachment
  int current = 0;
};

// Where the next bond starts: an atom, optionally through an attachment.
struct Cursor {
  int atom = -1;
  int instance = -1;
  int attachment = -1;

  bool has_slot() const { return instance >= 0; }
};

struct Frame {
  bool group = false;
  Cursor cursor;     // atom frames
  int instance = -1; // group frames
};

struct PendingRing {
  int source;
  int distance;
  bool forward;
  int order;
  BondStereo stereo;
};

BondStereo stereo_of(BondModifier m) {
  if (m == BondModifier::kUp) return BondStereo::kUp;
  if (m == BondModifier::kDown) return BondStereo::kDown;
  return BondStereo::kNone;
}

class Decoder {
public:
  Decoder(const std::vector<Token> &tokens, const GroupSet &set, DecodeReport *report)
      : tokens_(tokens), set_(set), table_(set.table()),
        overload_(OverloadTable::for_groups(set)), report_(report) {}

  MolGraph run() {
    while (pos_ < tokens_.size()) {
      const Token &t = tokens_[pos_++];
      if (index_mode_ >= 0)
        index_token(t);
      else
        normal_token(t);
    }
    resolve_rings();
    return std::move(graph_);
  }

private:
  void note(int DecodeReport::*counter, const std::string &what) {
    if (!report_) return;
    ++(report_->*counter);
    report_->events.push_back("token " + std::to_string(pos_ - 1) + ": " + what);
  }

  int fv(int atom) const { return free_valence(graph_, atom, table_); }

  int slot_room(const Cursor &c) const {
    if (!c.has_slot()) return 3;
    const Instance &in = instances_[c.instance];
    return in.group->attachments[c.attachment].valency_cap - in.used[c.attachment];
  }

  void spend(const Cursor &c, int order) {
    if (c.has_slot()) instances_[c.instance].used[c.attachment] += order;
  }

  // Order of a new bond from the cursor to an atom with |target_free|.
  int bond_order(int requested, int target_free) const {
    return std::min({requested, fv(cursor_.atom), target_free, slot_room(cursor_)});
  }

  void normal_token(const Token &t) {
    switch (t.kind) {
    case TokenKind::kAtom:
      return atom_token(t);
    case TokenKind::kBranch:
      if (cursor_.atom < 0) return note(&DecodeReport::ignored_tokens, "branch without atom");
      stack_.push_back({false, cursor_, -1});
      return;
    case TokenKind::kPop:
      return pop_token();
    case TokenKind::kRing:
      return ring_token(t);
    case TokenKind::kForward:
      return note(&DecodeReport::ignored_tokens, "stray forward marker");
    case TokenKind::kGroup:
      return group_token(t);
    }
  }

  void atom_token(const Token &t) {
    auto maxv = table_.supports(t.element) ? table_.max_valence(t.element, t.charge)
                                           : std::nullopt;
    if (!maxv || t.explicit_h > *maxv)
      return note(&DecodeReport::skipped_atoms, "atom " + t.spelling() + " not representable");
    if (cursor_.atom < 0 && !graph_.empty())
      return note(&DecodeReport::skipped_atoms, "atom with no current atom");
    int own_free = *maxv - t.explicit_h;
    int order = 0;
    if (cursor_.atom >= 0) {
      int requested = modifier_order(t.modifier);
      order = bond_order(requested, own_free);
      if (order == 0) return note(&DecodeReport::skipped_atoms, "no valence left for " + t.spelling());
      if (order < requested) note(&DecodeReport::demoted_bonds, "bond to " + t.spelling() + " demoted");
    }
    Atom a;
    a.element = t.element;
    a.formal_charge = t.charge;
    a.explicit_h = t.explicit_h;
    int id = graph_.add_atom(a);
    if (order > 0) {
      graph_.add_bond(cursor_.atom, id, order, order == 1 ? stereo_of(t.modifier) : BondStereo::kNone);
      spend(cursor_, order);
    }
    cursor_ = Cursor{id};
  }

  void pop_token() {
    if (stack_.empty()) return note(&DecodeReport::ignored_tokens, "pop on empty stack");
    Frame f = stack_.back();
    stack_.pop_back();
    if (!f.group) {
      cursor_ = f.cursor;
    } else {
      enter_index_mode(f.instance);
    }
  }

  // After a group is left, control returns to the previous branchpoint.
  void exit_group() {
    index_mode_ = -1;
    if (stack_.empty()) {
      cursor_ = Cursor{};
      return;
    }
    Frame f = stack_.back();
    stack_.pop_back();
    if (!f.group)
      cursor_ = f.cursor;
    else
      enter_index_mode(f.instance);
  }

  void enter_index_mode(int instance) {
    index_mode_ = instance;
    cursor_ = Cursor{};
    const auto &occ = instances_[instance].occupied;
    if (std::all_of(occ.begin(), occ.end(), [](bool b) { return b; })) exit_group();
  }

  void index_token(const Token &t) {
    if (t.kind == TokenKind::kPop) return exit_group();
    Instance &in = instances_[index_mode_];
    const int k = in.group->num_attachments();
    int target = (in.current + overload_.digit(t)) % k;
    while (in.occupied[target]) target = (target + 1) % k;
    in.occupied[target] = true;
    in.current = target;
    stack_.push_back({true, Cursor{}, index_mode_});
    const auto &att = in.group->attachments[target];
    cursor_ = Cursor{in.base + att.host_atom, index_mode_, target};
    index_mode_ = -1;
  }

  void ring_token(const Token &t) {
    bool forward = false;
    if (pos_ < tokens_.size() && tokens_[pos_].kind == TokenKind::kForward) {
      forward = true;
      ++pos_;
    }
    if (tokens_.size() - pos_ < static_cast<std::size_t>(t.ring_arity)) {
      pos_ = tokens_.size();
      return note(&DecodeReport::dropped_rings, "ring directive truncated");
    }
    int n = 0;
    for (int i = 0; i < t.ring_arity; ++i) n = n * 16 + overload_.digit(tokens_[pos_++]);
    if (cursor_.atom < 0) return note(&DecodeReport::dropped_rings, "ring without atom");
    rings_.push_back({cursor_.atom, n, forward, modifier_order(t.modifier), stereo_of(t.modifier)});
  }

  void group_token(const Token &t) {
    const Group *g = set_.find(t.name);
    if (!g) return note(&DecodeReport::unknown_groups, "unknown group '" + t.name + "'");
    if (cursor_.atom < 0 && !graph_.empty())
      return note(&DecodeReport::skipped_groups, "group with no current atom");
    const int k = g->num_attachments();
    const int entry = t.start_index % k;
    const auto &att = g->attachments[entry];
    int order = 0;
    if (cursor_.atom >= 0) {
      int host_free = free_valence(g->templ, att.host_atom, table_);
      int requested = modifier_order(t.modifier);
      order = std::min(bond_order(requested, host_free), att.valency_cap);
      if (order == 0) return note(&DecodeReport::skipped_groups, "no valence left for group");
      if (order < requested) note(&DecodeReport::demoted_bonds, "bond to group demoted");
    }
    Instance in{g, graph_.num_atoms(), std::vector<bool>(k, false), std::vector<int>(k, 0), entry};
    for (const auto &a : g->templ.atoms()) {
      Atom copy = a;
      copy.aromatic = false;
      graph_.add_atom(copy);
    }
    for (const auto &b : g->templ.bonds())
      graph_.add_bond(in.base + b.begin, in.base + b.end, b.order, b.stereo);
    if (order > 0) {
      graph_.add_bond(cursor_.atom, in.base + att.host_atom, order,
                      order == 1 ? stereo_of(t.modifier) : BondStereo::kNone);
      spend(cursor_, order);
      in.occupied[entry] = true;
      in.used[entry] = order;
    }
    instances_.push_back(std::move(in));
    enter_index_mode(static_cast<int>(instances_.size()) - 1);
  }

  void resolve_rings() {
    const int n = graph_.num_atoms();
    for (const auto &r : rings_) {
      int target = r.forward ? r.source + r.distance : r.source - r.distance;
      std::string why;
      if (r.distance == 0 || target < 0 || target >= n)
        why = "ring target out of range";
      else if (graph_.bond_between(r.source, target) >= 0)
        why = "ring duplicates a bond";
      int order = why.empty() ? std::min({r.order, fv(r.source), fv(target)}) : 0;
      if (why.empty() && order == 0) why = "no valence for ring bond";
      if (!why.empty()) {
        if (report_) {
          ++report_->dropped_rings;
          report_->events.push_back("ring from atom " + std::to_string(r.source) + ": " + why);
        }
        continue;
      }
      if (order < r.order && report_) {
        ++report_->demoted_bonds;
        report_->events.push_back("ring from atom " + std::to_string(r.source) + " demoted");
      }
      graph_.add_bond(r.source, target, order, order == 1 ? r.stereo : BondStereo::kNone);
    }
  }

  const std::vector<Token> &tokens_;
  const GroupSet &set_;
  const ValenceTable &table_;
  OverloadTable overload_;
  DecodeReport *report_;

  std::size_t pos_ = 0;
  MolGraph graph_;
  Cursor cursor_;
  int index_mode_ = -1;
  std::vector<Frame> stack_;
  std::vector<Instance> instances_;
  std::vector<PendingRing> rings_;
};

}  // namespace

MolGraph decode(const std::vector<Token> &tokens, const GroupSet &set,
                DecodeReport *report) {
  return Decoder(tokens, set, report).run();
}

MolGraph decode(std::string_view text, const GroupSet &set, DecodeReport *report) {
  RobustTokens lexed = tokenize_robust(text);
  if (report) {
    report->lex_skipped += lexed.skipped;
    if (lexed.skipped)
      report->events.push_back(std::to_string(lexed.skipped) + " unlexable units skipped");
  }
  return decode(lexed.tokens, set, report);
}

}  // namespace gselfies
