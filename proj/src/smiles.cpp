#include "gselfies/smiles.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>

#include "gselfies/perception.h"

namespace gselfies {

std::string_view to_string(SmilesErrorCode code) {
  switch (code) {
  case SmilesErrorCode::kEmpty:
    return "empty";
  case SmilesErrorCode::kSyntax:
    return "syntax";
  case SmilesErrorCode::kUnbalancedParenthesis:
    return "unbalanced-parenthesis";
  case SmilesErrorCode::kDanglingRingClosure:
    return "dangling-ring-closure";
  case SmilesErrorCode::kUnknownElement:
    return "unknown-element";
  case SmilesErrorCode::kUnkekulizable:
    return "unkekulizable";
  case SmilesErrorCode::kAttachmentOutsideTemplate:
    return "attachment-outside-template";
  case SmilesErrorCode::kBadAttachment:
    return "bad-attachment";
  case SmilesErrorCode::kValenceExceeded:
    return "valence-exceeded";
  case SmilesErrorCode::kUnsupported:
    return "unsupported";
  }
  return "unknown";
}

namespace {

struct ParseAtom {
  Atom atom;
  bool marker = false;
  int cap = 1;
};

struct ParseBond {
  int a, b;
  int order;
  BondStereo stereo;
  bool aromatic;  // implicit or ':' bond between aromatic atoms
};

struct RingOpen {
  int atom;
  char bond;
  std::size_t pos;
};

class SmilesParser {
public:
  SmilesParser(std::string_view text, bool allow_attachments,
               const ValenceTable &table)
      : s_(text), allow_attachments_(allow_attachments), table_(table) {}

  ParsedSmiles run() {
    if (s_.empty()) fail(SmilesErrorCode::kEmpty, "empty SMILES");
    while (pos_ < s_.size()) step();
    if (!branches_.empty())
      fail(SmilesErrorCode::kUnbalancedParenthesis, "unclosed '('");
    if (!rings_.empty())
      fail(SmilesErrorCode::kDanglingRingClosure,
           "ring closure " + std::to_string(rings_.begin()->first) +
               " never closed",
           rings_.begin()->second.pos);
    if (pending_bond_) fail(SmilesErrorCode::kSyntax, "dangling bond symbol");
    if (atoms_.empty()) fail(SmilesErrorCode::kEmpty, "no atoms");
    return finish();
  }

private:
  [[noreturn]] void fail(SmilesErrorCode code, const std::string &msg,
                         std::optional<std::size_t> at = std::nullopt) {
    std::size_t p = at.value_or(pos_);
    throw SmilesError(code, p,
                      std::string(to_string(code)) + " at " + std::to_string(p) +
                          ": " + msg);
  }

  void step() {
    char c = s_[pos_];
    switch (c) {
    case '(':
      if (prev_ < 0) fail(SmilesErrorCode::kSyntax, "branch without atom");
      if (pending_bond_) fail(SmilesErrorCode::kSyntax, "bond before '('");
      branches_.push_back(prev_);
      ++pos_;
      return;
    case ')':
      if (branches_.empty())
        fail(SmilesErrorCode::kUnbalancedParenthesis, "unmatched ')'");
      if (pending_bond_) fail(SmilesErrorCode::kSyntax, "bond before ')'");
      prev_ = branches_.back();
      branches_.pop_back();
      ++pos_;
      return;
    case '-':
    case '=':
    case '#':
    case ':':
    case '/':
    case '\\':
      if (pending_bond_) fail(SmilesErrorCode::kSyntax, "two bond symbols");
      pending_bond_ = c;
      ++pos_;
      return;
    case '$':
      fail(SmilesErrorCode::kUnsupported, "quadruple bonds are not supported");
    case '.':
      if (pending_bond_) fail(SmilesErrorCode::kSyntax, "bond before '.'");
      if (!branches_.empty())
        fail(SmilesErrorCode::kSyntax, "'.' inside a branch");
      prev_ = -1;
      ++pos_;
      return;
    case '%': {
      if (pos_ + 2 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) ||
          !std::isdigit(static_cast<unsigned char>(s_[pos_ + 2])))
        fail(SmilesErrorCode::kSyntax, "'%' needs two digits");
      int num = (s_[pos_ + 1] - '0') * 10 + (s_[pos_ + 2] - '0');
      ring_closure(num, pos_);
      pos_ += 3;
      return;
    }
    case '[':
      bracket_atom();
      return;
    case '*':
      marker_atom();
      return;
    default:
      break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ring_closure(c - '0', pos_);
      ++pos_;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      organic_atom();
      return;
    }
    fail(SmilesErrorCode::kSyntax, std::string("unexpected character '") + c + "'");
  }

  static int order_of(char bond) {
    switch (bond) {
    case '=':
      return 2;
    case '#':
      return 3;
    default:
      return 1;
    }
  }

  static BondStereo stereo_of(char bond) {
    if (bond == '/') return BondStereo::kUp;
    if (bond == '\\') return BondStereo::kDown;
    return BondStereo::kNone;
  }

  void connect(int a, int b, char bond) {
    if (a == b) fail(SmilesErrorCode::kSyntax, "atom bonded to itself");
    for (const auto &pb : bonds_)
      if ((pb.a == a && pb.b == b) || (pb.a == b && pb.b == a))
        fail(SmilesErrorCode::kSyntax, "duplicate bond");
    bool both_aromatic = atoms_[a].atom.aromatic && atoms_[b].atom.aromatic;
    bool aromatic = (bond == 0 && both_aromatic) || bond == ':';
    if (bond == ':' && !both_aromatic)
      fail(SmilesErrorCode::kSyntax, "aromatic bond between non-aromatic atoms");
    bonds_.push_back({a, b, order_of(bond), stereo_of(bond), aromatic});
  }

  void add_atom(ParseAtom pa) {
    atoms_.push_back(pa);
    int id = static_cast<int>(atoms_.size()) - 1;
    if (prev_ >= 0) connect(prev_, id, pending_bond_);
    pending_bond_ = 0;
    prev_ = id;
  }

  void ring_closure(int num, std::size_t at) {
    if (prev_ < 0) fail(SmilesErrorCode::kSyntax, "ring closure without atom");
    auto it = rings_.find(num);
    if (it == rings_.end()) {
      rings_[num] = RingOpen{prev_, pending_bond_, at};
    } else {
      char open_bond = it->second.bond;
      char bond = pending_bond_;
      if (open_bond && bond && open_bond != bond)
        fail(SmilesErrorCode::kSyntax, "conflicting ring-closure bond symbols");
      connect(it->second.atom, prev_, bond ? bond : open_bond);
      rings_.erase(it);
    }
    pending_bond_ = 0;
  }

  Element require_supported(std::string_view symbol) {
    auto e = element_from_symbol(symbol);
    if (!e || !table_.supports(*e))
      fail(SmilesErrorCode::kUnknownElement,
           "element '" + std::string(symbol) + "' is not in the valence table");
    return *e;
  }

  void organic_atom() {
    std::string_view rest = s_.substr(pos_);
    ParseAtom pa;
    std::string symbol;
    if (rest.starts_with("Cl") || rest.starts_with("Br")) {
      symbol = std::string(rest.substr(0, 2));
    } else {
      char c = rest[0];
      switch (c) {
      case 'B':
      case 'C':
      case 'N':
      case 'O':
      case 'P':
      case 'S':
      case 'F':
      case 'I':
        symbol = std::string(1, c);
        break;
      case 'b':
      case 'c':
      case 'n':
      case 'o':
      case 'p':
      case 's':
        symbol = std::string(1, static_cast<char>(std::toupper(c)));
        pa.atom.aromatic = true;
        break;
      default:
        fail(SmilesErrorCode::kUnknownElement,
             std::string("'") + c + "' is not an organic-subset atom");
      }
    }
    pa.atom.element = require_supported(symbol);
    pos_ += pa.atom.aromatic ? 1 : symbol.size();
    add_atom(pa);
  }

  void marker_atom() {
    if (!allow_attachments_)
      fail(SmilesErrorCode::kAttachmentOutsideTemplate,
           "attachment marker in a molecule");
    std::size_t at = pos_++;
    ParseAtom pa;
    pa.marker = true;
    pa.cap = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      pa.cap = s_[pos_] - '0';
      if (pa.cap == 0) fail(SmilesErrorCode::kBadAttachment, "attachment valency 0", at);
      ++pos_;
    }
    add_atom(pa);
  }

  void bracket_atom() {
    std::size_t start = pos_++;
    auto peek = [&]() -> char { return pos_ < s_.size() ? s_[pos_] : '\0'; };
    if (std::isdigit(static_cast<unsigned char>(peek())))
      fail(SmilesErrorCode::kUnsupported, "isotopes are not supported");
    if (peek() == '*') {
      fail(SmilesErrorCode::kUnsupported, "bracketed wildcard");
    }
    ParseAtom pa;
    std::string symbol;
    char c = peek();
    if (std::islower(static_cast<unsigned char>(c))) {
      // aromatic: se, as, te or single letter
      std::string two(s_.substr(pos_, 2));
      if (two == "se" || two == "as" || two == "te") {
        symbol = std::string(1, static_cast<char>(std::toupper(two[0]))) + two[1];
        pos_ += 2;
      } else {
        symbol = std::string(1, static_cast<char>(std::toupper(c)));
        ++pos_;
      }
      pa.atom.aromatic = true;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      if (pos_ + 1 < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_ + 1])) &&
          element_from_symbol(s_.substr(pos_, 2))) {
        symbol = std::string(s_.substr(pos_, 2));
        pos_ += 2;
      } else {
        symbol = std::string(1, c);
        ++pos_;
      }
    } else {
      fail(SmilesErrorCode::kSyntax, "bracket atom without element");
    }
    // Explicit [H] atoms are folded into their neighbour in finish().
    pa.atom.element = symbol == "H" ? Element::kH : require_supported(symbol);

    if (peek() == '@') {
      while (peek() == '@') ++pos_;
      while (std::isupper(static_cast<unsigned char>(peek())) && peek() != 'H') ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      warnings_.push_back("atom stereo descriptor at " + std::to_string(start) +
                          " discarded");
    }
    if (peek() == 'H') {
      ++pos_;
      int h = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        h = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) h = h * 10 + (s_[pos_++] - '0');
      }
      pa.atom.explicit_h = h;
    }
    if (peek() == '+' || peek() == '-') {
      char sign = s_[pos_++];
      int magnitude = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        magnitude = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())))
          magnitude = magnitude * 10 + (s_[pos_++] - '0');
      } else {
        while (peek() == sign) {
          ++magnitude;
          ++pos_;
        }
      }
      if (magnitude > 8) fail(SmilesErrorCode::kSyntax, "charge out of range");
      pa.atom.formal_charge = sign == '+' ? magnitude : -magnitude;
    }
    if (peek() == ':') fail(SmilesErrorCode::kUnsupported, "atom maps are not supported");
    if (peek() != ']') fail(SmilesErrorCode::kSyntax, "malformed bracket atom", start);
    ++pos_;
    add_atom(pa);
  }

  // [H] bonded once by a single bond to a heavy atom becomes an H count.
  void fold_hydrogens() {
    std::vector<int> degree(atoms_.size(), 0);
    for (const auto &pb : bonds_) {
      ++degree[pb.a];
      ++degree[pb.b];
    }
    std::vector<bool> drop(atoms_.size(), false);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      const ParseAtom &pa = atoms_[i];
      if (pa.marker || pa.atom.element != Element::kH) continue;
      if (pa.atom.formal_charge != 0 || pa.atom.explicit_h != 0 || degree[i] != 1)
        fail(SmilesErrorCode::kUnsupported, "hydrogen atoms must be bonded once", 0);
      drop[i] = true;
    }
    std::vector<ParseBond> kept;
    for (const auto &pb : bonds_) {
      if (drop[pb.a] || drop[pb.b]) {
        int heavy = drop[pb.a] ? pb.b : pb.a;
        if (drop[heavy] || atoms_[heavy].marker || pb.order != 1)
          fail(SmilesErrorCode::kUnsupported, "unsupported hydrogen bonding", 0);
        ++atoms_[heavy].atom.explicit_h;
        continue;
      }
      kept.push_back(pb);
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (drop[i]) atoms_[i].marker = true, atoms_[i].cap = -1;
    bonds_ = std::move(kept);
  }

  ParsedSmiles finish() {
    fold_hydrogens();
    ParsedSmiles out;
    std::vector<int> remap(atoms_.size(), -1);
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (!atoms_[i].marker) remap[i] = out.graph.add_atom(atoms_[i].atom);
    if (out.graph.empty()) fail(SmilesErrorCode::kBadAttachment, "template has no atoms");

    std::vector<int> marker_host(atoms_.size(), -1);
    std::vector<bool> candidates;
    for (const auto &pb : bonds_) {
      bool ma = atoms_[pb.a].marker, mb = atoms_[pb.b].marker;
      if (ma && mb) fail(SmilesErrorCode::kBadAttachment, "two attachment markers bonded");
      if (ma || mb) {
        int marker = ma ? pb.a : pb.b;
        if (marker_host[marker] >= 0)
          fail(SmilesErrorCode::kBadAttachment, "attachment marker with two bonds");
        marker_host[marker] = remap[ma ? pb.b : pb.a];
        continue;
      }
      out.graph.add_bond(remap[pb.a], remap[pb.b], pb.order, pb.stereo);
      candidates.push_back(pb.aromatic);
    }

    std::vector<int> extra_sigma(out.graph.num_atoms(), 0);
    int index = 0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (!atoms_[i].marker || atoms_[i].cap < 0) continue;
      if (marker_host[i] < 0)
        fail(SmilesErrorCode::kBadAttachment, "attachment marker without a host atom");
      out.attachments.push_back({atoms_[i].cap, index++, marker_host[i]});
      ++extra_sigma[marker_host[i]];
    }

    bool any_aromatic = std::any_of(atoms_.begin(), atoms_.end(),
                                    [](const ParseAtom &a) { return a.atom.aromatic; });
    if (any_aromatic) {
      // Attachment bonds occupy sigma capacity during kekulization.
      MolGraph tmp = out.graph;
      MolGraph shifted;
      for (int a = 0; a < tmp.num_atoms(); ++a) {
        Atom atom = tmp.atom(a);
        atom.explicit_h += extra_sigma[a];
        shifted.add_atom(atom);
      }
      for (const auto &b : tmp.bonds()) shifted.add_bond(b.begin, b.end, b.order, b.stereo);
      MolGraph kek;
      try {
        auto flags = std::make_unique<bool[]>(candidates.size());
        std::copy(candidates.begin(), candidates.end(), flags.get());
        kek = kekulize(shifted, std::span<const bool>(flags.get(), candidates.size()));
      } catch (const KekulizeError &ex) {
        fail(SmilesErrorCode::kUnkekulizable, ex.what(), 0);
      }
      for (int b = 0; b < kek.num_bonds(); ++b)
        out.graph.set_bond_order(b, kek.bond(b).order);
    }

    for (int a = 0; a < out.graph.num_atoms(); ++a) {
      const Atom &atom = out.graph.atom(a);
      int maxv = table_.max_valence(atom.element, atom.formal_charge).value_or(0);
      int used = atom.explicit_h + out.graph.bond_order_sum(a);
      if (used > maxv)
        fail(SmilesErrorCode::kValenceExceeded,
             "atom " + std::to_string(a) + " (" +
                 std::string(element_symbol(atom.element)) + ") uses valence " +
                 std::to_string(used) + " > " + std::to_string(maxv),
             0);
    }
    out.warnings = std::move(warnings_);
    return out;
  }

  std::string_view s_;
  bool allow_attachments_;
  const ValenceTable &table_;
  std::size_t pos_ = 0;
  int prev_ = -1;
  char pending_bond_ = 0;
  std::vector<ParseAtom> atoms_;
  std::vector<ParseBond> bonds_;
  std::vector<int> branches_;
  std::map<int, RingOpen> rings_;
  std::vector<std::string> warnings_;
};

}  // namespace

ParsedSmiles parse_smiles(std::string_view text, bool allow_attachments,
                          const ValenceTable &table) {
  return SmilesParser(text, allow_attachments, table).run();
}

MolGraph parse_molecule(std::string_view text, const ValenceTable &table) {
  return parse_smiles(text, false, table).graph;
}

namespace {

std::string atom_symbol(const Atom &atom) {
  std::string sym(element_symbol(atom.element));
  if (atom.formal_charge == 0 && atom.explicit_h == 0 &&
      in_organic_subset(atom.element))
    return sym;
  std::string out = "[" + sym;
  if (atom.explicit_h > 0) {
    out += 'H';
    if (atom.explicit_h > 1) out += std::to_string(atom.explicit_h);
  }
  if (atom.formal_charge != 0) {
    out += atom.formal_charge > 0 ? '+' : '-';
    int m = std::abs(atom.formal_charge);
    if (m > 1) out += std::to_string(m);
  }
  out += ']';
  return out;
}

std::string bond_symbol(int order) {
  switch (order) {
  case 2:
    return "=";
  case 3:
    return "#";
  default:
    return "";
  }
}

std::string ring_label(int digit) {
  if (digit < 10) return std::to_string(digit);
  return "%" + std::to_string(digit);
}

class SmilesWriter {
public:
  SmilesWriter(const MolGraph &g, std::span<const AttachmentMarker> attachments,
               std::span<const int> ranks)
      : g_(g), rank_(g.num_atoms()), visited_(g.num_atoms(), false),
        hosted_(g.num_atoms()) {
    for (int a = 0; a < g.num_atoms(); ++a)
      rank_[a] = ranks.empty() ? a : ranks[a];
    std::vector<AttachmentMarker> sorted(attachments.begin(), attachments.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto &x, const auto &y) { return x.attachment_index < y.attachment_index; });
    for (const auto &m : sorted) hosted_.at(m.host_atom).push_back(m.valency_cap);
  }

  std::string run(std::vector<int> *order) {
    const int n = g_.num_atoms();
    std::vector<int> by_rank(n);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](int x, int y) { return rank_[x] < rank_[y]; });

    // Pass 1: DFS tree and ring closures.
    children_.assign(n, {});
    opens_.assign(n, {});
    closes_.assign(n, {});
    parent_bond_.assign(n, -1);
    std::vector<int> roots;
    std::vector<bool> bond_seen(g_.num_bonds(), false);
    for (int s : by_rank) {
      if (visited_[s]) continue;
      roots.push_back(s);
      dfs(s, bond_seen);
    }

    // Pass 2: emission.
    std::string out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i) out += '.';
      emit(roots[i], out, order);
    }
    return out;
  }

private:
  std::vector<Neighbor> sorted_neighbors(int v) const {
    auto nb = g_.neighbors(v);
    std::vector<Neighbor> out(nb.begin(), nb.end());
    std::sort(out.begin(), out.end(),
              [&](const Neighbor &x, const Neighbor &y) { return rank_[x.atom] < rank_[y.atom]; });
    return out;
  }

  void dfs(int root, std::vector<bool> &bond_seen) {
    struct Frame {
      int atom;
      std::vector<Neighbor> nbrs;
      std::size_t next;
    };
    std::vector<Frame> stack;
    visited_[root] = true;
    stack.push_back({root, sorted_neighbors(root), 0});
    while (!stack.empty()) {
      Frame &f = stack.back();
      if (f.next == f.nbrs.size()) {
        stack.pop_back();
        continue;
      }
      Neighbor nb = f.nbrs[f.next++];
      if (bond_seen[nb.bond]) continue;
      bond_seen[nb.bond] = true;
      if (!visited_[nb.atom]) {
        visited_[nb.atom] = true;
        parent_bond_[nb.atom] = nb.bond;
        children_[f.atom].push_back(nb.atom);
        int child = nb.atom;
        stack.push_back({child, sorted_neighbors(child), 0});
      } else {
        // nb.atom is an ancestor still on the stack: it opens, f.atom closes.
        opens_[nb.atom].push_back(nb.bond);
        closes_[f.atom].push_back(nb.bond);
      }
    }
  }

  int take_digit() {
    for (int d = 1; d < 100; ++d)
      if (!in_use_[d]) {
        in_use_[d] = true;
        return d;
      }
    throw std::runtime_error("too many open ring closures");
  }

  void emit(int root, std::string &out, std::vector<int> *order) {
    enum class Kind { kAtom, kOpen, kClose };
    struct Item {
      Kind kind;
      int atom;
    };
    std::vector<Item> stack{{Kind::kAtom, root}};
    while (!stack.empty()) {
      Item it = stack.back();
      stack.pop_back();
      if (it.kind == Kind::kOpen) {
        out += '(';
        continue;
      }
      if (it.kind == Kind::kClose) {
        out += ')';
        continue;
      }
      int v = it.atom;
      if (parent_bond_[v] >= 0) out += bond_symbol(g_.bond(parent_bond_[v]).order);
      out += atom_symbol(g_.atom(v));
      if (order) order->push_back(v);
      for (int b : closes_[v]) {
        int d = digit_of_.at(b);
        out += ring_label(d);
        in_use_[d] = false;
      }
      for (int b : opens_[v]) {
        int d = take_digit();
        digit_of_[b] = d;
        out += bond_symbol(g_.bond(b).order) + ring_label(d);
      }
      for (int cap : hosted_[v]) out += "(*" + std::to_string(cap) + ")";
      const auto &kids = children_[v];
      // Reverse push: first child written first, last child inline.
      for (std::size_t i = kids.size(); i-- > 0;) {
        if (i + 1 == kids.size()) {
          stack.push_back({Kind::kAtom, kids[i]});
        } else {
          stack.push_back({Kind::kClose, -1});
          stack.push_back({Kind::kAtom, kids[i]});
          stack.push_back({Kind::kOpen, -1});
        }
      }
    }
  }

  const MolGraph &g_;
  std::vector<int> rank_;
  std::vector<bool> visited_;
  std::vector<std::vector<int>> hosted_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> opens_, closes_;
  std::vector<int> parent_bond_;
  std::map<int, int> digit_of_;
  bool in_use_[100] = {};
};

}  // namespace

std::string write_smiles(const MolGraph &graph,
                         std::span<const AttachmentMarker> attachments,
                         std::span<const int> ranks, std::vector<int> *atom_order) {
  if (graph.empty()) return "";
  return SmilesWriter(graph, attachments, ranks).run(atom_order);
}

std::vector<MolGraph> Corpus::molecules() const {
  std::vector<MolGraph> out;
  out.reserve(records.size());
  for (const auto &r : records) out.push_back(r.graph);
  return out;
}

Corpus read_corpus_text(std::string_view text, const ValenceTable &table) {
  Corpus corpus;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
      line.remove_prefix(1);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t ws = line.find_first_of(" \t");
    std::string smiles(line.substr(0, ws));
    std::string id;
    if (ws != std::string_view::npos) {
      std::string_view rest = line.substr(ws);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
        rest.remove_prefix(1);
      id = std::string(rest);
    }
    try {
      MolGraph g = parse_molecule(smiles, table);
      corpus.records.push_back({smiles, id, std::move(g), line_no});
    } catch (const SmilesError &ex) {
      corpus.skipped.push_back({line_no, smiles, ex.what()});
    }
    if (end == text.size()) break;
  }
  return corpus;
}

Corpus read_corpus(const std::string &path, const ValenceTable &table) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  return read_corpus_text(text, table);
}

}  // namespace gselfies
