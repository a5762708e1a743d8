#include "gselfies/token.h"

#include <cctype>
#include <cstdlib>
#include <optional>

#include "gselfies/group.h"

namespace gselfies {

int modifier_order(BondModifier m) {
  switch (m) {
  case BondModifier::kDouble:
    return 2;
  case BondModifier::kTriple:
    return 3;
  default:
    return 1;
  }
}

char modifier_char(BondModifier m) {
  switch (m) {
  case BondModifier::kDouble:
    return '=';
  case BondModifier::kTriple:
    return '#';
  case BondModifier::kUp:
    return '/';
  case BondModifier::kDown:
    return '\\';
  default:
    return '\0';
  }
}

Token Token::atom(Element e, BondModifier m, int charge, int explicit_h) {
  Token t;
  t.kind = TokenKind::kAtom;
  t.modifier = m;
  t.element = e;
  t.charge = charge;
  t.explicit_h = explicit_h;
  return t;
}

Token Token::branch(BondModifier m) {
  Token t;
  t.kind = TokenKind::kBranch;
  t.modifier = m;
  return t;
}

Token Token::pop() {
  Token t;
  t.kind = TokenKind::kPop;
  return t;
}

Token Token::ring(int arity, BondModifier m) {
  Token t;
  t.kind = TokenKind::kRing;
  t.ring_arity = arity;
  t.modifier = m;
  return t;
}

Token Token::forward() {
  Token t;
  t.kind = TokenKind::kForward;
  return t;
}

Token Token::group(int start, std::string name, BondModifier m) {
  Token t;
  t.kind = TokenKind::kGroup;
  t.start_index = start;
  t.name = std::move(name);
  t.modifier = m;
  return t;
}

std::string Token::spelling() const {
  std::string out = "[";
  if (char c = modifier_char(modifier)) out += c;
  switch (kind) {
  case TokenKind::kAtom:
    out += element_symbol(element);
    if (explicit_h > 0) out += "H" + std::to_string(explicit_h);
    if (charge != 0) out += (charge > 0 ? "+" : "-") + std::to_string(std::abs(charge));
    break;
  case TokenKind::kBranch:
    out += "Branch";
    break;
  case TokenKind::kPop:
    out += "pop";
    break;
  case TokenKind::kRing:
    out += "Ring" + std::to_string(ring_arity);
    break;
  case TokenKind::kForward:
    out += "->";
    break;
  case TokenKind::kGroup:
    out += ":" + std::to_string(start_index) + name;
    break;
  }
  return out + "]";
}

namespace {

// Positive decimal without leading zeros, at most |max_digits| long.
bool read_number(std::string_view s, std::size_t &pos, int &value, int max_digits) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) &&
         static_cast<int>(pos - start) < max_digits + 1)
    ++pos;
  std::size_t len = pos - start;
  if (len == 0 || static_cast<int>(len) > max_digits) return false;
  if (len > 1 && s[start] == '0') return false;
  value = std::stoi(std::string(s.substr(start, len)));
  return true;
}

}  // namespace

Token parse_token(std::string_view p) {
  auto bad = [&]() -> TokenError {
    return TokenError("unknown token payload '" + std::string(p) + "'", 0);
  };
  if (p.empty()) throw TokenError("empty token", 0);
  Token t;
  std::string_view body = p;
  switch (body[0]) {
  case '=':
    t.modifier = BondModifier::kDouble;
    break;
  case '#':
    t.modifier = BondModifier::kTriple;
    break;
  case '/':
    t.modifier = BondModifier::kUp;
    break;
  case '\\':
    t.modifier = BondModifier::kDown;
    break;
  default:
    break;
  }
  if (t.modifier != BondModifier::kNone) body.remove_prefix(1);
  if (body.empty()) throw bad();

  if (body == "Branch") {
    t.kind = TokenKind::kBranch;
    return t;
  }
  if (body == "pop") {
    t.kind = TokenKind::kPop;
    return t;
  }
  if (body == "->") {
    t.kind = TokenKind::kForward;
    return t;
  }
  if (body.size() == 5 && body.starts_with("Ring") && body[4] >= '1' && body[4] <= '3') {
    t.kind = TokenKind::kRing;
    t.ring_arity = body[4] - '0';
    return t;
  }
  if (body[0] == ':') {
    std::size_t pos = 1;
    int start = 0;
    if (!read_number(body, pos, start, 6)) throw bad();
    std::string_view name = body.substr(pos);
    if (!valid_group_name(name)) throw bad();
    t.kind = TokenKind::kGroup;
    t.start_index = start;
    t.name = std::string(name);
    return t;
  }

  // Atom: Symbol [H<n>] [(+|-)<n>]
  t.kind = TokenKind::kAtom;
  std::size_t pos = 0;
  std::optional<Element> e;
  if (body.size() >= 2 && std::islower(static_cast<unsigned char>(body[1])))
    e = element_from_symbol(body.substr(0, 2)), pos = 2;
  if (!e) e = element_from_symbol(body.substr(0, 1)), pos = 1;
  if (!e) throw bad();
  t.element = *e;
  if (pos < body.size() && body[pos] == 'H') {
    ++pos;
    int h = 0;
    if (!read_number(body, pos, h, 2) || h == 0) throw bad();
    t.explicit_h = h;
  }
  if (pos < body.size() && (body[pos] == '+' || body[pos] == '-')) {
    bool plus = body[pos] == '+';
    ++pos;
    int q = 0;
    if (!read_number(body, pos, q, 1) || q == 0) throw bad();
    t.charge = plus ? q : -q;
  }
  if (pos != body.size()) throw bad();
  return t;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '[')
      throw TokenError("unexpected '" + std::string(1, text[i]) + "' outside brackets at " +
                           std::to_string(i),
                       i);
    std::size_t close = text.find_first_of("[]", i + 1);
    if (close == std::string_view::npos || text[close] != ']')
      throw TokenError("unbalanced bracket at " + std::to_string(i), i);
    try {
      out.push_back(parse_token(text.substr(i + 1, close - i - 1)));
    } catch (const TokenError &ex) {
      throw TokenError(std::string(ex.what()) + " at " + std::to_string(i), i);
    }
    i = close + 1;
  }
  return out;
}

RobustTokens tokenize_robust(std::string_view text) {
  RobustTokens out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '[') {
      std::size_t next = text.find('[', i);
      i = next == std::string_view::npos ? text.size() : next;
      ++out.skipped;
      continue;
    }
    std::size_t close = text.find_first_of("[]", i + 1);
    if (close == std::string_view::npos) {
      ++out.skipped;
      break;
    }
    if (text[close] == '[') {  // unterminated unit
      ++out.skipped;
      i = close;
      continue;
    }
    try {
      out.tokens.push_back(parse_token(text.substr(i + 1, close - i - 1)));
    } catch (const TokenError &) {
      ++out.skipped;
    }
    i = close + 1;
  }
  return out;
}

std::string detokenize(const std::vector<Token> &tokens) {
  std::string out;
  for (const auto &t : tokens) out += t.spelling();
  return out;
}

OverloadTable::OverloadTable() {
  const Token digits[16] = {
      Token::atom(Element::kC),
      Token::ring(1),
      Token::ring(2),
      Token::branch(),
      Token::branch(BondModifier::kDouble),
      Token::branch(BondModifier::kTriple),
      Token::ring(3),
      Token::atom(Element::kO),
      Token::atom(Element::kN),
      Token::atom(Element::kN, BondModifier::kDouble),
      Token::atom(Element::kC, BondModifier::kDouble),
      Token::atom(Element::kC, BondModifier::kTriple),
      Token::atom(Element::kS),
      Token::atom(Element::kP),
      Token::atom(Element::kF),
      Token::atom(Element::kO, BondModifier::kDouble),
  };
  for (int d = 0; d < 16; ++d) {
    preferred_.push_back(digits[d]);
    by_spelling_[digits[d].spelling()] = d;
  }
}

const OverloadTable &OverloadTable::standard() {
  static const OverloadTable table;
  return table;
}

OverloadTable OverloadTable::for_groups(const GroupSet &set) {
  OverloadTable t = standard();
  for (const auto &g : set.groups()) t.group_overload_[g.name] = g.overload_value;
  return t;
}

int OverloadTable::digit(const Token &token) const {
  if (token.kind == TokenKind::kGroup) {
    auto it = group_overload_.find(token.name);
    return it == group_overload_.end() ? 0 : it->second;
  }
  auto it = by_spelling_.find(token.spelling());
  return it == by_spelling_.end() ? 0 : it->second;
}

}  // namespace gselfies
