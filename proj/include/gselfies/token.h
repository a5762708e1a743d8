#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gselfies/element.h"

namespace gselfies {

class GroupSet;

enum class TokenKind { kAtom, kBranch, kPop, kRing, kForward, kGroup };

enum class BondModifier { kNone, kDouble, kTriple, kUp, kDown };

int modifier_order(BondModifier m);
char modifier_char(BondModifier m);  // '\0' for kNone

struct Token {
  TokenKind kind = TokenKind::kAtom;
  BondModifier modifier = BondModifier::kNone;
  // kAtom
  Element element = Element::kC;
  int charge = 0;
  int explicit_h = 0;
  // kRing: 1..3
  int ring_arity = 1;
  // kGroup
  int start_index = 0;
  std::string name;

  static Token atom(Element e, BondModifier m = BondModifier::kNone, int charge = 0,
                    int explicit_h = 0);
  static Token branch(BondModifier m = BondModifier::kNone);
  static Token pop();
  static Token ring(int arity, BondModifier m = BondModifier::kNone);
  static Token forward();
  static Token group(int start, std::string name, BondModifier m = BondModifier::kNone);

  std::string spelling() const;
  bool operator==(const Token &) const = default;
};

class TokenError : public std::invalid_argument {
public:
  TokenError(const std::string &what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Lexes one bracket payload (without the brackets); throws TokenError.
Token parse_token(std::string_view payload);

// Strict: every character must belong to a well-formed [..] unit.
std::vector<Token> tokenize(std::string_view text);

struct RobustTokens {
  std::vector<Token> tokens;
  int skipped = 0;  // unlexable units dropped
};
// Never throws. Unlexable brackets and runs of text outside brackets are
// dropped one unit at a time.
RobustTokens tokenize_robust(std::string_view text);

std::string detokenize(const std::vector<Token> &tokens);

// Digit 0..15 per spelling. The base table is fixed; group tokens default to
// their group's overload value; everything else reads as 0.
class OverloadTable {
public:
  static const OverloadTable &standard();
  // The standard table plus group overloads from |set|.
  static OverloadTable for_groups(const GroupSet &set);

  int digit(const Token &token) const;
  // Preferred spelling for |digit| (used by the encoder).
  const Token &token_for(int digit) const { return preferred_.at(digit); }
  const std::map<std::string, int> &entries() const { return by_spelling_; }

private:
  OverloadTable();
  std::map<std::string, int> by_spelling_;
  std::map<std::string, int, std::less<>> group_overload_;
  std::vector<Token> preferred_;
};

inline int index_value(const Token &token, const OverloadTable &table) {
  return table.digit(token);
}

}  // namespace gselfies
