#pragma once

// Rose-graph generalized Baumslag-Solitar presentations
//
//   G = < a, t_1, ..., t_r | t_i a^{n_i} t_i^{-1} = a^{m_i} >
//
// and run-length encoded words over the alphabet {a, t_1, ..., t_r}.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rosegbs/bigint.hpp"

namespace rosegbs {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept {
    return position_;
  }

 private:
  std::size_t position_;
};

struct LoopRelation {
  BigInt n;
  BigInt m;

  bool operator==(LoopRelation const&) const = default;
};

class RoseGbs {
 public:
  explicit RoseGbs(std::vector<LoopRelation> loops) : loops_(std::move(loops)) {
    if (loops_.empty()) {
      throw DomainError("a rose presentation needs at least one stable letter");
    }
    for (auto const& l : loops_) {
      if (l.n == 0 || l.m == 0) {
        throw DomainError("loop exponents must be nonzero");
      }
    }
  }

  std::size_t rank() const noexcept {
    return loops_.size();
  }

  std::vector<LoopRelation> const& loops() const noexcept {
    return loops_;
  }

  // 1-based, matching the stable letter t_i.
  LoopRelation const& loop(std::size_t i) const {
    return loops_.at(i - 1);
  }

  bool operator==(RoseGbs const&) const = default;

 private:
  std::vector<LoopRelation> loops_;
};

// Generator index: 0 is a, i >= 1 is t_i.
using GenIndex = std::size_t;
inline constexpr GenIndex kGenA = 0;

struct Letter {
  GenIndex gen;
  BigInt exp;

  bool operator==(Letter const&) const = default;
};

// Freely reduced word: adjacent letters have distinct generators and every
// exponent is nonzero. Only `reduce` constructs one from raw letters.
class Word {
 public:
  Word() = default;

  std::vector<Letter> const& letters() const noexcept {
    return letters_;
  }
  bool empty() const noexcept {
    return letters_.empty();
  }
  std::size_t size() const noexcept {
    return letters_.size();
  }
  Letter const& operator[](std::size_t i) const {
    return letters_[i];
  }

  // Length in the free group, sum of |exponent|.
  BigInt free_length() const {
    BigInt total = 0;
    for (auto const& l : letters_) {
      total += abs(l.exp);
    }
    return total;
  }

  GenIndex max_gen() const noexcept {
    GenIndex g = 0;
    for (auto const& l : letters_) {
      g = std::max(g, l.gen);
    }
    return g;
  }

  bool operator==(Word const&) const = default;

  friend Word reduce(std::span<Letter const> letters);

 private:
  std::vector<Letter> letters_;
};

// Single stack pass; merging can only expose cancellations at the top, so the
// result is already a fixed point.
inline Word reduce(std::span<Letter const> letters) {
  Word w;
  auto& out = w.letters_;
  for (auto const& l : letters) {
    if (l.exp == 0) {
      continue;
    }
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) {
        out.pop_back();
      }
    } else {
      out.push_back(l);
    }
  }
  return w;
}

inline Word reduce(std::initializer_list<Letter> letters) {
  return reduce(std::span<Letter const>(letters.begin(), letters.size()));
}

inline Word gen_power(GenIndex g, BigInt e) {
  return reduce({Letter{g, std::move(e)}});
}

inline Word invert(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(Letter{it->gen, -it->exp});
  }
  return reduce(out);
}

inline Word concat(Word const& x, Word const& y) {
  std::vector<Letter> out(x.letters());
  out.insert(out.end(), y.letters().begin(), y.letters().end());
  return reduce(out);
}

template <typename... Words>
Word product(Word const& first, Words const&... rest) {
  Word w = first;
  ((w = concat(w, rest)), ...);
  return w;
}

// g w g^-1
inline Word conjugate(Word const& w, Word const& g) {
  return product(g, w, invert(g));
}

// x y x^-1 y^-1
inline Word commutator(Word const& x, Word const& y) {
  return product(x, y, invert(x), invert(y));
}

inline std::string gen_name(GenIndex g) {
  return g == kGenA ? std::string("a") : "t" + std::to_string(g);
}

// "a^2 t1 a^-1"; the identity prints as "1".
inline std::string to_string(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += gen_name(w[i].gen);
    if (w[i].exp != 1) {
      out += '^';
      out += w[i].exp.str();
    }
  }
  return out;
}

inline std::string to_string(RoseGbs const& pres) {
  std::string out = "<a";
  for (std::size_t i = 1; i <= pres.rank(); ++i) {
    out += ",t" + std::to_string(i);
  }
  out += " |";
  for (std::size_t i = 1; i <= pres.rank(); ++i) {
    auto const& l = pres.loop(i);
    std::string t = "t" + std::to_string(i);
    out += (i > 1 ? " ; " : " ") + t + " a^" + l.n.str() + " " + t + "^-1 = a^" + l.m.str();
  }
  return out + ">";
}

// The defining relator t_i a^{n_i} t_i^{-1} a^{-m_i}.
inline Word relator(RoseGbs const& pres, std::size_t i) {
  auto const& l = pres.loop(i);
  return reduce({Letter{i, 1}, Letter{kGenA, l.n}, Letter{i, -1}, Letter{kGenA, -l.m}});
}

namespace detail {

  enum class Tok { lt, gt, comma, bar, semi, eq, caret, gen, integer, one, end };

  struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
    GenIndex gen = 0;
  };

  class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      std::size_t start = pos_;
      if (pos_ == src_.size()) {
        return {Tok::end, "", start};
      }
      char c = src_[pos_];
      auto single = [&](Tok k) {
        ++pos_;
        return Token{k, std::string(1, c), start};
      };
      switch (c) {
        case '<':
          return single(Tok::lt);
        case '>':
          return single(Tok::gt);
        case ',':
          return single(Tok::comma);
        case '|':
          return single(Tok::bar);
        case ';':
          return single(Tok::semi);
        case '=':
          return single(Tok::eq);
        case '^':
          return single(Tok::caret);
        default:
          break;
      }
      if (c == 'a') {
        ++pos_;
        return {Tok::gen, "a", start, kGenA};
      }
      if (c == 't') {
        ++pos_;
        std::size_t d = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          ++pos_;
        }
        if (d == pos_) {
          throw ParseError("stable letter needs an index, e.g. t1", start);
        }
        std::string digits(src_.substr(d, pos_ - d));
        if (digits.size() > 9) {
          throw ParseError("stable letter index too large", start);
        }
        GenIndex idx = std::stoul(digits);
        if (idx == 0) {
          throw ParseError("stable letters are numbered from t1", start);
        }
        return {Tok::gen, "t" + digits, start, idx};
      }
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        ++pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          ++pos_;
        }
        std::string text(src_.substr(start, pos_ - start));
        if (text == "-") {
          throw ParseError("sign without digits", start);
        }
        return {Tok::integer, text, start};
      }
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

   private:
    std::string_view src_;
    std::size_t pos_ = 0;
  };

  class Parser {
   public:
    explicit Parser(std::string_view src) : lex_(src), cur_(lex_.next()) {}

    Token const& peek() const {
      return cur_;
    }

    Token take() {
      Token t = cur_;
      cur_ = lex_.next();
      return t;
    }

    Token expect(Tok k, char const* what) {
      if (cur_.kind != k) {
        throw ParseError(std::string("expected ") + what, cur_.pos);
      }
      return take();
    }

    BigInt integer(char const* what) {
      Token t = expect(Tok::integer, what);
      return parse_bigint(t.text);
    }

   private:
    Lexer lex_;
    Token cur_;
  };

}  // namespace detail

// Grammar (whitespace-insensitive):
//   pres = "<" "a" ("," tname)+ "|" rel (";" rel)* ">"
//   rel  = tname "a" ["^" int] tname "^-1" "=" "a" ["^" int]
inline RoseGbs parse_presentation(std::string_view text) {
  detail::Parser ps(text);
  using detail::Tok;
  ps.expect(Tok::lt, "'<'");
  auto first = ps.expect(Tok::gen, "generator a");
  if (first.gen != kGenA) {
    throw ParseError("presentation must list a first", first.pos);
  }
  std::set<GenIndex> declared;
  while (ps.peek().kind == Tok::comma) {
    ps.take();
    auto t = ps.expect(Tok::gen, "stable letter");
    if (t.gen == kGenA) {
      throw ParseError("a listed twice", t.pos);
    }
    if (!declared.insert(t.gen).second) {
      throw ParseError("duplicate stable letter " + t.text, t.pos);
    }
  }
  if (declared.empty()) {
    throw ParseError("expected at least one stable letter", ps.peek().pos);
  }
  std::size_t const r = declared.size();
  if (*declared.rbegin() != r) {
    throw ParseError("stable letters must be t1..t" + std::to_string(r), first.pos);
  }
  ps.expect(Tok::bar, "'|'");

  std::vector<std::pair<bool, LoopRelation>> loops(r, {false, LoopRelation{1, 1}});
  auto exponent = [&ps](std::size_t pos) -> BigInt {
    if (ps.peek().kind != Tok::caret) {
      return 1;
    }
    ps.take();
    BigInt e = ps.integer("integer exponent");
    if (e == 0) {
      throw ParseError("zero exponent", pos);
    }
    return e;
  };
  while (true) {
    auto t = ps.expect(Tok::gen, "stable letter starting a relation");
    if (t.gen == kGenA) {
      throw ParseError("relation not of HNN shape t a^n t^-1 = a^m", t.pos);
    }
    if (t.gen > r) {
      throw ParseError("unknown generator " + t.text, t.pos);
    }
    auto a1 = ps.expect(Tok::gen, "a");
    if (a1.gen != kGenA) {
      throw ParseError("relation not of HNN shape t a^n t^-1 = a^m", a1.pos);
    }
    BigInt n = exponent(a1.pos);
    auto t2 = ps.expect(Tok::gen, "closing stable letter");
    if (t2.gen != t.gen) {
      throw ParseError("relation not of HNN shape t a^n t^-1 = a^m", t2.pos);
    }
    ps.expect(Tok::caret, "'^-1'");
    auto inv = ps.expect(Tok::integer, "'-1'");
    if (inv.text != "-1") {
      throw ParseError("relation not of HNN shape t a^n t^-1 = a^m", inv.pos);
    }
    ps.expect(Tok::eq, "'='");
    auto a2 = ps.expect(Tok::gen, "a");
    if (a2.gen != kGenA) {
      throw ParseError("relation not of HNN shape t a^n t^-1 = a^m", a2.pos);
    }
    BigInt m = exponent(a2.pos);
    auto& slot = loops[t.gen - 1];
    if (slot.first) {
      throw ParseError("duplicate relation for " + t.text, t.pos);
    }
    slot = {true, LoopRelation{std::move(n), std::move(m)}};
    if (ps.peek().kind == Tok::semi) {
      ps.take();
      continue;
    }
    break;
  }
  auto close = ps.expect(Tok::gt, "'>'");
  if (ps.peek().kind != Tok::end) {
    throw ParseError("trailing input", ps.peek().pos);
  }
  std::vector<LoopRelation> out;
  for (std::size_t i = 0; i < r; ++i) {
    if (!loops[i].first) {
      throw ParseError("missing relation for t" + std::to_string(i + 1), close.pos);
    }
    out.push_back(std::move(loops[i].second));
  }
  return RoseGbs(std::move(out));
}

// Juxtaposition of atoms `a`, `t<k>` with optional `^int`; "1" or the empty
// string is the identity.
inline Word parse_word(std::string_view text, std::size_t rank) {
  detail::Parser ps(text);
  using detail::Tok;
  std::vector<Letter> letters;
  if (ps.peek().kind == Tok::integer && ps.peek().text == "1") {
    ps.take();
    if (ps.peek().kind != Tok::end) {
      throw ParseError("trailing input after identity", ps.peek().pos);
    }
    return Word{};
  }
  while (ps.peek().kind != Tok::end) {
    auto g = ps.expect(Tok::gen, "generator");
    if (g.gen > rank) {
      throw ParseError("unknown generator " + g.text, g.pos);
    }
    BigInt e = 1;
    if (ps.peek().kind == Tok::caret) {
      ps.take();
      e = ps.integer("integer exponent");
    }
    letters.push_back(Letter{g.gen, std::move(e)});
  }
  return reduce(letters);
}

inline Word parse_word(std::string_view text, RoseGbs const& pres) {
  return parse_word(text, pres.rank());
}

}  // namespace rosegbs
