#pragma once

// Per-loop p-adic invariants, the case split for (N_p)_omega(G), exponent data
// for k-vectors, and the residual-p decision.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rosegbs/bigint.hpp"
#include "rosegbs/numtheory.hpp"
#include "rosegbs/presentation.hpp"

namespace rosegbs {

class Theta {
 public:
  enum class Kind { finite, infinity };

  static Theta finite(unsigned v) {
    return Theta(Kind::finite, v);
  }
  static Theta infinity() {
    return Theta(Kind::infinity, 0);
  }

  bool is_infinite() const noexcept {
    return kind_ == Kind::infinity;
  }
  unsigned value() const {
    if (is_infinite()) {
      throw std::logic_error("theta is infinite");
    }
    return value_;
  }
  std::string str() const {
    return is_infinite() ? std::string("INFINITY") : std::to_string(value_);
  }

  bool operator==(Theta const&) const = default;

 private:
  Theta(Kind k, unsigned v) : kind_(k), value_(v) {}
  Kind kind_;
  unsigned value_;
};

// Which reduced unit sits on which side of a loop.
//   canonical:      u = n_hat / d, v = m_hat / d  (t a^{p^s u} t^-1 = a^{p^s v})
//   intro_verbatim: u = m_hat / d, v = n_hat / d
enum class Orientation { canonical, intro_verbatim };

inline char const* to_string(Orientation o) {
  return o == Orientation::canonical ? "canonical" : "intro-verbatim";
}

struct LoopData {
  BigInt n;  // after sign normalization
  BigInt m;
  bool sign_normalized = false;
  bool elementary = false;  // |n| = |m| = 1
  unsigned sigma = 0;       // nu_p(m)
  unsigned tau = 0;         // nu_p(n)
  BigInt m_hat;
  BigInt n_hat;
  BigInt d;
  BigInt u;
  BigInt v;
  Theta theta = Theta::infinity();
};

// Loops with n < 0 are replaced by (-n, -m), which presents the same group.
inline LoopRelation sign_normalize(LoopRelation const& l) {
  if (l.n < 0) {
    return LoopRelation{-l.n, -l.m};
  }
  return l;
}

inline LoopData loop_data(LoopRelation const& raw, std::uint64_t p,
                          Orientation orientation = Orientation::canonical) {
  require_prime(p);
  LoopRelation l = sign_normalize(raw);
  LoopData out;
  out.n = l.n;
  out.m = l.m;
  out.sign_normalized = raw.n < 0;
  out.elementary = abs(l.n) == 1 && abs(l.m) == 1;
  auto ms = p_valuation(l.m, p);
  auto ns = p_valuation(l.n, p);
  out.sigma = ms.valuation;
  out.tau = ns.valuation;
  out.m_hat = ms.unit_part;
  out.n_hat = ns.unit_part;
  out.d = gcd(out.m_hat, out.n_hat);
  if (orientation == Orientation::canonical) {
    out.u = out.n_hat / out.d;
    out.v = out.m_hat / out.d;
  } else {
    out.u = out.m_hat / out.d;
    out.v = out.n_hat / out.d;
  }
  if (out.sigma == out.tau && (out.m_hat - out.n_hat) % p == 0) {
    out.theta = Theta::infinity();
  } else {
    out.theta = Theta::finite(std::min(out.sigma, out.tau));
  }
  return out;
}

inline std::vector<LoopData> loop_data(RoseGbs const& pres, std::uint64_t p,
                                       Orientation orientation = Orientation::canonical) {
  std::vector<LoopData> out;
  out.reserve(pres.rank());
  for (auto const& l : pres.loops()) {
    out.push_back(loop_data(l, p, orientation));
  }
  return out;
}

enum class TheoremCase { case1, case2 };

inline char const* to_string(TheoremCase c) {
  return c == TheoremCase::case1 ? "case1" : "case2";
}

struct Classification {
  std::uint64_t p = 2;
  TheoremCase which = TheoremCase::case1;
  unsigned xi_or_sigma = 0;  // xi in case 1, Sigma in case 2
  std::vector<LoopData> loops;
  Orientation orientation = Orientation::canonical;
  bool out_of_scope = false;  // some loop is elementary
  bool sign_normalized = false;

  bool is_case1() const noexcept {
    return which == TheoremCase::case1;
  }
  unsigned xi() const {
    if (!is_case1()) {
      throw std::logic_error("xi is only defined in case 1");
    }
    return xi_or_sigma;
  }
  unsigned sigma_sum() const {
    if (is_case1()) {
      throw std::logic_error("Sigma is only defined in case 2");
    }
    return xi_or_sigma;
  }
  std::size_t rank() const noexcept {
    return loops.size();
  }
};

inline Classification classify(RoseGbs const& pres, std::uint64_t p,
                               Orientation orientation = Orientation::canonical) {
  Classification c;
  c.p = p;
  c.orientation = orientation;
  c.loops = loop_data(pres, p, orientation);
  std::optional<unsigned> xi;
  unsigned sigma_total = 0;
  for (auto const& l : c.loops) {
    c.out_of_scope = c.out_of_scope || l.elementary;
    c.sign_normalized = c.sign_normalized || l.sign_normalized;
    sigma_total += l.sigma;
    if (!l.theta.is_infinite()) {
      xi = xi ? std::min(*xi, l.theta.value()) : l.theta.value();
    }
  }
  if (xi) {
    c.which = TheoremCase::case1;
    c.xi_or_sigma = *xi;
  } else {
    c.which = TheoremCase::case2;
    c.xi_or_sigma = sigma_total;
  }
  return c;
}

struct ExponentData {
  std::vector<std::int64_t> k;
  BigInt y;
  BigInt y_bar;
  BigInt delta;
};

inline ExponentData exponent_data(std::span<LoopData const> loops,
                                  std::span<std::int64_t const> k) {
  if (k.size() != loops.size()) {
    throw DomainError("k-vector length does not match the number of loops");
  }
  ExponentData out{std::vector<std::int64_t>(k.begin(), k.end()), 1, 1, 1};
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) {
      continue;
    }
    std::uint64_t e = static_cast<std::uint64_t>(k[i] > 0 ? k[i] : -k[i]);
    BigInt const& forward = k[i] > 0 ? loops[i].u : loops[i].v;
    BigInt const& backward = k[i] > 0 ? loops[i].v : loops[i].u;
    out.y *= big_pow(forward, e);
    out.y_bar *= big_pow(backward, e);
  }
  out.delta = gcd(out.y, out.y_bar);
  return out;
}

// ---------------------------------------------------------------------------
// Residual p-finiteness

enum class ResidualReason {
  all_loops_equal_p_power,  // n_i = m_i = p^sigma_i
  all_loops_neg_two_power,  // p = 2 and |n_i| = |m_i| = 2^sigma_i
  bs_case_rule,             // r = 1, Baumslag-Solitar criterion holds
  obstruction
};

inline char const* to_string(ResidualReason r) {
  switch (r) {
    case ResidualReason::all_loops_equal_p_power:
      return "ALL_LOOPS_EQUAL_P_POWER";
    case ResidualReason::all_loops_neg_two_power:
      return "ALL_LOOPS_NEG_TWO_POWER";
    case ResidualReason::bs_case_rule:
      return "BS_CASE_RULE";
    case ResidualReason::obstruction:
      return "OBSTRUCTION";
  }
  return "?";
}

// Which subgroup witnesses the failure.
//   loop:    <t_i, a> is itself not residually p.
//   h_pair:  <t_l^-1 t_k, a>, both loops of unit type.
//   k_pair:  <t_l t_k, a>, loop l of type n = m = p^sigma.
//   m_pair:  <t_l t_k, a>, p = 2 and loop l of type n = -m = 2^sigma.
enum class ObstructionKind { none, loop, h_pair, k_pair, m_pair };

inline char const* to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::none:
      return "none";
    case ObstructionKind::loop:
      return "loop";
    case ObstructionKind::h_pair:
      return "H";
    case ObstructionKind::k_pair:
      return "K";
    case ObstructionKind::m_pair:
      return "M";
  }
  return "?";
}

struct ResidualPReport {
  bool decision = false;
  ResidualReason reason = ResidualReason::obstruction;
  ObstructionKind obstruction = ObstructionKind::none;
  std::vector<std::size_t> witness;  // 1-based loop indices: (i) or (kappa, lambda)
  bool sign_normalized = false;
  bool out_of_scope = false;
};

namespace detail {

  enum class LoopType { unit, equal_power, opposite_two_power, bad };

  inline bool is_power_of(BigInt const& x, std::uint64_t p) {
    return is_p_power(x, p);
  }

  // Classifies a sign-normalized loop (n > 0) against the one-relator
  // criterion: BS is residually p iff one side is +-1 with n m = 1 mod p,
  // or n = m = p^s, or p = 2 and n = -m = 2^s.
  inline LoopType loop_type(LoopRelation const& l, std::uint64_t p) {
    if (l.n == l.m && is_power_of(l.n, p)) {
      return LoopType::equal_power;
    }
    if (p == 2 && l.n == -l.m && is_power_of(l.n, 2)) {
      return LoopType::opposite_two_power;
    }
    if ((abs(l.n) == 1 || abs(l.m) == 1) && mod_u64(l.n * l.m, p) == 1 % p) {
      return LoopType::unit;
    }
    return LoopType::bad;
  }

}  // namespace detail

inline ResidualPReport residually_p(RoseGbs const& pres, std::uint64_t p) {
  require_prime(p);
  ResidualPReport out;
  std::vector<detail::LoopType> types;
  for (auto const& raw : pres.loops()) {
    auto l = sign_normalize(raw);
    out.sign_normalized = out.sign_normalized || raw.n < 0;
    out.out_of_scope = out.out_of_scope || (abs(l.n) == 1 && abs(l.m) == 1);
    types.push_back(detail::loop_type(l, p));
  }
  using detail::LoopType;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (types[i] == LoopType::bad) {
      out.decision = false;
      out.reason = ResidualReason::obstruction;
      out.obstruction = ObstructionKind::loop;
      out.witness = {i + 1};
      return out;
    }
  }
  if (pres.rank() == 1) {
    out.decision = true;
    out.reason = ResidualReason::bs_case_rule;
    return out;
  }
  // A unit-type loop kappa is incompatible with any other loop lambda.
  for (std::size_t k = 0; k < types.size(); ++k) {
    if (types[k] != LoopType::unit) {
      continue;
    }
    std::size_t l = k == 0 ? 1 : 0;
    for (std::size_t j = 0; j < types.size(); ++j) {
      if (j != k && types[j] == LoopType::unit) {
        l = j;
        break;
      }
    }
    out.decision = false;
    out.reason = ResidualReason::obstruction;
    out.witness = {k + 1, l + 1};
    switch (types[l]) {
      case LoopType::unit:
        out.obstruction = ObstructionKind::h_pair;
        break;
      case LoopType::equal_power:
        out.obstruction = ObstructionKind::k_pair;
        break;
      default:
        out.obstruction = ObstructionKind::m_pair;
        break;
    }
    return out;
  }
  out.decision = true;
  bool all_equal = std::all_of(types.begin(), types.end(),
                               [](auto t) { return t == LoopType::equal_power; });
  out.reason = all_equal ? ResidualReason::all_loops_equal_p_power
                         : ResidualReason::all_loops_neg_two_power;
  return out;
}

// ---------------------------------------------------------------------------
// The one-loop description, in Moldavanskii's labelling: for t a^n t^-1 = a^m
// his u = m_hat / d pairs with t^-1.

struct MoldavanskiiFamily {
  TheoremCase which = TheoremCase::case1;
  unsigned exponent = 0;  // xi in case 1, the common valuation in case 2
  std::vector<Word> words;
  std::vector<std::int64_t> k;  // k for each commutator word, 0 for the others
};

inline MoldavanskiiFamily moldavanskii_r1(RoseGbs const& pres, std::uint64_t p,
                                          unsigned k_max) {
  if (pres.rank() != 1) {
    throw DomainError("the one-loop description needs exactly one stable letter");
  }
  auto ld = loop_data(pres.loop(1), p);
  MoldavanskiiFamily out;
  if (!ld.theta.is_infinite()) {
    out.which = TheoremCase::case1;
    out.exponent = ld.theta.value();
    out.words.push_back(gen_power(kGenA, big_pow(p, out.exponent)));
    out.k.push_back(0);
    return out;
  }
  out.which = TheoremCase::case2;
  out.exponent = ld.sigma;
  BigInt pr = big_pow(p, ld.sigma);
  BigInt u = ld.m_hat / ld.d;
  BigInt v = ld.n_hat / ld.d;
  out.words.push_back(reduce({Letter{1, -1}, Letter{kGenA, pr * u}, Letter{1, 1},
                              Letter{kGenA, -pr * v}}));
  out.k.push_back(0);
  for (std::int64_t k = -static_cast<std::int64_t>(k_max); k <= static_cast<std::int64_t>(k_max);
       ++k) {
    if (k == 0) {
      continue;
    }
    Word inner = reduce({Letter{1, k}, Letter{kGenA, pr}, Letter{1, -k}});
    out.words.push_back(commutator(inner, gen_power(kGenA, 1)));
    out.k.push_back(k);
  }
  return out;
}

}  // namespace rosegbs
