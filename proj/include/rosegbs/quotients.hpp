#pragma once

// The verification oracle: homomorphisms of G into catalog p-groups, the
// holomorph quotients Z/p^s x| H, and kernel-membership verdicts.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rosegbs/classifier.hpp"
#include "rosegbs/numtheory.hpp"
#include "rosegbs/pcgroup.hpp"
#include "rosegbs/presentation.hpp"

namespace rosegbs {

// ---------------------------------------------------------------------------
// Homomorphisms into a PcGroup

struct Hom {
  PcGroup const* target = nullptr;
  PcGroup::Element image_a = 0;
  std::vector<PcGroup::Element> image_t;
};

inline void require_alphabet(Word const& w, std::size_t rank) {
  if (w.max_gen() > rank) {
    throw DomainError("word uses t" + std::to_string(w.max_gen()) +
                      " but the presentation has rank " + std::to_string(rank));
  }
}

inline PcGroup::Element evaluate_word(Word const& w, Hom const& hom) {
  require_alphabet(w, hom.image_t.size());
  PcGroup const& Q = *hom.target;
  PcGroup::Element x = PcGroup::identity();
  for (auto const& l : w.letters()) {
    auto img = l.gen == kGenA ? hom.image_a : hom.image_t[l.gen - 1];
    x = Q.multiply(x, Q.power(img, l.exp));
  }
  return x;
}

inline bool satisfies_relations(RoseGbs const& pres, Hom const& hom) {
  for (std::size_t i = 1; i <= pres.rank(); ++i) {
    if (evaluate_word(relator(pres, i), hom) != PcGroup::identity()) {
      return false;
    }
  }
  return true;
}

// Calls visit(hom) for every assignment (a, t_1, ..., t_r) in Q^{r+1}
// satisfying all loop relations, in lexicographic order of element indices.
// The loop exponents are reduced modulo the order of the image of a, and
// for fixed image_a each t_i ranges independently over its solution set.
// visit returns false to stop early.
template <typename Visit>
std::size_t for_each_hom(RoseGbs const& pres, PcGroup const& Q, Visit&& visit) {
  std::size_t const r = pres.rank();
  std::size_t const N = Q.order();
  std::size_t count = 0;
  Hom hom;
  hom.target = &Q;
  hom.image_t.assign(r, 0);
  for (PcGroup::Element a = 0; a < N; ++a) {
    std::vector<std::vector<PcGroup::Element>> options(r);
    bool empty = false;
    for (std::size_t i = 0; i < r && !empty; ++i) {
      auto const& l = pres.loop(i + 1);
      auto an = Q.power(a, l.n);
      auto am = Q.power(a, l.m);
      for (PcGroup::Element t = 0; t < N; ++t) {
        if (Q.multiply(Q.multiply(t, an), Q.inverse(t)) == am) {
          options[i].push_back(t);
        }
      }
      empty = options[i].empty();
    }
    if (empty) {
      continue;
    }
    hom.image_a = a;
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      for (std::size_t i = 0; i < r; ++i) {
        hom.image_t[i] = options[i][idx[i]];
      }
      ++count;
      if (!visit(static_cast<Hom const&>(hom))) {
        return count;
      }
      std::size_t i = r;
      while (i > 0 && idx[i - 1] + 1 == options[i - 1].size()) {
        idx[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++idx[i - 1];
    }
  }
  return count;
}

inline std::vector<Hom> enumerate_homs(RoseGbs const& pres, PcGroup const& Q) {
  std::vector<Hom> out;
  for_each_hom(pres, Q, [&](Hom const& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Holomorph quotients: pairs (k mod p^s, h in H) with
// (k1, h1)(k2, h2) = (k1 + h1 k2, h1 h2), a -> (1, 1), t_i -> (0, c_i).

struct HolomorphQuotient {
  std::uint64_t p = 2;
  unsigned s = 1;
  std::uint64_t modulus = 2;  // p^s
  std::vector<std::uint64_t> c;
  std::vector<std::uint64_t> lift_modulus;  // p^{s - sigma_i}, the congruence c_i was lifted from
  std::uint64_t h_order = 1;

  std::uint64_t order() const {
    return modulus * h_order;
  }
};

struct HolElement {
  std::uint64_t k = 0;
  std::uint64_t h = 1;

  bool operator==(HolElement const&) const = default;
};

inline HolElement multiply(HolomorphQuotient const& q, HolElement x, HolElement y) {
  return {(x.k + mul_mod(x.h, y.k, q.modulus)) % q.modulus, mul_mod(x.h, y.h, q.modulus)};
}

inline bool is_identity(HolElement x) {
  return x.k == 0 && x.h == 1;
}

inline HolElement evaluate_word(Word const& w, HolomorphQuotient const& q) {
  require_alphabet(w, q.c.size());
  std::uint64_t const phi = q.modulus / q.p * (q.p - 1);
  HolElement x{0, 1 % q.modulus};
  for (auto const& l : w.letters()) {
    HolElement y;
    if (l.gen == kGenA) {
      y = {mod_u64(l.exp, q.modulus), 1 % q.modulus};
    } else {
      y = {0, pow_mod(q.c[l.gen - 1], mod_u64(l.exp, phi), q.modulus)};
    }
    x = multiply(q, x, y);
  }
  return x;
}

enum class HolomorphRefusal { none, not_applicable, not_a_p_group, modulus_too_large };

inline char const* to_string(HolomorphRefusal r) {
  switch (r) {
    case HolomorphRefusal::none:
      return "ok";
    case HolomorphRefusal::not_applicable:
      return "NotApplicable";
    case HolomorphRefusal::not_a_p_group:
      return "NotAPGroup";
    case HolomorphRefusal::modulus_too_large:
      return "ModulusTooLarge";
  }
  return "?";
}

struct HolomorphOutcome {
  std::optional<HolomorphQuotient> quotient;
  HolomorphRefusal refusal = HolomorphRefusal::none;
  std::string diagnostic;
};

inline constexpr std::uint64_t kMaxHolomorphModulus = std::uint64_t{1} << 24;

// Available when sigma_i = tau_i for every loop. c_i is the least positive
// residue of m_hat n_hat^{-1} mod p^{s - sigma_i}, stepped by p^{s - sigma_i}
// until it is a unit mod p^s.
inline HolomorphOutcome holomorph_quotient(RoseGbs const& pres, std::uint64_t p, unsigned s) {
  require_prime(p);
  if (s == 0) {
    throw DomainError("holomorph quotient needs s >= 1");
  }
  HolomorphOutcome out;
  std::uint64_t modulus = 1;
  for (unsigned i = 0; i < s; ++i) {
    if (modulus > kMaxHolomorphModulus / p) {
      out.refusal = HolomorphRefusal::modulus_too_large;
      out.diagnostic = "p^s exceeds " + std::to_string(kMaxHolomorphModulus);
      return out;
    }
    modulus *= p;
  }
  HolomorphQuotient q;
  q.p = p;
  q.s = s;
  q.modulus = modulus;
  for (std::size_t i = 1; i <= pres.rank(); ++i) {
    auto ld = loop_data(pres.loop(i), p);
    if (ld.sigma != ld.tau) {
      out.refusal = HolomorphRefusal::not_applicable;
      out.diagnostic = "loop " + std::to_string(i) + " has sigma=" + std::to_string(ld.sigma) +
                       " != tau=" + std::to_string(ld.tau);
      return out;
    }
    std::uint64_t lift = 1;
    for (unsigned j = ld.sigma; j < s; ++j) {
      lift *= p;
    }
    std::uint64_t c = 1;
    if (lift > 1) {
      c = mul_mod(mod_u64(ld.m_hat, lift), inverse_mod(ld.n_hat, lift), lift);
      if (c == 0) {
        c = lift;
      }
    }
    while (c % p == 0) {
      c += lift;
    }
    c %= modulus;
    q.c.push_back(c);
    q.lift_modulus.push_back(lift);
    // n_i c_i = m_i mod p^s
    if (mod_u64(BigInt(pres.loop(i).n) * c - pres.loop(i).m, modulus) != 0) {
      throw std::logic_error("holomorph lift does not satisfy its loop relation");
    }
  }
  // |H| by closure inside the unit group.
  std::vector<bool> in_h(modulus, false);
  std::vector<std::uint64_t> elems{1 % modulus};
  in_h[1 % modulus] = true;
  for (std::size_t idx = 0; idx < elems.size(); ++idx) {
    for (auto c : q.c) {
      std::uint64_t y = mul_mod(elems[idx], c, modulus);
      if (!in_h[y]) {
        in_h[y] = true;
        elems.push_back(y);
      }
    }
  }
  q.h_order = elems.size();
  if (!is_p_power(q.h_order, p)) {
    out.refusal = HolomorphRefusal::not_a_p_group;
    out.diagnostic = "|H| = " + std::to_string(q.h_order) + " is not a power of " +
                     std::to_string(p);
    return out;
  }
  out.quotient = std::move(q);
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts

struct Budget {
  std::uint64_t max_order = 16;  // catalog groups of order <= max_order
  unsigned s_max = 6;            // holomorph quotients for s = 1..s_max
};

struct CatalogWitness {
  std::string group;
  std::uint64_t order = 0;
  std::string image_a;
  std::vector<std::string> image_t;
  std::string image;
};

struct HolomorphWitness {
  unsigned s = 0;
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> c;
  HolElement image;
};

struct Verdict {
  enum class Kind { in_all_kernels, separated_by };
  Kind kind = Kind::in_all_kernels;
  std::size_t homs_tested = 0;       // catalog homs plus holomorph quotients
  std::uint64_t max_order = 0;       // largest quotient order tested
  std::variant<std::monostate, CatalogWitness, HolomorphWitness> witness;

  bool separated() const noexcept {
    return kind == Kind::separated_by;
  }
};

inline char const* to_string(Verdict::Kind k) {
  return k == Verdict::Kind::in_all_kernels ? "InAllKernels" : "SeparatedBy";
}

struct GroupTested {
  std::string name;
  std::uint64_t order = 0;
  std::size_t homs = 0;
};

struct HolomorphTested {
  unsigned s = 0;
  HolomorphRefusal refusal = HolomorphRefusal::none;
  std::string diagnostic;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> c;
};

struct OracleResult {
  std::vector<Verdict> verdicts;
  std::vector<GroupTested> groups;
  std::vector<HolomorphTested> holomorphs;
  std::size_t total_homs = 0;
  std::uint64_t max_order = 0;

  bool tested_anything() const noexcept {
    return total_homs > 0;
  }
};

// Evaluates every word under every hom into the selected catalog groups
// (smallest first, homs in lexicographic order) and then under the holomorph
// quotients for s = 1..s_max. Each word keeps the first separating quotient
// in that fixed order.
inline OracleResult run_oracle(std::span<Word const> words, RoseGbs const& pres,
                               std::uint64_t p, Catalog const& catalog, Budget const& budget) {
  require_prime(p);
  for (auto const& w : words) {
    require_alphabet(w, pres.rank());
  }
  OracleResult out;
  out.verdicts.resize(words.size());
  std::size_t open = words.size();

  for (PcGroup const* Q : catalog.select(p, budget.max_order)) {
    // Element orders divide |Q|, so exponents can be reduced once per group.
    std::uint64_t const N = Q->order();
    std::vector<std::vector<std::int64_t>> reduced(words.size());
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (auto const& l : words[w].letters()) {
        reduced[w].push_back(static_cast<std::int64_t>(mod_u64(l.exp, N)));
      }
    }
    std::size_t homs = for_each_hom(pres, *Q, [&](Hom const& hom) {
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (out.verdicts[w].separated()) {
          continue;
        }
        PcGroup::Element x = PcGroup::identity();
        auto const& letters = words[w].letters();
        for (std::size_t j = 0; j < letters.size(); ++j) {
          auto g = letters[j].gen;
          auto img = g == kGenA ? hom.image_a : hom.image_t[g - 1];
          x = Q->multiply(x, Q->power(img, reduced[w][j]));
        }
        if (x != PcGroup::identity()) {
          auto& v = out.verdicts[w];
          v.kind = Verdict::Kind::separated_by;
          CatalogWitness cw{Q->name(), N, Q->element_string(hom.image_a), {},
                            Q->element_string(x)};
          for (auto t : hom.image_t) {
            cw.image_t.push_back(Q->element_string(t));
          }
          v.witness = std::move(cw);
          --open;
        }
      }
      return open > 0;
    });
    out.groups.push_back(GroupTested{Q->name(), N, homs});
    out.total_homs += homs;
    out.max_order = std::max<std::uint64_t>(out.max_order, N);
    if (open == 0) {
      break;
    }
  }

  for (unsigned s = 1; s <= budget.s_max && open > 0; ++s) {
    auto outcome = holomorph_quotient(pres, p, s);
    HolomorphTested ht{s, outcome.refusal, outcome.diagnostic, 0, {}};
    if (outcome.quotient) {
      auto const& q = *outcome.quotient;
      ht.order = q.order();
      ht.c = q.c;
      ++out.total_homs;
      out.max_order = std::max(out.max_order, q.order());
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (out.verdicts[w].separated()) {
          continue;
        }
        auto x = evaluate_word(words[w], q);
        if (!is_identity(x)) {
          out.verdicts[w].kind = Verdict::Kind::separated_by;
          out.verdicts[w].witness = HolomorphWitness{s, q.modulus, q.c, x};
          --open;
        }
      }
    }
    out.holomorphs.push_back(std::move(ht));
  }

  for (auto& v : out.verdicts) {
    v.homs_tested = out.total_homs;
    v.max_order = out.max_order;
  }
  return out;
}

inline Verdict membership_verdict(Word const& w, RoseGbs const& pres, std::uint64_t p,
                                  Catalog const& catalog, Budget const& budget) {
  return run_oracle(std::span<Word const>(&w, 1), pres, p, catalog, budget).verdicts.front();
}

}  // namespace rosegbs
