#pragma once

// Finite, bound-controlled normal generating sets for (N_p)_omega(G).

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rosegbs/classifier.hpp"
#include "rosegbs/presentation.hpp"

namespace rosegbs {

struct Bounds {
  unsigned k_max = 2;          // |k_i| <= k_max
  unsigned comm_word_len = 6;  // free length of sampled words in gamma_2(F_r)
  std::size_t count_limit = 100000;
};

// Letter order of the closing block in the mixed family.
//   conjugate: t_r^{-k_r} ... t_1^{-k_1}  (inverse of the prefix)
//   verbatim:  t_1^{-k_1} ... t_r^{-k_r}
enum class MixedOrder { conjugate, verbatim };

inline char const* to_string(MixedOrder m) {
  return m == MixedOrder::conjugate ? "conjugate" : "verbatim";
}

enum class Family { case1, gamma2, conjugate_a, mixed };

inline char const* to_string(Family f) {
  switch (f) {
    case Family::case1:
      return "case1";
    case Family::gamma2:
      return "gamma2";
    case Family::conjugate_a:
      return "conjugate_a";
    case Family::mixed:
      return "mixed";
  }
  return "?";
}

struct Provenance {
  Family family = Family::case1;
  std::vector<std::int64_t> k;  // k-vector (conjugate_a, mixed)
  std::string detail;           // sampled commutator (gamma2)
};

struct GeneratedWord {
  Word word;
  Provenance provenance;
};

struct FamilyOutput {
  std::vector<GeneratedWord> entries;
  std::size_t dropped_trivial = 0;
};

struct GeneratorSet {
  TheoremCase which = TheoremCase::case1;
  std::vector<GeneratedWord> entries;
  std::size_t dropped_trivial = 0;
  std::size_t dropped_duplicate = 0;
  bool truncated = false;

  std::vector<Word> words() const {
    std::vector<Word> out;
    out.reserve(entries.size());
    for (auto const& e : entries) {
      out.push_back(e.word);
    }
    return out;
  }
};

namespace detail {

  inline void require_case(Classification const& cls, TheoremCase want) {
    if (cls.which != want) {
      throw DomainError(std::string("family requires ") + to_string(want) + ", got " +
                        to_string(cls.which));
    }
  }

  // Every k in [-k_max, k_max]^r in lexicographic order.
  inline std::vector<std::vector<std::int64_t>> k_vectors(std::size_t r, unsigned k_max) {
    std::vector<std::vector<std::int64_t>> out;
    std::int64_t const K = k_max;
    std::vector<std::int64_t> k(r, -K);
    for (;;) {
      out.push_back(k);
      std::size_t i = r;
      while (i > 0 && k[i - 1] == K) {
        k[i - 1] = -K;
        --i;
      }
      if (i == 0) {
        return out;
      }
      ++k[i - 1];
    }
  }

  inline Word t_prefix(std::vector<std::int64_t> const& k) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < k.size(); ++i) {
      ls.push_back(Letter{i + 1, k[i]});
    }
    return reduce(ls);
  }

  inline Word t_suffix_verbatim(std::vector<std::int64_t> const& k) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < k.size(); ++i) {
      ls.push_back(Letter{i + 1, -k[i]});
    }
    return reduce(ls);
  }

  inline std::string k_string(std::vector<std::int64_t> const& k) {
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) {
      s += (i ? "," : "") + std::to_string(k[i]);
    }
    return s;
  }

  inline void push_nontrivial(FamilyOutput& out, Word w, Provenance prov) {
    if (w.empty()) {
      ++out.dropped_trivial;
      return;
    }
    out.entries.push_back(GeneratedWord{std::move(w), std::move(prov)});
  }

  inline Word a_power_p(Classification const& cls, unsigned e) {
    return gen_power(kGenA, big_pow(cls.p, e));
  }

}  // namespace detail

inline GeneratorSet case1_generators(Classification const& cls) {
  detail::require_case(cls, TheoremCase::case1);
  GeneratorSet out;
  out.which = TheoremCase::case1;
  out.entries.push_back({detail::a_power_p(cls, cls.xi()), Provenance{Family::case1, {}, ""}});
  return out;
}

// [w, a^{p^Sigma}] for basic commutators w = [t_i^e, t_j^f] (i < j) of free
// length <= comm_word_len, and their conjugates by powers t_l^g that stay
// within the same length bound.
inline FamilyOutput family_gamma2(Classification const& cls, Bounds const& bounds) {
  detail::require_case(cls, TheoremCase::case2);
  FamilyOutput out;
  std::size_t const r = cls.rank();
  if (r < 2) {
    return out;
  }
  Word const apow = detail::a_power_p(cls, cls.sigma_sum());
  std::int64_t const L = bounds.comm_word_len;
  std::set<std::string> seen;
  std::vector<std::pair<Word, std::string>> basics;
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = i + 1; j <= r; ++j) {
      for (std::int64_t e = -L; e <= L; ++e) {
        for (std::int64_t f = -L; f <= L; ++f) {
          if (e == 0 || f == 0 || 2 * (std::abs(e) + std::abs(f)) > L) {
            continue;
          }
          Word w = commutator(gen_power(i, e), gen_power(j, f));
          std::string desc = "[t" + std::to_string(i) + "^" + std::to_string(e) + ",t" +
                             std::to_string(j) + "^" + std::to_string(f) + "]";
          basics.emplace_back(std::move(w), std::move(desc));
        }
      }
    }
  }
  auto emit = [&](Word const& w, std::string desc) {
    if (!seen.insert(to_string(w)).second) {
      return;
    }
    detail::push_nontrivial(out, commutator(w, apow),
                            Provenance{Family::gamma2, {}, std::move(desc)});
  };
  for (auto const& [w, desc] : basics) {
    emit(w, desc);
  }
  for (auto const& [w, desc] : basics) {
    for (std::size_t l = 1; l <= r; ++l) {
      for (std::int64_t g = -L / 2; g <= L / 2; ++g) {
        if (g == 0) {
          continue;
        }
        Word c = conjugate(w, gen_power(l, g));
        if (c.free_length() > L) {
          continue;
        }
        emit(c, "t" + std::to_string(l) + "^" + std::to_string(g) + " " + desc + " t" +
                    std::to_string(l) + "^" + std::to_string(-g));
      }
    }
  }
  return out;
}

// [t_1^{k_1} ... t_r^{k_r} a t_r^{-k_r} ... t_1^{-k_1}, a^{p^Sigma}]
inline FamilyOutput family_conjugate_a(Classification const& cls, Bounds const& bounds) {
  detail::require_case(cls, TheoremCase::case2);
  FamilyOutput out;
  Word const apow = detail::a_power_p(cls, cls.sigma_sum());
  Word const a = gen_power(kGenA, 1);
  for (auto const& k : detail::k_vectors(cls.rank(), bounds.k_max)) {
    Word inner = conjugate(a, detail::t_prefix(k));
    detail::push_nontrivial(out, commutator(inner, apow), Provenance{Family::conjugate_a, k, ""});
  }
  return out;
}

// t_1^{k_1} ... t_r^{k_r} a^{p^Sigma y / delta} (closing block) a^{-p^Sigma ybar / delta}
inline FamilyOutput family_mixed(Classification const& cls, Bounds const& bounds,
                                 MixedOrder order = MixedOrder::conjugate) {
  detail::require_case(cls, TheoremCase::case2);
  FamilyOutput out;
  BigInt const ps = big_pow(cls.p, cls.sigma_sum());
  for (auto const& k : detail::k_vectors(cls.rank(), bounds.k_max)) {
    auto ed = exponent_data(cls.loops, k);
    Word prefix = detail::t_prefix(k);
    Word closing =
        order == MixedOrder::conjugate ? invert(prefix) : detail::t_suffix_verbatim(k);
    Word w = product(prefix, gen_power(kGenA, ps * ed.y / ed.delta), closing,
                     gen_power(kGenA, -ps * ed.y_bar / ed.delta));
    detail::push_nontrivial(out, std::move(w), Provenance{Family::mixed, k, ""});
  }
  return out;
}

struct GeneratorOptions {
  Orientation orientation = Orientation::canonical;
  MixedOrder mixed_order = MixedOrder::conjugate;
};

inline GeneratorSet np_omega_generators(RoseGbs const& pres, std::uint64_t p,
                                        Bounds const& bounds,
                                        GeneratorOptions const& options = {}) {
  auto cls = classify(pres, p, options.orientation);
  if (cls.is_case1()) {
    return case1_generators(cls);
  }
  GeneratorSet out;
  out.which = TheoremCase::case2;
  std::set<std::string> seen;
  auto merge = [&](FamilyOutput&& fam) {
    out.dropped_trivial += fam.dropped_trivial;
    for (auto& e : fam.entries) {
      if (!seen.insert(to_string(e.word)).second) {
        ++out.dropped_duplicate;
        continue;
      }
      if (out.entries.size() >= bounds.count_limit) {
        out.truncated = true;
        return;
      }
      out.entries.push_back(std::move(e));
    }
  };
  merge(family_gamma2(cls, bounds));
  merge(family_conjugate_a(cls, bounds));
  merge(family_mixed(cls, bounds, options.mixed_order));
  return out;
}

// One word per line, each preceded by a provenance comment.
inline std::string serialize(GeneratorSet const& gs) {
  std::string out;
  for (auto const& e : gs.entries) {
    out += "# family=";
    out += to_string(e.provenance.family);
    if (!e.provenance.k.empty()) {
      out += " k=" + detail::k_string(e.provenance.k);
    }
    if (!e.provenance.detail.empty()) {
      out += " w=" + e.provenance.detail;
    }
    out += '\n';
    out += to_string(e.word);
    out += '\n';
  }
  if (gs.truncated) {
    out += "# truncated\n";
  }
  return out;
}

}  // namespace rosegbs
