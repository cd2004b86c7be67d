#pragma once

// End-to-end check of a generator family against the quotient oracle.

#include <string>
#include <vector>

#include "rosegbs/classifier.hpp"
#include "rosegbs/generators.hpp"
#include "rosegbs/quotients.hpp"

namespace rosegbs {

enum class FindingKind { theorem_violation, inconclusive };

inline char const* to_string(FindingKind k) {
  return k == FindingKind::theorem_violation ? "THEOREM-VIOLATION" : "INCONCLUSIVE";
}

struct Finding {
  FindingKind kind = FindingKind::inconclusive;
  std::string check;
  std::string word;
  std::string message;
};

// Which role a word plays in the run.
enum class CheckKind {
  generator,        // must lie in every kernel
  non_membership,   // case 1: a^{p^{xi-1}} should be separated
  moldavanskii,     // r = 1 cross-check, must lie in every kernel
  alternative       // mixed family under a non-default switch, only tallied
};

inline char const* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::generator:
      return "generator";
    case CheckKind::non_membership:
      return "non_membership";
    case CheckKind::moldavanskii:
      return "moldavanskii";
    case CheckKind::alternative:
      return "alternative";
  }
  return "?";
}

struct WordCheck {
  CheckKind kind = CheckKind::generator;
  std::string variant;  // orientation/letter order for alternative checks
  Word word;
  std::string provenance;
  Verdict verdict;
};

// Separation count of the mixed family under one (orientation, order) pair.
struct VariantTally {
  Orientation orientation = Orientation::canonical;
  MixedOrder order = MixedOrder::conjugate;
  bool is_default = false;
  std::size_t words = 0;
  std::size_t separated = 0;

  bool survives() const noexcept {
    return separated == 0;
  }
  std::string label() const {
    return std::string(to_string(orientation)) + "/" + to_string(order);
  }
};

struct VerifyReport {
  std::uint64_t p = 2;
  Classification cls;
  ResidualPReport residual;
  GeneratorSet generators;
  Bounds bounds;
  Budget budget;
  GeneratorOptions options;
  std::vector<WordCheck> checks;
  std::vector<GroupTested> groups;
  std::vector<HolomorphTested> holomorphs;
  std::size_t total_homs = 0;
  std::uint64_t max_order = 0;
  std::vector<VariantTally> adjudication;
  std::vector<Finding> findings;

  bool has(FindingKind k) const {
    for (auto const& f : findings) {
      if (f.kind == k) {
        return true;
      }
    }
    return false;
  }
  // 0 all pass, 1 violation, 3 inconclusive only
  int exit_code() const {
    if (has(FindingKind::theorem_violation)) {
      return 1;
    }
    return has(FindingKind::inconclusive) ? 3 : 0;
  }
  std::string status() const {
    switch (exit_code()) {
      case 0:
        return "PASS";
      case 1:
        return "THEOREM-VIOLATION";
      default:
        return "INCONCLUSIVE";
    }
  }
};

inline std::string provenance_string(Provenance const& prov) {
  std::string s = std::string("family=") + to_string(prov.family);
  if (!prov.k.empty()) {
    s += " k=" + detail::k_string(prov.k);
  }
  if (!prov.detail.empty()) {
    s += " w=" + prov.detail;
  }
  return s;
}

inline VerifyReport verify_theorem(RoseGbs const& pres, std::uint64_t p, Bounds const& bounds,
                                   Budget const& budget, Catalog const& catalog,
                                   GeneratorOptions const& options = {}) {
  require_prime(p);
  VerifyReport rep;
  rep.p = p;
  rep.bounds = bounds;
  rep.budget = budget;
  rep.options = options;
  rep.cls = classify(pres, p, options.orientation);
  rep.residual = residually_p(pres, p);
  rep.generators = np_omega_generators(pres, p, bounds, options);

  for (auto const& e : rep.generators.entries) {
    rep.checks.push_back({CheckKind::generator, "", e.word, provenance_string(e.provenance), {}});
  }
  if (rep.cls.is_case1() && rep.cls.xi() >= 1) {
    rep.checks.push_back({CheckKind::non_membership, "",
                          detail::a_power_p(rep.cls, rep.cls.xi() - 1),
                          "a^(p^(xi-1))", {}});
  }
  if (pres.rank() == 1) {
    auto fam = moldavanskii_r1(pres, p, bounds.k_max);
    for (std::size_t i = 0; i < fam.words.size(); ++i) {
      rep.checks.push_back({CheckKind::moldavanskii, "", fam.words[i],
                            "k=" + std::to_string(fam.k[i]), {}});
    }
  }
  if (!rep.cls.is_case1()) {
    for (auto o : {Orientation::canonical, Orientation::intro_verbatim}) {
      for (auto m : {MixedOrder::conjugate, MixedOrder::verbatim}) {
        VariantTally tally{o, m, o == options.orientation && m == options.mixed_order, 0, 0};
        rep.adjudication.push_back(tally);
        if (tally.is_default) {
          continue;  // the default variant is already among the generators
        }
        auto fam = family_mixed(classify(pres, p, o), bounds, m);
        for (auto& e : fam.entries) {
          rep.checks.push_back({CheckKind::alternative, tally.label(), std::move(e.word),
                                provenance_string(e.provenance), {}});
        }
      }
    }
  }

  std::vector<Word> words;
  words.reserve(rep.checks.size());
  for (auto const& c : rep.checks) {
    words.push_back(c.word);
  }
  auto oracle = run_oracle(words, pres, p, catalog, budget);
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    rep.checks[i].verdict = std::move(oracle.verdicts[i]);
  }
  rep.groups = std::move(oracle.groups);
  rep.holomorphs = std::move(oracle.holomorphs);
  rep.total_homs = oracle.total_homs;
  rep.max_order = oracle.max_order;

  if (rep.total_homs == 0) {
    rep.findings.push_back({FindingKind::inconclusive, "budget", "",
                            "no quotient was tested within the budget"});
  }
  for (auto const& c : rep.checks) {
    bool const sep = c.verdict.separated();
    switch (c.kind) {
      case CheckKind::generator:
      case CheckKind::moldavanskii:
        if (sep) {
          rep.findings.push_back({FindingKind::theorem_violation, to_string(c.kind),
                                  to_string(c.word), "word is separated by a p-quotient"});
        }
        break;
      case CheckKind::non_membership:
        if (!sep) {
          rep.findings.push_back({FindingKind::inconclusive, to_string(c.kind),
                                  to_string(c.word), "no separating quotient within budget"});
        }
        break;
      case CheckKind::alternative:
        break;
    }
    if (c.kind == CheckKind::generator || c.kind == CheckKind::alternative) {
      if (c.provenance.rfind("family=mixed", 0) != 0) {
        continue;
      }
      for (auto& t : rep.adjudication) {
        if ((c.kind == CheckKind::generator && t.is_default) ||
            (c.kind == CheckKind::alternative && c.variant == t.label())) {
          ++t.words;
          t.separated += sep ? 1 : 0;
        }
      }
    }
  }
  // A residually p group has a trivial intersection, so it must be in case 2
  // with every generator already trivial in each quotient.
  if (rep.residual.decision && rep.cls.is_case1()) {
    rep.findings.push_back({FindingKind::theorem_violation, "residual", "",
                            "residually p but classified as case 1"});
  }
  return rep;
}

}  // namespace rosegbs
