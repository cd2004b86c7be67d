#pragma once

// Finite p-groups given by power-commutator presentations
//
//   g_i^p = w_i(g_{i+1}, ..., g_n),   [g_j, g_i] = w_ji(g_{i+1}, ..., g_n)  (j > i)
//
// with [x, y] = x^-1 y^-1 x y, so that g_j g_i = g_i g_j [g_j, g_i]. Elements
// are normal forms g_1^{e_1} ... g_n^{e_n} with 0 <= e_i < p, numbered with
// e_1 as the most significant base-p digit. Collection builds a full
// multiplication table once; everything afterwards is table lookups.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rosegbs/bigint.hpp"
#include "rosegbs/numtheory.hpp"

namespace rosegbs {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ExponentVector = std::vector<unsigned>;

// A letter g_gen^exp in a pc word; gen is 0-based.
struct PcLetter {
  std::size_t gen;
  std::int64_t exp;
};

using PcWord = std::vector<PcLetter>;

namespace detail {

  // Collection to the left on exponent vectors. mul_gen(x, k) rewrites
  // x * g_k as prefix * g_k * (suffix)^{g_k}, where every letter of the
  // conjugated suffix lies strictly above k, so recursion depth is bounded
  // by the number of generators.
  class Collector {
   public:
    Collector(std::uint64_t p, std::size_t n, std::vector<ExponentVector> power,
              std::map<std::pair<std::size_t, std::size_t>, ExponentVector> comm)
        : p_(p), n_(n), power_(std::move(power)), comm_(std::move(comm)) {}

    void mul_gen(ExponentVector& x, std::size_t k) const {
      std::vector<std::size_t> suffix;
      for (std::size_t j = k + 1; j < n_; ++j) {
        for (unsigned e = 0; e < x[j]; ++e) {
          suffix.push_back(j);
        }
        x[j] = 0;
      }
      if (++x[k] == p_) {
        x[k] = 0;
        mul_vector(x, power_[k]);
      }
      for (std::size_t j : suffix) {
        // g_j^{g_k} = g_j [g_j, g_k]
        mul_gen(x, j);
        auto it = comm_.find({j, k});
        if (it != comm_.end()) {
          mul_vector(x, it->second);
        }
      }
    }

    void mul_vector(ExponentVector& x, ExponentVector const& y) const {
      for (std::size_t j = 0; j < n_; ++j) {
        for (unsigned e = 0; e < y[j]; ++e) {
          mul_gen(x, j);
        }
      }
    }

   private:
    std::uint64_t p_;
    std::size_t n_;
    std::vector<ExponentVector> power_;
    std::map<std::pair<std::size_t, std::size_t>, ExponentVector> comm_;
  };

}  // namespace detail

class PcGroup {
 public:
  using Element = std::uint32_t;
  using CommMap = std::map<std::pair<std::size_t, std::size_t>, ExponentVector>;

  // power[i] is the normal form of g_i^p; comm[{j, i}] (j > i) the normal
  // form of [g_j, g_i]; missing entries mean the identity.
  PcGroup(std::string name, std::uint64_t p, std::size_t ngens,
          std::vector<ExponentVector> power, CommMap comm)
      : name_(std::move(name)), p_(p), n_(ngens) {
    require_prime(p);
    if (ngens > 12) {
      throw CatalogError("group " + name_ + ": too many generators for a table");
    }
    order_ = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      order_ *= p_;
      if (order_ > (1U << 20)) {
        throw CatalogError("group " + name_ + ": order too large for a table");
      }
    }
    power.resize(n_, ExponentVector(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      check_relation(power[i], i, "pow " + std::to_string(i + 1));
    }
    for (auto const& [key, w] : comm) {
      auto [j, i] = key;
      if (!(j > i && j < n_)) {
        throw CatalogError("group " + name_ + ": comm indices must satisfy j > i");
      }
      check_relation(w, i, "comm " + std::to_string(j + 1) + " " + std::to_string(i + 1));
    }
    power_ = power;
    comm_ = comm;
    build_table(detail::Collector(p_, n_, std::move(power), std::move(comm)));
  }

  std::string const& name() const noexcept {
    return name_;
  }
  std::uint64_t prime() const noexcept {
    return p_;
  }
  std::size_t ngens() const noexcept {
    return n_;
  }
  std::size_t order() const noexcept {
    return order_;
  }
  std::vector<ExponentVector> const& power_relations() const noexcept {
    return power_;
  }
  CommMap const& comm_relations() const noexcept {
    return comm_;
  }

  static constexpr Element identity() noexcept {
    return 0;
  }

  Element generator(std::size_t i) const {
    ExponentVector e(n_, 0);
    e.at(i) = 1;
    return from_exponents(e);
  }

  ExponentVector exponents(Element x) const {
    ExponentVector e(n_, 0);
    for (std::size_t i = n_; i > 0; --i) {
      e[i - 1] = static_cast<unsigned>(x % p_);
      x = static_cast<Element>(x / p_);
    }
    return e;
  }

  Element from_exponents(ExponentVector const& e) const {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      x = x * p_ + e[i];
    }
    return static_cast<Element>(x);
  }

  Element multiply(Element x, Element y) const {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }
  Element inverse(Element x) const {
    return inverse_[x];
  }
  std::uint64_t element_order(Element x) const {
    return element_order_[x];
  }

  Element power(Element x, std::int64_t e) const {
    std::int64_t const ord = static_cast<std::int64_t>(element_order_[x]);
    std::int64_t r = ((e % ord) + ord) % ord;
    return power_nonneg(x, static_cast<std::uint64_t>(r));
  }

  Element power(Element x, BigInt const& e) const {
    return power_nonneg(x, mod_u64(e, element_order_[x]));
  }

  // Normal form of a pc word by collection, independent of the table.
  Element collect(PcWord const& w) const {
    detail::Collector c(p_, n_, power_, comm_);
    ExponentVector x(n_, 0);
    for (auto const& l : w) {
      if (l.gen >= n_) {
        throw std::out_of_range("pc generator index out of range");
      }
      // g^e with e reduced modulo the exponent p^n of the group; negative
      // exponents become positive because g^{p^n} = 1.
      std::int64_t const period = static_cast<std::int64_t>(order_);
      std::int64_t e = ((l.exp % period) + period) % period;
      for (std::int64_t i = 0; i < e; ++i) {
        c.mul_gen(x, l.gen);
      }
    }
    return from_exponents(x);
  }

  // Normal form as a word, e.g. "g1 g3^2"; identity is "1".
  std::string element_string(Element x) const {
    auto e = exponents(x);
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) {
        continue;
      }
      if (!out.empty()) {
        out += ' ';
      }
      out += "g" + std::to_string(i + 1);
      if (e[i] != 1) {
        out += "^" + std::to_string(e[i]);
      }
    }
    return out.empty() ? std::string("1") : out;
  }

  // Exhaustive associativity when order <= exhaustive_limit, else `samples`
  // random triples; identity and two-sided inverses always. Throws
  // CatalogError naming the first failing triple.
  void validate(std::size_t exhaustive_limit = 64, std::size_t samples = 100000,
                std::uint64_t seed = 1) const {
    std::size_t const N = order_;
    for (Element x = 0; x < N; ++x) {
      if (multiply(0, x) != x || multiply(x, 0) != x) {
        throw CatalogError("group " + name_ + ": identity fails at " + element_string(x));
      }
      if (multiply(x, inverse(x)) != 0 || multiply(inverse(x), x) != 0) {
        throw CatalogError("group " + name_ + ": no two-sided inverse for " +
                           element_string(x));
      }
    }
    auto check = [&](Element x, Element y, Element z) {
      if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) {
        throw CatalogError("group " + name_ + ": associativity fails at (" +
                           element_string(x) + ", " + element_string(y) + ", " +
                           element_string(z) + ")");
      }
    };
    if (N <= exhaustive_limit) {
      for (Element x = 0; x < N; ++x) {
        for (Element y = 0; y < N; ++y) {
          for (Element z = 0; z < N; ++z) {
            check(x, y, z);
          }
        }
      }
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(N - 1));
      for (std::size_t s = 0; s < samples; ++s) {
        check(pick(rng), pick(rng), pick(rng));
      }
    }
  }

 private:
  void check_relation(ExponentVector const& w, std::size_t i, std::string const& what) const {
    if (w.size() != n_) {
      throw CatalogError("group " + name_ + ": " + what + " has the wrong length");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (w[j] >= p_) {
        throw CatalogError("group " + name_ + ": " + what + " exponent out of range");
      }
      if (j <= i && w[j] != 0) {
        throw CatalogError("group " + name_ + ": " + what +
                           " must only use higher-index generators");
      }
    }
  }

  void build_table(detail::Collector const& c) {
    std::size_t const N = order_;
    // Right multiplication by each generator, then by normal forms.
    table_.assign(N * N, 0);
    std::vector<ExponentVector> forms(N);
    for (Element x = 0; x < N; ++x) {
      forms[x] = exponents(x);
    }
    for (Element x = 0; x < N; ++x) {
      for (Element y = 0; y < N; ++y) {
        ExponentVector v = forms[x];
        c.mul_vector(v, forms[y]);
        table_[static_cast<std::size_t>(x) * N + y] = from_exponents(v);
      }
    }
    inverse_.assign(N, 0);
    element_order_.assign(N, 0);
    for (Element x = 0; x < N; ++x) {
      bool found = false;
      for (Element y = 0; y < N; ++y) {
        if (multiply(x, y) == 0) {
          inverse_[x] = y;
          found = true;
          break;
        }
      }
      if (!found) {
        throw CatalogError("group " + name_ + ": element without inverse");
      }
      Element acc = x;
      std::uint64_t k = 1;
      while (acc != 0) {
        acc = multiply(acc, x);
        ++k;
        if (k > N) {
          throw CatalogError("group " + name_ + ": element order exceeds group order");
        }
      }
      element_order_[x] = k;
    }
  }

  Element power_nonneg(Element x, std::uint64_t e) const {
    Element result = 0;
    Element base = x;
    while (e > 0) {
      if (e & 1U) {
        result = multiply(result, base);
      }
      base = multiply(base, base);
      e >>= 1U;
    }
    return result;
  }

  std::string name_;
  std::uint64_t p_;
  std::size_t n_;
  std::size_t order_ = 1;
  std::vector<ExponentVector> power_;
  CommMap comm_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint64_t> element_order_;
};

// Cyclic group of order p^s: g_i^p = g_{i+1}.
inline PcGroup cyclic_pc_group(std::uint64_t p, std::size_t s) {
  std::vector<ExponentVector> power(s, ExponentVector(s, 0));
  for (std::size_t i = 0; i + 1 < s; ++i) {
    power[i][i + 1] = 1;
  }
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < s; ++i) {
    order *= p;
  }
  return PcGroup("C" + std::to_string(order), p, s, std::move(power), {});
}

struct Catalog {
  std::vector<PcGroup> groups;
  std::vector<std::string> warnings;

  // Groups for prime p with order <= max_order, smallest first; ties keep
  // file order.
  std::vector<PcGroup const*> select(std::uint64_t p, std::uint64_t max_order) const {
    std::vector<PcGroup const*> out;
    for (auto const& g : groups) {
      if (g.prime() == p && g.order() <= max_order) {
        out.push_back(&g);
      }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](auto const* x, auto const* y) { return x->order() < y->order(); });
    return out;
  }
};

namespace detail {

  inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
      ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
      --e;
    }
    return std::string(s.substr(b, e - b));
  }

  inline std::uint64_t parse_index(std::string const& tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw CatalogError("line " + std::to_string(line) + ": expected a number, got '" + tok +
                         "'");
    }
    return std::stoull(tok);
  }

  // "g3^1 g4" -> exponent vector. Generators must be strictly increasing and
  // exponents in [0, p).
  inline ExponentVector parse_pc_word(std::string const& text, std::size_t n, std::uint64_t p,
                                      std::size_t line) {
    ExponentVector e(n, 0);
    std::istringstream in(text);
    std::string tok;
    std::size_t last = 0;
    while (in >> tok) {
      if (tok.size() < 2 || tok[0] != 'g') {
        throw CatalogError("line " + std::to_string(line) + ": bad pc letter '" + tok + "'");
      }
      auto caret = tok.find('^');
      std::uint64_t gen = parse_index(tok.substr(1, caret == std::string::npos
                                                        ? std::string::npos
                                                        : caret - 1),
                                      line);
      std::uint64_t exp = caret == std::string::npos ? 1 : parse_index(tok.substr(caret + 1), line);
      if (gen == 0 || gen > n) {
        throw CatalogError("line " + std::to_string(line) + ": generator g" +
                           std::to_string(gen) + " out of range");
      }
      if (gen <= last) {
        throw CatalogError("line " + std::to_string(line) +
                           ": relation words must list generators in increasing order");
      }
      if (exp >= p) {
        throw CatalogError("line " + std::to_string(line) + ": exponent must be below p");
      }
      e[gen - 1] = static_cast<unsigned>(exp);
      last = gen;
    }
    return e;
  }

}  // namespace detail

// Line-oriented catalog:
//   group <name> p=<p> n=<ngens>
//   pow <i> = <word>
//   comm <j> <i> = <word>
//   end
// Every group is validated as it is loaded.
inline Catalog parse_catalog(std::string_view text, std::size_t exhaustive_limit = 64) {
  Catalog cat;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;

  struct Pending {
    std::string name;
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::vector<ExponentVector> power;
    PcGroup::CommMap comm;
    std::size_t line = 0;
  };
  std::optional<Pending> cur;

  auto fail = [&](std::string const& msg) {
    throw CatalogError("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) {
      continue;
    }
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "group") {
      if (cur) {
        fail("group '" + cur->name + "' is missing 'end'");
      }
      std::string name, pf, nf;
      if (!(ls >> name >> pf >> nf) || pf.rfind("p=", 0) != 0 || nf.rfind("n=", 0) != 0) {
        fail("expected 'group <name> p=<p> n=<ngens>'");
      }
      Pending pend;
      pend.name = name;
      pend.p = detail::parse_index(pf.substr(2), lineno);
      pend.n = detail::parse_index(nf.substr(2), lineno);
      pend.line = lineno;
      if (!is_prime(pend.p)) {
        fail("p=" + std::to_string(pend.p) + " is not prime");
      }
      pend.power.assign(pend.n, ExponentVector(pend.n, 0));
      cur = std::move(pend);
    } else if (kw == "pow" || kw == "comm") {
      if (!cur) {
        fail("'" + kw + "' outside a group block");
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        fail("missing '='");
      }
      std::istringstream lhs(line.substr(0, eq));
      std::string dummy, a, b, extra;
      lhs >> dummy >> a;
      std::string rhs = line.substr(eq + 1);
      if (kw == "pow") {
        if (lhs >> extra) {
          fail("expected 'pow <i> = <word>'");
        }
        std::uint64_t i = detail::parse_index(a, lineno);
        if (i == 0 || i > cur->n) {
          fail("pow index out of range");
        }
        auto w = detail::parse_pc_word(rhs, cur->n, cur->p, lineno);
        for (std::size_t j = 0; j < i; ++j) {
          if (w[j] != 0) {
            fail("pow " + a + " must only use higher-index generators");
          }
        }
        cur->power[i - 1] = w;
      } else {
        if (!(lhs >> b) || (lhs >> extra)) {
          fail("expected 'comm <j> <i> = <word>'");
        }
        std::uint64_t j = detail::parse_index(a, lineno);
        std::uint64_t i = detail::parse_index(b, lineno);
        if (!(i >= 1 && j > i && j <= cur->n)) {
          fail("comm needs 1 <= i < j <= n");
        }
        auto w = detail::parse_pc_word(rhs, cur->n, cur->p, lineno);
        for (std::size_t k = 0; k < i; ++k) {
          if (w[k] != 0) {
            fail("comm " + a + " " + b + " must only use generators above " + b);
          }
        }
        if (!cur->comm.emplace(std::make_pair(j - 1, i - 1), w).second) {
          fail("duplicate comm relation");
        }
      }
    } else if (kw == "end") {
      if (!cur) {
        fail("'end' without 'group'");
      }
      try {
        PcGroup g(cur->name, cur->p, cur->n, std::move(cur->power), std::move(cur->comm));
        g.validate(exhaustive_limit);
        cat.groups.push_back(std::move(g));
      } catch (CatalogError const& e) {
        // a group failing the axioms is dropped, the rest of the file still loads
        cat.warnings.push_back(std::string("rejected: ") + e.what());
      }
      cur.reset();
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (cur) {
    throw CatalogError("group '" + cur->name + "' (line " + std::to_string(cur->line) +
                       ") is missing 'end'");
  }
  if (cat.groups.empty()) {
    cat.warnings.push_back("catalog is empty");
  }
  return cat;
}

inline Catalog load_catalog(std::string const& path, std::size_t exhaustive_limit = 64) {
  std::ifstream in(path);
  if (!in) {
    throw CatalogError("cannot open catalog file " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), exhaustive_limit);
}

}  // namespace rosegbs
