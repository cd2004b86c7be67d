#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "rosegbs/generators.hpp"

using namespace rosegbs;

namespace {

std::set<std::string> strings(std::vector<GeneratedWord> const& ws) {
  std::set<std::string> out;
  for (auto const& w : ws) {
    out.insert(to_string(w.word));
  }
  return out;
}

Classification cls_of(char const* text, std::uint64_t p) {
  return classify(parse_presentation(text), p);
}

}  // namespace

TEST_CASE("case 1 generator") {
  auto a = np_omega_generators(parse_presentation("<a,t1 | t1 a^2 t1^-1 = a^3>"), 2, {});
  REQUIRE(a.entries.size() == 1);
  CHECK(to_string(a.entries[0].word) == "a");
  CHECK(a.which == TheoremCase::case1);

  auto b = np_omega_generators(
      parse_presentation("<a,t1,t2 | t1 a^2 t1^-1 = a^12 ; t2 a^3 t2^-1 = a^3>"), 2, {});
  REQUIRE(b.entries.size() == 1);
  CHECK(to_string(b.entries[0].word) == "a^2");

  auto c = cls_of("<a,t1 | t1 a^9 t1^-1 = a^27>", 3);
  CHECK(to_string(case1_generators(c).entries[0].word) == "a^9");
  CHECK_THROWS_AS(family_mixed(c, {}), DomainError);
  CHECK_THROWS_AS(case1_generators(cls_of("<a,t1 | t1 a^3 t1^-1 = a>", 2)), DomainError);
}

TEST_CASE("gamma2 family") {
  CHECK(family_gamma2(cls_of("<a,t1 | t1 a^3 t1^-1 = a>", 2), {}).entries.empty());

  Bounds minimal{1, 4, 1000};
  auto s0 = strings(
      family_gamma2(cls_of("<a,t1,t2 | t1 a^3 t1^-1 = a ; t2 a^5 t2^-1 = a>", 2), minimal)
          .entries);
  CHECK(s0.count("t1 t2 t1^-1 t2^-1 a t2 t1 t2^-1 t1^-1 a^-1"));

  auto cls1 = cls_of("<a,t1,t2 | t1 a^2 t1^-1 = a^2 ; t2 a^3 t2^-1 = a>", 2);
  REQUIRE(cls1.sigma_sum() == 1);
  auto s1 = strings(family_gamma2(cls1, minimal).entries);
  auto expect = commutator(commutator(gen_power(1, 1), gen_power(2, 1)), gen_power(kGenA, 2));
  CHECK(s1.count(to_string(expect)));
}

TEST_CASE("gamma2 words respect the length bound and are deduplicated") {
  auto cls = cls_of("<a,t1,t2,t3 | t1 a t1^-1 = a^3 ; t2 a t2^-1 = a ; t3 a^2 t3^-1 = a^2>", 2);
  for (unsigned L : {4U, 6U, 8U}) {
    auto fam = family_gamma2(cls, Bounds{1, L, 100000});
    auto s = strings(fam.entries);
    CHECK(s.size() == fam.entries.size());
    for (auto const& e : fam.entries) {
      // [w, a^2] has free length 2 |w| + 4
      CHECK((e.word.free_length() - 4) / 2 <= L);
    }
  }
}

TEST_CASE("conjugate-a family") {
  auto f = family_conjugate_a(cls_of("<a,t1 | t1 a^3 t1^-1 = a>", 2), Bounds{1, 6, 100});
  CHECK(f.dropped_trivial == 1);  // k = 0
  auto s = strings(f.entries);
  CHECK(s.count("t1 a t1^-1 a t1 a^-1 t1^-1 a^-1"));

  auto cls = cls_of("<a,t1,t2 | t1 a^3 t1^-1 = a^3 ; t2 a t2^-1 = a^4>", 3);
  REQUIRE(cls.sigma_sum() == 1);
  auto g = family_conjugate_a(cls, Bounds{1, 6, 100});
  Word inner = conjugate(gen_power(kGenA, 1), reduce({Letter{1, 1}, Letter{2, -1}}));
  CHECK(strings(g.entries).count(to_string(commutator(inner, gen_power(kGenA, 3)))));
  CHECK(g.entries.size() == 8);
}

TEST_CASE("mixed family") {
  auto f = family_mixed(cls_of("<a,t1 | t1 a^3 t1^-1 = a>", 2), Bounds{1, 6, 100});
  CHECK(f.dropped_trivial == 1);
  auto s = strings(f.entries);
  CHECK(s.count("t1 a^3 t1^-1 a^-1"));

  auto two = cls_of("<a,t1,t2 | t1 a^3 t1^-1 = a ; t2 a^5 t2^-1 = a>", 2);
  auto g = strings(family_mixed(two, Bounds{1, 6, 100}).entries);
  CHECK(g.count("t1 t2 a^15 t2^-1 t1^-1 a^-1"));
  auto v = strings(family_mixed(two, Bounds{1, 6, 100}, MixedOrder::verbatim).entries);
  CHECK(v.count("t1 t2 a^15 t1^-1 t2^-1 a^-1"));
}

TEST_CASE("mixed family at a unit vector is the relator shape") {
  for (auto const* text : {"<a,t1,t2 | t1 a^6 t1^-1 = a^10 ; t2 a t2^-1 = a^7>",
                           "<a,t1,t2 | t1 a^5 t1^-1 = a^-7 ; t2 a^3 t2^-1 = a^9>"}) {
    auto pres = parse_presentation(text);
    for (std::uint64_t p : {2, 3}) {
      auto cls = classify(pres, p);
      if (cls.is_case1()) {
        continue;
      }
      auto fam = family_mixed(cls, Bounds{1, 4, 100});
      for (std::size_t i = 0; i < cls.rank(); ++i) {
        if (cls.loops[i].sigma != cls.sigma_sum()) {
          continue;
        }
        BigInt ps = big_pow(p, cls.sigma_sum());
        auto const& l = cls.loops[i];
        Word want = product(gen_power(i + 1, 1), gen_power(kGenA, ps * l.u),
                            gen_power(i + 1, -1), gen_power(kGenA, -ps * l.v));
        CHECK(strings(fam.entries).count(to_string(want)));
      }
    }
  }
}

TEST_CASE("np_omega example for one loop") {
  auto gs = np_omega_generators(parse_presentation("<a,t1 | t1 a^3 t1^-1 = a>"), 2,
                                Bounds{1, 6, 1000});
  auto s = strings(gs.entries);
  CHECK(s.count("t1 a^3 t1^-1 a^-1"));
  CHECK(s.count(to_string(commutator(conjugate(gen_power(kGenA, 1), gen_power(1, 1)),
                                     gen_power(kGenA, 1)))));
  CHECK(s.count(to_string(commutator(conjugate(gen_power(kGenA, 1), gen_power(1, -1)),
                                     gen_power(kGenA, 1)))));
  // the mixed word at k = -1 is emitted as well
  CHECK(s.count("t1^-1 a t1 a^-3"));
  CHECK(gs.entries.size() == 4);
}

TEST_CASE("generator sets: reduced, nonempty, monotone in k_max") {
  for (auto const* text : {"<a,t1 | t1 a^3 t1^-1 = a>",
                           "<a,t1,t2 | t1 a^3 t1^-1 = a ; t2 a^5 t2^-1 = a>",
                           "<a,t1 | t1 a^3 t1^-1 = a^12>",
                           "<a,t1,t2 | t1 a^2 t1^-1 = a^2 ; t2 a^4 t2^-1 = a^4>"}) {
    auto pres = parse_presentation(text);
    for (std::uint64_t p : {2, 3}) {
      auto small = np_omega_generators(pres, p, Bounds{1, 4, 100000});
      auto large = np_omega_generators(pres, p, Bounds{2, 6, 100000});
      auto s1 = strings(small.entries);
      auto s2 = strings(large.entries);
      CHECK(s1.size() == small.entries.size());
      CHECK(std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()));
      for (auto const& e : large.entries) {
        CHECK_FALSE(e.word.empty());
        CHECK(reduce(e.word.letters()) == e.word);
      }
    }
  }
}

TEST_CASE("count limit truncates") {
  auto pres = parse_presentation("<a,t1,t2 | t1 a^3 t1^-1 = a ; t2 a^5 t2^-1 = a>");
  auto gs = np_omega_generators(pres, 2, Bounds{2, 6, 5});
  CHECK(gs.truncated);
  CHECK(gs.entries.size() == 5);
  CHECK(serialize(gs).find("# truncated") != std::string::npos);
  CHECK_FALSE(np_omega_generators(pres, 2, Bounds{2, 6, 100000}).truncated);
}

TEST_CASE("serialization format") {
  auto gs = np_omega_generators(parse_presentation("<a,t1 | t1 a^3 t1^-1 = a>"), 2,
                                Bounds{1, 6, 1000});
  auto text = serialize(gs);
  CHECK(text.rfind("# family=conjugate_a k=-1\n", 0) == 0);
  CHECK(text.find("# family=mixed k=1\nt1 a^3 t1^-1 a^-1\n") != std::string::npos);
  auto c1 = serialize(np_omega_generators(parse_presentation("<a,t1 | t1 a^2 t1^-1 = a^12>"), 2, {}));
  CHECK(c1 == "# family=case1\na^2\n");
}

TEST_CASE("intro orientation swaps the mixed exponents") {
  auto pres = parse_presentation("<a,t1 | t1 a^3 t1^-1 = a>");
  auto gs = np_omega_generators(pres, 2, Bounds{1, 6, 100},
                                {Orientation::intro_verbatim, MixedOrder::conjugate});
  CHECK(strings(gs.entries).count("t1 a t1^-1 a^-3"));
}
