// rosegbs: classify rose GBS groups, emit (N_p)_omega generators, decide
// residual p-finiteness and check everything against the quotient oracle.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rosegbs/rosegbs.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace rosegbs;

constexpr int kExitUsage = 2;

struct RunConfig {
  std::uint64_t p = 2;
  std::string input;
  Bounds bounds;
  std::optional<std::uint64_t> max_order;
  unsigned s_max = 6;
  std::string format = "text";
  std::string orientation = "canonical";
  std::string mixed_order = "conjugate";
  std::uint64_t seed = 1;
  std::string catalog_path;

  Budget budget() const {
    Budget b;
    b.s_max = s_max;
    if (max_order) {
      b.max_order = *max_order;
    } else {
      b.max_order = p == 2 ? 16 : p * p * p;
    }
    return b;
  }
  GeneratorOptions options() const {
    GeneratorOptions o;
    o.orientation = orientation == "canonical" ? Orientation::canonical
                                               : Orientation::intro_verbatim;
    o.mixed_order = mixed_order == "conjugate" ? MixedOrder::conjugate : MixedOrder::verbatim;
    return o;
  }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(std::string const& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.front() != '<' && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

void check_prime(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31)) {
    throw UsageError("p=" + std::to_string(p) + " exceeds 2^31");
  }
  if (!is_prime(p)) {
    throw UsageError("p=" + std::to_string(p) + " is not prime");
  }
}

std::string big(BigInt const& x) {
  return rosegbs::to_string(x);
}

Json config_json(RunConfig const& cfg) {
  auto b = cfg.budget();
  return Json{{"p", cfg.p},
              {"bounds",
               {{"k_max", cfg.bounds.k_max},
                {"comm_word_len", cfg.bounds.comm_word_len},
                {"count_limit", cfg.bounds.count_limit}}},
              {"budget", {{"max_order", b.max_order}, {"s_max", b.s_max}}},
              {"orientation", cfg.orientation},
              {"mixed_order", cfg.mixed_order},
              {"seed", cfg.seed}};
}

Json loops_json(Classification const& cls) {
  Json arr = Json::array();
  std::size_t i = 0;
  for (auto const& l : cls.loops) {
    arr.push_back({{"index", ++i},
                   {"n", big(l.n)},
                   {"m", big(l.m)},
                   {"sign_normalized", l.sign_normalized},
                   {"elementary", l.elementary},
                   {"sigma", l.sigma},
                   {"tau", l.tau},
                   {"m_hat", big(l.m_hat)},
                   {"n_hat", big(l.n_hat)},
                   {"d", big(l.d)},
                   {"u", big(l.u)},
                   {"v", big(l.v)},
                   {"theta", l.theta.str()}});
  }
  return arr;
}

Json classification_json(Classification const& cls) {
  return Json{{"case", to_string(cls.which)},
              {"xi_or_sigma", cls.xi_or_sigma},
              {"out_of_scope", cls.out_of_scope},
              {"sign_normalized", cls.sign_normalized},
              {"loops", loops_json(cls)}};
}

Json residual_json(ResidualPReport const& r) {
  return Json{{"decision", r.decision},
              {"reason", to_string(r.reason)},
              {"obstruction", to_string(r.obstruction)},
              {"witness", r.witness},
              {"sign_normalized", r.sign_normalized},
              {"out_of_scope", r.out_of_scope}};
}

Json generators_json(GeneratorSet const& gs) {
  Json arr = Json::array();
  for (auto const& e : gs.entries) {
    arr.push_back({{"word", to_string(e.word)},
                   {"family", to_string(e.provenance.family)},
                   {"k", e.provenance.k},
                   {"detail", e.provenance.detail}});
  }
  return arr;
}

Json truncation_json(GeneratorSet const& gs, Bounds const& b) {
  return Json{{"truncated", gs.truncated},
              {"count_limit", b.count_limit},
              {"dropped_trivial", gs.dropped_trivial},
              {"dropped_duplicate", gs.dropped_duplicate}};
}

Json witness_json(Verdict const& v) {
  if (auto const* cw = std::get_if<CatalogWitness>(&v.witness)) {
    return Json{{"type", "catalog"},
                {"group", cw->group},
                {"order", cw->order},
                {"image_a", cw->image_a},
                {"image_t", cw->image_t},
                {"image", cw->image}};
  }
  auto const& hw = std::get<HolomorphWitness>(v.witness);
  return Json{{"type", "holomorph"},
              {"s", hw.s},
              {"modulus", hw.modulus},
              {"c", hw.c},
              {"image", {{"k", hw.image.k}, {"h", hw.image.h}}}};
}

Json verify_json(VerifyReport const& rep, RunConfig const& cfg, RoseGbs const& pres) {
  Json out{{"tool", "rosegbs"},
           {"command", "verify"},
           {"presentation", to_string(pres)},
           {"config", config_json(cfg)}};
  out["case"] = to_string(rep.cls.which);
  out["xi_or_sigma"] = rep.cls.xi_or_sigma;
  out["loops"] = loops_json(rep.cls);
  out["residual"] = residual_json(rep.residual);
  out["generators"] = generators_json(rep.generators);

  Json verdicts = Json::array();
  Json witnesses = Json::array();
  for (auto const& c : rep.checks) {
    Json v{{"check", to_string(c.kind)},
           {"variant", c.variant},
           {"word", to_string(c.word)},
           {"provenance", c.provenance},
           {"verdict", to_string(c.verdict.kind)},
           {"homs_tested", c.verdict.homs_tested},
           {"max_order", c.verdict.max_order},
           {"witness", nullptr}};
    if (c.verdict.separated()) {
      v["witness"] = witnesses.size();
      witnesses.push_back(witness_json(c.verdict));
    }
    verdicts.push_back(std::move(v));
  }
  out["verdicts"] = std::move(verdicts);
  out["witnesses"] = std::move(witnesses);

  Json groups = Json::array();
  for (auto const& g : rep.groups) {
    groups.push_back({{"name", g.name}, {"order", g.order}, {"homs", g.homs}});
  }
  Json holos = Json::array();
  for (auto const& h : rep.holomorphs) {
    holos.push_back({{"s", h.s},
                     {"status", to_string(h.refusal)},
                     {"diagnostic", h.diagnostic},
                     {"order", h.order},
                     {"c", h.c}});
  }
  out["budget"] = {{"max_order", rep.budget.max_order},
                   {"s_max", rep.budget.s_max},
                   {"quotients_tested", rep.total_homs},
                   {"max_order_tested", rep.max_order},
                   {"groups", std::move(groups)},
                   {"holomorphs", std::move(holos)}};
  out["truncation"] = truncation_json(rep.generators, rep.bounds);

  Json adj = Json::array();
  for (auto const& t : rep.adjudication) {
    adj.push_back({{"orientation", to_string(t.orientation)},
                   {"mixed_order", to_string(t.order)},
                   {"default", t.is_default},
                   {"words", t.words},
                   {"separated", t.separated},
                   {"survives", t.survives()}});
  }
  out["adjudication"] = std::move(adj);

  Json findings = Json::array();
  for (auto const& f : rep.findings) {
    findings.push_back({{"kind", to_string(f.kind)},
                        {"check", f.check},
                        {"word", f.word},
                        {"message", f.message}});
  }
  out["findings"] = std::move(findings);
  out["status"] = rep.status();
  out["exit_code"] = rep.exit_code();
  return out;
}

Json envelope(std::string const& command, RunConfig const& cfg, RoseGbs const& pres) {
  return Json{{"tool", "rosegbs"},
              {"command", command},
              {"presentation", to_string(pres)},
              {"config", config_json(cfg)}};
}

void print_json(Json const& j) {
  std::cout << j.dump(2) << '\n';
}

Catalog const& active_catalog(RunConfig const& cfg) {
  static std::optional<Catalog> custom;
  if (cfg.catalog_path.empty()) {
    return builtin_catalog();
  }
  if (!custom) {
    custom = load_catalog(cfg.catalog_path);
    for (auto const& w : custom->warnings) {
      std::cerr << "warning: " << w << '\n';
    }
  }
  return *custom;
}

// ---------------------------------------------------------------------------

int cmd_classify(RunConfig const& cfg) {
  auto pres = parse_presentation(read_input(cfg.input));
  auto cls = classify(pres, cfg.p, cfg.options().orientation);
  if (cfg.format == "json") {
    auto j = envelope("classify", cfg, pres);
    auto body = classification_json(cls);
    for (auto& [k, v] : body.items()) {
      j[k] = v;
    }
    print_json(j);
    return 0;
  }
  std::cout << to_string(pres) << "  p=" << cfg.p << '\n';
  std::cout << "loop  n  m  sigma  tau  m_hat  n_hat  d  u  v  theta\n";
  std::size_t i = 0;
  for (auto const& l : cls.loops) {
    std::cout << ++i << "  " << big(l.n) << "  " << big(l.m) << "  " << l.sigma << "  " << l.tau
              << "  " << big(l.m_hat) << "  " << big(l.n_hat) << "  " << big(l.d) << "  "
              << big(l.u) << "  " << big(l.v) << "  " << l.theta.str() << '\n';
  }
  std::cout << (cls.is_case1() ? "Case1 xi=" : "Case2 Sigma=") << cls.xi_or_sigma << '\n';
  if (cls.out_of_scope) {
    std::cout << "note: some loop has |n| = |m| = 1\n";
  }
  return 0;
}

int cmd_generators(RunConfig const& cfg) {
  auto pres = parse_presentation(read_input(cfg.input));
  auto gs = np_omega_generators(pres, cfg.p, cfg.bounds, cfg.options());
  if (cfg.format == "json") {
    auto j = envelope("generators", cfg, pres);
    auto cls = classify(pres, cfg.p, cfg.options().orientation);
    j["case"] = to_string(cls.which);
    j["xi_or_sigma"] = cls.xi_or_sigma;
    j["generators"] = generators_json(gs);
    j["truncation"] = truncation_json(gs, cfg.bounds);
    print_json(j);
    return 0;
  }
  std::cout << serialize(gs);
  return 0;
}

int cmd_residual(RunConfig const& cfg) {
  auto pres = parse_presentation(read_input(cfg.input));
  auto r = residually_p(pres, cfg.p);
  if (cfg.format == "json") {
    auto j = envelope("residual", cfg, pres);
    auto body = residual_json(r);
    for (auto& [k, v] : body.items()) {
      j[k] = v;
    }
    print_json(j);
    return 0;
  }
  std::cout << (r.decision ? "true" : "false") << "  reason=" << to_string(r.reason);
  if (r.obstruction != ObstructionKind::none) {
    std::cout << "  obstruction=" << to_string(r.obstruction) << "  loops=";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      std::cout << (i ? "," : "") << r.witness[i];
    }
  }
  std::cout << '\n';
  return 0;
}

int cmd_verify(RunConfig const& cfg) {
  auto pres = parse_presentation(read_input(cfg.input));
  auto rep = verify_theorem(pres, cfg.p, cfg.bounds, cfg.budget(), active_catalog(cfg),
                            cfg.options());
  if (cfg.format == "json") {
    print_json(verify_json(rep, cfg, pres));
    return rep.exit_code();
  }
  std::cout << to_string(pres) << "  p=" << cfg.p << "  " << to_string(rep.cls.which)
            << (rep.cls.is_case1() ? " xi=" : " Sigma=") << rep.cls.xi_or_sigma << '\n';
  std::cout << "residually p: " << (rep.residual.decision ? "true" : "false") << " ("
            << to_string(rep.residual.reason) << ")\n";
  std::cout << "quotients tested: " << rep.total_homs << ", largest order " << rep.max_order
            << '\n';
  std::size_t sep = 0;
  for (auto const& c : rep.checks) {
    sep += c.verdict.separated() ? 1 : 0;
  }
  std::cout << "words checked: " << rep.checks.size() << ", separated: " << sep << '\n';
  for (auto const& t : rep.adjudication) {
    std::cout << "mixed " << t.label() << (t.is_default ? " (default)" : "") << ": "
              << t.separated << "/" << t.words << " separated\n";
  }
  for (auto const& f : rep.findings) {
    std::cout << to_string(f.kind) << " [" << f.check << "] " << f.word << ": " << f.message
              << '\n';
  }
  std::cout << rep.status() << '\n';
  return rep.exit_code();
}

int cmd_catalog_validate(RunConfig const& cfg) {
  Catalog cat;
  if (cfg.catalog_path.empty()) {
    cat = parse_catalog(kBuiltinCatalogText);
  } else {
    cat = load_catalog(cfg.catalog_path);
  }
  // a second pass with the run seed, covering groups above the exhaustive limit
  for (auto const& g : cat.groups) {
    g.validate(64, 100000, cfg.seed);
  }
  if (cfg.format == "json") {
    Json groups = Json::array();
    for (auto const& g : cat.groups) {
      groups.push_back({{"name", g.name()},
                        {"p", g.prime()},
                        {"order", g.order()},
                        {"associativity", g.order() <= 64 ? "exhaustive" : "sampled"}});
    }
    Json j{{"tool", "rosegbs"},
           {"command", "catalog-validate"},
           {"config", config_json(cfg)},
           {"source", cfg.catalog_path.empty() ? std::string("builtin") : cfg.catalog_path},
           {"groups", std::move(groups)},
           {"warnings", cat.warnings},
           {"status", cat.warnings.empty() ? "PASS" : "WARN"}};
    print_json(j);
    return 0;
  }
  for (auto const& g : cat.groups) {
    std::cout << g.name() << "  p=" << g.prime() << "  order=" << g.order() << "  ok\n";
  }
  for (auto const& w : cat.warnings) {
    std::cout << "warning: " << w << '\n';
  }
  std::cout << cat.groups.size() << " groups\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rosegbs: p-residual structure of rose generalized Baumslag-Solitar groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::uint64_t max_order = 0;

  auto* popt = app.add_option("-p,--prime", cfg.p, "prime p")->envname("ROSEGBS_P");
  popt->capture_default_str();
  app.add_option("--bounds.k-max", cfg.bounds.k_max, "bound on |k_i|")
      ->envname("ROSEGBS_BOUNDS_K_MAX")
      ->capture_default_str();
  app.add_option("--bounds.comm-len", cfg.bounds.comm_word_len,
                 "free length of sampled commutator words")
      ->envname("ROSEGBS_BOUNDS_COMM_LEN")
      ->capture_default_str();
  app.add_option("--bounds.count-limit", cfg.bounds.count_limit, "cap on emitted generators")
      ->envname("ROSEGBS_BOUNDS_COUNT_LIMIT")
      ->capture_default_str();
  auto* mo = app.add_option("--budget.max-order", max_order,
                            "largest catalog group order (default 16 for p=2, else p^3)")
                 ->envname("ROSEGBS_BUDGET_MAX_ORDER");
  app.add_option("--budget.s-max", cfg.s_max, "largest holomorph exponent s")
      ->envname("ROSEGBS_BUDGET_S_MAX")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("ROSEGBS_FORMAT")
      ->capture_default_str();
  app.add_option("--orientation", cfg.orientation, "which unit sits on the n side")
      ->check(CLI::IsMember({"canonical", "intro-verbatim"}))
      ->envname("ROSEGBS_ORIENTATION")
      ->capture_default_str();
  app.add_option("--mixed-order", cfg.mixed_order, "closing letters of the mixed family")
      ->check(CLI::IsMember({"conjugate", "verbatim"}))
      ->envname("ROSEGBS_MIXED_ORDER")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled checks")
      ->envname("ROSEGBS_SEED")
      ->capture_default_str();
  app.add_option("--catalog", cfg.catalog_path, "catalog file (default: built-in)")
      ->envname("ROSEGBS_CATALOG");

  auto add_cmd = [&](char const* name, char const* help, bool needs_input) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (needs_input) {
      sub->add_option("input", cfg.input, "presentation text or file")->required();
    }
    return sub;
  };
  auto* c_classify = add_cmd("classify", "loop invariants and theorem case", true);
  auto* c_generators = add_cmd("generators", "normal generators of (N_p)_omega", true);
  auto* c_residual = add_cmd("residual", "is G residually a finite p-group", true);
  auto* c_verify = add_cmd("verify", "check the generators against p-quotients", true);
  auto* c_catalog = add_cmd("catalog-validate", "load and check the group catalog", false);

  try {
    app.parse(argc, argv);
  } catch (CLI::Success const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (mo->count() > 0) {
    cfg.max_order = max_order;
  }

  try {
    check_prime(cfg.p);
    if (c_classify->parsed()) {
      return cmd_classify(cfg);
    }
    if (c_generators->parsed()) {
      return cmd_generators(cfg);
    }
    if (c_residual->parsed()) {
      return cmd_residual(cfg);
    }
    if (c_verify->parsed()) {
      return cmd_verify(cfg);
    }
    if (c_catalog->parsed()) {
      return cmd_catalog_validate(cfg);
    }
  } catch (rosegbs::ParseError const& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
