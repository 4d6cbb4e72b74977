#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gchar/chainring/chainring.hpp"
#include "gchar/charring/charring.hpp"
#include "gchar/charring/verify.hpp"
#include "gchar/classfn/classfn.hpp"
#include "gchar/error.hpp"
#include "gchar/group/subgroup.hpp"
#include "gchar/parse.hpp"
#include "gchar/q8ring/q8ring.hpp"
#include "gchar/report.hpp"

using namespace gchar;

namespace {

struct Options {
  std::string orders = "4";
  std::string sub;
  std::string chain;
  std::string mode = "mod-empty";
  std::string lhs;
  std::string rhs;
  bool json_out = false;
  bool pretty = false;
  unsigned seed = 0;
  unsigned p = 2;
  unsigned n = 2;
  unsigned nm = 4;
  unsigned max = 8;
};

json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

// Optional guard on coefficient growth, set through GCHAR_MAX_DENOM.
std::optional<unsigned long> max_denominator() {
  const char* env = std::getenv("GCHAR_MAX_DENOM");
  if (!env || !*env) return std::nullopt;
  const long v = parse_long(env);
  if (v < 1) fail(ErrorKind::InvalidArgument, "GCHAR_MAX_DENOM must be a positive integer");
  return static_cast<unsigned long>(v);
}

void guard(const Rational& c, const std::string& where) {
  static const auto cap = max_denominator();
  if (cap && cmp(c.get_den(), *cap) > 0)
    fail(ErrorKind::InvalidArgument, "coefficient " + c.get_str() + " in " + where + " exceeds GCHAR_MAX_DENOM=" +
                                         std::to_string(*cap));
}

AbelianGroup group_of(const Options& o) { return AbelianGroup(parse_orders(o.orders)); }

json ring_json(const RingElement& x) {
  json out = json::object();
  for (const auto& [s, c] : x.sorted_terms()) {
    guard(c, "result");
    out[subset_string(x.algebra().group(), s)] = rational_json(c);
  }
  return out;
}

RingElement ring_input(const CharAlgebra& alg, const std::string& text) {
  RingElement x = parse_ring_element(alg, text);
  for (const auto& [s, c] : x.sorted_terms()) guard(c, "input");
  return x;
}

json chain_json(const ChainRingElement& x) {
  json out = json::object();
  for (const auto& [l, c] : x.terms()) {
    guard(c, "result");
    out[ChainRingElement::basis(x.chain(), l).to_string()] = rational_json(c);
  }
  return out;
}

json q8_json(const Q8RingElement& x) {
  json out = json::object();
  for (const auto& [l, c] : x.terms()) {
    guard(c, "result");
    out[l.to_string()] = rational_json(c);
  }
  return out;
}

Q8RingElement q8_input(const std::string& text) {
  Q8RingElement x = Q8RingElement::parse(text);
  for (const auto& [l, c] : x.terms()) guard(c, "input");
  return x;
}

// "A:{0,1}" glider, "c:3" constant, "full:..." / "lower:..." chain-ring labels.
GenClassFunction classfn_input(const SubgroupChain& chain, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorKind::Parse, "expected A:<subset>, c:<n>, full:... or lower:...");
  const std::string kind = trim(text.substr(0, colon));
  const std::string rest = text.substr(colon + 1);
  if (kind == "A") {
    const Subset a = parse_subset(chain.group(), rest);
    if (chain.d() == 1) return glider_char_subset(chain, a);
    if (chain.d() == 2) return glider_char_chain2(chain, a);
    fail(ErrorKind::InvalidArgument, "gliders are built for chains of length 1 or 2");
  }
  if (kind == "c") return constant_cn(chain, parse_rational(trim(rest)));
  if (kind == "full" || kind == "lower") {
    if (chain.d() != 2) fail(ErrorKind::ChainLengthMismatch, "chain-ring labels need a chain 1 < H < G");
    const Chain2 c2(chain.group(), chain.level(1));
    return realize(parse_chain_element(c2, text));
  }
  fail(ErrorKind::Parse, "unknown class function kind '" + kind + "'");
}

Report ring_mul(const Options& o) {
  const AbelianGroup g = group_of(o);
  const CharAlgebra alg(g, parse_mode(o.mode));
  const RingElement x = ring_input(alg, o.lhs), y = ring_input(alg, o.rhs);
  const RingElement p = x * y;
  Report r;
  r.inputs = {{"orders", o.orders}, {"mode", o.mode}, {"lhs", o.lhs}, {"rhs", o.rhs}};
  r.result = {{"product", ring_json(p)}, {"text", p.to_string()}};
  r.add("round_trip", parse_ring_element(alg, p.to_string()) == p);
  return r;
}

Report ring_pci(const Options& o) {
  const AbelianGroup g = group_of(o);
  const CharAlgebra alg(g, ContractionMode::ModEmpty);
  Report r;
  r.inputs = {{"orders", o.orders}};
  json list = json::array();
  for (const auto& e : primitive_central_idempotents(alg))
    list.push_back({{"h", e.h.to_string()}, {"n", e.n.to_string()}, {"element", ring_json(e.e)}});
  r.result = {{"idempotents", list}, {"count", list.size()}};
  return r;
}

Report group_info(const Options& o) {
  const AbelianGroup g = group_of(o);
  Report r;
  r.inputs = {{"orders", o.orders}};
  json subs = json::array();
  for (const auto& s : enumerate_subgroups(g)) subs.push_back(s.to_string());
  json elems = json::array();
  for (std::size_t x = 0; x < g.size(); ++x) elems.push_back(g.element_string(x));
  r.result = {{"group", g.to_string()},   {"order", g.size()},
              {"exponent", g.exponent()}, {"elements", elems},
              {"subgroups", subs},        {"jordan_holder_length", jordan_holder_length(g)}};
  if (!o.sub.empty()) r.result["sub"] = parse_subgroup(g, o.sub).to_string();
  return r;
}

Chain2 chain2_of(const Options& o) {
  const AbelianGroup g = group_of(o);
  if (o.sub.empty()) fail(ErrorKind::InvalidArgument, "--sub is required");
  return Chain2(g, parse_subgroup(g, o.sub));
}

Report chain2_mul(const Options& o) {
  const Chain2 c = chain2_of(o);
  const auto x = parse_chain_element(c, o.lhs), y = parse_chain_element(c, o.rhs);
  for (const auto* e : {&x, &y})
    for (const auto& [l, v] : e->terms()) guard(v, "input");
  const auto p = x * y;
  Report r;
  r.inputs = {{"orders", o.orders}, {"sub", o.sub}, {"lhs", o.lhs}, {"rhs", o.rhs}};
  r.result = {{"product", chain_json(p)}, {"text", p.to_string()}};
  r.add("round_trip", parse_chain_element(c, p.to_string()) == p);
  return r;
}

Report chain2_verify(const Options& o) {
  const Chain2 c = chain2_of(o);
  Report r;
  r.inputs = {{"orders", o.orders}, {"sub", o.sub}};
  const Report s = verify_chain_structure(c), l = verify_lower_ideal(c), t = verify_t_quotient(c);
  r.merge("structure", s);
  r.merge("lower", l);
  r.merge("t_quotient", t);
  r.result = {{"structure", s.result}, {"lower", l.result}, {"t_quotient", t.result}};
  return r;
}

Report chain2_cset(const Options& o) {
  Report r;
  r.inputs = {{"n", o.n}, {"nm", o.nm}};
  json pairs = json::array();
  for (const auto& [k, l] : c_set(o.n, o.nm)) pairs.push_back({k, l});
  r.result = {{"pairs", pairs}};
  return r;
}

Report classfn_inner(const Options& o) {
  const AbelianGroup g = group_of(o);
  const SubgroupChain chain = parse_chain(g, o.chain);
  const auto f = classfn_input(chain, o.lhs), h = classfn_input(chain, o.rhs);
  const TriangularMatrix m = inner_product(f, h);
  Report r;
  r.inputs = {{"orders", o.orders}, {"chain", chain.to_string()}, {"lhs", o.lhs}, {"rhs", o.rhs}};
  r.result = {{"inner", m.to_json()}, {"text", m.to_string()}};
  return r;
}

Report classfn_realize(const Options& o) {
  const AbelianGroup g = group_of(o);
  Report r;
  r.inputs = {{"orders", o.orders}, {"lhs", o.lhs}};
  GenClassFunction f = [&] {
    if (o.sub.empty()) return realize(ring_input(CharAlgebra(g, ContractionMode::ModEmpty), o.lhs));
    r.inputs["sub"] = o.sub;
    return realize(parse_chain_element(Chain2(g, parse_subgroup(g, o.sub)), o.lhs));
  }();
  r.result = {{"function", f.to_json()}, {"is_zero", f.is_zero()}, {"chain", f.chain().to_string()}};
  return r;
}

Report classfn_artin(const Options& o) {
  const AbelianGroup g = group_of(o);
  const SubgroupChain chain = parse_chain(g, o.chain);
  Report r;
  r.inputs = {{"orders", o.orders}, {"chain", chain.to_string()}, {"lhs", o.lhs}};
  const auto f = classfn_input(chain, o.lhs.empty() ? "A:{" + g.element_string(g.identity()) + "}" : o.lhs);
  r.result = {{"certificate", artin_decompose(f).to_json()}};
  return r;
}

Report q8_mul(const Options& o) {
  const auto x = q8_input(o.lhs), y = q8_input(o.rhs);
  const auto p = x * y;
  Report r;
  r.inputs = {{"lhs", o.lhs}, {"rhs", o.rhs}};
  r.result = {{"product", q8_json(p)}, {"text", p.to_string()}};
  r.add("round_trip", Q8RingElement::parse(p.to_string()) == p);
  return r;
}

Report q8_exponent(const Options& o) {
  const Q8Label l = Q8Label::parse(o.lhs);
  Report r;
  r.inputs = {{"lhs", o.lhs}};
  r.result = {{"label", l.to_string()}, {"exponent", minimal_absorbing_exponent(l)}};
  return r;
}

Report artin_suite(const AbelianGroup& g) {
  Report r;
  r.inputs = {{"group", g.to_string()}};
  json chains = json::array();
  for (const auto& chain : all_subgroup_chains(g)) {
    r.merge(chain.to_string(), artin_check(chain));
    chains.push_back(chain.to_string());
  }
  r.result = {{"chains", chains}};
  return r;
}

Report inner_suite(const AbelianGroup& g, const std::string& chain) {
  return verify_inner_products(parse_chain(g, chain));
}

Report realize_suite() {
  const AbelianGroup z4({4});
  const CharAlgebra alg(z4, ContractionMode::ModEmpty);
  const RingElement k = parse_ring_element(alg, "{0,1} + {2,3} - {0,3} - {1,2}");
  Report r;
  r.inputs = {{"element", k.to_string()}};
  const bool zero = realize(k).is_zero();
  r.add("kernel_element_realizes_to_zero", zero, true, zero);
  r.note("independence_question",
         "a nonzero ring element realizes to the zero class function, so the glider characters of "
         "P(G) are linearly dependent as class functions");
  return r;
}

Report verify_all(const Options& o) {
  if (o.max > 8) fail(ErrorKind::InvalidArgument, "--max is limited to 8");
  const std::vector<std::vector<unsigned>> groups = {{2}, {3}, {4}, {2, 2}, {5}, {6}, {8}, {2, 4}};
  std::vector<std::pair<std::string, std::function<Report()>>> suites;
  for (const auto& orders : groups) {
    const AbelianGroup g(orders);
    if (g.size() > o.max) continue;
    const std::string n = g.to_string();
    suites.emplace_back("ja " + n, [g] { return verify_theorem_ja(g); });
    suites.emplace_back("pci " + n, [g] { return verify_pci(g); });
    suites.emplace_back("omega " + n, [g] { return verify_omega_kernel(g); });
    suites.emplace_back("artin " + n, [g] { return artin_suite(g); });
    if (g.size() <= 6) suites.emplace_back("inner " + n, [g] { return inner_suite(g, ""); });
  }
  for (unsigned p : {2u, 3u, 5u})
    if (p <= o.max) suites.emplace_back("cyclic_prime " + std::to_string(p), [p] { return verify_cyclic_prime(p); });
  if (o.max >= 4) {
    suites.emplace_back("inner Z4 chain (2)", [] { return inner_suite(AbelianGroup({4}), "(2)"); });
    for (const auto& [orders, sub] : std::vector<std::pair<std::string, std::string>>{{"4", "2"}, {"2,2", "(1,1)"}}) {
      Options co;
      co.orders = orders;
      co.sub = sub;
      suites.emplace_back("chain2 " + orders + " > " + sub, [co] { return chain2_verify(co); });
    }
    suites.emplace_back("realize", [] { return realize_suite(); });
  }
  const unsigned seed = o.seed;
  suites.emplace_back("q8", [seed] { return verify_q8_structure(seed); });

  std::vector<std::future<Report>> running;
  for (const auto& s : suites) running.push_back(std::async(std::launch::async, s.second));
  Report r;
  r.inputs = {{"max", o.max}, {"seed", o.seed}};
  json summary = json::object();
  for (std::size_t k = 0; k < suites.size(); ++k) {
    const Report sub = running[k].get();
    r.merge(suites[k].first, sub);
    summary[suites[k].first] = sub.ok();
    for (const auto& [name, value] : sub.findings.items()) r.findings[suites[k].first + "/" + name] = value;
  }
  r.result = {{"suites", summary}};
  return r;
}

void emit(const Report& r, const Options& o) {
  if (o.pretty) std::cout << r.to_json().dump(2) << "\n";
  else if (o.json_out) std::cout << r.to_json().dump() << "\n";
  else {
    if (!r.result.empty()) std::cout << r.result.dump(2) << "\n";
    std::cout << r.to_text();
    if (!r.to_text().empty() && r.to_text().back() != '\n') std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized character rings of glider representations"};
  app.require_subcommand(1);
  Options o;
  std::function<Report()> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Report()> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->add_flag("--json", o.json_out, "Compact JSON report");
    c->add_flag("--pretty", o.pretty, "Indented JSON report");
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto with_group = [&](CLI::App* c) { c->add_option("--orders", o.orders, "Cyclic factor orders, e.g. 2,4"); };

  CLI::App* grp = leaf(&app, "group", "Elements and subgroups", [&] { return group_info(o); });
  with_group(grp);
  grp->add_option("--sub", o.sub, "Subgroup generators");

  CLI::App* ring = app.add_subcommand("ring", "Character ring of P(G)");
  ring->require_subcommand(1);
  CLI::App* rmul = leaf(ring, "mul", "Product of two elements", [&] { return ring_mul(o); });
  with_group(rmul);
  rmul->add_option("--mode", o.mode, "mod-empty or mod-empty-g");
  rmul->add_option("--lhs", o.lhs)->required();
  rmul->add_option("--rhs", o.rhs)->required();
  with_group(leaf(ring, "pci", "Primitive central idempotents", [&] { return ring_pci(o); }));

  CLI::App* ch = app.add_subcommand("chain2", "Ring of the chain 1 < H < G");
  ch->require_subcommand(1);
  CLI::App* cmul = leaf(ch, "mul", "Product of two elements", [&] { return chain2_mul(o); });
  with_group(cmul);
  cmul->add_option("--sub", o.sub)->required();
  cmul->add_option("--lhs", o.lhs)->required();
  cmul->add_option("--rhs", o.rhs)->required();
  CLI::App* cver = leaf(ch, "verify", "Structure, lower ideal and T quotient", [&] { return chain2_verify(o); });
  with_group(cver);
  cver->add_option("--sub", o.sub)->required();
  CLI::App* cset = leaf(ch, "cset", "Index pairs of the inner-product pattern", [&] { return chain2_cset(o); });
  cset->add_option("--n", o.n);
  cset->add_option("--nm", o.nm);

  CLI::App* cf = app.add_subcommand("classfn", "Generalized class functions");
  cf->require_subcommand(1);
  CLI::App* inner = leaf(cf, "inner", "Inner product of two class functions", [&] { return classfn_inner(o); });
  with_group(inner);
  inner->add_option("--chain", o.chain, "Intermediate levels, e.g. (2)");
  inner->add_option("--lhs", o.lhs)->required();
  inner->add_option("--rhs", o.rhs)->required();
  CLI::App* real = leaf(cf, "realize", "Class function of a ring element", [&] { return classfn_realize(o); });
  with_group(real);
  real->add_option("--sub", o.sub, "Use the chain 1 < H < G");
  real->add_option("--lhs", o.lhs)->required();
  CLI::App* art = leaf(cf, "artin", "Artin certificate for |G| f", [&] { return classfn_artin(o); });
  with_group(art);
  art->add_option("--chain", o.chain);
  art->add_option("--lhs", o.lhs);

  CLI::App* q8 = app.add_subcommand("q8", "Character ring of Q8");
  q8->require_subcommand(1);
  CLI::App* qmul = leaf(q8, "mul", "Product of two elements", [&] { return q8_mul(o); });
  qmul->add_option("--lhs", o.lhs)->required();
  qmul->add_option("--rhs", o.rhs)->required();
  leaf(q8, "verify", "Structure suite", [&] { return verify_q8_structure(o.seed); })
      ->add_option("--seed", o.seed);
  leaf(q8, "exponent", "Smallest n with x^n = (V4,*)", [&] { return q8_exponent(o); })
      ->add_option("--lhs", o.lhs)
      ->required();

  CLI::App* ver = app.add_subcommand("verify", "Verification suites");
  ver->require_subcommand(1);
  with_group(leaf(ver, "ja", "Radical and quotient", [&] { return verify_theorem_ja(group_of(o)); }));
  with_group(leaf(ver, "pci", "Primitive central idempotents", [&] { return verify_pci(group_of(o)); }));
  with_group(leaf(ver, "omega", "Kernels of omega_H", [&] { return verify_omega_kernel(group_of(o)); }));
  leaf(ver, "cp", "Decomposition for a cyclic group of prime order", [&] { return verify_cyclic_prime(o.p); })
      ->add_option("--p", o.p);
  with_group(leaf(ver, "artin", "Artin identity on every chain", [&] { return artin_suite(group_of(o)); }));
  CLI::App* vin = leaf(ver, "inner", "Inner products of gliders", [&] { return inner_suite(group_of(o), o.chain); });
  with_group(vin);
  vin->add_option("--chain", o.chain);
  CLI::App* vch = leaf(ver, "chain", "Chain ring suites", [&] { return chain2_verify(o); });
  with_group(vch);
  vch->add_option("--sub", o.sub)->required();
  leaf(ver, "q8", "Q8 suite", [&] { return verify_q8_structure(o.seed); })->add_option("--seed", o.seed);
  leaf(ver, "realize", "Realization of the kernel element", [] { return realize_suite(); });
  CLI::App* all = leaf(ver, "all", "Every suite on groups up to --max", [&] { return verify_all(o); });
  all->add_option("--max", o.max, "Largest group order (at most 8)");
  all->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = action();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(r, o);
    return r.ok() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
