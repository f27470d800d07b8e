#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qtscreen/errors.hpp"
#include "qtscreen/io.hpp"
#include "qtscreen/verify.hpp"

using namespace qtscreen;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string cartan = "A2";
  std::string ring = "hat";
  std::string kind = "hatF";
  std::string node = "1";
  std::string flavor = "hat";
  std::string window = "-6:6";
  std::uint64_t seed = 1;
  int samples = 200;
  std::string format = "text";
  std::string suite;
  std::string expression;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--cartan", o.cartan, "Named type (A2, B2, sl2, A1xA1) or JSON {\"C\":...,\"r\":...}");
  cmd->add_option("--window", o.window, "Lattice window kmin:kmax");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

struct Session {
  CartanData cd;
  Window window;
  bool json = false;
};

Session open_session(const Options& o) {
  Session s{parse_cartan(o.cartan), parse_window(o.window), o.format == "json"};
  return s;
}

template <class Mono>
void require_window(const Window& w, const Mono& m, int& lo, int& hi) {
  auto scan = [&](const ExponentMap& e) {
    for (const auto& [p, x] : e) {
      lo = std::min(lo, p.k);
      hi = std::max(hi, p.k);
    }
  };
  if constexpr (std::is_same_v<Mono, HatMonomial>) {
    scan(m.v);
    scan(m.w);
  } else {
    scan(m.u);
  }
  (void)w;
}

template <class Element>
void check_window(const Window& w, const Element& x) {
  int lo = w.kmin;
  int hi = w.kmax;
  for (const auto& [m, c] : x) require_window(w, m, lo, hi);
  if (lo < w.kmin || hi > w.kmax)
    throw WindowError("input leaves the window; use --window " + std::to_string(lo) + ":" + std::to_string(hi), lo, hi);
}

int parse_node(const CartanData& cd, const std::string& s) {
  int i = 0;
  try {
    std::size_t used = 0;
    i = std::stoi(s, &used);
    if (used != s.size()) throw InputError("");
  } catch (const std::exception&) {
    throw InputError("--i expects a node number, got '" + s + "'");
  }
  if (i < 1 || i > cd.rank()) throw InputError("node " + s + " is outside 1.." + std::to_string(cd.rank()));
  return i;
}

void emit(const Session& s, const std::string& text, const Json& json) {
  if (s.json) {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

int cmd_eval(const Options& o) {
  const Session s = open_session(o);
  const Ring ring = parse_ring(o.ring);
  switch (ring) {
    case Ring::hat: {
      const auto x = parse_hat(s.cd, o.expression);
      check_window(s.window, x);
      emit(s, render(x), to_json(x));
      break;
    }
    case Ring::y: {
      const auto x = parse_y(s.cd, o.expression);
      check_window(s.window, x);
      emit(s, render(x), to_json(x));
      break;
    }
    case Ring::classical: {
      const auto x = parse_classical(s.cd, o.expression);
      check_window(s.window, x);
      emit(s, render(x), to_json(x));
      break;
    }
  }
  return 0;
}

int cmd_screen(const Options& o) {
  const Session s = open_session(o);
  const QuotientKind kind = parse_quotient_kind(o.kind);
  const int i = parse_node(s.cd, o.node);
  switch (kind) {
    case QuotientKind::hatF: {
      const auto x = parse_hat(s.cd, o.expression);
      check_window(s.window, x);
      const auto out = screen(s.cd, kind, i, x);
      emit(s, render(out), to_json(out));
      break;
    }
    case QuotientKind::yF:
    case QuotientKind::yFprime: {
      const auto x = parse_y(s.cd, o.expression);
      check_window(s.window, x);
      const auto out = screen(s.cd, kind, i, x);
      emit(s, render(out), to_json(out));
      break;
    }
    case QuotientKind::classicalF: {
      const auto x = parse_classical(s.cd, o.expression);
      check_window(s.window, x);
      const auto out = screen(s.cd, kind, i, x);
      emit(s, render(out), to_json(out));
      break;
    }
  }
  return 0;
}

int cmd_epoly(const Options& o) {
  const Session s = open_session(o);
  const Flavor flavor = parse_flavor(o.flavor);
  const int i = parse_node(s.cd, o.node);
  if (flavor == Flavor::hat) {
    const HatMonomial m = parse_hat_monomial(s.cd, o.expression);
    check_window(s.window, HatElement(m));
    const auto out = e_hat(s.cd, i, m);
    emit(s, render(out), to_json(out));
    return 0;
  }
  const YMonomial m = parse_y_monomial(s.cd, o.expression);
  check_window(s.window, YElement(m));
  if (flavor == Flavor::classical) {
    const auto out = e_classical(s.cd, i, m);
    emit(s, render(out), to_json(out));
  } else {
    const auto out = flavor == Flavor::y ? e0(s.cd, i, m) : e0_prime(s.cd, i, m);
    emit(s, render(out), to_json(out));
  }
  return 0;
}

QuotientKind kind_for(Flavor f) {
  switch (f) {
    case Flavor::hat:
      return QuotientKind::hatF;
    case Flavor::y:
      return QuotientKind::yF;
    case Flavor::yprime:
      return QuotientKind::yFprime;
    case Flavor::classical:
      return QuotientKind::classicalF;
  }
  return QuotientKind::hatF;
}

// Decomposition and normal form for one node; both routes are reported.
template <class Element, class Decompose>
Json kernel_node(const CartanData& cd, Flavor flavor, int i, const Element& x, const Decompose& decompose_at, std::string& text,
                 bool& agree) {
  const auto dec = decompose_at(i);
  const auto nf_out = screen(cd, kind_for(flavor), i, x);
  const bool member = dec.remainder.is_zero();
  const bool killed = nf_out.is_zero();
  agree = agree && member == killed;
  text += "node " + std::to_string(i) + ": member: " + (member ? "true" : "false") + "\n";
  std::string dom;
  for (const auto& [m, c] : dec.dominant) {
    Element one;
    one.add_term(m, c);
    dom += (dom.empty() ? "" : ", ") + render(one);
  }
  text += "  dominant_part: {" + dom + "}\n";
  text += "  remainder: " + render(dec.remainder) + "\n";
  text += "  screen_nf: " + render(nf_out);
  if (member != killed) text += "\n  routes disagree";
  Json j = decomposition_to_json(dec);
  return {{"node", i},
          {"member", member},
          {"dominant_part", j["dominant"]},
          {"remainder", j["remainder"]},
          {"screen_nf", to_json(nf_out)},
          {"routes_agree", member == killed}};
}

template <class Element, class DecomposeFactory>
int kernel_report(const Session& s, const Options& o, Flavor flavor, const Element& x, const DecomposeFactory& factory,
                  const std::function<bool()>& intersection) {
  std::vector<int> nodes;
  const bool all = o.node == "all";
  if (all) {
    for (int i = 1; i <= s.cd.rank(); ++i) nodes.push_back(i);
  } else {
    nodes.push_back(parse_node(s.cd, o.node));
  }
  bool agree = true;
  bool member = true;
  Json per_node = Json::array();
  std::string text;
  for (int i : nodes) {
    std::string block;
    Json j = kernel_node(s.cd, flavor, i, x, factory, block, agree);
    member = member && j["member"].template get<bool>();
    per_node.push_back(std::move(j));
    text += (text.empty() ? "" : "\n") + block;
  }
  if (all && intersection) {
    const bool fast = intersection();
    agree = agree && fast == member;
    member = member && fast;
  }
  Json out = {{"input", render(x)}, {"flavor", to_string(flavor)}, {"member", member}, {"routes_agree", agree}};
  if (all) {
    out["nodes"] = per_node;
  } else {
    for (const auto& key : {"dominant_part", "remainder", "screen_nf"}) out[key] = per_node[0][key];
  }
  if (!agree) out["counterexample"] = {{"input", render(x)}, {"nodes", per_node}};
  const std::string head = std::string("member: ") + (member ? "true" : "false");
  emit(s, head + "\n" + text, out);
  if (!agree) {
    std::cerr << "decomposition and normal form disagree on " << render(x) << "\n";
    return kExitFailure;
  }
  return 0;
}

int cmd_kernel(const Options& o) {
  const Session s = open_session(o);
  const Flavor flavor = parse_flavor(o.flavor);
  const CartanData& cd = s.cd;
  switch (flavor) {
    case Flavor::hat: {
      const auto x = parse_hat(cd, o.expression);
      check_window(s.window, x);
      return kernel_report(s, o, flavor, x, [&](int i) { return decompose(cd, i, x); }, {});
    }
    case Flavor::y:
    case Flavor::yprime: {
      const auto x = parse_y(cd, o.expression);
      check_window(s.window, x);
      return kernel_report(
          s, o, flavor, x, [&](int i) { return decompose(cd, i, x, flavor); }, [&] { return in_kt(cd, x, flavor); });
    }
    case Flavor::classical: {
      const auto x = parse_classical(cd, o.expression);
      check_window(s.window, x);
      return kernel_report(s, o, flavor, x, [&](int i) { return decompose(cd, i, x); }, {});
    }
  }
  return 0;
}

std::string report_text(const SuiteReport& r) {
  std::string out = r.suite + ": " + (r.ok() ? "PASS" : "FAIL") + " (" + std::to_string(r.passed) + " passed, " +
                    std::to_string(r.failed) + " failed)\n";
  for (const auto& p : r.properties)
    out += "  " + std::string(p.failed == 0 ? "ok   " : "FAIL ") + p.property + " [" + std::to_string(p.passed) + "/" +
           std::to_string(p.passed + p.failed) + "]\n";
  if (!r.counterexample.is_null()) out += "counterexample: " + r.counterexample.dump() + "\n";
  if (!r.details.is_null()) out += "details: " + r.details.dump(2) + "\n";
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

int cmd_verify(const Options& o) {
  RunConfig config;
  config.cartan = o.cartan;
  config.window = parse_window(o.window);
  config.seed = o.seed;
  config.samples = o.samples;
  const SuiteReport r = run_suite(o.suite, config);
  const Session s{parse_cartan(o.cartan), config.window, o.format == "json"};
  emit(s, report_text(r), r.to_json());
  return r.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Screening operators for deformed q,t-character rings"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Parse and canonicalize an element");
  add_common(eval, o);
  eval->add_option("--ring", o.ring, "hat | y | classical");
  eval->add_option("expression", o.expression)->required();

  auto* scr = app.add_subcommand("screen", "Apply a screening operator and reduce modulo the submodule");
  add_common(scr, o);
  scr->add_option("--kind", o.kind, "hatF | yF | yFprime | classicalF");
  scr->add_option("--i", o.node, "Node");
  scr->add_option("expression", o.expression)->required();

  auto* epoly = app.add_subcommand("epoly", "Dominant expansion of a monomial");
  add_common(epoly, o);
  epoly->add_option("--flavor", o.flavor, "hat | y | yprime | classical");
  epoly->add_option("--i", o.node, "Node");
  epoly->add_option("monomial", o.expression)->required();

  auto* kernel = app.add_subcommand("kernel", "Kernel membership by decomposition and by normal form");
  add_common(kernel, o);
  kernel->add_option("--flavor", o.flavor, "hat | y | yprime | classical");
  kernel->add_option("--i", o.node, "Node or 'all'");
  kernel->add_option("expression", o.expression)->required();

  auto* verify = app.add_subcommand("verify", "Run a randomized property suite");
  add_common(verify, o);
  verify->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--samples", o.samples, "Samples per property")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*scr) return cmd_screen(o);
    if (*epoly) return cmd_epoly(o);
    if (*kernel) return cmd_kernel(o);
    if (*verify) return cmd_verify(o);
  } catch (const WindowError& e) {
    std::cerr << "error: " << e.what() << " (needs " << e.required_kmin() << ":" << e.required_kmax() << ")\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInput;
}
