// Command-line workbench over the zsl library: scans, covers, atoms,
// integer-side verification, trios, pinned constants, exponential sums,
// example constructions and certificate tooling.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "zsl/analytic.hpp"
#include "zsl/examples.hpp"
#include "zsl/isoperimetry.hpp"
#include "zsl/scan.hpp"

namespace {

using namespace zsl;
using nlohmann::json;

constexpr i64 kUnset = std::numeric_limits<i64>::min();

std::vector<i64> parse_list(const std::string& s) {
  std::vector<i64> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoll(tok));
  }
  if (out.empty()) throw usage_error("empty set literal: '" + s + "'");
  return out;
}

CyclicSet parse_cyclic(int n, const std::string& s) {
  auto v = parse_list(s);
  for (i64 x : v)
    if (x < 0 || x >= n) throw usage_error("element out of range for modulus");
  return CyclicSet(n, v);
}

json cover_json(const ApCover& c) { return json{{"start", c.start}, {"d", c.d}, {"len", c.len}}; }

json verdict_json(const Verdict3k4Z& v) {
  return json{{"applicable", v.applicable}, {"swapped", v.swapped}, {"r", v.r},
              {"delta", v.delta},           {"g", v.g},
              {"pa", cover_json(v.pa)},     {"pb", cover_json(v.pb)},
              {"pab", cover_json(v.pab)},   {"ok_a", v.ok_a},
              {"ok_b", v.ok_b},             {"ok_ab", v.ok_ab},
              {"ok", v.ok}};
}

json example_json(const ExampleResult& e) {
  json facts = json::array();
  for (const auto& f : e.facts)
    facts.push_back({{"name", f.name}, {"expected", f.expected}, {"actual", f.actual}, {"ok", f.ok}});
  json j{{"id", e.id}, {"modulus", e.modulus}, {"facts", facts}, {"all_ok", e.all_ok}};
  if (e.modulus == 0) {
    j["A"] = e.zA.elements();
    j["B"] = e.zB.elements();
  } else {
    j["A"] = e.cA.elements();
    j["B"] = e.cB.elements();
  }
  return j;
}

int cmd_scan(const std::string& mode, const std::string& primes_csv, int max_prime, int jobs,
             const std::string& out_path, bool emit_all, bool strict, i64 samples, u64 seed) {
  ScanConfig cfg;
  cfg.mode = scan_mode_from_name(mode);
  if (!primes_csv.empty())
    for (i64 p : parse_list(primes_csv)) cfg.primes.push_back(static_cast<int>(p));
  cfg.max_prime = max_prime;
  cfg.jobs = jobs;
  cfg.output_path = out_path;
  cfg.emit_all = emit_all;
  cfg.sample_count = samples;
  cfg.seed = seed;
  ScanReport rep = run_scan(cfg);
  for (const auto& [p, c] : rep.per_prime) {
    if (cfg.mode == ScanMode::feasibility) {
      std::cout << "p=" << p << " thm2=" << c.feasible[0] << " thm15=" << c.feasible[1]
                << " thm19=" << c.feasible[2] << " thm3=" << c.feasible[3] << "\n";
    } else {
      std::cout << "p=" << p << " orbits=" << c.orbits << " applicable=" << c.applicable
                << " holds=" << c.holds << " violations=" << c.violations << "\n";
    }
  }
  if (cfg.mode == ScanMode::feasibility) {
    std::cout << "total thm2=" << rep.total.feasible[0] << " thm15=" << rep.total.feasible[1]
              << " thm19=" << rep.total.feasible[2] << " thm3=" << rep.total.feasible[3] << "\n";
  } else {
    std::cout << "total orbits=" << rep.total.orbits << " applicable=" << rep.total.applicable
              << " holds=" << rep.total.holds << " violations=" << rep.total.violations << "\n";
  }
  std::ostringstream hash;
  hash << std::hex << std::setw(16) << std::setfill('0') << rep.content_hash;
  std::cout << "records=" << std::count(rep.jsonl.begin(), rep.jsonl.end(), '\n')
            << " content_hash=" << hash.str() << " wall_ms=" << rep.wall_ms << "\n";
  if (strict) {
    std::istringstream in(rep.jsonl);
    VerifyFileResult vr = verify_certificate_stream(in);
    for (const auto& d : vr.diagnostics) std::cerr << d << "\n";
    if (!vr.ok) {
      std::cerr << "strict: emitted records failed re-verification\n";
      return 1;
    }
  }
  return 0;
}

int cmd_example(const std::string& id, i64 r, i64 m, i64 n, i64 M, i64 p, i64 asize, i64 b1, i64 b2) {
  auto pick = [](i64 v, i64 dflt) { return v == kUnset ? dflt : v; };
  ExampleResult res;
  if (id == "1")
    res = example1(pick(r, 0), pick(m, 4), pick(n, 3));
  else if (id == "2")
    res = example2(pick(r, 0), pick(M, 5));
  else if (id == "3")
    res = example3(pick(r, 0), pick(M, 6), pick(asize, 3));
  else if (id == "4")
    res = example4(pick(r, 0), pick(M, 4), pick(b1, 2), pick(b2, 2), pick(p, 11));
  else if (id == "5")
    res = example5(pick(r, 0), pick(M, 3), pick(p, 13));
  else if (id == "6")
    res = example6(pick(r, 2));
  else if (id == "prop13")
    res = prop13_example(pick(r, 1));
  else
    throw usage_error("example id must be 1..6 or prop13");
  std::cout << example_json(res).dump(2) << "\n";
  return res.all_ok ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"finite cyclic sumset workbench"};
  app.require_subcommand(1);

  // scan
  auto* sc = app.add_subcommand("scan", "exhaustive or sampled orbit scan");
  std::string sc_mode = "conjecture", sc_primes, sc_out;
  int sc_max_prime = 0, sc_jobs = 0;
  bool sc_emit_all = false, sc_strict = false;
  i64 sc_samples = 0;
  u64 sc_seed = 1;
  sc->add_option("--mode", sc_mode, "conjecture|prop12|mario1|smallr|feasibility");
  sc->add_option("--primes", sc_primes, "comma-separated prime moduli");
  sc->add_option("--max-prime", sc_max_prime, "scan all primes up to this bound");
  sc->add_option("--jobs", sc_jobs, "worker count (default ZSL_JOBS or 1)");
  sc->add_option("--out", sc_out, "write JSONL records to this path");
  sc->add_flag("--emit-all", sc_emit_all, "emit every applicable instance, not just violations");
  sc->add_flag("--strict", sc_strict, "re-verify emitted records; inconsistency exits 1");
  sc->add_option("--samples", sc_samples, "sampled mode: random pairs per prime");
  sc->add_option("--seed", sc_seed, "sampled mode seed");

  // cover
  auto* cv = app.add_subcommand("cover", "progression covers of a cyclic set");
  int cv_n = 0;
  std::string cv_set;
  i64 cv_d = kUnset;
  cv->add_option("--modulus", cv_n, "group order")->required();
  cv->add_option("--set", cv_set, "comma-separated residues")->required();
  cv->add_option("--d", cv_d, "fixed difference; default: minimize over d");

  // atoms
  auto* at = app.add_subcommand("atoms", "isoperimetric atoms and fragments");
  int at_n = 0, at_k = 1;
  std::string at_set;
  bool at_full = false;
  at->add_option("--modulus", at_n, "group order")->required();
  at->add_option("--set", at_set, "comma-separated residues")->required();
  at->add_option("--k", at_k, "connectivity order k")->required();
  at->add_flag("--full", at_full, "include fragment and atom element lists");

  // verify-z
  auto* vz = app.add_subcommand("verify-z", "integer-side 3k-4 bound check");
  std::string vz_a, vz_b;
  vz->add_option("--a", vz_a, "comma-separated integers")->required();
  vz->add_option("--b", vz_b, "comma-separated integers")->required();

  // trio
  auto* tr = app.add_subcommand("trio", "complement trio and saturation");
  int tr_n = 0;
  std::string tr_a, tr_b, tr_order = "CBA";
  bool tr_saturate = false;
  i64 tr_z = 0;
  tr->add_option("--modulus", tr_n, "group order")->required();
  tr->add_option("--a", tr_a, "comma-separated residues")->required();
  tr->add_option("--b", tr_b, "comma-separated residues")->required();
  tr->add_flag("--saturate", tr_saturate, "saturate the trio avoiding z");
  tr->add_option("--z", tr_z, "excluded element for saturation (default 0)");
  tr->add_option("--order", tr_order, "saturation order, permutation of ABC");

  // constants
  auto* ct = app.add_subcommand("constants", "pinned constants and numeric lemmas");
  std::string ct_which;
  double ct_alpha = 0, ct_beta = 0, ct_K = 0, ct_s = 0;
  i64 ct_a = kUnset, ct_b = kUnset, ct_l = kUnset;
  int ct_jobs = 0;
  ct->add_option("--which", ct_which, "c1|cbeta|lev|gammas|lemmas")->required();
  ct->add_option("--alpha", ct_alpha, "alpha in (0, 0.212]");
  ct->add_option("--beta", ct_beta, "beta in [0.731, 1]");
  ct->add_option("--K", ct_K, "doubling constant, 2 < K < 3");
  ct->add_option("--s", ct_s, "fold count, s >= K^2");
  ct->add_option("--a", ct_a, "signature |A|");
  ct->add_option("--b", ct_b, "signature |B|");
  ct->add_option("--l", ct_l, "signature |A+B|");
  ct->add_option("--jobs", ct_jobs, "worker count for lemma sweeps");

  // fourier
  auto* fo = app.add_subcommand("fourier", "exponential sum and circle bound");
  int fo_p = 0;
  i64 fo_x = 1;
  std::string fo_set;
  fo->add_option("--p", fo_p, "prime modulus")->required();
  fo->add_option("--set", fo_set, "comma-separated residues")->required();
  fo->add_option("--x", fo_x, "frequency, nonzero mod p")->required();

  // example
  auto* ex = app.add_subcommand("example", "instantiate a named construction");
  std::string ex_id;
  i64 ex_r = kUnset, ex_m = kUnset, ex_n = kUnset, ex_M = kUnset, ex_p = kUnset,
      ex_asize = kUnset, ex_b1 = kUnset, ex_b2 = kUnset;
  ex->add_option("--id", ex_id, "1..6 or prop13")->required();
  ex->add_option("--r", ex_r, "excess parameter");
  ex->add_option("--m", ex_m, "example 1 top of A");
  ex->add_option("--n", ex_n, "example 1 top of B");
  ex->add_option("--M", ex_M, "gap position");
  ex->add_option("--p", ex_p, "ambient prime");
  ex->add_option("--asize", ex_asize, "example 3 size of A");
  ex->add_option("--b1", ex_b1, "example 4 first block length");
  ex->add_option("--b2", ex_b2, "example 4 second block length");

  // verify-certs
  auto* vc = app.add_subcommand("verify-certs", "re-verify scan record files");
  std::vector<std::string> vc_paths;
  vc->add_option("paths", vc_paths, "JSONL files")->required();

  // summarize
  auto* sm = app.add_subcommand("summarize", "CSV summary of scan record files");
  std::vector<std::string> sm_paths;
  sm->add_option("paths", sm_paths, "JSONL files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (sc->parsed())
    return cmd_scan(sc_mode, sc_primes, sc_max_prime, sc_jobs, sc_out, sc_emit_all, sc_strict,
                    sc_samples, sc_seed);

  if (cv->parsed()) {
    CyclicSet a = parse_cyclic(cv_n, cv_set);
    json j{{"n", cv_n}, {"set", a.elements()}};
    if (cv_d == kUnset) {
      auto c = min_cover(a);
      j["cover"] = cover_json(c);
      j["ell"] = c.len;
    } else {
      auto l = ell(a, cv_d);
      j["d"] = cv_d;
      if (l) {
        j["ell"] = *l;
        j["cover"] = cover_json(*ell_cover(a, cv_d));
      } else {
        j["ell"] = nullptr;
      }
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (at->parsed()) {
    CyclicSet b = parse_cyclic(at_n, at_set);
    auto rep = kappa_atoms(b, at_k);
    if (!rep) {
      std::cout << json{{"n", at_n}, {"k", at_k}, {"separable", false}}.dump(2) << "\n";
      return 0;
    }
    json j{{"n", rep->n},
           {"k", rep->k},
           {"separable", true},
           {"kappa", rep->kappa},
           {"r", rep->r},
           {"alpha", rep->alpha},
           {"fragment_count", rep->fragment_count},
           {"atom_count", rep->atom_count},
           {"truncated_fragments", rep->fragments_truncated},
           {"truncated_atoms", rep->atoms_truncated}};
    if (at_full) {
      json fr = json::array(), atj = json::array();
      for (const auto& f : rep->fragments) fr.push_back(f.elements());
      for (const auto& x : rep->atoms) atj.push_back(x.elements());
      j["fragments"] = fr;
      j["atoms"] = atj;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (vz->parsed()) {
    Verdict3k4Z v = verify_3k4_integers(IntSet(parse_list(vz_a)), IntSet(parse_list(vz_b)));
    std::cout << verdict_json(v).dump(2) << "\n";
    return 0;
  }

  if (tr->parsed()) {
    CyclicSet a = parse_cyclic(tr_n, tr_a), b = parse_cyclic(tr_n, tr_b);
    Trio t = complement_trio(a, b);
    json j{{"p", tr_n},          {"A", t.get('A').elements()}, {"B", t.get('B').elements()},
           {"C", t.get('C').elements()}, {"r", t.r()},
           {"saturated",
            {{"A", is_saturated(t, 'A')}, {"B", is_saturated(t, 'B')}, {"C", is_saturated(t, 'C')}}}};
    if (tr_saturate) {
      Trio s = saturate(t, tr_z, tr_order);
      j["saturated_trio"] = {{"A", s.get('A').elements()},
                             {"B", s.get('B').elements()},
                             {"C", s.get('C').elements()},
                             {"r", s.r()},
                             {"z", tr_z},
                             {"order", tr_order}};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (ct->parsed()) {
    json j{{"which", ct_which}};
    if (ct_which == "c1") {
      j["alpha"] = ct_alpha;
      j["value"] = const_c1(ct_alpha);
    } else if (ct_which == "cbeta") {
      j["alpha"] = ct_alpha;
      j["beta"] = ct_beta;
      j["value"] = const_cbeta(ct_alpha, ct_beta);
    } else if (ct_which == "lev") {
      j["K"] = ct_K;
      j["s"] = ct_s;
      j["value"] = const_levshkredov(ct_K, ct_s);
    } else if (ct_which == "gammas") {
      if (ct_a == kUnset || ct_b == kUnset || ct_l == kUnset)
        throw usage_error("gammas needs --a --b --l");
      auto g = gamma_thresholds(ct_a, ct_b, ct_l);
      j["gamma_a"] = static_cast<double>(g.gamma_a);
      j["gamma_b"] = static_cast<double>(g.gamma_b);
      j["gamma_a_exact"] = g.gamma_a.str();
      j["gamma_b_exact"] = g.gamma_b.str();
    } else if (ct_which == "lemmas") {
      NumericLemmaReport r = numeric_lemma_suite(ct_jobs);
      j["lem16_ok"] = r.lem16_ok;
      j["lem16_margin_r16"] = r.lem16_margin_r16;
      j["rphyp_ok"] = r.rphyp_ok;
      j["rphyp_margin_r6"] = r.rphyp_margin_r6;
      j["stillness_exact_ok"] = r.stillness_exact_ok;
      j["stillness_grid_ok"] = r.stillness_grid_ok;
      j["stillness_interval_ok"] = r.stillness_interval_ok;
      j["stillness_margins"] = r.stillness_margins;
      j["xr_283_92_ok"] = r.xr_283_92_ok;
      j["xr_283_92_tight_r89"] = r.xr_283_92_tight_r89;
      j["xr_3143_ok"] = r.xr_3143_ok;
      j["xr_31_ok"] = r.xr_31_ok;
      j["xr_30885_ok"] = r.xr_30885_ok;
      j["all_ok"] = r.all_ok;
      std::cout << j.dump(2) << "\n";
      return r.all_ok ? 0 : 1;
    } else {
      throw usage_error("constants --which must be c1|cbeta|lev|gammas|lemmas");
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (fo->parsed()) {
    CyclicSet a = parse_cyclic(fo_p, fo_set);
    CircleBound cb = circle_bound_slack(a, fo_x);
    json j{{"p", fo_p},
           {"x", fo_x},
           {"abs_sum", cb.abs_sum},
           {"half_arc", cb.half_arc},
           {"bound", cb.bound},
           {"slack", cb.slack},
           {"bound_negative", cb.bound_negative}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (ex->parsed())
    return cmd_example(ex_id, ex_r, ex_m, ex_n, ex_M, ex_p, ex_asize, ex_b1, ex_b2);

  if (vc->parsed()) {
    bool all_ok = true;
    for (const auto& path : vc_paths) {
      VerifyFileResult r = verify_certificate_file(path);
      std::cout << path << ": " << (r.ok ? "ok" : "FAILED") << " records=" << r.records << "\n";
      for (const auto& d : r.diagnostics) std::cout << "  " << d << "\n";
      all_ok = all_ok && r.ok;
    }
    return all_ok ? 0 : 1;
  }

  if (sm->parsed()) {
    SummarizeResult r = summarize(sm_paths);
    for (const auto& w : r.warnings) std::cerr << w << "\n";
    std::cout << r.csv;
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const zsl::capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const zsl::usage_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const zsl::domain_error& e) {
    std::cerr << "domain: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
