#include "modgroup/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <sstream>

#include "modgroup/abelianize.hpp"
#include "modgroup/autf2.hpp"
#include "modgroup/cosets.hpp"
#include "modgroup/fingroups.hpp"
#include "modgroup/properties.hpp"
#include "modgroup/rewriting.hpp"

namespace modgroup::cli {

using Json = nlohmann::ordered_json;

Command parse_command(int argc, const char* const* argv) {
  Command cmd;
  CLI::App app{"Congruence subgroups of PSL2(Z) and of Aut+(F2)", "modgroup"};
  app.add_option("subcommand", cmd.subcommand,
                 "index | table | decompose | rank | stabilizer | abelianize | verify | satoh")
      ->required();
  app.add_option("claim", cmd.claim, "claim to verify (verify only); 'all' runs every claim");
  app.add_option("--m", cmd.m, "level m");
  app.add_option("--n", cmd.n, "level n, a divisor of m (default 1)");
  app.add_option("--group", cmd.group, "finite group spec, e.g. cyclic:2, abelian:4,2, dihedral:4, perm:(1 2),(1 2 3)");
  app.add_option("--method", cmd.method, "hall | full | image");
  app.add_flag("--json", cmd.json, "machine-readable output");
  app.add_option("--ceiling", cmd.ceiling, "coset and orbit size ceiling");
  app.add_option("--seed", cmd.seed, "seed for randomized checks");
  app.add_option("--max-m", cmd.max_m, "largest level in verify sweeps");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    Command help;
    help.subcommand = "help";
    help.claim = app.help();
    return help;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return cmd;
}

namespace {

struct Level {
  long m, n;
};

Level level_of(const Command& cmd) {
  if (!cmd.m) throw UsageError(cmd.subcommand + ": --m is required");
  Level l{*cmd.m, cmd.n.value_or(1)};
  check_level(l.m, l.n);
  return l;
}

std::string level_name(Level l) { return "Gamma(" + std::to_string(l.m) + "," + std::to_string(l.n) + ")"; }

Json invariants_json(const AbelianInvariants& inv) {
  Json torsion = Json::array();
  for (const Integer& d : inv.torsion) torsion.push_back(d.get_si());
  return Json{{"torsion", torsion}, {"free_rank", inv.free_rank}};
}

FiniteGroup group_of(const Command& cmd) {
  try {
    return FiniteGroup::parse(*cmd.group);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Epimorphism epi_of(const FiniteGroup& g) {
  try {
    return default_epimorphism(g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

EnumerationOptions options_of(const Command& cmd) { return EnumerationOptions{cmd.ceiling}; }

// The subgroup named on the command line: an image of Gamma+(G, pi) for
// --group, otherwise PG(m,n).
struct Subject {
  std::string label;
  CosetTable table;
  std::optional<Level> level;
};

Subject subject_of(const Command& cmd) {
  if (cmd.group && cmd.m) throw UsageError(cmd.subcommand + ": give either --group or --m/--n, not both");
  if (cmd.group) {
    FiniteGroup g = group_of(cmd);
    return {"image of Gamma+(" + g.name() + ")", stabilizer_image_table(g, epi_of(g), options_of(cmd)), std::nullopt};
  }
  Level l = level_of(cmd);
  return {"P" + level_name(l), congruence_table(l.m, l.n), l};
}

std::string emit(const Command& cmd, const Json& j, const std::string& text) {
  return cmd.json ? j.dump(2) + "\n" : text;
}

// ---------------------------------------------------------------------------

Report run_index(const Command& cmd) {
  Level l = level_of(cmd);
  Integer sl = index_formula(l.m, l.n), psl = psl_index_formula(l.m, l.n);
  CosetTable t = congruence_table(l.m, l.n);
  bool minus = contains_minus_identity(l.m, l.n);
  bool ok = t.size() == psl && (minus ? sl == psl : sl == 2 * psl);
  std::ostringstream out;
  out << level_name(l) << "\n"
      << "SL index: " << sl.get_str() << "\n"
      << "PSL index: " << psl.get_str() << "\n"
      << "coset table: " << t.size() << " cosets\n"
      << "-I in group: " << (minus ? "yes" : "no") << "\n";
  if (!ok) out << "MISMATCH between coset table and index formula\n";
  Json j{{"m", l.m},           {"n", l.n},          {"sl_index", sl.get_si()}, {"psl_index", psl.get_si()},
         {"cosets", t.size()}, {"minus_identity", minus}, {"consistent", ok}};
  return {ok ? kOk : kMismatch, emit(cmd, j, out.str()), ""};
}

Report run_table(const Command& cmd) {
  Subject s = subject_of(cmd);
  Json j{{"subgroup", s.label}, {"cosets", s.table.size()}, {"s", s.table.s}, {"u", s.table.u}};
  return {kOk, emit(cmd, j, serialize(s.table)), ""};
}

Report run_decompose(const Command& cmd) {
  Subject s = subject_of(cmd);
  KuroshDecomposition k = kurosh_decompose(s.table);
  std::ostringstream out;
  out << s.label << "\n"
      << "index: " << k.index << "\n"
      << "free rank: " << k.free_rank << "\n"
      << "Z/2 factors: " << k.f2 << "\n"
      << "Z/3 factors: " << k.f3 << "\n"
      << "decomposition: " << k.to_string() << "\n";
  Json witnesses = Json::array();
  for (const FiniteFactorWitness& w : k.witnesses) {
    out << "Z/" << w.order << " factor conjugated by: " << w.conjugator.to_string() << "\n";
    witnesses.push_back(Json{{"order", w.order}, {"conjugator", w.conjugator.to_string()}});
  }
  Json j{{"subgroup", s.label}, {"index", k.index},       {"free_rank", k.free_rank},
         {"f2", k.f2},          {"f3", k.f3},             {"decomposition", k.to_string()},
         {"witnesses", witnesses}};
  if (s.level && contains_minus_identity(s.level->m, s.level->n)) {
    SlStructure st = sl_structure(s.level->m, s.level->n);
    out << "SL2(Z) level: " << st.tag << "; abelianization " << st.abelianization.to_string() << "\n";
    j["sl_structure"] = Json{{"tag", st.tag}, {"abelianization", invariants_json(st.abelianization)}};
  }
  return {kOk, emit(cmd, j, out.str()), ""};
}

Report run_rank(const Command& cmd) {
  Subject s = subject_of(cmd);
  KuroshDecomposition k = kurosh_decompose(s.table);
  bool free = k.f2 == 0 && k.f3 == 0;
  std::string text = s.label + ": " + (free ? "free of rank " + std::to_string(k.free_rank) : "not free, " + k.to_string()) + "\n";
  Json j{{"subgroup", s.label}, {"free", free}, {"rank", free ? Json(k.free_rank) : Json(nullptr)},
         {"decomposition", k.to_string()}};
  return {kOk, emit(cmd, j, text), ""};
}

Report run_stabilizer(const Command& cmd) {
  if (!cmd.group) throw UsageError("stabilizer: --group is required");
  FiniteGroup g = group_of(cmd);
  Epimorphism e = epi_of(g);
  OrbitStabilizer os = orbit_stabilizer(g, e);
  if (static_cast<std::size_t>(os.signed_orbit_size) > cmd.ceiling) throw CeilingExceeded(cmd.ceiling);
  CosetTable image = stabilizer_image_table(g, e, options_of(cmd));
  std::size_t epis = epi_set(g).size();
  std::ostringstream out;
  out << "group: " << g.name() << " (order " << g.order() << ")\n"
      << "epimorphism: x -> " << e.gx << ", y -> " << e.gy << "\n"
      << "epimorphisms F2 -> G: " << epis << "\n"
      << "[Aut(F2) : Gamma(G,pi)]: " << os.epi_orbit_size << "\n"
      << "[Aut+(F2) : Gamma+(G,pi)]: " << os.aut_plus_index << "\n"
      << "Gamma(G,pi) inside Aut+(F2): " << (os.gamma_inside_aut_plus() ? "yes" : "no") << "\n"
      << "Schreier generators: " << os.stabilizer_words.size() << "\n"
      << "image in PSL2(Z): index " << image.size() << "\n";
  Json j{{"group", g.name()},
         {"order", g.order()},
         {"epimorphism", {e.gx, e.gy}},
         {"epimorphisms", epis},
         {"aut_index", os.epi_orbit_size},
         {"aut_plus_index", os.aut_plus_index},
         {"inside_aut_plus", os.gamma_inside_aut_plus()},
         {"schreier_generators", os.stabilizer_words.size()},
         {"image_index", image.size()}};
  return {kOk, emit(cmd, j, out.str()), ""};
}

Report run_abelianize(const Command& cmd) {
  if (cmd.group && cmd.m) throw UsageError("abelianize: give either --group or --m/--n, not both");
  if (!cmd.group && !cmd.m) throw UsageError("abelianize: --group or --m is required");
  std::string method = cmd.method.empty() ? (cmd.group ? "full" : "hall") : cmd.method;
  AbelianInvariants inv;
  if (method == "hall") {
    if (!cmd.m) throw UsageError("abelianize: --method hall needs --m/--n");
    Level l = level_of(cmd);
    inv = hall_abelianization(l.m, l.n);
  } else if (method == "full" || method == "image") {
    std::optional<FiniteGroup> g;
    if (cmd.group) {
      g = group_of(cmd);
    } else {
      Level l = level_of(cmd);
      g = FiniteGroup::abelian(l.m, l.n);
    }
    Epimorphism e = epi_of(*g);
    inv = method == "full" ? full_abelianization(*g, e, options_of(cmd))
                           : theorem2_verdict(*g, e, options_of(cmd)).image_abelianization;
  } else {
    throw UsageError("abelianize: unknown method '" + method + "'");
  }
  Json j = invariants_json(inv);
  j["method"] = method;
  j["text"] = inv.to_string();
  return {kOk, emit(cmd, j, inv.to_string() + "\n"), ""};
}

Report run_satoh(const Command& cmd) {
  if (!cmd.m) throw UsageError("satoh: --m is required");
  SatohReport r = satoh_report(*cmd.m);
  std::ostringstream out;
  out << "m = " << r.m << "\n"
      << "hall route: " << r.hall.to_string() << "\n"
      << "expected: " << r.expected.to_string() << "\n";
  if (r.prime_rank) out << "prime formula free rank: " << *r.prime_rank << "\n";
  out << (r.ok ? "PASS" : "FAIL") << "\n";
  Json j{{"m", r.m}, {"hall", invariants_json(r.hall)}, {"expected", invariants_json(r.expected)},
         {"prime_rank", r.prime_rank ? Json(*r.prime_rank) : Json(nullptr)}, {"pass", r.ok}};
  return {r.ok ? kOk : kMismatch, emit(cmd, j, out.str()), ""};
}

// ---------------------------------------------------------------------------
// verify

struct Outcome {
  bool pass = false;
  std::string detail;
  bool ceiling = false;
};

struct Check {
  std::string claim;
  std::string label;
  std::function<Outcome()> run;
};

Outcome expect(const AbelianInvariants& got, const AbelianInvariants& want) {
  if (got == want) return {true, got.to_string()};
  return {false, "got " + got.to_string() + ", expected " + want.to_string()};
}

Outcome expect_eq(long got, long want, const std::string& what) {
  std::string s = what + " " + std::to_string(got);
  if (got == want) return {true, s};
  return {false, s + ", expected " + std::to_string(want)};
}

Outcome no_failures(const std::vector<std::string>& failures, const std::string& ok_text) {
  if (failures.empty()) return {true, ok_text};
  std::string s = std::to_string(failures.size()) + " failures; first: " + failures.front();
  return {false, s};
}

std::string ml(long m, long n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

long rank_formula(long m, long n) { return Integer(1 + index_formula(m, n) / 12).get_si(); }

void add_index(std::vector<Check>& out, long max_m) {
  for (long m = 1; m <= max_m; ++m)
    for (long n = 1; n <= m; ++n) {
      if (m % n) continue;
      out.push_back({"index", ml(m, n), [m, n] {
                       long cosets = congruence_table(m, n).size();
                       long sl = index_formula(m, n).get_si();
                       long adjusted = contains_minus_identity(m, n) ? cosets : 2 * cosets;
                       Outcome o = expect_eq(adjusted, sl, "SL index from table");
                       o.pass = o.pass && cosets == psl_index_formula(m, n);
                       return o;
                     }});
    }
}

void add_freeness(std::vector<Check>& out, long max_m) {
  for (long m = 3; m <= max_m; ++m)
    for (long n = 1; n <= m; ++n) {
      if (m % n || (m == 3 && n == 1)) continue;
      out.push_back({"freeness", ml(m, n), [m, n] {
                       CosetTable t = congruence_table(m, n);
                       if (!is_free(t)) return Outcome{false, "not free: " + kurosh_decompose(t).to_string()};
                       return expect_eq(free_rank(t), rank_formula(m, n), "free of rank");
                     }});
    }
}

void add_frasch(std::vector<Check>& out) {
  for (auto [p, rank] : std::vector<std::pair<long, long>>{{2, 2}, {3, 3}, {5, 11}, {7, 29}}) {
    out.push_back({"frasch", "PG(" + std::to_string(p) + ")", [p, rank] {
                     CosetTable t = congruence_table(p, p);
                     if (!is_free(t)) return Outcome{false, "not free"};
                     return expect_eq(free_rank(t), rank, "free of rank");
                   }});
  }
}

void add_rademacher(std::vector<Check>& out) {
  struct Case {
    std::string label;
    std::function<CosetTable()> table;
    long k, f2, f3;
  };
  std::vector<Case> cases{{"PG1(2)", [] { return congruence_table(2, 1); }, 1, 1, 0},
                          {"PG0(2)", [] { return gamma0_table(2); }, 1, 1, 0},
                          {"PG1(3)", [] { return congruence_table(3, 1); }, 1, 0, 1}};
  for (const Case& c : cases) {
    out.push_back({"rademacher", c.label, [c] {
                     KuroshDecomposition k = kurosh_decompose(c.table());
                     std::string s = "k=" + std::to_string(k.free_rank) + " f2=" + std::to_string(k.f2) +
                                     " f3=" + std::to_string(k.f3) + " (" + k.to_string() + ")";
                     return Outcome{k.free_rank == c.k && k.f2 == c.f2 && k.f3 == c.f3, s};
                   }});
  }
}

void add_gamma2(std::vector<Check>& out) {
  out.push_back({"gamma2", "Gamma(2)", [] {
                   SlStructure st = sl_structure(2, 2);
                   bool ok = st.central_minus_identity && !st.free && st.free_part_rank == 2 &&
                             st.abelianization == AbelianInvariants::from_cyclic_orders({2}, 2);
                   return Outcome{ok, st.tag + "; free part rank " + std::to_string(st.free_part_rank) +
                                          "; abelianization " + st.abelianization.to_string()};
                 }});
}

void add_theorem1(std::vector<Check>& out, long max_m) {
  for (long m = 3; m <= max_m; ++m)
    for (long n = 1; n <= m; ++n) {
      if (m % n || (m == 3 && n == 1)) continue;
      out.push_back({"theorem1", ml(m, n),
                     [m, n] { return expect(hall_abelianization(m, n, rs::Exec::serial), theorem1_predicted(m, n)); }});
    }
}

void add_full(std::vector<Check>& out, const std::string& claim, const std::string& spec, AbelianInvariants want,
              std::size_t ceiling) {
  out.push_back({claim, spec, [spec, want, ceiling] {
                   FiniteGroup g = FiniteGroup::parse(spec);
                   return expect(full_abelianization(g, default_epimorphism(g), {ceiling}, rs::Exec::serial), want);
                 }});
}

void add_exceptional(std::vector<Check>& out, std::size_t ceiling) {
  add_full(out, "exceptional", "cyclic:2", theorem1_predicted(2, 1), ceiling);
  add_full(out, "exceptional", "cyclic:3", theorem1_predicted(3, 1), ceiling);
  add_full(out, "exceptional", "abelian:2,2", theorem1_predicted(2, 2), ceiling);
}

void add_abelian(std::vector<Check>& out, std::size_t ceiling) {
  for (long m = 2; m <= 16; ++m)
    for (long n = 1; n <= m && m * n <= 16; ++n)
      if (m % n == 0)
        add_full(out, "abelian", "abelian:" + std::to_string(m) + "," + std::to_string(n), theorem1_predicted(m, n),
                 ceiling);
}

std::vector<std::string> theorem2_groups() {
  std::vector<std::string> specs;
  for (int m = 2; m <= 24; ++m) specs.push_back("cyclic:" + std::to_string(m));
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= m && m * n <= 24; ++n)
      if (m % n == 0) specs.push_back("abelian:" + std::to_string(m) + "," + std::to_string(n));
  for (int r = 2; r <= 12; ++r) specs.push_back("dihedral:" + std::to_string(r));
  for (const char* s : {"sym:3", "sym:4", "alt:4", "quaternion", "perm:(1 2 3 4 5 6 7),(2 3 5)(4 7 6)",
                        "perm:(1 2 3 4 5),(2 3 5 4)", "perm:(1 2 3),(4 5 6 7)"})
    specs.emplace_back(s);
  return specs;
}

void add_theorem2(std::vector<Check>& out, std::size_t ceiling) {
  for (const std::string& spec : theorem2_groups()) {
    out.push_back({"theorem2", spec, [spec, ceiling] {
                     FiniteGroup g = FiniteGroup::parse(spec);
                     Theorem2Verdict v = theorem2_verdict(g, default_epimorphism(g), {ceiling});
                     return Outcome{v.certified, "order " + std::to_string(g.order()) + ", image index " +
                                                     std::to_string(v.image_index) + ", " + v.kurosh.to_string() +
                                                     ", free rank " + std::to_string(v.free_rank)};
                   }});
  }
}

void add_dihedral(std::vector<Check>& out, std::size_t ceiling) {
  for (long r = 3; r <= 8; ++r)
    add_full(out, "dihedral", "dihedral:" + std::to_string(r),
             AbelianInvariants::from_cyclic_orders({2}, r % 2 ? 2 : 3), ceiling);
}

void add_satoh(std::vector<Check>& out) {
  for (long m = 3; m <= 5; ++m) {
    out.push_back({"satoh", "m=" + std::to_string(m), [m] {
                     SatohReport r = satoh_report(m);
                     std::string s = r.hall.to_string();
                     if (r.prime_rank) s += "; prime formula rank " + std::to_string(*r.prime_rank);
                     return Outcome{r.ok, s};
                   }});
  }
}

void add_properties(std::vector<Check>& out, std::uint64_t seed) {
  out.push_back({"properties", "Euler identity", [] {
                   return no_failures(props::check_euler_identity(10), "all tables up to level 10 and group images");
                 }});
  out.push_back({"properties", "word round trip", [seed] {
                   return no_failures(props::check_word_round_trips(seed, 1000), "1000 seeded elements");
                 }});
  out.push_back({"properties", "SNF oracle", [seed] {
                   return no_failures(props::check_snf_oracle(seed, 200), "200 seeded matrices");
                 }});
  out.push_back({"properties", "relator soundness", [] {
                   return no_failures(props::check_relator_soundness(),
                                      std::to_string(aut_f2_relators().size()) + " relators on all test groups");
                 }});
}

std::vector<Check> build_checks(const Command& cmd) {
  const std::string& claim = cmd.claim;
  bool all = claim == "all";
  std::vector<Check> checks;
  auto want = [&](const char* name) { return all || claim == name; };
  if (want("index")) add_index(checks, cmd.max_m.value_or(10));
  if (want("freeness")) add_freeness(checks, cmd.max_m.value_or(10));
  if (want("frasch")) add_frasch(checks);
  if (want("rademacher")) add_rademacher(checks);
  if (want("gamma2")) add_gamma2(checks);
  if (want("theorem1")) add_theorem1(checks, cmd.max_m.value_or(8));
  if (want("exceptional")) add_exceptional(checks, cmd.ceiling);
  if (want("abelian")) add_abelian(checks, cmd.ceiling);
  if (want("theorem2")) add_theorem2(checks, cmd.ceiling);
  if (want("dihedral")) add_dihedral(checks, cmd.ceiling);
  if (want("satoh")) add_satoh(checks);
  if (want("properties")) add_properties(checks, cmd.seed);
  if (checks.empty() && !all) throw UsageError("verify: unknown claim '" + claim + "'");
  return checks;
}

Report run_verify(const Command& cmd) {
  if (cmd.claim.empty()) throw UsageError("verify: a claim is required");
  std::vector<Check> checks = build_checks(cmd);
  std::vector<Outcome> results(checks.size());
  const long count = static_cast<long>(checks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    Outcome& o = results[static_cast<std::size_t>(i)];
    try {
      o = checks[static_cast<std::size_t>(i)].run();
    } catch (const CeilingExceeded& e) {
      o = {false, e.what(), true};
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
  }
  std::ostringstream out;
  Json list = Json::array();
  long passed = 0;
  bool ceiling = false;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Outcome& o = results[i];
    passed += o.pass;
    ceiling = ceiling || o.ceiling;
    out << (o.pass ? "PASS " : "FAIL ") << checks[i].claim << " " << checks[i].label << ": " << o.detail << "\n";
    list.push_back(Json{{"claim", checks[i].claim}, {"case", checks[i].label}, {"pass", o.pass}, {"detail", o.detail}});
  }
  bool ok = passed == count;
  out << passed << "/" << count << " checks passed\n";
  Json j{{"claim", cmd.claim}, {"passed", passed}, {"total", count}, {"checks", list}};
  return {ok ? kOk : (ceiling ? kCeiling : kMismatch), emit(cmd, j, out.str()), ""};
}

Report dispatch(const Command& cmd) {
  if (cmd.subcommand == "help") return {kOk, cmd.claim, ""};
  if (cmd.subcommand != "verify" && !cmd.claim.empty())
    throw UsageError(cmd.subcommand + ": unexpected argument '" + cmd.claim + "'");
  if (cmd.subcommand == "index") return run_index(cmd);
  if (cmd.subcommand == "table") return run_table(cmd);
  if (cmd.subcommand == "decompose") return run_decompose(cmd);
  if (cmd.subcommand == "rank") return run_rank(cmd);
  if (cmd.subcommand == "stabilizer") return run_stabilizer(cmd);
  if (cmd.subcommand == "abelianize") return run_abelianize(cmd);
  if (cmd.subcommand == "verify") return run_verify(cmd);
  if (cmd.subcommand == "satoh") return run_satoh(cmd);
  throw UsageError("unknown subcommand '" + cmd.subcommand + "'");
}

}  // namespace

std::vector<std::string> verify_claims() {
  return {"index",       "freeness", "frasch",   "rademacher", "gamma2", "theorem1",   "exceptional",
          "abelian",     "theorem2", "dihedral", "satoh",      "properties", "all"};
}

Report run(const Command& cmd) {
  try {
    return dispatch(cmd);
  } catch (const CeilingExceeded& e) {
    return {kCeiling, "", e.what() + std::string("\n")};
  } catch (const OutOfTheoremScope& e) {
    return {kUsage, "", e.what() + std::string("\n")};
  } catch (const std::invalid_argument& e) {
    return {kUsage, "", e.what() + std::string("\n")};
  } catch (const std::exception& e) {
    return {kMismatch, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace modgroup::cli
