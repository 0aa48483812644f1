// allab: checks finite bounded lattices with a unary operation for Sasaki
// adjointness, variety membership, congruence structure and ideals.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "allab/catalog.hpp"
#include "allab/congruence.hpp"
#include "allab/errors.hpp"
#include "allab/ideal.hpp"
#include "allab/io.hpp"
#include "allab/lattice.hpp"
#include "allab/sasaki.hpp"
#include "allab/term.hpp"

using namespace allab;
using Json = nlohmann::ordered_json;

namespace {

// Collected output: plain lines for the terminal, one JSON document with
// --json. Identical inputs produce byte-identical reports.
struct Report {
  std::string command;
  std::vector<std::string> lines;
  Json checks = Json::array();
  bool any_failed = false;

  void info(const std::string& name, const std::string& text, Json extra = {}) {
    lines.push_back(name + ": " + text);
    Json entry{{"name", name}, {"verdict", "info"}, {"detail", text}};
    merge(entry, extra);
    checks.push_back(std::move(entry));
  }

  void holds(const std::string& name, const std::string& text, Json extra = {}) {
    lines.push_back(name + ": " + text);
    Json entry{{"name", name}, {"verdict", "holds"}, {"detail", text}};
    merge(entry, extra);
    checks.push_back(std::move(entry));
  }

  void fails(const std::string& name, const std::string& text, Json extra = {}) {
    any_failed = true;
    lines.push_back(name + ": " + text);
    Json entry{{"name", name}, {"verdict", "fails"}, {"detail", text}};
    merge(entry, extra);
    checks.push_back(std::move(entry));
  }

  void raw(const std::string& line) { lines.push_back(line); }

  int finish(bool json_mode) const {
    const int code = any_failed ? 1 : 0;
    if (json_mode) {
      Json doc{{"command", command}, {"checks", checks}, {"exit", code}};
      std::cout << doc.dump(2) << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
    return code;
  }

private:
  static void merge(Json& entry, const Json& extra) {
    if (extra.is_object()) {
      for (const auto& [k, v] : extra.items()) entry[k] = v;
    }
  }
};

std::string assignment_text(const FiniteLattice& L, const Assignment& a) {
  std::string out;
  for (const auto& [name, val] : a) {
    if (!out.empty()) out += ", ";
    out += name + "=" + L.label(val);
  }
  return out;
}

Json assignment_json(const FiniteLattice& L, const Assignment& a) {
  Json j = Json::object();
  for (const auto& [name, val] : a) j[name] = L.label(val);
  return j;
}

std::string labels_bracketed(const FiniteLattice& L, ElemSet s) {
  std::string out = "[";
  bool first = true;
  for (const auto& l : set_labels(L, s)) {
    if (!first) out += ", ";
    out += l;
    first = false;
  }
  return out + "]";
}

std::string set_braced(const FiniteLattice& L, ElemSet s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : set_labels(L, s)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

std::string blocks_text(const FiniteLattice& L, const Congruence& c) {
  std::string out;
  for (const auto& block : blocks_of(c)) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += L.label(block[i]);
    }
    out += "}";
  }
  return out;
}

Json blocks_json(const FiniteLattice& L, const Congruence& c) {
  Json j = Json::array();
  for (const auto& block : blocks_of(c)) {
    Json b = Json::array();
    for (int x : block) b.push_back(L.label(x));
    j.push_back(std::move(b));
  }
  return j;
}

Json labels_json(const FiniteLattice& L, ElemSet s) {
  Json j = Json::array();
  for (const auto& l : set_labels(L, s)) j.push_back(l);
  return j;
}

// ---------------------------------------------------------------------------
// Sub-command bodies
// ---------------------------------------------------------------------------

void run_validate(Report& rep, const std::string& path) {
  try {
    const auto L = read_lattice_file(path);
    validate(L);
    rep.holds("validate",
              "valid bounded lattice (" + std::to_string(L.n) + " elements)",
              Json{{"elements", L.n}});
    rep.info("complemented", L.complemented ? "true" : "false");
  } catch (const NotALattice& e) {
    rep.fails("validate", std::string("invalid: ") + e.what());
  } catch (const NoBounds& e) {
    rep.fails("validate", std::string("invalid: ") + e.what());
  }
}

void run_classify(Report& rep, const FiniteLattice& L) {
  const auto r = classify_report(L);
  auto flag = [&](const std::string& name, bool value, const std::string& witness) {
    Json extra{{"value", value}};
    if (!witness.empty()) extra["witness"] = witness;
    std::string text = value ? "true" : "false";
    if (!value && !witness.empty()) text += " (witness: " + witness + ")";
    rep.info(name, text, extra);
  };
  flag("lattice", r.flags.is_lattice, "");
  std::string w;
  if (r.complemented_witness)
    w = "element " + L.label(*r.complemented_witness) + " is not complemented by " +
        L.label(L.comp(*r.complemented_witness));
  flag("complemented", r.flags.is_complemented, w);
  w.clear();
  if (r.modular_witness) {
    const auto& [x, y, z] = *r.modular_witness;
    w = "x=" + L.label(x) + ", y=" + L.label(y) + ", z=" + L.label(z);
  }
  flag("modular", r.flags.is_modular, w);
  w.clear();
  if (r.distributive_witness) {
    const auto& [x, y, z] = *r.distributive_witness;
    w = "x=" + L.label(x) + ", y=" + L.label(y) + ", z=" + L.label(z);
  }
  flag("distributive", r.flags.is_distributive, w);
  w.clear();
  if (r.involution_witness) {
    const int x = *r.involution_witness;
    w = "(" + L.label(x) + "')' = " + L.label(L.comp(L.comp(x)));
  }
  flag("involution", r.flags.unary_is_involution, w);
  w.clear();
  if (r.antitone_witness) {
    const auto [x, y] = *r.antitone_witness;
    w = L.label(x) + " <= " + L.label(y) + " but " + L.label(y) + "' = " + L.label(L.comp(y)) +
        " is not below " + L.label(x) + "' = " + L.label(L.comp(x));
  }
  flag("antitone", r.flags.unary_is_antitone, w);
  flag("ortholattice", r.flags.is_ortholattice, "");
  w.clear();
  if (r.orthomodular_witness) {
    const auto [x, y] = *r.orthomodular_witness;
    w = "x=" + L.label(x) + ", y=" + L.label(y);
  }
  flag("orthomodular", r.flags.is_orthomodular, r.flags.is_orthomodular ? "" : w);
}

void run_check(Report& rep, const FiniteLattice& L, bool adjoint, bool variety, bool theorem1,
               bool lemma1) {
  if (!adjoint && !variety && !theorem1 && !lemma1) {
    adjoint = variety = true;
  }
  if (adjoint) {
    const auto r = check_adjoint(L);
    if (r.holds) {
      rep.holds("adjoint", "holds (" + std::to_string(r.triples_checked) + " triples)",
                Json{{"triples", r.triples_checked}});
    } else {
      const auto& [x, y, z] = *r.witness;
      const bool fwd = *r.direction == AdjointDirection::forward;
      rep.fails("adjoint",
                std::string("fails at (x=") + L.label(x) + ", y=" + L.label(y) + ", z=" +
                    L.label(z) + "), " + (fwd ? "forward" : "backward") + " direction (" +
                    (fwd ? "x o y <= z but not x <= y -> z" : "x <= y -> z but not x o y <= z") +
                    ")",
                Json{{"witness", Json{{"x", L.label(x)}, {"y", L.label(y)}, {"z", L.label(z)}}},
                     {"direction", fwd ? "forward" : "backward"}});
    }
  }
  if (variety) {
    const auto r = check_variety(L);
    if (r.member) {
      rep.holds("variety", "member (complemented; identities (b) and (e) hold)");
    } else if (!r.complemented) {
      rep.fails("variety",
                "fails (element " + L.label(*r.complement_witness) + " has no complement under ')",
                Json{{"witness", L.label(*r.complement_witness)}});
    } else {
      std::string text;
      Json broken = Json::object();
      for (const auto& [name, res] :
           {std::pair<const char*, const CheckResult*>{"b", &r.identity_b},
            std::pair<const char*, const CheckResult*>{"e", &r.identity_e}}) {
        if (res->holds) continue;
        if (!text.empty()) text += "; ";
        text += std::string("identity (") + name + ") fails at " +
                assignment_text(L, *res->witness);
        broken[name] = assignment_json(L, *res->witness);
      }
      rep.fails("variety", "fails (" + text + ")", Json{{"witnesses", broken}});
    }
  }
  if (theorem1) {
    const auto r = check_theorem1(L);
    const ConditionVerdict* vs[6] = {&r.a, &r.b, &r.c, &r.d, &r.e, &r.f};
    const char* names = "abcdef";
    Json conds = Json::object();
    for (int i = 0; i < 6; ++i) {
      const std::string cname(1, names[i]);
      if (vs[i]->holds) {
        rep.raw("theorem1(" + cname + "): holds");
        conds[cname] = Json{{"holds", true}};
      } else {
        rep.raw("theorem1(" + cname + "): fails at " + assignment_text(L, *vs[i]->witness));
        conds[cname] =
            Json{{"holds", false}, {"witness", assignment_json(L, *vs[i]->witness)}};
      }
    }
    const bool agree = r.group_abc_agrees && r.group_def_agrees;
    const std::string text = std::string("groups {a,b,c} ") +
                             (r.group_abc_agrees ? "agree" : "DISAGREE") + ", {d,e,f} " +
                             (r.group_def_agrees ? "agree" : "DISAGREE");
    Json extra{{"conditions", conds},
               {"group_abc_agrees", r.group_abc_agrees},
               {"group_def_agrees", r.group_def_agrees}};
    if (agree) {
      rep.holds("theorem1", text, extra);
    } else {
      rep.fails("theorem1", text, extra);
    }
  }
  if (lemma1) {
    switch (check_lemma1(L)) {
      case Lemma1Verdict::confirmed:
        rep.holds("lemma1", "confirmed (adjoint pair, and ' is a complementation)");
        break;
      case Lemma1Verdict::vacuous:
        rep.holds("lemma1", "vacuous (the Sasaki operations are not adjoint here)");
        break;
      case Lemma1Verdict::violation:
        rep.fails("lemma1", "VIOLATION: adjoint pair but ' is not a complementation");
        break;
    }
  }
}

void run_congruences(Report& rep, const FiniteLattice& L, bool properties, bool malcev,
                     bool regularity) {
  const auto cons = all_congruences(L);
  rep.info("congruences", std::to_string(cons.size()),
           Json{{"count", cons.size()}});
  Json list = Json::array();
  for (const auto& c : cons) {
    rep.raw("  " + blocks_text(L, c));
    list.push_back(blocks_json(L, c));
  }
  rep.checks.back()["list"] = std::move(list);

  if (properties) {
    const auto p = check_congruence_properties(L);
    auto line = [&](const std::string& name, bool v) {
      rep.info(name, v ? "true" : "false", Json{{"value", v}});
    };
    line("permutable", p.permutable);
    line("distributive", p.distributive);
    line("regular", p.regular);
    line("simple", p.simple);
    line("subdirectly_irreducible", p.subdirectly_irreducible);
  }
  if (malcev || regularity) {
    const auto v = verify_theorem2_terms(L);
    if (malcev) {
      if (v.malcev_ok) {
        rep.holds("malcev", "holds (p(x,x,z) = z and p(x,z,z) = x exhaustively)");
      } else {
        rep.fails("malcev", "fails at " + assignment_text(L, *v.malcev_witness),
                  Json{{"witness", assignment_json(L, *v.malcev_witness)}});
      }
      if (v.majority_ok) {
        rep.holds("majority", "holds (m(x,x,y) = m(x,y,x) = m(y,x,x) = x exhaustively)");
      } else {
        rep.fails("majority", "fails at " + assignment_text(L, *v.majority_witness),
                  Json{{"witness", assignment_json(L, *v.majority_witness)}});
      }
    }
    if (regularity) {
      if (v.regularity_ok) {
        rep.holds("regularity_terms", "hold (t1 = t2 = z exactly when x = y)");
      } else {
        const auto& [x, y, z] = *v.regularity_witness;
        rep.fails("regularity_terms",
                  "fail at (x=" + L.label(x) + ", y=" + L.label(y) + ", z=" + L.label(z) + ")",
                  Json{{"witness",
                        Json{{"x", L.label(x)}, {"y", L.label(y)}, {"z", L.label(z)}}}});
      }
    }
  }
}

void run_ideals(Report& rep, const FiniteLattice& L, bool list,
                const std::optional<std::string>& closure_arg,
                const std::optional<std::string>& theta_arg, bool coincidence) {
  if (!closure_arg && !theta_arg && !coincidence) list = true;
  if (list) {
    const auto ideals = all_ideals(L);
    rep.info("ideals", std::to_string(ideals.size()), Json{{"count", ideals.size()}});
    Json arr = Json::array();
    for (ElemSet i : ideals) {
      rep.raw("  " + labels_bracketed(L, i));
      arr.push_back(labels_json(L, i));
    }
    rep.checks.back()["list"] = std::move(arr);
  }
  if (closure_arg) {
    const ElemSet seed = parse_label_set(L, *closure_arg);
    const ElemSet closed = ideal_closure(L, seed);
    rep.info("closure(" + set_braced(L, seed) + ")", labels_bracketed(L, closed),
             Json{{"ideal", labels_json(L, closed)}});
  }
  if (theta_arg) {
    const ElemSet I = parse_label_set(L, *theta_arg);
    const auto theta = theta_of_ideal(L, I);
    rep.info("theta(" + set_braced(L, I) + ")",
             "congruence with " + std::to_string(theta.block_count()) + " blocks: " +
                 blocks_text(L, theta),
             Json{{"blocks", blocks_json(L, theta)}});
  }
  if (coincidence) {
    const auto r = verify_kernel_coincidence(L);
    if (r.holds) {
      rep.holds("coincidence",
                "ideals and congruence kernels coincide (" + std::to_string(r.ideal_count) +
                    " ideals = " + std::to_string(r.kernel_count) + " kernels)",
                Json{{"ideals", r.ideal_count}, {"kernels", r.kernel_count}});
    } else {
      std::string detail = "MISMATCH:";
      for (ElemSet i : r.ideals_without_kernel)
        detail += " ideal " + labels_bracketed(L, i) + " is no kernel;";
      for (ElemSet k : r.kernels_without_ideal)
        detail += " kernel " + labels_bracketed(L, k) + " is no ideal;";
      if (!r.kernel_map_injective) detail += " kernel map not injective;";
      rep.fails("coincidence", detail);
    }
  }
}

std::vector<int> parse_cycles(int n, const std::string& text) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  while (i < text.size()) {
    if (text[i] != '(') throw Error("cycle notation expected, e.g. \"(1 2)(3 4)\"");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw Error("atom number expected in cycle notation");
      const int atom = std::stoi(text.substr(i, j - i));
      if (atom < 1 || atom > n) throw Error("atom a" + std::to_string(atom) + " is out of range");
      if (seen[static_cast<std::size_t>(atom - 1)])
        throw Error("atom a" + std::to_string(atom) + " appears twice");
      seen[static_cast<std::size_t>(atom - 1)] = true;
      cycle.push_back(atom - 1);
      i = j;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      perm[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return perm;
}

void run_enumerate(Report& rep, int max_n, bool filter_variety) {
  if (max_n < 1 || max_n > 7) throw Error("--max-n must be between 1 and 7");
  long long total = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto batch = enumerate_bounded_lattices(n);
    total += static_cast<long long>(batch.size());
    auto count = [](long long k, const char* noun) {
      return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
    };
    if (!filter_variety) {
      rep.info("n=" + std::to_string(n), count(batch.size(), "lattice") + " (up to isomorphism)",
               Json{{"lattices", batch.size()}});
      continue;
    }
    long long pairs = 0, members = 0;
    for (const auto& L : batch) {
      for (const auto& map : all_complementations(L)) {
        ++pairs;
        if (is_member_of_v(replace_unary(L, map))) ++members;
      }
    }
    rep.info("n=" + std::to_string(n),
             count(batch.size(), "lattice") + " (up to isomorphism); " +
                 count(pairs, "complemented pair") + "; " + std::to_string(members) +
                 " in the variety",
             Json{{"lattices", batch.size()}, {"pairs", pairs}, {"variety_members", members}});
  }
  const std::string noun = total == 1 ? " lattice" : " lattices";
  rep.info("total", std::to_string(total) + noun, Json{{"lattices", total}});
}

void run_identities(Report& rep, const FiniteLattice& L, const std::optional<std::string>& file,
                    const std::vector<std::string>& inline_stmts) {
  struct Item {
    std::string name;
    std::string text;
  };
  std::vector<Item> items;
  if (file) {
    std::ifstream in(*file);
    if (!in) throw IoError("cannot open '" + *file + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      items.push_back({"line " + std::to_string(lineno), line});
    }
  }
  for (std::size_t k = 0; k < inline_stmts.size(); ++k)
    items.push_back({"inline " + std::to_string(k + 1), inline_stmts[k]});
  if (items.empty()) throw Error("identities needs --file or --inline");

  int held = 0, failed = 0;
  for (const auto& item : items) {
    Statement st;
    try {
      st = parse_statement(item.text);
    } catch (const ParseError& e) {
      throw ParseError(e.position(), e.expected() + " (" + item.name + ")");
    }
    const auto r = check_statement(L, st);
    if (r.holds) {
      ++held;
      rep.holds(item.name,
                "holds (" + std::to_string(r.assignments_checked) + " assignments)",
                Json{{"statement", print_statement(st)}});
    } else {
      ++failed;
      rep.fails(item.name, "fails at " + assignment_text(L, *r.witness),
                Json{{"statement", print_statement(st)},
                     {"witness", assignment_json(L, *r.witness)}});
    }
  }
  rep.info("summary", std::to_string(held) + " hold, " + std::to_string(failed) + " fail",
           Json{{"hold", held}, {"fail", failed}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite complemented lattices and their Sasaki operations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "structured JSON output");

  std::string in_path;
  auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "lattice interchange file")->required();
  };

  auto* cmd_validate = app.add_subcommand("validate", "check that a file is a bounded lattice");
  add_in(cmd_validate);

  auto* cmd_classify = app.add_subcommand("classify", "structural classifier flags");
  add_in(cmd_classify);

  auto* cmd_check =
      app.add_subcommand("check", "adjointness and variety membership (default: both)");
  add_in(cmd_check);
  bool f_adjoint = false, f_variety = false, f_theorem1 = false, f_lemma1 = false;
  cmd_check->add_flag("--adjoint", f_adjoint, "x o y <= z iff x <= y -> z, all triples");
  cmd_check->add_flag("--variety", f_variety, "complemented plus identities (b) and (e)");
  cmd_check->add_flag("--theorem1", f_theorem1, "the six conditions (a)-(f) and group agreement");
  cmd_check->add_flag("--lemma1", f_lemma1, "adjointness forces a complementation");

  auto* cmd_con = app.add_subcommand("congruences", "congruence lattice and its properties");
  add_in(cmd_con);
  bool f_props = false, f_malcev = false, f_regterms = false;
  cmd_con->add_flag("--properties", f_props, "permutable/distributive/regular/simple/SI");
  cmd_con->add_flag("--malcev", f_malcev, "p and m term identities, exhaustively");
  cmd_con->add_flag("--regularity-terms", f_regterms, "t1 = t2 = z iff x = y, exhaustively");

  auto* cmd_ideals = app.add_subcommand("ideals", "ideal lattice, closures, theta");
  add_in(cmd_ideals);
  bool f_list = false, f_coincidence = false;
  std::string closure_arg, theta_arg;
  cmd_ideals->add_flag("--list", f_list, "list every ideal");
  auto* opt_closure =
      cmd_ideals->add_option("--closure", closure_arg, "least ideal containing these labels");
  auto* opt_theta =
      cmd_ideals->add_option("--theta", theta_arg, "congruence induced by this ideal");
  cmd_ideals->add_flag("--coincidence", f_coincidence, "ideals = congruence kernels");

  auto* cmd_generate = app.add_subcommand("generate", "emit generated lattices");
  auto* cmd_mn = cmd_generate->add_subcommand("m_n", "0 < a_1..a_n < 1 with a permuted complement");
  int mn_n = 3;
  std::string mn_perm, out_path;
  cmd_mn->add_option("--n", mn_n, "number of atoms (>= 3)")->required();
  cmd_mn->add_option("--perm", mn_perm, "fixed-point-free cycles, e.g. \"(1 2)(3 4)\"");
  cmd_mn->add_option("--out", out_path, "write to a file instead of stdout");
  cmd_generate->require_subcommand(1);

  auto* cmd_enum = app.add_subcommand("enumerate", "bounded lattices up to isomorphism");
  int max_n = 6;
  std::string filter;
  cmd_enum->add_option("--max-n", max_n, "largest carrier size (<= 7)");
  cmd_enum->add_option("--filter", filter, "'variety' adds complementation statistics");

  auto* cmd_ids = app.add_subcommand("identities", "check statements from a file or inline");
  add_in(cmd_ids);
  std::string ids_file;
  std::vector<std::string> ids_inline;
  auto* opt_file = cmd_ids->add_option("--file", ids_file, "one statement per line, # comments");
  cmd_ids->add_option("--inline", ids_inline, "statement given on the command line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report rep;
  try {
    if (*cmd_validate) {
      rep.command = "validate";
      run_validate(rep, in_path);
    } else if (*cmd_classify) {
      rep.command = "classify";
      run_classify(rep, read_lattice_file(in_path));
    } else if (*cmd_check) {
      rep.command = "check";
      run_check(rep, read_lattice_file(in_path), f_adjoint, f_variety, f_theorem1, f_lemma1);
    } else if (*cmd_con) {
      rep.command = "congruences";
      run_congruences(rep, read_lattice_file(in_path), f_props, f_malcev, f_regterms);
    } else if (*cmd_ideals) {
      rep.command = "ideals";
      run_ideals(rep, read_lattice_file(in_path), f_list,
                 *opt_closure ? std::optional(closure_arg) : std::nullopt,
                 *opt_theta ? std::optional(theta_arg) : std::nullopt, f_coincidence);
    } else if (*cmd_generate) {
      rep.command = "generate";
      if (mn_perm.empty()) {
        // Default: the full atom cycle.
        mn_perm = "(";
        for (int i = 1; i <= mn_n; ++i) mn_perm += (i > 1 ? " " : "") + std::to_string(i);
        mn_perm += ")";
      }
      const auto L = make_m_n(mn_n, parse_cycles(mn_n, mn_perm));
      const auto text = lattice_to_json(L);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw IoError("cannot write '" + out_path + "'");
        out << text;
        std::cout << "wrote " << out_path << "\n";
      }
      return 0;
    } else if (*cmd_enum) {
      rep.command = "enumerate";
      if (!filter.empty() && filter != "variety") throw Error("unknown filter '" + filter + "'");
      run_enumerate(rep, max_n, filter == "variety");
    } else if (*cmd_ids) {
      rep.command = "identities";
      run_identities(rep, read_lattice_file(in_path),
                     *opt_file ? std::optional(ids_file) : std::nullopt, ids_inline);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rep.finish(json_mode);
}
