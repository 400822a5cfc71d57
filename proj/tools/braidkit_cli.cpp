// braidkit command line front end.
//
// Exit status: 0 when every check holds, 1 when any check is false,
// falsified or inconclusive, 2 on usage, input or resource errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "braidkit/braidkit.hpp"
#include "braidkit/serialization.hpp"

namespace {

using namespace braidkit;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  bool json = false;
  bool no_timing = false;
  std::size_t budget = ConjugacyOptions{}.node_budget;
  int strands_cap = ConjugacyOptions{}.strands_cap;
  std::size_t degree_cap = InvariantOptions{}.degree_cap;

  SuiteOptions suite() const {
    SuiteOptions o;
    o.conjugacy.node_budget = budget;
    o.conjugacy.strands_cap = strands_cap;
    o.invariants.degree_cap = degree_cap;
    return o;
  }
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const long v = std::stol(text, &used);
      if (used != text.size()) throw UsageError("bad range '" + text + "'");
      return {v, v};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    Range r{std::stol(lo, &used), 0};
    if (used != lo.size()) throw UsageError("bad range '" + text + "'");
    r.hi = std::stol(hi, &used);
    if (used != hi.size()) throw UsageError("bad range '" + text + "'");
    if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "', expected a..b");
  }
}

// Inline JSON, "-" for stdin, or a file path.
Json read_document(const std::string& source) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot open '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonFormatError(std::string("malformed JSON: ") + e.what());
  }
}

// A braid document, or a knot document which is realized by its braid.
BraidWord read_braid(const std::string& source) {
  const Json j = read_document(source);
  if (j.is_object() && j.contains("p") && !j.contains("word")) return ttk_braid(knot_from_json(j));
  return braid_from_json(j);
}

TwistedTorusKnot read_knot(const std::vector<std::string>& args) {
  if (args.size() == 1) return knot_from_json(read_document(args.front()));
  if (args.size() != 4) throw UsageError("expected p q r n or one knot JSON document");
  long v[4];
  for (int i = 0; i < 4; ++i) {
    std::size_t used = 0;
    try {
      v[i] = std::stol(args[static_cast<std::size_t>(i)], &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != args[static_cast<std::size_t>(i)].size())
      throw UsageError("'" + args[static_cast<std::size_t>(i)] + "' is not an integer");
  }
  return {v[0], v[1], v[2], v[3]};
}

std::string seifert_text(const Classification& c) {
  if (!c.seifert_h) return "none";
  return "k=" + std::to_string(c.seifert_h->k) + " (" + std::to_string(c.seifert_h->data.a1) + "," +
         std::to_string(c.seifert_h->data.a2) + ") over D^2";
}

std::string surgery_text(const SurgeryResult& s) {
  std::string out = "slope " + std::to_string(s.slope) + ": " + to_string(s.kind);
  if (s.kind == SurgeryKind::sfs_s2)
    out += "(" + std::to_string(s.multiplicities[0]) + "," + std::to_string(s.multiplicities[1]) + "," +
           std::to_string(s.multiplicities[2]) + ")";
  return out;
}

std::string params_text(const std::map<std::string, long>& params) {
  std::string out;
  for (const auto& [k, v] : params) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return out;
}

struct Tally {
  long verified = 0;
  long falsified = 0;
  long inconclusive = 0;

  void add(const VerificationReport& r) {
    if (r.status == Status::verified) ++verified;
    else if (r.status == Status::falsified) ++falsified;
    else ++inconclusive;
  }
  int exit_code() const { return falsified + inconclusive == 0 ? kOk : kFalse; }
  Json to_json() const { return Json{{"verified", verified}, {"falsified", falsified}, {"inconclusive", inconclusive}}; }
};

void print_report_table(const std::vector<VerificationReport>& reports, bool timing) {
  for (const auto& r : reports) {
    std::cout << std::left << std::setw(22) << r.claim << std::setw(30) << params_text(r.params) << std::setw(13)
              << to_string(r.status);
    if (timing) {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(2) << r.elapsed.count() / 1000.0 << " ms";
      std::cout << std::setw(12) << ms.str();
    }
    if (!r.notes.empty()) std::cout << r.notes;
    std::cout << '\n';
  }
}

void print_tally(const Tally& t) {
  std::cout << t.verified << " verified, " << t.falsified << " falsified, " << t.inconclusive << " inconclusive\n";
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string target;
  std::string range;
  std::string r;
  std::string q;
  std::string k;
  int max_strands = 10;
};

int run_verify(const VerifyArgs& a, const Globals& g) {
  SuiteRanges ranges;
  const bool q_primary = a.target == "t1" || a.target == "p1th";
  const auto pick = [&](const std::string& explicit_value, bool primary, Range fallback) {
    if (!explicit_value.empty()) return parse_range(explicit_value);
    if (primary && !a.range.empty()) return parse_range(a.range);
    return fallback;
  };
  const SuiteOptions options = g.suite();

  if (a.target == "all") {
    ranges.lemma_max_strands = a.max_strands;
    const auto sections = run_suite(ranges, options);
    Tally tally;
    for (const auto& s : sections)
      for (const auto& r : s.reports) tally.add(r);
    if (g.json) {
      Json out{{"sections", Json::array()}};
      for (const auto& s : sections) {
        Json reports = Json::array();
        for (const auto& r : s.reports) reports.push_back(to_json(r, !g.no_timing));
        out["sections"].push_back(Json{{"name", s.name}, {"reports", reports}});
      }
      out["summary"] = tally.to_json();
      emit(out);
    } else {
      for (const auto& s : sections) {
        std::cout << "== " << s.name << '\n';
        print_report_table(s.reports, !g.no_timing);
      }
      print_tally(tally);
    }
    return tally.exit_code();
  }

  std::vector<VerificationReport> reports;
  if (a.target == "p1") {
    reports = run_ordered(p1_tasks(pick(a.r, true, ranges.p1_r)));
  } else if (a.target == "lemmas") {
    reports = run_ordered(lemma_tasks(pick(a.r, true, ranges.lemma_r), a.max_strands));
  } else if (a.target == "chain") {
    reports = chain_reports(pick(a.r, true, ranges.chain_r));
  } else if (a.target == "t1") {
    reports = run_ordered(t1_tasks(pick(a.q, q_primary, ranges.t1_q), pick(a.k, false, ranges.t1_k)));
  } else if (a.target == "p1th") {
    reports = run_ordered(
        p1_theorem_tasks(pick(a.q, q_primary, ranges.p1th_q), pick(a.k, false, ranges.p1th_k), options));
  } else if (a.target == "data") {
    reports = run_ordered(knot_data_tasks(ranges));
  }

  Tally tally;
  for (const auto& r : reports) tally.add(r);
  if (g.json) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(to_json(r, !g.no_timing));
    emit(out);
  } else {
    print_report_table(reports, !g.no_timing);
    print_tally(tally);
  }
  return tally.exit_code();
}

struct SweepArgs {
  std::string p = "1..60";
  std::string q = "2..12";
  std::vector<long> n{-1, 1};
  std::string verdict;
};

int run_sweep(const SweepArgs& a, const Globals& g) {
  const Range p = parse_range(a.p);
  const Range q = parse_range(a.q);
  if (q.lo < 2) throw UsageError("sweep needs q >= 2");
  if (p.lo < 1) throw UsageError("sweep needs p >= 1");
  const auto rows = classification_sweep(p.lo, p.hi, q.lo, q.hi, a.n);
  std::map<std::string, long> counts{{"PrimitivePrimitive", 0}, {"PrimitiveSeifert", 0}, {"OutsideCriteria", 0}};
  long inconsistent = 0;
  Json listed = Json::array();
  for (const auto& row : rows) {
    const char* verdict = to_string(row.classification.verdict);
    ++counts[verdict];
    if (!sweep_row_consistent(row)) ++inconsistent;
    if (!a.verdict.empty() && a.verdict != verdict) continue;
    if (g.json) {
      listed.push_back(Json{{"knot", to_json(row.knot)}, {"classification", to_json(row.classification)}});
    } else if (!a.verdict.empty()) {
      std::cout << std::left << std::setw(18) << to_string(row.knot) << std::setw(20) << verdict
                << seifert_text(row.classification) << '\n';
    }
  }
  if (g.json) {
    Json c = Json::object();
    for (const auto& [k, v] : counts) c[k] = v;
    emit(Json{{"rows", listed}, {"counts", c}, {"total", static_cast<long>(rows.size())}, {"inconsistent", inconsistent}});
  } else {
    std::cout << rows.size() << " knots:";
    for (const auto& [k, v] : counts) std::cout << ' ' << k << '=' << v;
    std::cout << ", inconsistent=" << inconsistent << '\n';
  }
  return inconsistent == 0 ? kOk : kFalse;
}

int run_conj(const std::string& a_src, const std::string& b_src, const std::string& c_src, const Globals& g) {
  const BraidWord a = read_braid(a_src);
  const BraidWord b = read_braid(b_src);
  if (!c_src.empty()) {
    const BraidWord c = read_braid(c_src);
    const bool ok = is_conjugate_by(a, b, c);
    if (g.json)
      emit(Json{{"conjugate", ok}, {"conjugator", to_json(c)}});
    else
      std::cout << (ok ? "true" : "false") << '\n';
    return ok ? kOk : kFalse;
  }
  ConjugacyOptions options;
  options.node_budget = g.budget;
  options.strands_cap = g.strands_cap;
  const ConjugacyResult res = are_conjugate(a, b, options);
  if (g.json) {
    emit(Json{{"verdict", to_string(res.verdict)},
              {"witness", res.witness ? to_json(*res.witness) : Json(nullptr)},
              {"nodes", res.nodes_visited},
              {"reason", res.reason}});
  } else {
    std::cout << to_string(res.verdict);
    if (res.witness) std::cout << " witness " << to_string(*res.witness);
    std::cout << " (" << res.reason << ")\n";
  }
  return res.verdict == ConjugacyVerdict::conjugate ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidkit: braid words, Garside normal forms and twisted torus knots"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit JSON")->envname("BRAIDKIT_JSON");
  app.add_flag("--no-timing", g.no_timing, "Omit timings so output is byte-stable")->envname("BRAIDKIT_NO_TIMING");
  app.add_option("--budget", g.budget, "Node budget for the conjugacy search")->envname("BRAIDKIT_BUDGET");
  app.add_option("--strands-cap", g.strands_cap, "Largest strand count for the conjugacy search")
      ->envname("BRAIDKIT_STRANDS_CAP");
  app.add_option("--degree-cap", g.degree_cap, "Longest word accepted by the Alexander polynomial")
      ->envname("BRAIDKIT_DEGREE_CAP");

  std::vector<std::string> knot_args;
  const auto knot_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("knot", knot_args, "p q r n, or a knot JSON document / file / -")->required();
    return sub;
  };
  auto* braid_cmd = knot_command("braid", "Braid word of K(p,q,r,n)");
  auto* slope_cmd = knot_command("slope", "Surface slope pq + nr^2");
  auto* classify_cmd = knot_command("classify", "Primitive/Seifert classification");
  auto* surgery_cmd = knot_command("surgery", "Predicted surface-slope surgery");

  std::string a_src, b_src, c_src;
  auto* nf_cmd = app.add_subcommand("nf", "Left normal form");
  nf_cmd->add_option("braid", a_src, "Braid JSON, file or -")->required();
  auto* eq_cmd = app.add_subcommand("eq", "Decide whether two braids are equal");
  eq_cmd->add_option("a", a_src)->required();
  eq_cmd->add_option("b", b_src)->required();
  auto* conj_cmd = app.add_subcommand("conj", "Check c^-1 a c = b, or search for a conjugator");
  conj_cmd->add_option("a", a_src)->required();
  conj_cmd->add_option("b", b_src)->required();
  conj_cmd->add_option("c", c_src, "Conjugator; omitted means run the search");
  auto* alex_cmd = app.add_subcommand("alex", "Alexander polynomial of the closure");
  alex_cmd->add_option("braid", a_src)->required();
  auto* comp_cmd = app.add_subcommand("components", "Number of closure components");
  comp_cmd->add_option("braid", a_src)->required();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification reports");
  verify_cmd->add_option("target", va.target)
      ->required()
      ->check(CLI::IsMember({"p1", "t1", "p1th", "lemmas", "chain", "data", "all"}));
  verify_cmd->add_option("--range", va.range, "Range a..b for the main parameter")->envname("BRAIDKIT_RANGE");
  verify_cmd->add_option("--r", va.r, "Range of r");
  verify_cmd->add_option("--q", va.q, "Range of q");
  verify_cmd->add_option("--k", va.k, "Range of k");
  verify_cmd->add_option("--max-strands", va.max_strands, "Strand bound for the L1/L3 sweeps")
      ->check(CLI::Range(3, 16));

  SweepArgs sa;
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every knot in a parameter box");
  sweep_cmd->add_option("--p", sa.p, "Range of p")->capture_default_str();
  sweep_cmd->add_option("--q", sa.q, "Range of q")->capture_default_str();
  sweep_cmd->add_option("--n", sa.n, "Twist counts")->delimiter(',')->capture_default_str();
  sweep_cmd->add_option("--verdict", sa.verdict, "List only rows with this verdict")
      ->check(CLI::IsMember({"PrimitivePrimitive", "PrimitiveSeifert", "OutsideCriteria"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (braid_cmd->parsed()) {
      const BraidWord w = ttk_braid(read_knot(knot_args));
      if (g.json)
        emit(to_json(w));
      else
        std::cout << to_json(w).dump() << '\n';
      return kOk;
    }
    if (slope_cmd->parsed()) {
      const TwistedTorusKnot k = read_knot(knot_args);
      if (g.json)
        emit(Json{{"knot", to_json(k)}, {"slope", surface_slope(k)}});
      else
        std::cout << surface_slope(k) << '\n';
      return kOk;
    }
    if (classify_cmd->parsed()) {
      const TwistedTorusKnot k = read_knot(knot_args);
      const Classification c = classify(k);
      if (g.json) {
        emit(to_json(c));
      } else {
        std::cout << to_string(k) << ": " << to_string(c.verdict) << '\n'
                  << "  primitive H:  " << (c.primitive_h ? "yes" : "no") << '\n'
                  << "  primitive H': " << (c.primitive_h_prime ? "yes" : "no") << '\n'
                  << "  Seifert H:    " << seifert_text(c) << '\n';
      }
      return kOk;
    }
    if (surgery_cmd->parsed()) {
      const SurgeryResult s = surgery_description(read_knot(knot_args));
      if (g.json)
        emit(to_json(s));
      else
        std::cout << surgery_text(s) << '\n';
      return kOk;
    }
    if (nf_cmd->parsed()) {
      const NormalForm nf = to_normal_form(read_braid(a_src));
      if (g.json) {
        emit(to_json(nf));
      } else {
        std::cout << "inf " << nf.inf << ", " << nf.factors.size() << " factors\n";
        for (const auto& f : nf.factors) std::cout << "  " << to_string(f.to_word()) << '\n';
      }
      return kOk;
    }
    if (eq_cmd->parsed()) {
      const bool same = equals(read_braid(a_src), read_braid(b_src));
      if (g.json)
        emit(Json{{"equal", same}});
      else
        std::cout << (same ? "true" : "false") << '\n';
      return same ? kOk : kFalse;
    }
    if (conj_cmd->parsed()) return run_conj(a_src, b_src, c_src, g);
    if (alex_cmd->parsed()) {
      InvariantOptions options;
      options.degree_cap = g.degree_cap;
      const LaurentPoly p = alexander(read_braid(a_src), options);
      if (g.json) {
        Json out = to_json(p);
        out["text"] = p.to_string();
        emit(out);
      } else {
        std::cout << p << '\n';
      }
      return kOk;
    }
    if (comp_cmd->parsed()) {
      const int n = closure_components(read_braid(a_src));
      if (g.json)
        emit(Json{{"components", n}});
      else
        std::cout << n << '\n';
      return kOk;
    }
    if (verify_cmd->parsed()) return run_verify(va, g);
    if (sweep_cmd->parsed()) return run_sweep(sa, g);
  } catch (const Error& e) {
    std::cerr << "braidkit: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "braidkit: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
