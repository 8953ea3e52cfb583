// Command-line front end: construct, verify, search, chords, diagnose, render.
//
// Exit codes: 0 success/valid, 1 invalid but well-formed, 2 usage or
// classification, 3 malformed input, 4 unmet precondition.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leaper/all.hpp"

namespace {

using namespace leaper;

constexpr int kValid = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kMalformed = 3;
constexpr int kPrecondition = 4;

struct ExitError {
  int code;
  std::string message;
};

/// "10000000", "1e7" or "10^7".
std::uint64_t parse_count(const std::string& s) {
  try {
    if (auto caret = s.find('^'); caret != std::string::npos) {
      const auto base = std::stoull(s.substr(0, caret));
      const auto exp = std::stoull(s.substr(caret + 1));
      std::uint64_t v = 1;
      for (std::uint64_t i = 0; i < exp; ++i) v *= base;
      return v;
    }
    if (s.find_first_of("eE.") != std::string::npos) return static_cast<std::uint64_t>(std::stod(s));
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ExitError{kUsage, "cannot parse count '" + s + "'"};
  }
}

std::vector<std::int64_t> parse_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw ExitError{kUsage, "cannot parse integer list '" + s + "'"};
    }
  }
  return out;
}

IntVec parse_vec(const std::string& s) {
  const auto v = parse_ints(s);
  if (v.size() != 2) throw ExitError{kUsage, "expected x,y but got '" + s + "'"};
  return {v[0], v[1]};
}

/// "x,y;x,y;..."
std::vector<IntVec> parse_cells(const std::string& s) {
  std::vector<IntVec> out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ';'))
    if (!tok.empty()) out.push_back(parse_vec(tok));
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ExitError{kUsage, "cannot write " + path};
  out << text;
}

std::string class_message(const Leaper& l, const char* wanted) {
  std::ostringstream os;
  if (l.cls == LeaperClass::Reducible)
    os << "reducible leaper: use (" << l.p / l.divisor << "," << l.q / l.divisor << ")";
  else if (l.cls == LeaperClass::NonSkew)
    os << "non-skew leaper (" << l.p << "," << l.q << ")";
  else
    os << "leaper (" << l.p << "," << l.q << ") is " << to_string(l.cls) << ", not " << wanted;
  return os.str();
}

Meta meta_for(const Leaper& l, nlohmann::json params) { return Meta{l.p, l.q, kToolVersion, std::move(params)}; }

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::int64_t p = 1, q = 2, k = 1, n = 0;
  std::string variant = "free";
  std::string out;
};

int cmd_construct(const ConstructArgs& a) {
  const Leaper l = classify(a.p, a.q);
  const nlohmann::json params{{"k", a.k}, {"variant", a.variant}, {"n", a.n}};
  std::optional<Document> doc;
  std::int64_t m = 0, n = 0;
  if (a.variant == "free" || a.variant == "halffree") {
    const bool free = a.variant == "free";
    if (l.cls != (free ? LeaperClass::Free : LeaperClass::HalfFree))
      throw ExitError{kUsage, class_message(l, free ? "free" : "half-free")};
    const Construction c = free ? free_construction(l, a.k) : halffree_construction(l, a.k);
    m = c.m;
    n = c.n;
    auto params_out = params;
    params_out["swapped"] = c.swapped;
    doc.emplace(Document{meta_for(l, params_out), PairPayload{c.alpha, c.beta, c.n}});
  } else if (a.variant == "phi") {
    if (l.cls != LeaperClass::HalfFree) throw ExitError{kUsage, class_message(l, "half-free")};
    if (a.n < 1) throw ExitError{kUsage, "--variant phi needs -n"};
    const PhiEmbedding pe = phi_embed(l, a.n);
    m = static_cast<std::int64_t>(pe.embedding.m());
    n = a.n;
    auto params_out = params;
    params_out["k"] = pe.k;
    params_out["derived"] = {pe.derived.p, pe.derived.q};
    doc.emplace(Document{meta_for(l, params_out), EmbeddingPayload{pe.embedding, a.n}});
  } else {
    throw ExitError{kUsage, "unknown variant '" + a.variant + "'"};
  }
  if (!a.out.empty()) save(*doc, a.out);
  std::cout << "m=" << m << " n=" << n << "\n";
  return kValid;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string in;
  std::int64_t n = 0;
};

int cmd_verify(const VerifyArgs& a) {
  const Document doc = load(a.in);
  const Leaper l = classify(doc.meta.p, doc.meta.q);
  if (const auto* pair = std::get_if<PairPayload>(&doc.payload)) {
    const std::int64_t n = a.n > 0 ? a.n : pair->n;
    const VerificationReport r = check_pair(pair->alpha, pair->beta, n);
    std::cout << "m=" << pair->alpha.size() << " n=" << n << "\n"
              << "disjoint=" << (r.disjoint ? "true" : "false") << "\n"
              << "box_ok=" << (r.box_ok ? "true" : "false") << "\n"
              << "sizes: a_X=" << r.a_x << " a_Y=" << r.a_y << " b_X=" << r.b_x << " b_Y=" << r.b_y << "\n"
              << "min_n=" << r.min_n << "\n";
    if (r.witness_overlap) std::cout << "overlap: " << *r.witness_overlap << "\n";
    if (r.a_x + r.b_x > n + 1) std::cout << "box: a_X+b_X = " << r.a_x + r.b_x << " > " << n + 1 << "\n";
    if (r.a_y + r.b_y > n + 1) std::cout << "box: a_Y+b_Y = " << r.a_y + r.b_y << " > " << n + 1 << "\n";
    const bool ok = r.valid() && verify_embedding(product(pair->alpha, pair->beta), l, n);
    std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? kValid : kInvalid;
  }
  if (const auto* emb = std::get_if<EmbeddingPayload>(&doc.payload)) {
    const std::int64_t n = a.n > 0 ? a.n : emb->n;
    const bool ok = verify_embedding(emb->embedding, l, n);
    const Box b = emb->embedding.box();
    std::cout << "m=" << emb->embedding.m() << " n=" << n << "\n"
              << "box: " << b.size_x() << "x" << b.size_y() << "\n"
              << (ok ? "valid" : "invalid") << "\n";
    return ok ? kValid : kInvalid;
  }
  throw ExitError{kMalformed, "verify expects a pair or embedding document, got " + doc.kind()};
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::int64_t p = 1, q = 2, n = 4;
  std::string max_nodes = "200000000";
  double time_budget = 600.0;
  unsigned threads = 1;
  std::string out, table;
};

int cmd_search(const SearchArgs& a) {
  const Leaper l = classify(a.p, a.q);
  SearchLimits limits;
  limits.max_nodes = parse_count(a.max_nodes);
  limits.time_budget = a.time_budget;
  limits.threads = a.threads;
  const auto rows = search_table(l, a.n, limits);
  const std::string text = format_search_table(rows);
  std::cout << text;
  if (!a.table.empty()) write_text(a.table, text);
  if (!a.out.empty())
    save(Document{meta_for(l, {{"n", a.n}, {"max_nodes", limits.max_nodes}, {"time_budget", a.time_budget}}),
                  SearchTablePayload{rows}},
         a.out);
  return kValid;
}

// ---------------------------------------------------------------------------

struct ChordArgs {
  std::string figure = "0,0;1,0;2,0;2,1;2,2";
  std::string basis = "1,1,-1,1";
  std::string u1 = "1,1", u2 = "1,-1";
  std::size_t max_cells = 8;
  std::int64_t max_n = 4;
  std::size_t count = 10000;
  std::size_t random_figures = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int report_suite(const char* name, const SuiteReport& r) {
  std::cout << name << ": " << r.cases << " cases, " << r.counterexamples << " counterexamples\n";
  if (r.first_counterexample) {
    std::cout << "first counterexample: " << r.first_message << "\nfigure:";
    for (IntVec c : *r.first_counterexample) std::cout << ' ' << c;
    std::cout << "\n";
  }
  return r.counterexamples == 0 ? kValid : kInvalid;
}

int cmd_fork_trace(const ChordArgs& a) {
  const auto b = parse_ints(a.basis);
  if (b.size() != 4) throw ExitError{kUsage, "--basis expects ux,uy,vx,vy"};
  const Figure figure(parse_cells(a.figure));
  const Basis basis({b[0], b[1]}, {b[2], b[3]});
  const IntVec u1 = parse_vec(a.u1), u2 = parse_vec(a.u2);
  const ForkCertificate cert = fork_trace(figure, basis, u1, u2);
  static constexpr const char* kSide[] = {"AB", "BC", "CD", "DA"};
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const ForkStep& s = cert.steps[i];
    std::cout << "step " << i << ": pair " << s.pair.first << s.pair.second << " sides";
    for (std::size_t k = 0; k < 4; ++k) std::cout << ' ' << kSide[k] << '=' << s.sides[k] << (s.realized[k] ? "*" : "");
    std::cout << " chosen " << kSide[s.chosen];
    if (s.next) std::cout << " -> " << s.next->first << s.next->second << (s.regular ? " regular" : " irregular");
    std::cout << "\n";
  }
  const auto& c = cert.conclusion;
  std::cout << "conclusion: realizes " << (c.coefficient.x == 1 ? "u" : "v") << " = " << c.target << " via "
            << c.witness.a << " -> " << c.witness.b << "\n";
  if (!a.out.empty())
    save(Document{Meta{0, 0, kToolVersion, {{"subcommand", "fork-trace"}}},
                  CertificatePayload{figure, basis, u1, u2, cert}},
         a.out);
  return kValid;
}

// ---------------------------------------------------------------------------

struct DiagnoseArgs {
  std::int64_t p = 1, q = 3, k = 1;
  std::string in;
  std::int64_t n = 0;
  std::string out;
};

int cmd_diagnose(const DiagnoseArgs& a) {
  std::optional<LeaperPath> alpha, beta;
  std::int64_t n = a.n;
  Leaper l = classify(a.p, a.q);
  if (!a.in.empty()) {
    const Document doc = load(a.in);
    const auto* pair = std::get_if<PairPayload>(&doc.payload);
    if (!pair) throw ExitError{kMalformed, "diagnose expects a pair document"};
    l = classify(doc.meta.p, doc.meta.q);
    alpha = pair->alpha;
    beta = pair->beta;
    if (n == 0) n = pair->n;
  } else {
    if (l.cls != LeaperClass::HalfFree) throw ExitError{kUsage, class_message(l, "half-free")};
    const Construction c = halffree_construction(l, a.k);
    alpha = c.alpha;
    beta = c.beta;
    if (n == 0) n = c.n;
  }
  if (l.cls != LeaperClass::HalfFree) throw ExitError{kUsage, class_message(l, "half-free")};
  const HalfFreeDiagnostic d = halffree_bound_report(*alpha, *beta, n);
  std::cout << "case=" << to_string(d.kase) << " s=" << d.s << " h=" << d.h << " m=" << d.m << " n=" << d.n
            << " slack=" << d.slack << "\n"
            << "realized: hI_alpha=" << d.realized_hI_alpha << " hII_alpha=" << d.realized_hII_alpha
            << " hI_beta=" << d.realized_hI_beta << " hII_beta=" << d.realized_hII_beta << "\n"
            << "alpha multiplicities: diag+=" << d.alpha_mult.diagonal_pos << " diag-=" << d.alpha_mult.diagonal_neg
            << " zigzag|=" << d.alpha_mult.zigzag_vertical << " zigzag-=" << d.alpha_mult.zigzag_horizontal << "\n"
            << "beta multiplicities: diag+=" << d.beta_mult.diagonal_pos << " diag-=" << d.beta_mult.diagonal_neg
            << " zigzag|=" << d.beta_mult.zigzag_vertical << " zigzag-=" << d.beta_mult.zigzag_horizontal << "\n";
  if (!a.out.empty()) save(Document{meta_for(l, {{"n", n}}), DiagnosticPayload{d}}, a.out);
  return kValid;
}

// ---------------------------------------------------------------------------

struct RenderArgs {
  std::string in;
  std::string format = "svg";
  std::string out;
};

int cmd_render(const RenderArgs& a) {
  const Document doc = load(a.in);
  Scene scene;
  if (const auto* p = std::get_if<PathPayload>(&doc.payload))
    scene = scene_of(p->path);
  else if (const auto* pr = std::get_if<PairPayload>(&doc.payload))
    scene = scene_of(product(pr->alpha, pr->beta), pr->n);
  else if (const auto* e = std::get_if<EmbeddingPayload>(&doc.payload))
    scene = scene_of(e->embedding, e->n);
  else
    throw ExitError{kMalformed, "render expects a path, pair or embedding document, got " + doc.kind()};
  if (a.format == "svg")
    write_text(a.out, render_svg(scene));
  else if (a.format == "ascii")
    write_text(a.out, render_ascii(scene));
  else
    throw ExitError{kUsage, "unknown format '" + a.format + "'"};
  return kValid;
}

int exit_code_for(Errc e) {
  switch (e) {
    case Errc::Malformed: return kMalformed;
    case Errc::WrongClass:
    case Errc::NotReducible: return kUsage;
    case Errc::PreconditionUnmet:
    case Errc::NotFork:
    case Errc::NotConvex:
    case Errc::Degenerate:
    case Errc::BoardTooSmall: return kPrecondition;
    default: return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid embeddings into leaper graphs and forced-chord experiments"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build an explicit path pair or phi-embedding");
  construct->add_option("-p", ca.p, "leap component p")->required();
  construct->add_option("-q", ca.q, "leap component q")->required();
  construct->add_option("-k", ca.k, "repetition count");
  construct->add_option("-n", ca.n, "board size (phi variant)");
  construct->add_option("--variant", ca.variant, "free | halffree | phi");
  construct->add_option("--out", ca.out, "output JSON document");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a pair or embedding against an n x n board");
  verify->add_option("in", va.in, "input JSON document")->required();
  verify->add_option("-n", va.n, "board size (defaults to the document's n)");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exact maximal grid size for boards 1..n");
  search->add_option("-p", sa.p)->required();
  search->add_option("-q", sa.q)->required();
  search->add_option("-n", sa.n, "largest board size")->required();
  search->add_option("--max-nodes", sa.max_nodes, "node budget per board (e.g. 10^7)");
  search->add_option("--time-budget", sa.time_budget, "seconds per board");
  search->add_option("--threads", sa.threads);
  search->add_option("--out", sa.out, "search_table JSON document");
  search->add_option("--table", sa.table, "plain-text table");

  ChordArgs ch;
  auto* chords = app.add_subcommand("chords", "forced-chord experiments");
  chords->require_subcommand(1);
  auto* fork = chords->add_subcommand("fork-trace", "run the fork procedure and print its certificate");
  fork->add_option("--figure", ch.figure, "cells as x,y;x,y;...");
  fork->add_option("--basis", ch.basis, "ux,uy,vx,vy");
  fork->add_option("--u1", ch.u1, "first coefficient pair a,b");
  fork->add_option("--u2", ch.u2, "second coefficient pair c,d");
  fork->add_option("--out", ch.out, "certificate JSON document");
  auto* chord_suite = chords->add_subcommand("chord-suite", "realizes n*v implies realizes v");
  chord_suite->add_option("--max-cells", ch.max_cells, "exhaustive polyomino size");
  chord_suite->add_option("--max-n", ch.max_n);
  chord_suite->add_option("--random", ch.random_figures, "additional random figures");
  chord_suite->add_option("--seed", ch.seed);
  auto* quad_suite = chords->add_subcommand("quad-suite", "diagonals force sides");
  quad_suite->add_option("--count", ch.count);
  quad_suite->add_option("--seed", ch.seed);
  auto* fork_suite = chords->add_subcommand("fork-suite", "randomized fork certificates");
  fork_suite->add_option("--count", ch.count);
  fork_suite->add_option("--seed", ch.seed);

  DiagnoseArgs da;
  auto* diagnose = app.add_subcommand("diagnose", "half-free slope/lattice diagnostics for a path pair");
  diagnose->add_option("-p", da.p);
  diagnose->add_option("-q", da.q);
  diagnose->add_option("-k", da.k);
  diagnose->add_option("-n", da.n);
  diagnose->add_option("--in", da.in, "pair JSON document instead of a construction");
  diagnose->add_option("--out", da.out, "diagnostic JSON document");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "draw a path, pair or embedding");
  render->add_option("in", ra.in)->required();
  render->add_option("--format", ra.format, "ascii | svg");
  render->add_option("--out", ra.out, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*verify) return cmd_verify(va);
    if (*search) return cmd_search(sa);
    if (*fork) return cmd_fork_trace(ch);
    if (*chord_suite) {
      SuiteReport r = chord_suite_exhaustive(ch.max_cells, ch.max_n);
      if (ch.random_figures > 0) {
        const SuiteReport extra = chord_suite_random(ch.seed, ch.random_figures, 60, ch.max_n);
        r.cases += extra.cases;
        if (extra.counterexamples > 0 && r.counterexamples == 0) {
          r.first_counterexample = extra.first_counterexample;
          r.first_message = extra.first_message;
        }
        r.counterexamples += extra.counterexamples;
      }
      return report_suite("chord-suite", r);
    }
    if (*quad_suite) return report_suite("quad-suite", quad_suite_random(ch.seed, ch.count));
    if (*fork_suite) return report_suite("fork-suite", fork_suite_random(ch.seed, ch.count));
    if (*diagnose) return cmd_diagnose(da);
    if (*render) return cmd_render(ra);
  } catch (const ExitError& e) {
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}
