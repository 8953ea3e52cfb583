#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "leaper/embedding.hpp"
#include "leaper/error.hpp"
#include "leaper/figure.hpp"
#include "leaper/fork.hpp"
#include "leaper/halffree.hpp"
#include "leaper/path.hpp"
#include "leaper/search.hpp"
#include "leaper/suites.hpp"

namespace leaper {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct PathPayload {
  LeaperPath path;
  friend bool operator==(const PathPayload&, const PathPayload&) = default;
};

struct PairPayload {
  LeaperPath alpha;
  LeaperPath beta;
  std::int64_t n = 0;
  friend bool operator==(const PairPayload&, const PairPayload&) = default;
};

struct EmbeddingPayload {
  GridEmbedding embedding;
  std::int64_t n = 0;
  friend bool operator==(const EmbeddingPayload&, const EmbeddingPayload&) = default;
};

struct CertificatePayload {
  Figure figure;
  Basis basis;
  IntVec u1, u2;
  ForkCertificate certificate;
  friend bool operator==(const CertificatePayload&, const CertificatePayload&) = default;
};

struct SearchTablePayload {
  std::vector<SearchResult> rows;
  friend bool operator==(const SearchTablePayload&, const SearchTablePayload&) = default;
};

struct DiagnosticPayload {
  HalfFreeDiagnostic diagnostic;
  friend bool operator==(const DiagnosticPayload&, const DiagnosticPayload&) = default;
};

using Payload = std::variant<PathPayload, PairPayload, EmbeddingPayload, CertificatePayload, SearchTablePayload,
                             DiagnosticPayload>;

inline constexpr const char* kKindNames[] = {"path", "pair", "embedding", "certificate", "search_table", "diagnostic"};

struct Meta {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string tool_version = kToolVersion;
  nlohmann::json params = nlohmann::json::object();
  friend bool operator==(const Meta&, const Meta&) = default;
};

/// A self-describing JSON file: {schema_version, kind, meta, payload}.
struct Document {
  Meta meta;
  Payload payload;

  std::string kind() const { return kKindNames[payload.index()]; }
  friend bool operator==(const Document&, const Document&) = default;
};

namespace json_detail {

using nlohmann::json;

[[noreturn]] inline void malformed(const std::string& what) { throw Error(Errc::Malformed, what); }

inline json vec(IntVec v) { return json::array({v.x, v.y}); }

inline IntVec vec(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    malformed("point must be a two-element integer array");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

inline json vecs(std::span<const IntVec> v) {
  json out = json::array();
  for (IntVec p : v) out.push_back(vec(p));
  return out;
}

inline std::vector<IntVec> vecs(const json& j) {
  if (!j.is_array()) malformed("expected an array of points");
  std::vector<IntVec> out;
  for (const auto& e : j) out.push_back(vec(e));
  return out;
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("field '") + key + "': " + e.what());
  }
}

inline json pair_json(const GoodPair& gp) { return json::array({vec(gp.first), vec(gp.second)}); }

inline GoodPair pair_from(const json& j) {
  if (!j.is_array() || j.size() != 2) malformed("good pair must have two vectors");
  GoodPair gp{vec(j[0]), vec(j[1])};
  if (!gp.valid()) malformed("invalid good pair");
  return gp;
}

inline json to_json(const PathPayload& p) { return {{"vertices", vecs(p.path.vertices())}}; }

inline json to_json(const PairPayload& p) {
  return {{"alpha", vecs(p.alpha.vertices())}, {"beta", vecs(p.beta.vertices())}, {"m", p.alpha.size()}, {"n", p.n}};
}

inline json to_json(const EmbeddingPayload& p) {
  json rows = json::array();
  for (std::size_t i = 0; i < p.embedding.m(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < p.embedding.m(); ++j) row.push_back(vec(p.embedding.at(i, j)));
    rows.push_back(row);
  }
  return {{"m", p.embedding.m()}, {"n", p.n}, {"points", rows}};
}

inline json to_json(const CertificatePayload& c) {
  json steps = json::array();
  for (const ForkStep& s : c.certificate.steps) {
    json js{{"pair", pair_json(s.pair)},
            {"sides", vecs(s.sides)},
            {"realized", s.realized},
            {"chosen", s.chosen},
            {"regular", s.regular}};
    js["next"] = s.next ? pair_json(*s.next) : json(nullptr);
    steps.push_back(js);
  }
  const auto& con = c.certificate.conclusion;
  return {{"figure", vecs(c.figure.cells())},
          {"basis", json::array({vec(c.basis.u()), vec(c.basis.v())})},
          {"inputs", json::array({vec(c.u1), vec(c.u2)})},
          {"steps", steps},
          {"conclusion",
           {{"coefficient", vec(con.coefficient)},
            {"target", vec(con.target)},
            {"witness", json::array({vec(con.witness.a), vec(con.witness.b)})}}}};
}

inline json to_json(const SearchTablePayload& t) {
  json rows = json::array();
  for (const SearchResult& r : t.rows) {
    json row{{"n", r.n}, {"m_star", r.m_star}, {"m_upper", r.m_upper}, {"exhausted", r.exhausted}, {"nodes", r.nodes}};
    row["witness"] = r.witness ? json{{"alpha", vecs(r.witness->first.vertices())},
                                      {"beta", vecs(r.witness->second.vertices())}}
                               : json(nullptr);
    rows.push_back(row);
  }
  return {{"rows", rows}};
}

inline json mult_json(const Multiplicities& m) {
  return {{"diagonal_pos", m.diagonal_pos},
          {"diagonal_neg", m.diagonal_neg},
          {"zigzag_vertical", m.zigzag_vertical},
          {"zigzag_horizontal", m.zigzag_horizontal}};
}

inline Multiplicities mult_from(const json& j) {
  return {get<std::size_t>(j, "diagonal_pos"), get<std::size_t>(j, "diagonal_neg"),
          get<std::size_t>(j, "zigzag_vertical"), get<std::size_t>(j, "zigzag_horizontal")};
}

inline json to_json(const DiagnosticPayload& p) {
  const auto& d = p.diagnostic;
  json owners = json::array();
  for (SlopeOwner o : d.split.owner)
    owners.push_back(o == SlopeOwner::Alpha ? "alpha" : o == SlopeOwner::Beta ? "beta" : "neither");
  return {{"slope_owner", owners},
          {"case", to_string(d.kase)},
          {"s", d.s},
          {"h", d.h},
          {"realized", {{"hI_alpha", d.realized_hI_alpha},
                        {"hII_alpha", d.realized_hII_alpha},
                        {"hI_beta", d.realized_hI_beta},
                        {"hII_beta", d.realized_hII_beta}}},
          {"alpha_multiplicities", mult_json(d.alpha_mult)},
          {"beta_multiplicities", mult_json(d.beta_mult)},
          {"m", d.m},
          {"n", d.n},
          {"slack", d.slack}};
}

inline LeaperPath path_from(const Leaper& l, const json& j) {
  auto v = vecs(j);
  if (v.empty()) malformed("path has no vertices");
  return LeaperPath(l, std::move(v));
}

inline Payload payload_from(const std::string& kind, const Leaper& l, const json& j) {
  if (kind == "path") return PathPayload{path_from(l, field(j, "vertices"))};
  if (kind == "pair") {
    PairPayload p{path_from(l, field(j, "alpha")), path_from(l, field(j, "beta")), get<std::int64_t>(j, "n")};
    if (p.alpha.size() != p.beta.size()) malformed("alpha and beta differ in length");
    return p;
  }
  if (kind == "embedding") {
    const auto m = get<std::size_t>(j, "m");
    const json& rows = field(j, "points");
    if (!rows.is_array() || rows.size() != m) malformed("embedding must have m rows");
    std::vector<IntVec> pts;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != m) malformed("embedding row must have m points");
      for (const auto& e : row) pts.push_back(vec(e));
    }
    GridEmbedding e(l, m, std::move(pts));
    if (!all_distinct(e.points())) malformed("embedding points are not distinct");
    for (auto [a, b] : e.edges())
      if (!l.is_leap(b - a)) malformed("embedding edge is not a leap");
    return EmbeddingPayload{std::move(e), get<std::int64_t>(j, "n")};
  }
  if (kind == "certificate") {
    Figure fig(vecs(field(j, "figure")));
    const auto basis_v = vecs(field(j, "basis"));
    const auto inputs = vecs(field(j, "inputs"));
    if (basis_v.size() != 2 || inputs.size() != 2) malformed("basis and inputs need two vectors each");
    Basis basis(basis_v[0], basis_v[1]);
    ForkCertificate cert;
    for (const auto& js : field(j, "steps")) {
      ForkStep s;
      s.pair = pair_from(field(js, "pair"));
      const auto sides = vecs(field(js, "sides"));
      if (sides.size() != 4) malformed("step needs four sides");
      std::copy(sides.begin(), sides.end(), s.sides.begin());
      s.realized = get<std::array<bool, 4>>(js, "realized");
      s.chosen = get<int>(js, "chosen");
      if (s.chosen < 0 || s.chosen > 3) malformed("chosen side out of range");
      s.regular = get<bool>(js, "regular");
      if (!field(js, "next").is_null()) s.next = pair_from(field(js, "next"));
      cert.steps.push_back(s);
    }
    const json& con = field(j, "conclusion");
    const auto w = vecs(field(con, "witness"));
    if (w.size() != 2) malformed("witness needs two points");
    cert.conclusion = {vec(field(con, "coefficient")), vec(field(con, "target")), {w[0], w[1]}};
    if (auto msg = audit_fork_certificate(fig, basis, cert); !msg.empty()) malformed("certificate: " + msg);
    return CertificatePayload{std::move(fig), basis, inputs[0], inputs[1], std::move(cert)};
  }
  if (kind == "search_table") {
    SearchTablePayload t;
    for (const auto& jr : field(j, "rows")) {
      SearchResult r;
      r.n = get<std::int64_t>(jr, "n");
      r.m_star = get<std::int64_t>(jr, "m_star");
      r.m_upper = get<std::int64_t>(jr, "m_upper");
      r.exhausted = get<bool>(jr, "exhausted");
      r.nodes = get<std::uint64_t>(jr, "nodes");
      if (const json& w = field(jr, "witness"); !w.is_null()) {
        r.witness.emplace(path_from(l, field(w, "alpha")), path_from(l, field(w, "beta")));
        const auto rep = check_pair(r.witness->first, r.witness->second, r.n);
        if (!rep.valid() || static_cast<std::int64_t>(r.witness->first.size()) != r.m_star)
          malformed("search witness does not verify");
      }
      t.rows.push_back(std::move(r));
    }
    return t;
  }
  if (kind == "diagnostic") {
    HalfFreeDiagnostic d;
    d.split.leaper = l;
    const auto owners = get<std::vector<std::string>>(j, "slope_owner");
    if (owners.size() != 4) malformed("slope_owner needs four entries");
    for (std::size_t i = 0; i < 4; ++i) {
      const std::string& o = owners[i];
      d.split.owner[i] = o == "alpha" ? SlopeOwner::Alpha : o == "beta" ? SlopeOwner::Beta : SlopeOwner::Neither;
      d.split.alpha_classes += o == "alpha";
      d.split.beta_classes += o == "beta";
    }
    const auto c = get<std::string>(j, "case");
    d.kase = c == "Case1" ? HalfFreeCase::Case1 : c == "Case2" ? HalfFreeCase::Case2 : HalfFreeCase::SingleSlope;
    d.s = get<std::int64_t>(j, "s");
    d.h = get<std::int64_t>(j, "h");
    if (d.kase != HalfFreeCase::SingleSlope) {
      const auto p = l.p, q = l.q;
      if (d.s != 2 * p * q && d.s != std::llabs(p * p - q * q) && d.s != p * p + q * q)
        malformed("fundamental area is not one of 2pq, |p^2-q^2|, p^2+q^2");
      if (2 * d.h != d.s) malformed("h must be s/2");
    }
    const json& r = field(j, "realized");
    d.realized_hI_alpha = get<bool>(r, "hI_alpha");
    d.realized_hII_alpha = get<bool>(r, "hII_alpha");
    d.realized_hI_beta = get<bool>(r, "hI_beta");
    d.realized_hII_beta = get<bool>(r, "hII_beta");
    d.alpha_mult = mult_from(field(j, "alpha_multiplicities"));
    d.beta_mult = mult_from(field(j, "beta_multiplicities"));
    d.m = get<std::int64_t>(j, "m");
    d.n = get<std::int64_t>(j, "n");
    d.slack = get<double>(j, "slack");
    return DiagnosticPayload{d};
  }
  malformed("unknown document kind '" + kind + "'");
}

}  // namespace json_detail

inline nlohmann::json to_json(const Document& doc) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = doc.kind();
  j["meta"] = {{"leaper", {doc.meta.p, doc.meta.q}}, {"tool_version", doc.meta.tool_version}, {"params", doc.meta.params}};
  j["payload"] = std::visit([](const auto& p) { return json_detail::to_json(p); }, doc.payload);
  return j;
}

/// Parses and validates a document. Every failure, including library
/// invariant violations in the payload, surfaces as Errc::Malformed.
inline Document from_json(const nlohmann::json& j) {
  using namespace json_detail;
  try {
    if (get<int>(j, "schema_version") != kSchemaVersion) malformed("unsupported schema_version");
    const auto kind = get<std::string>(j, "kind");
    const json& meta = field(j, "meta");
    const auto pq = get<std::vector<std::int64_t>>(meta, "leaper");
    if (pq.size() != 2) malformed("meta.leaper must be [p, q]");
    Document doc{{pq[0], pq[1], get<std::string>(meta, "tool_version"),
                  meta.contains("params") ? meta.at("params") : json::object()},
                 payload_from(kind, classify(pq[0], pq[1]), field(j, "payload"))};
    return doc;
  } catch (const Error& e) {
    if (e.code() == Errc::Malformed) throw;
    throw Error(Errc::Malformed, e.what());
  }
}

inline std::string dump(const Document& doc) { return to_json(doc).dump(1) + "\n"; }

inline Document parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Malformed, e.what());
  }
  return from_json(j);
}

inline void save(const Document& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Malformed, "cannot write " + path);
  out << dump(doc);
}

inline Document load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Malformed, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

}  // namespace leaper
