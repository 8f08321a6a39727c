#include "latscreen/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "latscreen/oracle.hpp"
#include "latscreen/pairs.hpp"
#include "latscreen/screeners.hpp"

namespace latscreen {

namespace {

LatticeError parse_error(std::size_t line, std::size_t col, const std::string& what) {
  return LatticeError(ErrorCode::kParse,
                      "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

IntMatrix square_from_rows(const std::vector<Vec>& rows) {
  const std::size_t d = rows.size();
  if (d == 0) throw LatticeError(ErrorCode::kParse, "empty Gram matrix");
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d) {
      throw LatticeError(ErrorCode::kDimensionMismatch, "Gram matrix is not square: row " + std::to_string(i + 1) +
                                                            " has " + std::to_string(rows[i].size()) +
                                                            " entries, expected " + std::to_string(d));
    }
  }
  return from_rows(rows, d);
}

LatticeFile parse_json_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = locate(text, at);
    std::string msg = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line ..., column ...: " prefix.
    if (auto k = msg.find("syntax error"); k != std::string::npos) msg = msg.substr(k);
    throw parse_error(line, col, msg);
  }
  if (!j.is_object()) throw LatticeError(ErrorCode::kParse, "input must be a JSON object");
  if (!j.contains("gram")) throw LatticeError(ErrorCode::kParse, "missing key \"gram\"");
  const Json& g = j["gram"];
  if (!g.is_array()) throw LatticeError(ErrorCode::kParse, "\"gram\" must be an array of rows");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_array()) throw LatticeError(ErrorCode::kParse, "gram row " + std::to_string(i + 1) + " is not an array");
    Vec row;
    for (std::size_t k = 0; k < g[i].size(); ++k) {
      const Json& e = g[i][k];
      if (!e.is_number_integer()) {
        throw LatticeError(ErrorCode::kParse, "gram entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                                                  ") is not an integer");
      }
      row.push_back(e.get<std::int64_t>());
    }
    rows.push_back(std::move(row));
  }
  LatticeFile out;
  out.gram = square_from_rows(rows);
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw LatticeError(ErrorCode::kParse, "\"name\" must be a string");
    out.name = j["name"].get<std::string>();
  }
  if (j.contains("scale")) {
    if (!j["scale"].is_number_integer() || j["scale"].get<std::int64_t>() < 1) {
      throw LatticeError(ErrorCode::kParse, "\"scale\" must be a positive integer");
    }
    out.scale = j["scale"].get<std::int64_t>();
  }
  return out;
}

LatticeFile parse_block_input(const std::string& text) {
  std::vector<Vec> rows;
  std::size_t line = 1, pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    Vec row;
    std::size_t i = pos;
    while (i < end) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < end && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      std::int64_t v = 0;
      const char* first = text.data() + i;
      const char* last = text.data() + j;
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last) {
        throw parse_error(line, i - pos + 1, "expected an integer, found '" + text.substr(i, j - i) + "'");
      }
      row.push_back(v);
      i = j;
    }
    if (!row.empty()) rows.push_back(std::move(row));
    pos = end + 1;
    ++line;
  }
  LatticeFile out;
  out.gram = square_from_rows(rows);
  return out;
}

Json vec_json(const Vec& v) { return Json(v); }

Json vecs_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  return a;
}

Json rat_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

// Exact integers as JSON numbers when they fit, strings otherwise.
Json big_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

Json warning(const std::string& code, const std::string& message) {
  return Json{{"code", code}, {"message", message}};
}

Json envelope(const std::string& command, const std::string& digest) {
  Json doc;
  doc["command"] = command;
  doc["input_digest"] = digest;
  doc["results"] = Json::object();
  doc["warnings"] = Json::array();
  return doc;
}

Json lattice_json(const LatticeFile& in, const Lattice& L) {
  Json j;
  if (!in.name.empty()) j["name"] = in.name;
  j["rank"] = L.rank();
  j["scale"] = in.scale;
  j["gram"] = matrix_json(L.gram());
  j["det"] = big_json(L.det());
  j["even"] = L.even();
  return j;
}

Json screener_list_json(const ScreenerSet& S) {
  Json a = Json::array();
  for (std::size_t i = 0; i < S.size(); ++i) {
    a.push_back(Json{{"vector", S.screeners[i]}, {"norm", S.norms[i]}, {"root", S.norms[i] == 2}});
  }
  return a;
}

Json component_json(const Component& c) {
  return Json{{"type", c.name()}, {"scale", c.scale}, {"rank", c.rank}, {"roots", c.root_count},
              {"basis", vecs_json(c.basis)}};
}

Json group_json(const ExtendedGroup& g) {
  return Json{{"type", g.name()},           {"scale", g.scale},           {"rank", g.rank},
              {"expected_screeners", g.expected}, {"actual_screeners", g.actual}, {"components", g.components}};
}

std::string extended_type_name(const std::vector<ExtendedGroup>& groups) {
  std::string s;
  for (const auto& g : groups) {
    if (!s.empty()) s += " + ";
    s += g.name();
    if (g.scale != 1) s += "(" + std::to_string(g.scale) + ")";
  }
  return s;
}

}  // namespace

LatticeFile parse_lattice_file(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw LatticeError(ErrorCode::kParse, "empty input");
  LatticeFile out = text[first] == '{' ? parse_json_input(text) : parse_block_input(text);
  if (out.scale != 1) {
    for (std::size_t i = 0; i < out.gram.rows(); ++i)
      for (std::size_t j = 0; j < out.gram.cols(); ++j) out.gram(i, j) = checked_mul(out.gram(i, j), out.scale);
  }
  Lattice validate(out.gram);  // symmetry and definiteness diagnostics
  return out;
}

Lattice parse_lattice(const std::string& text) { return Lattice(parse_lattice_file(text).gram); }

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string input_digest(const IntMatrix& gram) {
  std::ostringstream os;
  os << gram.rows();
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) os << (j == 0 ? ';' : ',') << gram(i, j);
  return fnv1a_hex(os.str());
}

Report cmd_screeners(const LatticeFile& in) {
  const Lattice L(in.gram);
  const ScreenerSet S = all_screeners(L);
  Report r;
  r.doc = envelope("screeners", input_digest(in.gram));
  Json& res = r.doc["results"];
  res["lattice"] = lattice_json(in, L);
  res["norm_bound"] = screener_norm_bound(L);
  res["count"] = S.size();
  res["total"] = 2 * S.size();
  std::size_t nonroot = 0;
  Json by_norm = Json::object();
  for (std::int64_t n : S.norms) {
    if (n != 2) ++nonroot;
    const std::string key = std::to_string(n);
    by_norm[key] = by_norm.value(key, 0) + 1;
  }
  res["nonroot_count"] = nonroot;
  res["by_norm"] = by_norm;
  res["screeners"] = screener_list_json(S);
  return r;
}

Report cmd_decompose(const LatticeFile& in) {
  const Lattice L(in.gram);
  const ScreenerSet S = all_screeners(L);
  Report r;
  r.doc = envelope("decompose", input_digest(in.gram));
  Json& res = r.doc["results"];
  res["lattice"] = lattice_json(in, L);
  res["screener_count"] = S.size();
  if (!S.empty()) {
    const SublatticeBasis zp = z_phi(S);
    res["z_phi"] = Json{{"basis", vecs_json(zp.basis)}, {"gram", matrix_json(zp.gram.gram())},
                        {"det", big_json(zp.gram.det())}};
    res["screening_system"] = vecs_json(screening_system(S).vectors);
  } else {
    res["z_phi"] = nullptr;
    res["screening_system"] = Json::array();
  }
  const LPhi lp = l_phi(L, S);
  res["l_phi"] = Json{{"basis", vecs_json(lp.basis)}, {"det", big_json(lp.gram.det())},
                      {"index", big_json(lp.index)}, {"z_phi_rank", lp.zphi_rank}};
  try {
    const ExtendedIdentification id = identify_extended_type(L);
    res["screener_basis"] = vecs_json(id.screener_basis);
    res["reduced_basis"] = vecs_json(id.reduced_basis);
    Json comps = Json::array();
    for (const auto& c : id.components) comps.push_back(component_json(c));
    res["components"] = comps;
  } catch (const LatticeError& e) {
    res["components"] = nullptr;
    r.doc["warnings"].push_back(warning(std::string(to_string(e.code())), e.what()));
  }
  return r;
}

Report cmd_classify(const LatticeFile& in) {
  const Lattice L(in.gram);
  const ExtendedIdentification id = identify_extended_type(L);
  Report r;
  r.doc = envelope("classify", input_digest(in.gram));
  Json& res = r.doc["results"];
  res["lattice"] = lattice_json(in, L);
  res["extended_type"] = extended_type_name(id.groups);
  res["screener_count"] = 2 * id.screeners.size();
  Json comps = Json::array();
  for (const auto& c : id.components) comps.push_back(component_json(c));
  res["components"] = comps;
  Json groups = Json::array();
  for (const auto& g : id.groups) groups.push_back(group_json(g));
  res["groups"] = groups;
  res["cross_screeners"] = id.cross_screeners;
  res["consistent"] = id.consistent();
  if (!id.consistent()) {
    r.mismatch = true;
    r.doc["warnings"].push_back(
        warning(kWarnCountMismatch, "predicted and computed screener counts differ; both are reported"));
  }
  return r;
}

Report cmd_rank2(const LatticeFile& in) {
  const Lattice L(in.gram);
  const auto form = rank2_normal_form(L);
  const ScreenerSet S = all_screeners(L);
  Report r;
  r.doc = envelope("rank2", input_digest(in.gram));
  Json& res = r.doc["results"];
  res["lattice"] = lattice_json(in, L);
  res["computed"] = vecs_json(S.screeners);
  if (!form) {
    res["normal_form"] = nullptr;
    res["agree"] = S.empty();
    r.mismatch = !S.empty();
    return r;
  }
  res["normal_form"] = Json{{"kind", to_string(form->kind)},
                            {"p", form->p},
                            {"m", form->m},
                            {"subtype", to_string(form->subtype)},
                            {"gram", matrix_json(form->gram())},
                            {"basis_change", matrix_json(form->basis_change)}};
  const auto predicted = rank2_predicted_in_lattice(*form);
  res["predicted"] = vecs_json(predicted);
  const bool agree = predicted == S.screeners;
  res["agree"] = agree;
  if (form->odd_p_2b()) {
    // The listed +-alpha_2 has odd norm p; the screener predicate decides.
    std::vector<Vec> filtered;
    for (const auto& v : predicted)
      if (is_screener(L, v)) filtered.push_back(v);
    res["predicted_screeners"] = vecs_json(filtered);
    res["agree_after_predicate"] = filtered == S.screeners;
    r.doc["warnings"].push_back(
        warning(kWarnOddP2b, "subtype 2b with odd p lists vectors of odd norm; the screener predicate is authoritative"));
    r.mismatch = filtered != S.screeners;
  } else if (!agree) {
    r.mismatch = true;
    r.doc["warnings"].push_back(warning(kWarnRank2Mismatch, "predicted screener list differs from the computed set"));
  }
  return r;
}

Report cmd_pairs(const LatticeFile& in, const Vec& alpha, std::int64_t max_r) {
  const Lattice L(in.gram);
  if (alpha.size() != L.rank()) {
    throw LatticeError(ErrorCode::kDimensionMismatch, "vector has length " + std::to_string(alpha.size()) +
                                                          " but lattice has rank " + std::to_string(L.rank()));
  }
  Report r;
  r.doc = envelope("pairs", input_digest(in.gram));
  Json& res = r.doc["results"];
  res["lattice"] = lattice_json(in, L);
  const PairMomentum pm = even_momentum(L, alpha);
  if (pm.doubled) {
    r.doc["warnings"].push_back(warning(kWarnOddMomentum, "odd-norm vector replaced by its double"));
  }
  const Vec& a = pm.alpha;
  res["alpha"] = a;
  res["norm"] = norm(L, a);
  res["is_screener"] = is_screener(L, a);
  res["max_r"] = max_r;
  Json decomps = Json::array();
  for (const auto& [p, q] : pair_decompositions(L, a)) {
    Json d{{"p", p}, {"p_prime", q}};
    try {
      const PairSpec s = make_type_i(L, a, p, q);
      d["type_i"] = Json{{"gamma", rat_json(s.gamma)},
                         {"central_charge", to_string(s.central_charge)},
                         {"m", s.m},
                         {"weights", {to_string(s.weight_first), to_string(s.weight_second)}}};
    } catch (const LatticeError& e) {
      if (e.code() != ErrorCode::kGammaUnavailable) throw;
      d["type_i"] = Json{{"available", false}, {"reason", e.what()}};
      r.doc["warnings"].push_back(warning(kWarnGammaUnavailable, e.what()));
    }
    auto feas_json = [](const Feasibility& f) {
      Json j{{"feasible", f.feasible}, {"p", f.p}, {"p_prime", f.p_prime}, {"m", f.m}};
      if (f.pair) {
        j["gamma"] = rat_json(f.pair->gamma);
        if (f.pair->beta) j["beta"] = rat_json(*f.pair->beta);
        j["central_charge"] = to_string(f.pair->central_charge);
        j["weights"] = {to_string(f.pair->weight_first), to_string(f.pair->weight_second)};
      } else {
        j["reason"] = f.reason;
      }
      return j;
    };
    d["type_ii"] = feas_json(type_ii_feasible(L, a, p, q));
    std::int64_t root = 0;
    if (is_perfect_square(4 * p * q + q * q, &root)) {
      Json t = feas_json(type_iii_feasible(L, a, q, root));
      t["r"] = root;
      d["type_iii"] = t;
    } else {
      d["type_iii"] = Json{{"feasible", false}, {"reason", "4pp' + p'^2 is not a perfect square"}};
    }
    Json iv = Json::array();
    for (const auto& s : type_iv_search(p, q, max_r)) {
      iv.push_back(Json{{"branch", std::string(1, s.branch)}, {"r1", s.r1}, {"r2", s.r2}, {"r", s.r}, {"m", s.m}});
    }
    d["type_iv"] = iv;
    decomps.push_back(d);
  }
  res["decompositions"] = decomps;
  return r;
}

std::pair<RootFamily, std::size_t> parse_type(const std::string& type, std::optional<std::size_t> rank) {
  if (type.empty()) throw LatticeError(ErrorCode::kInvalidArgument, "empty type");
  RootFamily f;
  switch (std::toupper(static_cast<unsigned char>(type[0]))) {
    case 'A': f = RootFamily::A; break;
    case 'D': f = RootFamily::D; break;
    case 'E': f = RootFamily::E; break;
    default: throw LatticeError(ErrorCode::kInvalidArgument, "catalog type must be A, D or E, got '" + type + "'");
  }
  std::string rest = type.substr(1);
  if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
  if (rest.empty()) {
    if (!rank) throw LatticeError(ErrorCode::kInvalidArgument, "catalog type '" + type + "' needs a rank");
    return {f, *rank};
  }
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) {
    throw LatticeError(ErrorCode::kInvalidArgument, "cannot read rank from '" + type + "'");
  }
  if (rank && *rank != n) throw LatticeError(ErrorCode::kInvalidArgument, "type and --rank disagree");
  return {f, n};
}

Report cmd_catalog(const std::string& type, std::optional<std::size_t> rank, std::int64_t scale) {
  const auto [family, n] = parse_type(type, rank);
  const Lattice L = catalog(family, n, scale);
  Report r;
  r.doc = envelope("catalog", input_digest(L.gram()));
  Json& res = r.doc["results"];
  res["type"] = type_name(family, n);
  res["scale"] = scale;
  res["rank"] = L.rank();
  res["gram"] = matrix_json(L.gram());
  res["det"] = big_json(L.det());
  return r;
}

Report cmd_oracle_check(std::uint64_t seed, std::size_t max_rank, std::size_t cases, std::int64_t max_entry) {
  const OracleReport o = oracle_check(seed, max_rank, cases, max_entry);
  Report r;
  std::ostringstream params;
  params << "oracle-check;" << seed << ';' << max_rank << ';' << cases << ';' << max_entry;
  r.doc = envelope("oracle-check", fnv1a_hex(params.str()));
  Json& res = r.doc["results"];
  res["seed"] = seed;
  res["max_rank"] = max_rank;
  res["max_entry"] = max_entry;
  res["cases"] = cases;
  res["mismatches"] = o.mismatches();
  res["status"] = o.mismatches() == 0 ? "PASS" : "FAIL";
  Json list = Json::array();
  r.timing = Json::array();
  for (std::size_t i = 0; i < o.cases.size(); ++i) {
    const OracleCase& c = o.cases[i];
    list.push_back(Json{{"case", i},
                        {"gram", matrix_json(c.gram)},
                        {"screeners", c.fast_count},
                        {"box_screeners", c.box_count},
                        {"match", c.match}});
    r.timing.push_back(Json{{"case", i}, {"fast_ms", c.fast_ms}, {"box_ms", c.box_ms}});
  }
  res["per_case"] = list;
  r.mismatch = o.mismatches() != 0;
  return r;
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (!is_flat(e)) return false;
  return true;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v)) {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        os << pad << "- " << (e.is_string() ? e.get<std::string>() : e.dump()) << '\n';
      } else {
        os << pad << "-\n";
        render(os, e, indent + 2);
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

}  // namespace latscreen
