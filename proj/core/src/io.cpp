#include "wdg/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace wdg {

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::string rest;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  cur = trim(cur);
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<Line> lex_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream is(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(is, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const std::size_t colon = raw.find(':');
    if (colon == std::string::npos)
      throw ParseError(number, "expected 'key: value'");
    Line line;
    line.number = number;
    line.key = trim(raw.substr(0, colon));
    line.rest = trim(raw.substr(colon + 1));
    lines.push_back(line);
  }
  return lines;
}

// Shared header state while scanning a document.
struct HeaderState {
  std::string type;
  CoxeterMatrix cm;
  bool have_generators = false;
};

void handle_generators(HeaderState& h, const Line& line) {
  if (h.have_generators)
    throw ParseError(line.number, "duplicate generators line");
  const auto names = split_ws(line.rest);
  if (names.empty()) throw ParseError(line.number, "no generators listed");
  try {
    h.cm = CoxeterMatrix(names);
  } catch (const std::exception& e) {
    throw ParseError(line.number, e.what());
  }
  h.have_generators = true;
}

void handle_order(HeaderState& h, const Line& line) {
  if (!h.have_generators)
    throw ParseError(line.number, "order line before generators");
  const auto toks = split_ws(line.rest);
  if (toks.size() != 3)
    throw ParseError(line.number, "expected 'order: R S M'");
  const auto i = h.cm.index(toks[0]);
  if (!i) throw ParseError(line.number, "unknown generator '" + toks[0] + "'");
  const auto j = h.cm.index(toks[1]);
  if (!j) throw ParseError(line.number, "unknown generator '" + toks[1] + "'");
  unsigned m = 0;
  if (toks[2] == "inf") {
    m = kInfiniteOrder;
  } else {
    if (toks[2].empty() || toks[2].size() > 8 ||
        toks[2].find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(line.number, "bad order value '" + toks[2] + "'");
    const unsigned long v = std::stoul(toks[2]);
    if (v < 2) throw ParseError(line.number, "order must be at least 2 or 'inf'");
    m = static_cast<unsigned>(v);
  }
  try {
    h.cm.set_order(*i, *j, m);
  } catch (const std::exception& e) {
    throw ParseError(line.number, e.what());
  }
}

void require_complete_orders(const HeaderState& h) {
  for (std::size_t i = 0; i < h.cm.size(); ++i)
    for (std::size_t j = i + 1; j < h.cm.size(); ++j)
      if (h.cm.order(i, j) == 0)
        throw ParseError(0, "missing order for {" + h.cm.name(i) + "," +
                                h.cm.name(j) + "}");
}

GenSet parse_label_list(const CoxeterMatrix& cm, const std::string& rest,
                        std::size_t number) {
  GenSet set = 0;
  for (const auto& name : split_commas(rest)) {
    const auto idx = cm.index(name);
    if (!idx) throw ParseError(number, "unknown generator '" + name + "'");
    const GenSet bit = GenSet{1} << *idx;
    if (set & bit) throw ParseError(number, "repeated label '" + name + "'");
    set |= bit;
  }
  return set;
}

}  // namespace

Document parse_document(const std::string& text) {
  const auto lines = lex_lines(text);
  HeaderState h;

  // First pass: type and Coxeter data must precede the body.
  std::size_t body_start = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.key == "type") {
      if (!h.type.empty()) throw ParseError(line.number, "duplicate type line");
      if (line.rest != "wdigraph" && line.rest != "wgraph")
        throw ParseError(line.number, "type must be wdigraph or wgraph");
      h.type = line.rest;
    } else if (line.key == "generators") {
      handle_generators(h, line);
    } else if (line.key == "order") {
      handle_order(h, line);
    } else {
      body_start = i;
      break;
    }
    body_start = i + 1;
  }
  if (h.type.empty()) throw ParseError(1, "missing type line");
  if (!h.have_generators) throw ParseError(1, "missing generators line");
  require_complete_orders(h);

  if (h.type == "wdigraph") {
    WDigraph g(h.cm);
    for (std::size_t i = body_start; i < lines.size(); ++i) {
      const Line& line = lines[i];
      if (line.key == "vertex") {
        const auto toks = split_ws(line.rest);
        if (toks.size() != 1)
          throw ParseError(line.number, "expected 'vertex: NAME'");
        try {
          g.add_vertex(toks[0]);
        } catch (const std::exception& e) {
          throw ParseError(line.number, e.what());
        }
      } else if (line.key == "edge") {
        const auto toks = split_ws(line.rest);
        if (toks.size() != 4)
          throw ParseError(line.number, "expected 'edge: SRC DST GEN KIND'");
        EdgeKind kind;
        if (toks[3] == "solid")
          kind = EdgeKind::solid;
        else if (toks[3] == "dashed")
          kind = EdgeKind::dashed;
        else
          throw ParseError(line.number, "edge kind must be solid or dashed");
        try {
          g.add_edge(toks[0], toks[1], toks[2], kind);
        } catch (const std::exception& e) {
          throw ParseError(line.number, e.what());
        }
      } else {
        throw ParseError(line.number, "unexpected '" + line.key +
                                          "' in a wdigraph document");
      }
    }
    return g;
  }

  WGraph p(h.cm);
  for (std::size_t i = body_start; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.key == "vertex") {
      const std::size_t marker = line.rest.find("labels:");
      if (marker == std::string::npos)
        throw ParseError(line.number, "expected 'vertex: NAME labels: ...'");
      const auto name_toks = split_ws(trim(line.rest.substr(0, marker)));
      if (name_toks.size() != 1)
        throw ParseError(line.number, "expected a single vertex name");
      const GenSet labels =
          parse_label_list(p.cm(), trim(line.rest.substr(marker + 7)), line.number);
      try {
        p.add_vertex(name_toks[0], labels);
      } catch (const std::exception& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (line.key == "mu") {
      const auto toks = split_ws(line.rest);
      if (toks.size() != 3)
        throw ParseError(line.number, "expected 'mu: FROM TO VALUE'");
      Rational value;
      try {
        value = parse_rational(toks[2]);
      } catch (const std::exception& e) {
        throw ParseError(line.number, e.what());
      }
      try {
        p.set_mu(toks[0], toks[1], value);
      } catch (const std::exception& e) {
        throw ParseError(line.number, e.what());
      }
    } else {
      throw ParseError(line.number,
                       "unexpected '" + line.key + "' in a wgraph document");
    }
  }
  return p;
}

WDigraph parse_digraph(const std::string& text) {
  Document d = parse_document(text);
  if (!std::holds_alternative<WDigraph>(d))
    throw ParseError(1, "expected a wdigraph document");
  return std::get<WDigraph>(std::move(d));
}

WGraph parse_wgraph(const std::string& text) {
  Document d = parse_document(text);
  if (!std::holds_alternative<WGraph>(d))
    throw ParseError(1, "expected a wgraph document");
  return std::get<WGraph>(std::move(d));
}

CoxeterMatrix parse_coxeter_header(const std::string& text) {
  const auto lines = lex_lines(text);
  HeaderState h;
  for (const Line& line : lines) {
    if (line.key == "generators")
      handle_generators(h, line);
    else if (line.key == "order")
      handle_order(h, line);
    else if (line.key != "type")
      break;
  }
  if (!h.have_generators) throw ParseError(1, "missing generators line");
  require_complete_orders(h);
  return h.cm;
}

namespace {

void emit_header(std::ostringstream& os, const std::string& type,
                 const CoxeterMatrix& cm) {
  os << "type: " << type << "\n";
  os << "generators:";
  for (const auto& g : cm.generators()) os << ' ' << g;
  os << "\n";
  for (std::size_t i = 0; i < cm.size(); ++i)
    for (std::size_t j = i + 1; j < cm.size(); ++j) {
      os << "order: " << cm.name(i) << ' ' << cm.name(j) << ' ';
      if (cm.order(i, j) == kInfiniteOrder)
        os << "inf";
      else
        os << cm.order(i, j);
      os << "\n";
    }
}

}  // namespace

std::string emit(const WDigraph& g) {
  std::ostringstream os;
  emit_header(os, "wdigraph", g.cm());
  for (const auto& v : g.vertices()) os << "vertex: " << v << "\n";
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges)
    os << "edge: " << g.vertex_name(e.src) << ' ' << g.vertex_name(e.dst) << ' '
       << g.cm().name(e.label) << ' '
       << (e.kind == EdgeKind::solid ? "solid" : "dashed") << "\n";
  return os.str();
}

std::string emit(const WGraph& p) {
  std::ostringstream os;
  emit_header(os, "wgraph", p.cm());
  for (std::size_t x = 0; x < p.vertex_count(); ++x) {
    os << "vertex: " << p.vertex_name(x) << " labels:";
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p.cm().size(); ++i)
      if (p.labels(x) & (GenSet{1} << i)) names.push_back(p.cm().name(i));
    std::sort(names.begin(), names.end());
    for (std::size_t i = 0; i < names.size(); ++i)
      os << (i == 0 ? " " : ",") << names[i];
    os << "\n";
  }
  for (const auto& [key, value] : p.mu_entries())
    os << "mu: " << p.vertex_name(key.first) << ' ' << p.vertex_name(key.second)
       << ' ' << to_string(value) << "\n";
  return os.str();
}

std::string emit(const Document& d) {
  return std::visit([](const auto& x) { return emit(x); }, d);
}

namespace {

std::string word_to_string(const Word& w) {
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty()) out += " ";
    out += letter;
  }
  return out;
}

nlohmann::ordered_json side_to_json(const SideInvariants& side,
                                    const CoxeterMatrix& cm) {
  nlohmann::ordered_json j;
  j["kind"] = side.kind;
  j["dimension"] = side.dimension;
  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  for (const GenSet J : subsets_sorted(cm)) {
    const auto it = side.n_table.find(J);
    if (it != side.n_table.end() && it->second > 0)
      table[subset_to_string(cm, J)] = it->second;
  }
  j["N"] = table;
  j["ind"] = side.ind_dim;
  j["sgn"] = side.sgn_dim;
  if (side.components) j["components"] = *side.components;
  if (side.acyclic_components) j["acyclic_components"] = *side.acyclic_components;
  if (side.ind_comb) j["ind_comb"] = *side.ind_comb;
  if (side.sgn_comb) j["sgn_comb"] = *side.sgn_comb;
  nlohmann::ordered_json traces = nlohmann::ordered_json::object();
  for (const auto& [word, value] : side.traces)
    traces[word_to_string(word)] = value.str();
  j["traces"] = traces;
  return j;
}

void render_side_text(std::ostringstream& os, const SideInvariants& side,
                      const CoxeterMatrix& cm, const std::string& prefix) {
  os << prefix << "kind: " << side.kind << "\n";
  os << prefix << "dimension: " << side.dimension << "\n";
  for (const GenSet J : subsets_sorted(cm)) {
    const auto it = side.n_table.find(J);
    if (it != side.n_table.end() && it->second > 0)
      os << prefix << "N " << subset_to_string(cm, J) << " " << it->second
         << "\n";
  }
  if (side.components) os << prefix << "components: " << *side.components << "\n";
  if (side.acyclic_components)
    os << prefix << "acyclic_components: " << *side.acyclic_components << "\n";
  os << prefix << "ind linalg " << side.ind_dim << "\n";
  if (side.ind_comb) os << prefix << "ind comb " << *side.ind_comb << "\n";
  os << prefix << "sgn linalg " << side.sgn_dim << "\n";
  if (side.sgn_comb) os << prefix << "sgn comb " << *side.sgn_comb << "\n";
  for (const auto& [word, value] : side.traces)
    os << prefix << "trace [" << word_to_string(word) << "] " << value.str()
       << "\n";
}

}  // namespace

std::string render_side_report(const SideInvariants& side,
                               const CoxeterMatrix& cm, ReportFormat format) {
  if (format == ReportFormat::json)
    return side_to_json(side, cm).dump(2) + "\n";
  std::ostringstream os;
  render_side_text(os, side, cm, "");
  return os.str();
}

std::string render_invariant_report(const InvariantReport& report,
                                    const CoxeterMatrix& cm,
                                    ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["a"] = side_to_json(report.a, cm);
    j["b"] = side_to_json(report.b, cm);
    j["violations"] = report.mismatches;
    j["compatible"] = report.compatible();
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "--- side A ---\n";
  render_side_text(os, report.a, cm, "");
  os << "--- side B ---\n";
  render_side_text(os, report.b, cm, "");
  for (const auto& m : report.mismatches) os << "mismatch: " << m << "\n";
  os << "result: " << (report.compatible() ? "compatible" : "not-isomorphic")
     << "\n";
  return os.str();
}

std::string render_certificate(const IsoCertificate& cert) {
  std::ostringstream os;
  os << "certificate:\n";
  os << "  seed: " << cert.seed << "\n";
  os << "  coeffs:";
  for (long c : cert.coeffs) os << ' ' << c;
  os << "\n";
  os << "  det: " << cert.det.str() << "\n";
  for (std::size_t i = 0; i < cert.a.rows(); ++i) {
    os << "  row:";
    for (std::size_t j = 0; j < cert.a.cols(); ++j)
      os << ' ' << cert.a.at(i, j).str();
    os << "\n";
  }
  return os.str();
}

std::string render_theorem_report(const TheoremReport& report) {
  std::ostringstream os;
  for (const auto& a : report.assertions)
    os << (a.pass ? "ok  " : "FAIL") << "  " << a.name << " (" << a.detail
       << ")\n";
  os << "theorem: " << (report.passed() ? "verified" : "failed") << "\n";
  return os.str();
}

}  // namespace wdg
