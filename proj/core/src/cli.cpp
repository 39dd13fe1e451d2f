#include "wdg/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "wdg/builders.hpp"
#include "wdg/compare.hpp"
#include "wdg/io.hpp"
#include "wdg/search.hpp"
#include "wdg/selftest.hpp"

namespace wdg {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << text;
}

Document load_document(const std::string& path) {
  return parse_document(read_file(path));
}

AlgStruct to_struct(Document d) {
  if (std::holds_alternative<WDigraph>(d))
    return AlgStruct{std::get<WDigraph>(std::move(d))};
  return AlgStruct{std::get<WGraph>(std::move(d))};
}

GenSet labels_to_set(const CoxeterMatrix& cm, const std::string& csv) {
  GenSet set = 0;
  std::string cur;
  std::istringstream is(csv);
  while (std::getline(is, cur, ',')) {
    // allow surrounding blanks
    std::size_t a = cur.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = cur.find_last_not_of(" \t");
    cur = cur.substr(a, b - a + 1);
    const auto idx = cm.index(cur);
    if (!idx) throw std::runtime_error("unknown generator '" + cur + "'");
    set |= GenSet{1} << *idx;
  }
  return set;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Document doc = load_document(path);
  bool ok = true;
  if (const auto* g = std::get_if<WDigraph>(&doc)) {
    out << "kind: wdigraph\n";
    const DigraphValidation v = validate_digraph(*g);
    for (const auto& s : v.structural) out << "violation: " << s << "\n";
    for (const auto& s : v.relations.violations) out << "violation: " << s << "\n";
    for (const auto& [r, s] : v.relations.unchecked)
      out << "unchecked: braid {" << r << "," << s << "} (infinite order)\n";
    ok = v.ok();
  } else {
    out << "kind: wgraph\n";
    const RepCheck v = validate_wgraph(std::get<WGraph>(doc));
    for (const auto& s : v.violations) out << "violation: " << s << "\n";
    for (const auto& [r, s] : v.unchecked)
      out << "unchecked: braid {" << r << "," << s << "} (infinite order)\n";
    ok = v.ok();
  }
  out << "status: " << (ok ? "valid" : "invalid") << "\n";
  return ok ? kOk : kFail;
}

int cmd_report(const std::string& path, bool json, std::ostream& out) {
  const AlgStruct s = to_struct(load_document(path));
  const SideInvariants side = side_invariants(s, 4);
  out << render_side_report(side, struct_cm(s),
                            json ? ReportFormat::json : ReportFormat::text);
  return kOk;
}

int cmd_eigen(const std::string& path, const std::string& chr,
              const std::string& method, std::ostream& out) {
  const AlgStruct s = to_struct(load_document(path));
  const CoxeterMatrix& cm = struct_cm(s);
  std::optional<std::size_t> comb, lin;

  if (method == "comb" || method == "both") {
    if (const auto* g = std::get_if<WDigraph>(&s)) {
      comb = chr == "ind" ? ind_mult_combinatorial(*g)
                          : sgn_mult_combinatorial(*g);
    } else {
      if (chr == "ind")
        throw std::runtime_error(
            "no combinatorial method for ind multiplicities of W-graphs");
      const auto counts = wgraph_counts(std::get<WGraph>(s));
      const auto it = counts.find(cm.full_set());
      comb = it == counts.end() ? 0 : it->second;
    }
  }
  if (method == "linalg" || method == "both") {
    const Rep rho = struct_action(s);
    const LinearChar chi = chr == "ind" ? ind_char(cm) : sgn_char(cm);
    std::vector<RatFun> values;
    for (const auto& name : cm.generators()) values.push_back(chi.values.at(name));
    lin = eigenspace_dim(rho, values, struct_dim(s));
  }

  out << "char: " << chr << "\n";
  if (comb) out << "comb: " << *comb << "\n";
  if (lin) out << "linalg: " << *lin << "\n";
  if (comb && lin) {
    const bool agree = *comb == *lin;
    out << "agreement: " << (agree ? "yes" : "no") << "\n";
    return agree ? kOk : kFail;
  }
  return kOk;
}

int cmd_restrict(const std::string& path, const std::string& labels,
                 const std::string& out_path, std::ostream&) {
  const Document doc = load_document(path);
  if (const auto* g = std::get_if<WDigraph>(&doc)) {
    const GenSet J = labels_to_set(g->cm(), labels);
    write_file(out_path, emit(restrict_digraph(*g, J)));
  } else {
    const WGraph& p = std::get<WGraph>(doc);
    const GenSet J = labels_to_set(p.cm(), labels);
    write_file(out_path, emit(restrict_wgraph(p, J)));
  }
  return kOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                std::size_t word_len, bool json, std::ostream& out) {
  const AlgStruct a = to_struct(load_document(path_a));
  const AlgStruct b = to_struct(load_document(path_b));
  const InvariantReport report = invariant_report(a, b, word_len);
  out << render_invariant_report(report, struct_cm(a),
                                 json ? ReportFormat::json : ReportFormat::text);
  return report.compatible() ? kOk : kFail;
}

int cmd_iso(const std::string& path_a, const std::string& path_b,
            std::uint64_t seed, std::size_t tries, std::ostream& out) {
  const AlgStruct a = to_struct(load_document(path_a));
  const AlgStruct b = to_struct(load_document(path_b));
  const IsoResult r = find_iso(a, b, seed, tries);
  out << "hom_dim: " << r.hom_dim << "\n";
  switch (r.outcome) {
    case IsoOutcome::certificate:
      out << "result: certificate\n";
      out << "tries_used: " << r.tries_used << "\n";
      out << render_certificate(*r.cert);
      return kOk;
    case IsoOutcome::not_isomorphic:
      out << "result: not-isomorphic\n";
      out << "reason: " << r.reason << "\n";
      return kFail;
    case IsoOutcome::inconclusive:
      break;
  }
  out << "result: inconclusive\n";
  out << "reason: " << r.reason << "\n";
  return kInconclusive;
}

int cmd_theorem(const std::string& digraph_path, const std::string& wgraph_path,
                std::uint64_t seed, std::ostream& out) {
  const WDigraph g = parse_digraph(read_file(digraph_path));
  const WGraph p = parse_wgraph(read_file(wgraph_path));
  const IsoResult r = find_iso(AlgStruct{g}, AlgStruct{p}, seed, 64);
  if (r.outcome == IsoOutcome::not_isomorphic) {
    out << "result: no-certificate\n";
    out << "reason: " << r.reason << "\n";
    return kInconclusive;
  }
  if (r.outcome == IsoOutcome::inconclusive) {
    out << "result: no-certificate\n";
    out << "reason: " << r.reason << "\n";
    return kInconclusive;
  }
  out << render_certificate(*r.cert);
  const TheoremReport report = theorem_check(g, p, *r.cert);
  out << render_theorem_report(report);
  return report.passed() ? kOk : kFail;
}

int cmd_build(const std::string& spec, const std::string& out_path,
              std::ostream&) {
  std::string text;
  if (spec == "a1-solid") {
    text = emit(build_a1(EdgeKind::solid));
  } else if (spec == "a1-dashed") {
    text = emit(build_a1(EdgeKind::dashed));
  } else if (spec.rfind("dihedral:", 0) == 0) {
    const std::string arg = spec.substr(9);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      throw std::runtime_error("bad dihedral order '" + arg + "'");
    text = emit(build_dihedral_regular(static_cast<unsigned>(std::stoul(arg))));
  } else if (spec.rfind("a1-wgraph:", 0) == 0) {
    text = emit(build_a1_wgraph(parse_rational(spec.substr(10))));
  } else {
    throw std::runtime_error(
        "unknown build spec '" + spec +
        "' (expected a1-solid, a1-dashed, dihedral:M, or a1-wgraph:MU)");
  }
  write_file(out_path, text);
  return kOk;
}

int cmd_search(std::size_t max_vertices, const std::string& header_path,
               std::ostream& out) {
  CoxeterMatrix cm;
  if (header_path.empty()) {
    cm = CoxeterMatrix({"s", "t"});
    cm.set_order(0, 1, 2);
  } else {
    cm = parse_coxeter_header(read_file(header_path));
  }
  const auto found = search_valid_digraphs(cm, max_vertices);
  out << "# search: generators=";
  for (std::size_t i = 0; i < cm.size(); ++i)
    out << (i ? "," : "") << cm.name(i);
  out << " max-vertices=" << max_vertices << "\n";
  out << "# found " << found.size() << " valid structures\n";
  for (std::size_t i = 0; i < found.size(); ++i) {
    out << "--- " << (i + 1) << " ---\n";
    out << emit(found[i]);
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"W-digraph and W-graph module toolkit"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, labels_csv, chr, method, build_spec,
      header_path;
  bool json = false;
  std::size_t word_len = 4, tries = 64, max_vertices = 4;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "check a structure file");
  validate->add_option("FILE", file)->required();

  auto* report = app.add_subcommand("report", "invariants of one structure");
  report->add_option("FILE", file)->required();
  report->add_flag("--json", json);

  auto* eigen = app.add_subcommand("eigen", "ind/sgn multiplicities");
  eigen->add_option("FILE", file)->required();
  eigen->add_option("--char", chr)
      ->required()
      ->check(CLI::IsMember({"ind", "sgn"}));
  eigen->add_option("--method", method)
      ->required()
      ->check(CLI::IsMember({"comb", "linalg", "both"}));

  auto* restrict_cmd = app.add_subcommand("restrict", "parabolic restriction");
  restrict_cmd->add_option("FILE", file)->required();
  restrict_cmd->add_option("--labels", labels_csv)->required();
  restrict_cmd->add_option("-o,--output", out_path)->required();

  auto* compare = app.add_subcommand("compare", "invariant comparison");
  compare->add_option("A", file)->required();
  compare->add_option("B", file_b)->required();
  compare->add_option("--char-length", word_len);
  compare->add_flag("--json", json);

  auto* iso = app.add_subcommand("iso", "isomorphism search");
  iso->add_option("A", file)->required();
  iso->add_option("B", file_b)->required();
  iso->add_option("--seed", seed);
  iso->add_option("--tries", tries);

  auto* theorem = app.add_subcommand("theorem", "certified-pair checks");
  theorem->add_option("DIGRAPH", file)->required();
  theorem->add_option("WGRAPH", file_b)->required();
  theorem->add_option("--seed", seed);

  auto* build = app.add_subcommand("build", "emit a built-in structure");
  build->add_option("SPEC", build_spec)->required();
  build->add_option("-o,--output", out_path)->required();

  auto* search = app.add_subcommand("search", "enumerate valid digraphs");
  search->add_option("--max-vertices", max_vertices)->required();
  search->add_option("FILE", header_path);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  std::vector<const char*> argv;
  argv.push_back("wdg");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, out);
    if (report->parsed()) return cmd_report(file, json, out);
    if (eigen->parsed()) return cmd_eigen(file, chr, method, out);
    if (restrict_cmd->parsed()) return cmd_restrict(file, labels_csv, out_path, out);
    if (compare->parsed()) return cmd_compare(file, file_b, word_len, json, out);
    if (iso->parsed()) return cmd_iso(file, file_b, seed, tries, out);
    if (theorem->parsed()) return cmd_theorem(file, file_b, seed, out);
    if (build->parsed()) return cmd_build(build_spec, out_path, out);
    if (search->parsed()) return cmd_search(max_vertices, header_path, out);
    if (selftest->parsed()) return run_selftest(out) ? kOk : kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace wdg
