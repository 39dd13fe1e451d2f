#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wdg/builders.hpp"
#include "wdg/cli.hpp"
#include "wdg/io.hpp"

using namespace wdg;

namespace {

const std::string kA1Digraph =
    "type: wdigraph\n"
    "generators: s\n"
    "vertex: a\n"
    "vertex: b\n"
    "edge: a b s solid\n";

const std::string kA1WGraph =
    "type: wgraph\n"
    "generators: s\n"
    "vertex: x labels:\n"
    "vertex: y labels: s\n"
    "mu: y x 1\n";

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / "wdg_io_test";
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse the minimal digraph file") {
  const WDigraph g = parse_digraph(kA1Digraph);
  CHECK(g == build_a1(EdgeKind::solid));
}

TEST_CASE("parse the minimal wgraph file") {
  const WGraph p = parse_wgraph(kA1WGraph);
  CHECK(p == build_a1_wgraph(1));
}

TEST_CASE("parse errors carry line numbers") {
  const std::string bad =
      "type: wdigraph\n"
      "generators: s\n"
      "vertex: a\n"
      "vertex: b\n"
      "edge: a b x solid\n";
  try {
    parse_digraph(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(std::string(e.what()).find("unknown generator") != std::string::npos);
  }

  try {
    parse_wgraph(
        "type: wgraph\n"
        "generators: s\n"
        "vertex: x labels:\n"
        "vertex: y labels: s\n"
        "mu: y x 1/0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("parser rejects structural duplicates") {
  CHECK_THROWS_AS(parse_digraph("type: wdigraph\n"
                                "generators: s\n"
                                "vertex: a\n"
                                "vertex: a\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_digraph("type: wdigraph\n"
                                "generators: s t\n"
                                "order: s t 3\n"
                                "order: s t 3\n"
                                "vertex: a\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_document("type: wdigraph\n"
                                 "generators: s t\n"
                                 "vertex: a\n"),
                  ParseError);  // missing order entry
  CHECK_THROWS_AS(parse_document("generators: s\nvertex: a\n"), ParseError);
}

TEST_CASE("wgraph self-weights round-trip") {
  WGraph p = parse_wgraph(
      "type: wgraph\n"
      "generators: s\n"
      "vertex: x labels:\n"
      "vertex: y labels: s\n"
      "mu: x x 1\n"
      "mu: y x 1\n");
  CHECK(p.mu(0, 0) == 1);
  CHECK(parse_wgraph(emit(p)) == p);
}

TEST_CASE("emit/parse round trip over a corpus") {
  std::vector<Document> docs;
  docs.emplace_back(build_a1(EdgeKind::solid));
  docs.emplace_back(build_a1(EdgeKind::dashed));
  docs.emplace_back(build_dihedral_regular(3));
  docs.emplace_back(build_dihedral_regular(4));
  docs.emplace_back(product(build_a1(EdgeKind::solid, "s", "a", "b"),
                            build_a1(EdgeKind::dashed, "t", "c", "d")));
  docs.emplace_back(build_a1_wgraph(make_rational(-3, 2)));
  docs.emplace_back(product(build_a1_wgraph(1, "s", "x1", "y1"),
                            build_a1_wgraph(2, "t", "x2", "y2")));
  for (const auto& doc : docs) {
    const std::string text = emit(doc);
    const Document reparsed = parse_document(text);
    CHECK(emit(reparsed) == text);
    if (std::holds_alternative<WDigraph>(doc))
      CHECK(std::get<WDigraph>(reparsed) == std::get<WDigraph>(doc));
    else
      CHECK(std::get<WGraph>(reparsed) == std::get<WGraph>(doc));
  }
}

TEST_CASE("coxeter headers parse with and without type lines") {
  const CoxeterMatrix cm =
      parse_coxeter_header("generators: s t\norder: s t inf\n");
  CHECK(cm.size() == 2);
  CHECK(cm.order(0, 1) == kInfiniteOrder);
  const CoxeterMatrix cm2 = parse_coxeter_header(kA1Digraph);
  CHECK(cm2.size() == 1);
}

TEST_CASE("cli validate") {
  TempDir dir;
  const auto good = dir.file("a1.wdg", kA1Digraph);
  const CliRun ok = cli({"validate", good});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("status: valid") != std::string::npos);

  const auto cyc = dir.file("cyc.wdg",
                            "type: wdigraph\n"
                            "generators: s t\n"
                            "order: s t 2\n"
                            "vertex: a\n"
                            "vertex: b\n"
                            "edge: a b s solid\n"
                            "edge: b a t solid\n");
  const CliRun bad = cli({"validate", cyc});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("status: invalid") != std::string::npos);

  const CliRun missing = cli({"validate", (dir.path / "nope.wdg").string()});
  CHECK(missing.code == 3);

  const auto garbled = dir.file("bad.wdg", "type: wdigraph\nvertex a\n");
  CHECK(cli({"validate", garbled}).code == 3);
}

TEST_CASE("cli report") {
  TempDir dir;
  const auto path = dir.file("a1.wdg", kA1Digraph);
  const CliRun text = cli({"report", path});
  CHECK(text.code == 0);
  CHECK(text.out.find("N {} 1") != std::string::npos);
  CHECK(text.out.find("N {s} 1") != std::string::npos);
  CHECK(text.out.find("components: 1") != std::string::npos);

  const CliRun json = cli({"report", path, "--json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"dimension\": 2") != std::string::npos);
  // stable key order
  const CliRun json2 = cli({"report", path, "--json"});
  CHECK(json.out == json2.out);
}

TEST_CASE("cli eigen") {
  TempDir dir;
  const auto path = dir.file("d3.wdg", emit(build_dihedral_regular(3)));
  const CliRun both = cli({"eigen", path, "--char", "sgn", "--method", "both"});
  CHECK(both.code == 0);
  CHECK(both.out.find("comb: 1") != std::string::npos);
  CHECK(both.out.find("linalg: 1") != std::string::npos);
  CHECK(both.out.find("agreement: yes") != std::string::npos);

  const auto wpath = dir.file("a1.wgr", kA1WGraph);
  const CliRun comb_ind =
      cli({"eigen", wpath, "--char", "ind", "--method", "comb"});
  CHECK(comb_ind.code == 3);  // no combinatorial route for this case
  const CliRun lin_ind =
      cli({"eigen", wpath, "--char", "ind", "--method", "linalg"});
  CHECK(lin_ind.code == 0);
  CHECK(lin_ind.out.find("linalg: 1") != std::string::npos);
}

TEST_CASE("cli restrict") {
  TempDir dir;
  const auto path = dir.file("d3.wdg", emit(build_dihedral_regular(3)));
  const auto out_path = (dir.path / "restricted.wdg").string();
  const CliRun r = cli({"restrict", path, "--labels", "s", "-o", out_path});
  CHECK(r.code == 0);
  std::ifstream in(out_path);
  std::stringstream content;
  content << in.rdbuf();
  const WDigraph restricted = parse_digraph(content.str());
  CHECK(restricted.cm().size() == 1);
  CHECK(restricted.edges().size() == 3);
}

TEST_CASE("cli compare") {
  TempDir dir;
  const auto a = dir.file("a1.wdg", kA1Digraph);
  const auto b = dir.file("a1.wgr", kA1WGraph);
  const CliRun same = cli({"compare", a, b});
  CHECK(same.code == 0);
  CHECK(same.out.find("result: compatible") != std::string::npos);

  const auto single = dir.file("single.wgr",
                               "type: wgraph\n"
                               "generators: s\n"
                               "vertex: x labels:\n");
  const CliRun different = cli({"compare", a, single});
  CHECK(different.code == 1);
  CHECK(different.out.find("result: not-isomorphic") != std::string::npos);

  const CliRun json = cli({"compare", a, single, "--json"});
  CHECK(json.code == 1);
  CHECK(json.out.find("\"violations\"") != std::string::npos);
}

TEST_CASE("cli iso and theorem") {
  TempDir dir;
  const auto a = dir.file("a1.wdg", kA1Digraph);
  const auto b = dir.file("a1.wgr", kA1WGraph);
  const CliRun iso = cli({"iso", a, b, "--seed", "5"});
  CHECK(iso.code == 0);
  CHECK(iso.out.find("result: certificate") != std::string::npos);
  CHECK(iso.out.find("det:") != std::string::npos);

  WGraph ind_line{CoxeterMatrix({"s"})};
  ind_line.add_vertex("x", 0);
  WGraph sgn_line{CoxeterMatrix({"s"})};
  sgn_line.add_vertex("x", 1);
  const auto il = dir.file("ind.wgr", emit(ind_line));
  const auto sl = dir.file("sgn.wgr", emit(sgn_line));
  const CliRun noiso = cli({"iso", il, sl});
  CHECK(noiso.code == 1);
  CHECK(noiso.out.find("result: not-isomorphic") != std::string::npos);

  const CliRun theorem = cli({"theorem", a, b});
  CHECK(theorem.code == 0);
  CHECK(theorem.out.find("theorem: verified") != std::string::npos);

  // theorem requires digraph then wgraph
  CHECK(cli({"theorem", b, a}).code == 3);
}

TEST_CASE("cli build and search") {
  TempDir dir;
  const auto out_path = (dir.path / "built.wdg").string();
  CHECK(cli({"build", "dihedral:4", "-o", out_path}).code == 0);
  std::ifstream in(out_path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(parse_digraph(content.str()) == build_dihedral_regular(4));

  CHECK(cli({"build", "a1-wgraph:3/2", "-o", out_path}).code == 0);
  CHECK(cli({"build", "bogus", "-o", out_path}).code == 3);

  const CliRun search = cli({"search", "--max-vertices", "2"});
  CHECK(search.code == 0);
  CHECK(search.out.find("# found") != std::string::npos);
  const CliRun search2 = cli({"search", "--max-vertices", "2"});
  CHECK(search.out == search2.out);

  // Coxeter data can come from a header file
  const auto header = dir.file("header.txt", "generators: s\n");
  const CliRun one_gen = cli({"search", "--max-vertices", "2", header});
  CHECK(one_gen.code == 0);
  CHECK(one_gen.out.find("# found 2 valid structures") != std::string::npos);

  // out-of-bounds limits are input errors
  CHECK(cli({"search", "--max-vertices", "8"}).code == 3);
}

TEST_CASE("cli iso reports inconclusive with exit code 2") {
  TempDir dir;
  WGraph two_ind{CoxeterMatrix({"s"})};
  two_ind.add_vertex("a", 0);
  two_ind.add_vertex("b", 0);
  const auto a = dir.file("two_ind.wgr", emit(two_ind));
  const auto b = dir.file("split.wgr", emit(build_a1_wgraph(0)));
  const CliRun r = cli({"iso", a, b, "--tries", "6"});
  CHECK(r.code == 2);
  CHECK(r.out.find("result: inconclusive") != std::string::npos);
}

TEST_CASE("cli usage errors") {
  CHECK(cli({"unknown-command"}).code == 3);
  CHECK(cli({"eigen", "file", "--char", "bogus", "--method", "both"}).code == 3);
  CHECK(cli({}).code == 3);
}
