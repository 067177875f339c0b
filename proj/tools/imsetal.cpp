#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "imset/cone.hpp"
#include "imset/hilbert.hpp"
#include "imset/imset.hpp"
#include "imset/prob_ideal.hpp"
#include "imset/relation.hpp"
#include "imset/statement.hpp"
#include "imset/toric.hpp"

using namespace imset;

namespace {

const MonOrder kLex{OrderType::Lex, 0};
const MonOrder kGrevlex{};

struct Cmd {
  std::string name;
  int n = 3;
  std::vector<int> states;
  std::vector<std::string> stmts, inner, outer, left, right;
  std::string file, table, order = "grevlex";
  double budget = 600.0;
  bool json = false, dot = false, fvec = false, structural = false,
       do_classify = false, csv = false;
  int max_terms = 4;
};

StateVector parse_states(const std::vector<int>& states) {
  if (states.empty()) throw std::invalid_argument("--states is required");
  return StateVector{states};
}

std::vector<CIStatement> parse_stmts(const std::vector<std::string>& texts) {
  std::vector<CIStatement> out;
  for (const auto& t : texts) out.push_back(parse_statement(t));
  return out;
}

int run_imsets_enumerate(const Cmd& c) {
  if (c.structural) {
    auto all = enumerate_structural(c.n);
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : all) {
      if (c.json) {
        nlohmann::json e = nlohmann::json::parse(statement_to_json(s.stmt));
        if (s.type) e["type"] = to_string(*s.type);
        j.push_back(e);
      } else {
        std::cout << render(s.stmt);
        if (s.type) std::cout << "  [" << to_string(*s.type) << "]";
        std::cout << "\n";
      }
    }
    if (c.json) std::cout << j.dump() << "\n";
    return 0;
  }
  auto all = enumerate_elementary(c.n);
  if (c.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : all) j.push_back(nlohmann::json::parse(statement_to_json(s)));
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& s : all) std::cout << render(s) << "\n";
  }
  return 0;
}

int run_imsets_matrix(const Cmd& c) {
  auto A = build_matrix(c.n);
  std::cout << (c.json ? matrix_to_json(A) : matrix_to_csv(A));
  return 0;
}

int run_imsets_decompose(const Cmd& c) {
  if (c.stmts.size() != 1)
    throw std::invalid_argument("decompose takes exactly one --stmt");
  auto target = parse_statement(c.stmts[0]);
  auto decs = decompose(target, c.n, c.max_terms);
  for (const auto& d : decs) {
    std::cout << render(d.target) << " =";
    for (std::size_t i = 0; i < d.parts.size(); ++i)
      std::cout << (i ? " + " : " ") << render(d.parts[i]);
    std::cout << "\n";
  }
  std::cout << decs.size() << " decompositions\n";
  return 0;
}

int run_toric(const Cmd& c, bool graver) {
  auto A = build_matrix(c.n);
  auto basis = graver ? graver_basis(A, c.budget) : markov_basis(A, c.budget);
  std::vector<BinomialClassification> cls;
  if (c.do_classify) cls = classify(basis, c.n);
  if (c.json) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      nlohmann::json e = {{"vector", basis[i].vec},
                          {"degree", basis[i].total_degree()},
                          {"text", render(basis[i], A.statements)}};
      if (c.do_classify) {
        e["homogeneous"] = cls[i].homogeneous;
        e["multilinear"] = cls[i].multilinear;
        e["orbit"] = cls[i].symmetry_class;
      }
      j.push_back(e);
    }
    std::cout << j.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::cout << render(basis[i], A.statements);
      if (c.do_classify)
        std::cout << "  [deg " << cls[i].total_degree << ", orbit "
                  << cls[i].symmetry_class << "]";
      std::cout << "\n";
    }
    std::cout << basis.size() << " elements\n";
  }
  return 0;
}

int run_cone_faces(const Cmd& c) {
  auto cone = build_cone(c.n);
  auto lat = face_lattice(cone);
  if (c.dot) {
    std::cout << lattice_to_dot(lat, cone);
    return 0;
  }
  if (c.json) {
    std::cout << lattice_to_json(lat) << "\n";
    return 0;
  }
  auto fv = f_vector(lat);
  if (c.fvec) {
    std::cout << "f-vector (dims 0.." << cone.lin_dim << "): ";
    for (std::size_t d = 0; d < fv.size(); ++d)
      std::cout << fv[d] << (d + 1 < fv.size() ? ", " : "\n");
    long long total = 0;
    for (auto x : fv) total += x;
    std::cout << "total " << total << " faces\n";
    // The same vector without the apex and the full cone, as some
    // summaries present it.
    std::cout << "proper faces only: ";
    for (std::size_t d = 1; d + 1 < fv.size(); ++d)
      std::cout << fv[d] << (d + 2 < fv.size() ? ", " : "\n");
    return 0;
  }
  for (std::size_t d = 0; d < fv.size(); ++d)
    std::cout << "dim " << d << ": " << fv[d] << " faces\n";
  return 0;
}

ProbRing ring_of(const Cmd& c) { return prob_ring(parse_states(c.states)); }

int run_ideal_build(const Cmd& c) {
  auto ring = ring_of(c);
  auto I = model_ideal(parse_stmts(c.stmts), ring);
  if (c.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& g : I.gens()) j.push_back(render(g, ring.ring));
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& g : I.gens()) std::cout << render(g, ring.ring) << "\n";
  }
  return 0;
}

int run_ideal_dimdeg(const Cmd& c) {
  auto ring = ring_of(c);
  auto I = model_ideal(parse_stmts(c.stmts), ring);
  auto dd = dim_degree(I, ring.ring.size(), c.budget);
  std::cout << "dim " << dd.krull_dim << ", degree " << dd.degree << "\n";
  return 0;
}

int run_ideal_gb(const Cmd& c) {
  auto ring = ring_of(c);
  auto I = model_ideal(parse_stmts(c.stmts), ring);
  const MonOrder& ord = c.order == "lex" ? kLex : kGrevlex;
  for (const auto& g : I.basis(ord, c.budget))
    std::cout << render(g, ring.ring) << "\n";
  return 0;
}

int run_ideal_contains(const Cmd& c) {
  auto ring = ring_of(c);
  auto inner = model_ideal(parse_stmts(c.inner), ring);
  auto outer = model_ideal(parse_stmts(c.outer), ring);
  auto rep = containment_report(inner, outer, c.budget);
  for (std::size_t i = 0; i < rep.inner_in_outer.size(); ++i)
    std::cout << "inner generator " << i + 1 << " in outer: "
              << (rep.inner_in_outer[i] ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < rep.outer_in_inner.size(); ++i)
    std::cout << "outer generator " << i + 1 << " in inner: "
              << (rep.outer_in_inner[i] ? "yes" : "no") << "\n";
  std::cout << "inner subset of outer: " << (rep.inner_subset ? "yes" : "no")
            << "\nouter subset of inner: " << (rep.outer_subset ? "yes" : "no")
            << "\n";
  return 0;
}

int run_ideal_equal(const Cmd& c) {
  auto ring = ring_of(c);
  auto lhs = model_ideal(parse_stmts(c.left), ring);
  auto rhs = model_ideal(parse_stmts(c.right), ring);
  std::cout << (ideal_equal(lhs, rhs, kGrevlex) ? "equal" : "not equal")
            << "\n";
  return 0;
}

int run_verify(const Cmd& c) {
  auto entries = parse_relation_file(c.file);
  int valid = 0, invalid = 0;
  for (const auto& e : entries) {
    if (!e.relation) {
      ++invalid;
      std::cout << "line " << e.line << ": INVALID (parse error: " << e.error
                << ")\n";
      continue;
    }
    auto rep = verify_relation(*e.relation);
    if (rep.valid) {
      ++valid;
      std::cout << "line " << e.line << ": VALID";
      if (rep.recognized) std::cout << "  -> " << render(*rep.recognized);
      std::cout << "\n";
    } else {
      ++invalid;
      std::cout << "line " << e.line << ": INVALID";
      if (!rep.sides_equal) {
        std::cout << " (side imsets differ:";
        for (const auto& u : rep.side_images) std::cout << " " << imset_to_json(u);
        std::cout << ")";
      } else if (rep.target_matches && !*rep.target_matches) {
        std::cout << " (sum is "
                  << (rep.recognized ? render(*rep.recognized)
                                     : std::string("not semi-elementary"))
                  << ", not the declared target)";
      }
      std::cout << "\n";
    }
  }
  std::cout << valid << " VALID, " << invalid << " INVALID\n";
  return 0;
}

int run_report(const Cmd& c) {
  int which = c.table == "table1" ? 1 : c.table == "table2" ? 2 : 3;
  auto cells = table_report(which, c.budget);
  std::cout << (c.json ? table_report_json(cells) + "\n"
                       : table_report_text(cells));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for elementary imsets, toric bases, cone "
               "faces, and CI ideals"};
  app.require_subcommand(1);
  Cmd c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n", c.n, "Number of variables");
    sub->add_option("--budget-secs", c.budget, "Time budget in seconds");
    sub->add_flag("--json", c.json, "JSON output");
  };

  auto* imsets = app.add_subcommand("imsets", "Statement enumeration");
  auto* enumerate = imsets->add_subcommand("enumerate", "List statements");
  add_common(enumerate);
  enumerate->add_flag("--structural", c.structural, "Structural set S_n");
  auto* matrix = imsets->add_subcommand("matrix", "Elementary imset matrix");
  add_common(matrix);
  auto* dec = imsets->add_subcommand("decompose", "Semi-elementary decompositions");
  add_common(dec);
  dec->add_option("--stmt", c.stmts, "Target statement")->required();
  dec->add_option("--max-terms", c.max_terms, "Decomposition size bound");

  auto* toric = app.add_subcommand("toric", "Toric bases of A_n");
  auto* markov = toric->add_subcommand("markov", "Markov basis");
  auto* graver = toric->add_subcommand("graver", "Graver basis");
  for (auto* sub : {markov, graver}) {
    add_common(sub);
    sub->add_flag("--classify", c.do_classify, "Degree/orbit classification");
  }

  auto* cone = app.add_subcommand("cone", "Elementary imset cone");
  auto* faces = cone->add_subcommand("faces", "Face lattice");
  add_common(faces);
  faces->add_flag("--f-vector", c.fvec, "Print the f-vector");
  faces->add_flag("--dot", c.dot, "Graphviz output");

  auto* ideal = app.add_subcommand("ideal", "CI ideals");
  auto* build = ideal->add_subcommand("build", "Print generators");
  auto* dimdeg = ideal->add_subcommand("dimdeg", "Dimension and degree");
  auto* gb = ideal->add_subcommand("gb", "Reduced Groebner basis");
  auto* contains = ideal->add_subcommand("contains", "Containment report");
  auto* equal = ideal->add_subcommand("equal", "Ideal equality");
  for (auto* sub : {build, dimdeg, gb, contains, equal}) {
    add_common(sub);
    sub->add_option("--states", c.states, "States per variable")
        ->required()
        ->delimiter(',');
  }
  for (auto* sub : {build, dimdeg, gb})
    sub->add_option("--stmt", c.stmts, "CI statement(s)")->required();
  gb->add_option("--order", c.order, "lex | grevlex")
      ->check(CLI::IsMember({"lex", "grevlex"}));
  contains->add_option("--inner", c.inner, "Inner ideal statement(s)")->required();
  contains->add_option("--outer", c.outer, "Outer ideal statement(s)")->required();
  equal->add_option("--left", c.left, "Left ideal statement(s)")->required();
  equal->add_option("--right", c.right, "Right ideal statement(s)")->required();

  auto* verify = app.add_subcommand("verify", "Relation verification");
  auto* relations = verify->add_subcommand("relations", "Verify a .rel file");
  add_common(relations);
  relations->add_option("file", c.file, "Relation file")->required();

  auto* report = app.add_subcommand("report", "Published-table reports");
  add_common(report);
  report->add_option("table", c.table, "table1 | table2 | table3")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table3"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) return run_imsets_enumerate(c);
    if (*matrix) return run_imsets_matrix(c);
    if (*dec) return run_imsets_decompose(c);
    if (*markov) return run_toric(c, false);
    if (*graver) return run_toric(c, true);
    if (*faces) return run_cone_faces(c);
    if (*build) return run_ideal_build(c);
    if (*dimdeg) return run_ideal_dimdeg(c);
    if (*gb) return run_ideal_gb(c);
    if (*contains) return run_ideal_contains(c);
    if (*equal) return run_ideal_equal(c);
    if (*relations) return run_verify(c);
    if (*report) return run_report(c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand selected\n";
  return 2;
}
