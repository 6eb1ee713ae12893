#include "qpkit/cli.hpp"

#include "qpkit/ginzburg.hpp"
#include "qpkit/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace qpkit {

namespace {

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write '" + out_path + "'");
    f << text << "\n";
  }
}

std::vector<long> reversed(std::vector<long> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Finite: return 0;
    case Verdict::Infinite: return 2;
    default: return 3;
  }
}

int cmd_jacobian(const std::string& file, long d_max, bool json, const std::string& out_path,
                 std::ostream& out) {
  QuiverWithPotential qp = qp_from_json(load_json_file(file));
  QuotientDims d = quotient_dims(jacobian(qp, d_max));
  if (json) {
    Json j;
    j["verdict"] = d.verdict == Verdict::Finite
                       ? "finite"
                       : (d.verdict == Verdict::Infinite ? "infinite" : "inconclusive");
    if (d.verdict == Verdict::Finite) {
      j["dim"] = d.total;
      Json m = Json::object();
      for (int u = 0; u < qp.quiver.num_vertices(); ++u) {
        Json row = Json::object();
        for (int v = 0; v < qp.quiver.num_vertices(); ++v)
          row[qp.quiver.vertex(v)] = d.by_vertex_pair[u][v];
        m[qp.quiver.vertex(u)] = std::move(row);
      }
      j["dim_matrix"] = std::move(m);
    } else {
      j["d_max"] = d.d_max;
    }
    emit(j.dump(2), out_path, out);
  } else {
    std::ostringstream os;
    switch (d.verdict) {
      case Verdict::Finite: os << "Finite, dim " << d.total; break;
      case Verdict::Infinite: os << "Infinite"; break;
      default: os << "Inconclusive at d_max=" << d.d_max; break;
    }
    emit(os.str(), out_path, out);
  }
  return verdict_exit(d.verdict);
}

int cmd_ginzburg_check(const std::string& file, bool json, const std::string& out_path,
                       std::ostream& out) {
  Json spec = load_json_file(file);
  QuiverWithPotential qp = qp_from_json(spec);
  GinzburgPresentation g = ginzburg(qp);
  if (spec.contains("differential")) {
    for (const auto& [gen, value] : spec.at("differential").items()) {
      if (!g.diff.count(gen)) throw Error("differential override: unknown generator " + gen);
      g.diff[gen] = path_vector_from_json(g.graded_quiver, value);
    }
  }
  const bool ok = verify_differential(g);
  if (json) {
    Json j;
    j["differential"] = Json::object();
    for (const auto& [gen, dv] : g.diff)
      j["differential"][gen] = path_vector_to_json(g.graded_quiver, dv);
    j["square_zero"] = ok;
    emit(j.dump(2), out_path, out);
  } else {
    std::ostringstream os;
    for (const auto& [gen, dv] : g.diff)
      os << "d(" << gen << ") = " << to_string(g.graded_quiver, dv) << "\n";
    os << (ok ? "d^2 = 0: OK" : "d^2 = 0: FAILED");
    emit(os.str(), out_path, out);
  }
  return ok ? 0 : 4;
}

BoundAlgebra load_algebra(const std::string& file, long d_max) {
  Json j = load_json_file(file);
  Quiver q = quiver_from_json(j.at("quiver"));
  std::vector<PathVector> rels;
  if (j.contains("relations")) rels = relations_from_json(q, j.at("relations"));
  return BoundAlgebra::build(q, std::move(rels), d_max);
}

int cmd_algebra(const std::string& sub, const std::string& file, long d_max, long bound,
                bool json, const std::string& out_path, std::ostream& out) {
  BoundAlgebra A = load_algebra(file, d_max);
  std::ostringstream os;
  Json j;
  if (sub == "gldim") {
    GlobalDimension g = global_dimension(A, bound);
    if (json) {
      j["global_dimension"] = g.bounded ? Json(g.value) : Json("above_bound");
      emit(j.dump(2), out_path, out);
    } else {
      if (g.bounded)
        os << "global dimension " << g.value;
      else
        os << "global dimension above bound " << bound;
      emit(os.str(), out_path, out);
    }
    return 0;
  }
  if (sub == "ext2") {
    Bimodule X = ext2_bimodule(A);
    if (json) {
      j["dims"] = Json::object();
      for (int u = 0; u < X.n; ++u) {
        Json row = Json::object();
        for (int v = 0; v < X.n; ++v) row[A.quiver().vertex(v)] = X.dims[u][v];
        j["dims"][A.quiver().vertex(u)] = std::move(row);
      }
      j["total"] = X.total();
      emit(j.dump(2), out_path, out);
    } else {
      os << "Ext^2(DA,A) total dim " << X.total() << "\n";
      for (int u = 0; u < X.n; ++u)
        for (int v = 0; v < X.n; ++v)
          if (X.dims[u][v])
            os << "  e_" << A.quiver().vertex(u) << " X e_" << A.quiver().vertex(v) << " = "
               << X.dims[u][v] << "\n";
      emit(os.str(), out_path, out);
    }
    return 0;
  }
  if (sub == "tilde-quiver") {
    Quiver t = tilde_quiver(A, bound);
    emit(quiver_to_json(t).dump(2), out_path, out);
    return 0;
  }
  if (sub == "tor2") {
    Bimodule X = ext2_bimodule(A);
    NilpotencyReport via2 = tensor_power_nilpotency(A, X, bound);
    NilpotencyReport via3 = tor2_nilpotency(A, bound);
    if (json) {
      j["tensor_power_route"] = {{"nilpotent", via2.nilpotent}, {"index", via2.index}};
      j["tor2_route"] = {{"nilpotent", via3.nilpotent}, {"index", via3.index}};
      j["routes_agree"] = via2.nilpotent == via3.nilpotent;
      emit(j.dump(2), out_path, out);
    } else {
      os << "tensor powers: " << (via2.nilpotent ? "nilpotent" : "above bound");
      if (via2.nilpotent) os << " (index " << via2.index << ")";
      os << "\nTor_2 iterates: " << (via3.nilpotent ? "nilpotent" : "above bound");
      if (via3.nilpotent) os << " (index " << via3.index << ")";
      emit(os.str(), out_path, out);
    }
    return via2.nilpotent == via3.nilpotent ? 0 : 4;
  }
  throw Error("unknown algebra subcommand " + sub);
}

Json actual_reproduction();

int cmd_reproduce(bool json, const std::string& golden_path, const std::string& out_path,
                  std::ostream& out) {
  Json actual = actual_reproduction();
  Json golden =
      golden_path.empty() ? Json::parse(builtin_golden()) : load_json_file(golden_path);

  std::vector<std::string> mismatches;
  // Leaf-by-leaf diff over the golden document.
  std::function<void(const std::string&, const Json&, const Json&)> walk =
      [&](const std::string& prefix, const Json& g, const Json& a) {
        if (g.is_object()) {
          for (const auto& [key, gv] : g.items()) {
            if (!a.contains(key)) {
              mismatches.push_back(prefix + "/" + key + ": missing");
              continue;
            }
            walk(prefix + "/" + key, gv, a.at(key));
          }
          return;
        }
        if (g != a)
          mismatches.push_back(prefix + ": expected " + g.dump() + ", got " + a.dump());
      };
  walk("", golden, actual);

  if (json) {
    Json j;
    j["match"] = mismatches.empty();
    j["mismatches"] = mismatches;
    j["actual"] = actual;
    emit(j.dump(2), out_path, out);
  } else {
    std::ostringstream os;
    if (mismatches.empty()) {
      os << "all reproduced values match";
    } else {
      os << "MISMATCHES:\n";
      for (const auto& m : mismatches) os << "  " << m << "\n";
    }
    emit(os.str(), out_path, out);
  }
  return mismatches.empty() ? 0 : 5;
}

Json actual_reproduction() {
  Json result;

  // Worked pipeline example.
  TiltingInput in = tilting_from_json(Json::parse(builtin_example_input()));
  auto P = run_pipeline(in);
  Json ex;
  ex["word"] = word_to_string(P->word);
  CoxeterSystem w(P->q0);
  ex["word_reduced"] = w.is_reduced(P->word);
  {
    Json m = Json::array();
    for (const auto& o : P->objects) m.push_back(o.dim);
    ex["m_dims"] = std::move(m);
  }
  {
    // The displayed preinjective window of the source quiver, two tau steps.
    TranslationQuiver shown = knit_preinjective(P->q0, 2);
    std::vector<std::vector<long>> dims;
    for (const auto& v : shown.vertices) dims.push_back(v.dim);
    std::sort(dims.begin(), dims.end());
    ex["window_dims"] = dims;
    ex["tau_021"] = coxeter_translate_dims(P->q0, {0, 2, 1});
    ex["tau_263"] = coxeter_translate_dims(P->q0, {2, 6, 3});
  }
  ex["b_dim"] = P->B.algebra.dim();
  ex["b_arrows"] = P->B.algebra.quiver().num_arrows();
  ex["b_relations"] = static_cast<long>(P->B.algebra.relations().size());
  {
    Json deg = Json::array();
    for (const auto& r : P->B.algebra.relations()) {
      const Quiver& qb = P->B.algebra.quiver();
      const Path& p = r.terms().begin()->first;
      deg.push_back({qb.vertex(path_source(qb, p)), qb.vertex(path_target(qb, p))});
    }
    ex["b_relation_degrees"] = std::move(deg);
  }
  {
    Json f = Json::array(), fd = Json::array(), pi = Json::array();
    for (int i = 0; i < static_cast<int>(P->objects.size()); ++i) {
      f.push_back(P->f_wedge(i));
      fd.push_back(reversed(P->f_wedge(i)));
      if (P->objects[i].q == 0) pi.push_back(i + 1);
    }
    ex["f_natural"] = std::move(f);
    ex["f_display"] = std::move(fd);
    ex["projective_injectives"] = std::move(pi);
  }
  {
    SequenceCheck s = P->fundamental_sequence(0);
    auto total = [](const std::vector<long>& v) {
      long t = 0;
      for (long c : v) t += c;
      return t;
    };
    ex["x1_sequence_totals"] = {total(s.f_x), total(s.f_h0), total(s.f_h1), total(s.f_x_vee)};
    bool all_exact = true;
    for (int i : P->mbar) all_exact = all_exact && P->fundamental_sequence(i).exact;
    ex["sequences_exact"] = all_exact;
    ex["i1_image_display"] = reversed(P->f_vee_mod_proj(0));
  }
  {
    long total = 0;
    for (int u : P->mbar)
      for (int v : P->mbar) total += P->tilde_endo_dim(u, v);
    ex["tilde_total"] = total;
    auto counts = P->tilde_arrow_counts();
    Json arrows = Json::array();
    const auto& A = *P->A;
    auto name_of_object = [&](int obj) {
      for (int u = 0; u < A.algebra.num_vertices(); ++u)
        if (P->mbar[A.vertex_object[u]] == obj) return A.algebra.quiver().vertex(u);
      throw Error("reproduce: object is not a vertex of the presented algebra");
    };
    for (size_t a = 0; a < counts.size(); ++a)
      for (size_t b = 0; b < counts[a].size(); ++b)
        if (counts[a][b])
          arrows.push_back({{"from", name_of_object(P->mbar[b])},
                            {"to", name_of_object(P->mbar[a])},
                            {"count", counts[a][b]}});
    ex["new_arrows"] = std::move(arrows);

    // Cross-module identities.
    Bimodule X = ext2_bimodule(P->A->algebra);
    bool ext2_ok = true;
    const int nbar = static_cast<int>(P->mbar.size());
    for (int u = 0; u < nbar; ++u)
      for (int v = 0; v < nbar; ++v) {
        const int obj_u = P->mbar[P->A->vertex_object[u]];
        const int obj_v = P->mbar[P->A->vertex_object[v]];
        std::vector<long> parts;
        P->tilde_endo_dim(obj_v, obj_u, &parts);
        ext2_ok = ext2_ok && X.dims[u][v] == (parts.size() > 1 ? parts[1] : 0);
      }
    ex["ext2_matches_mesh"] = ext2_ok;
    NilpotencyReport via2 = tensor_power_nilpotency(P->A->algebra, X, 64);
    NilpotencyReport via3 = tor2_nilpotency(P->A->algebra, 64);
    ex["tor2_nilpotent_both_routes"] = via2.nilpotent && via3.nilpotent;
    TensorAlgebraDims t = tensor_algebra_dims(P->A->algebra, X, 64);
    ex["tensor_algebra_total"] = t.finite ? Json(t.total) : Json("above_bound");
  }
  result["pipeline"] = std::move(ex);

  // Auslander algebra of the linear A4 quiver.
  {
    Quiver q({"1", "2", "3", "4"},
             {{"a", "1", "2", 0}, {"b", "2", "3", 0}, {"c", "3", "4", 0}});
    TranslationQuiver window = knit_preinjective(q, 10);
    MeshHoms homs(window);
    std::vector<int> all;
    for (int v = 0; v < static_cast<int>(window.vertices.size()); ++v) all.push_back(v);
    EndoPresentation aus = present_endomorphism_algebra(homs, all, 12);
    Json a4;
    GlobalDimension g = global_dimension(aus.algebra, 8);
    a4["global_dimension"] = g.bounded ? Json(g.value) : Json("above_bound");
    Quiver t = tilde_quiver(aus.algebra);
    a4["tilde_vertices"] = t.num_vertices();
    a4["tilde_arrows"] = t.num_arrows();
    a4["added_arrows"] = t.num_arrows() - aus.algebra.quiver().num_arrows();
    result["auslander_a4"] = std::move(a4);
  }
  return result;
}

}  // namespace

std::string builtin_example_input() {
  return R"({
  "quiver": {
    "vertices": ["1", "2", "3"],
    "arrows": [
      {"id": "a", "source": "1", "target": "2"},
      {"id": "b", "source": "3", "target": "2"},
      {"id": "b'", "source": "3", "target": "2"}
    ]
  },
  "summands": [
    {"vertex": "3", "power": 1},
    {"vertex": "1", "power": 2},
    {"vertex": "1", "power": 0}
  ]
})";
}

std::string builtin_golden() {
  return R"({
  "pipeline": {
    "word": "232132",
    "word_reduced": true,
    "m_dims": [[3,8,4],[2,6,3],[1,4,2],[1,1,0],[0,2,1],[0,1,0]],
    "window_dims": [[0,1,0],[0,2,1],[0,3,2],[1,1,0],[1,4,2],[2,6,3],[3,8,4],[3,11,6],[4,16,9]],
    "tau_021": [2,6,3],
    "tau_263": [4,16,9],
    "b_dim": 10,
    "b_arrows": 4,
    "b_relations": 1,
    "b_relation_degrees": [["1","3"]],
    "f_display": [[0,1,0],[1,2,0],[2,4,0],[2,4,1],[4,6,0],[8,13,1]],
    "projective_injectives": [4,5,6],
    "x1_sequence_totals": [1,61,66,6],
    "sequences_exact": true,
    "i1_image_display": [2,4,0],
    "tilde_total": 11,
    "new_arrows": [{"from": "3", "to": "1", "count": 1}],
    "ext2_matches_mesh": true,
    "tor2_nilpotent_both_routes": true,
    "tensor_algebra_total": 11
  },
  "auslander_a4": {
    "global_dimension": 2,
    "tilde_vertices": 10,
    "tilde_arrows": 18,
    "added_arrows": 6
  }
})";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"computer algebra for quivers with potential, concealed algebras and"
               " preprojective-algebra dimension identities"};
  app.require_subcommand(1);
  app.fallthrough();

  long d_max = 12;
  long bound = 64;
  bool json = false;
  std::string out_path;
  app.add_option("--dmax", d_max, "degree bound for Groebner truncation")->capture_default_str();
  app.add_option("--bound", bound, "power and resolution bound")->capture_default_str();
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--out", out_path, "write the report to a file");

  // quiver validate|op|double
  auto* quiver_cmd = app.add_subcommand("quiver", "quiver file utilities");
  quiver_cmd->require_subcommand(1);
  std::string quiver_file;
  auto* qval = quiver_cmd->add_subcommand("validate", "check a quiver file");
  qval->add_option("file", quiver_file)->required();
  auto* qop = quiver_cmd->add_subcommand("op", "opposite quiver");
  qop->add_option("file", quiver_file)->required();
  auto* qdouble = quiver_cmd->add_subcommand("double", "double quiver");
  qdouble->add_option("file", quiver_file)->required();

  std::string qp_file;
  auto* jac = app.add_subcommand("jacobian", "Jacobian algebra of a quiver with potential");
  jac->add_option("file", qp_file)->required();

  std::string gz_file;
  auto* gz = app.add_subcommand("ginzburg-check", "graded quiver, differential and d^2 = 0");
  gz->add_option("file", gz_file)->required();

  auto* alg = app.add_subcommand("algebra", "bound quiver algebra computations");
  alg->require_subcommand(1);
  std::string alg_file;
  for (const char* name : {"gldim", "ext2", "tilde-quiver", "tor2"}) {
    auto* sub = alg->add_subcommand(name);
    sub->add_option("file", alg_file)->required();
  }

  std::string knit_file;
  int knit_depth = 4;
  auto* knit_cmd = app.add_subcommand("knit", "preinjective component of an acyclic quiver");
  knit_cmd->add_option("file", knit_file)->required();
  knit_cmd->add_option("--depth", knit_depth, "tau powers to knit")->capture_default_str();

  auto* cox = app.add_subcommand("coxeter", "Coxeter group of the underlying graph");
  cox->require_subcommand(1);
  std::string cox_file, cox_word;
  auto* cox_red = cox->add_subcommand("reduced", "is the word reduced?");
  cox_red->add_option("file", cox_file)->required();
  cox_red->add_option("word", cox_word)->required();
  auto* cox_len = cox->add_subcommand("length", "length of the group element");
  cox_len->add_option("file", cox_file)->required();
  cox_len->add_option("word", cox_word)->required();

  std::string pipe_file;
  auto* pipe = app.add_subcommand("pipeline", "tilting module to reduced word and dimensions");
  pipe->add_option("file", pipe_file)->required();

  std::string golden_file;
  auto* repro = app.add_subcommand("reproduce-example", "recompute the bundled worked examples");
  repro->add_option("--golden", golden_file, "compare against this golden file instead");

  std::vector<std::string> argv = args;
  std::vector<const char*> cargs;
  cargs.push_back("qpkit");
  for (const auto& a : argv) cargs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends print through CLI11's machinery.
      std::ostringstream os;
      os << app.help();
      out << os.str();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (qval->parsed()) {
      quiver_from_json(load_json_file(quiver_file));
      emit("valid", out_path, out);
      return 0;
    }
    if (qop->parsed()) {
      Quiver q = quiver_from_json(load_json_file(quiver_file));
      emit(quiver_to_json(opposite_quiver(q)).dump(2), out_path, out);
      return 0;
    }
    if (qdouble->parsed()) {
      Quiver q = quiver_from_json(load_json_file(quiver_file));
      emit(quiver_to_json(double_quiver(q)).dump(2), out_path, out);
      return 0;
    }
    if (jac->parsed()) return cmd_jacobian(qp_file, d_max, json, out_path, out);
    if (gz->parsed()) return cmd_ginzburg_check(gz_file, json, out_path, out);
    if (alg->parsed()) {
      for (auto* sub : alg->get_subcommands())
        return cmd_algebra(sub->get_name(), alg_file, d_max, bound, json, out_path, out);
    }
    if (knit_cmd->parsed()) {
      Quiver q = quiver_from_json(load_json_file(knit_file));
      emit(translation_quiver_to_json(knit_preinjective(q, knit_depth)).dump(2), out_path, out);
      return 0;
    }
    if (cox_red->parsed() || cox_len->parsed()) {
      Quiver q = quiver_from_json(load_json_file(cox_file));
      CoxeterSystem w(q);
      auto word = parse_word(cox_word, w.rank());
      if (cox_red->parsed()) {
        bool red = w.is_reduced(word);
        emit(red ? "reduced" : "not reduced", out_path, out);
        return red ? 0 : 2;
      }
      emit(std::to_string(w.length(word)), out_path, out);
      return 0;
    }
    if (pipe->parsed()) {
      TiltingInput in = tilting_from_json(load_json_file(pipe_file));
      auto P = run_pipeline(in, d_max, bound);
      emit(pipeline_report(*P).dump(2), out_path, out);
      return 0;
    }
    if (repro->parsed()) return cmd_reproduce(json, golden_file, out_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 1;
}

}  // namespace qpkit
