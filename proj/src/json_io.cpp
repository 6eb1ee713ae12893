#include "qpkit/json_io.hpp"

#include <fstream>

namespace qpkit {

Quiver quiver_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw Error("quiver json: expected an object with 'vertices' and 'arrows'");
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw Error("quiver json: vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) {
    Arrow arrow;
    arrow.id = a.at("id").get<std::string>();
    arrow.source = a.at("source").get<std::string>();
    arrow.target = a.at("target").get<std::string>();
    arrow.degree = a.value("degree", 0L);
    arrows.push_back(std::move(arrow));
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : q.vertices()) j["vertices"].push_back(v);
  j["arrows"] = Json::array();
  for (const Arrow& a : q.arrows()) {
    Json aj;
    aj["id"] = a.id;
    aj["source"] = a.source;
    aj["target"] = a.target;
    if (a.degree != 0) aj["degree"] = a.degree;
    j["arrows"].push_back(std::move(aj));
  }
  return j;
}

namespace {

Path path_from_tokens(const Quiver& q, const Json& tokens) {
  if (!tokens.is_array() || tokens.empty())
    throw Error("path json: expected a nonempty array of ids");
  std::vector<std::string> ids;
  for (const auto& t : tokens) ids.push_back(t.get<std::string>());
  // A single token that names a vertex is the idempotent; anything else is a
  // sequence of arrow ids. Ambiguous single tokens are rejected.
  if (ids.size() == 1) {
    bool is_vertex = false, is_arrow = false;
    for (const auto& v : q.vertices()) is_vertex = is_vertex || v == ids[0];
    for (const Arrow& a : q.arrows()) is_arrow = is_arrow || a.id == ids[0];
    if (is_vertex && is_arrow)
      throw Error("path json: token '" + ids[0] + "' names both a vertex and an arrow");
    if (is_vertex) return Path{q.vertex_index(ids[0]), {}};
  }
  Path p;
  for (const auto& id : ids) p.arrows.push_back(q.arrow_index(id));
  p.source = q.source_of(p.arrows.front());
  if (!path_composable(q, p)) throw Error("path json: arrows do not compose");
  return p;
}

}  // namespace

PathVector path_vector_from_json(const Quiver& q, const Json& j) {
  if (!j.is_array()) throw Error("path vector json: expected an array of terms");
  PathVector v;
  for (const auto& term : j) {
    Rational c = parse_rational(term.at("coeff").get<std::string>());
    v.add_term(path_from_tokens(q, term.at("path")), c);
  }
  return v;
}

Json path_vector_to_json(const Quiver& q, const PathVector& v) {
  Json j = Json::array();
  for (const auto& [p, c] : v.terms()) {
    Json term;
    term["coeff"] = rational_to_string(c);
    Json toks = Json::array();
    if (p.is_vertex())
      toks.push_back(q.vertex(p.source));
    else
      for (int a : p.arrows) toks.push_back(q.arrow(a).id);
    term["path"] = std::move(toks);
    j.push_back(std::move(term));
  }
  return j;
}

std::vector<PathVector> relations_from_json(const Quiver& q, const Json& j) {
  if (!j.is_array()) throw Error("relations json: expected an array");
  std::vector<PathVector> out;
  for (const auto& r : j) out.push_back(path_vector_from_json(q, r));
  return out;
}

QuiverWithPotential qp_from_json(const Json& j) {
  QuiverWithPotential qp{quiver_from_json(j.at("quiver")), {}};
  if (j.contains("potential")) {
    for (const auto& term : j.at("potential")) {
      Rational c = parse_rational(term.at("coeff").get<std::string>());
      Path p;
      for (const auto& t : term.at("cycle")) p.arrows.push_back(qp.quiver.arrow_index(t.get<std::string>()));
      if (p.arrows.empty()) throw Error("qp json: empty cycle");
      p.source = qp.quiver.source_of(p.arrows.front());
      if (!path_composable(qp.quiver, p)) throw Error("qp json: cycle does not compose");
      qp.potential.add_cycle(qp.quiver, p, c);
    }
  }
  return qp;
}

Json qp_to_json(const QuiverWithPotential& qp) {
  Json j;
  j["quiver"] = quiver_to_json(qp.quiver);
  j["potential"] = Json::array();
  for (const auto& [cycle, c] : qp.potential.cycles()) {
    Json term;
    term["coeff"] = rational_to_string(c);
    Json arrows = Json::array();
    for (int a : cycle.arrows) arrows.push_back(qp.quiver.arrow(a).id);
    term["cycle"] = std::move(arrows);
    j["potential"].push_back(std::move(term));
  }
  return j;
}

Json algebra_to_json(const BoundAlgebra& a) {
  Json j;
  j["quiver"] = quiver_to_json(a.quiver());
  j["relations"] = Json::array();
  for (const auto& r : a.relations()) j["relations"].push_back(path_vector_to_json(a.quiver(), r));
  return j;
}

Representation representation_from_json(const BoundAlgebra& A, const Json& j) {
  const Quiver& q = A.quiver();
  Representation m;
  m.dims.assign(q.num_vertices(), 0);
  for (const auto& [key, value] : j.at("dims").items())
    m.dims[q.vertex_index(key)] = value.get<long>();
  for (int a = 0; a < q.num_arrows(); ++a)
    m.maps.push_back(RatMat::Zero(m.dims[q.target_of(a)], m.dims[q.source_of(a)]));
  if (j.contains("maps")) {
    for (const auto& [key, rows] : j.at("maps").items()) {
      int a = q.arrow_index(key);
      RatMat mat = RatMat::Zero(m.dims[q.target_of(a)], m.dims[q.source_of(a)]);
      if (static_cast<long>(rows.size()) != mat.rows())
        throw Error("representation json: row count mismatch on arrow " + key);
      for (long r = 0; r < mat.rows(); ++r) {
        const auto& row = rows.at(r);
        if (static_cast<long>(row.size()) != mat.cols())
          throw Error("representation json: column count mismatch on arrow " + key);
        for (long c = 0; c < mat.cols(); ++c)
          mat(r, c) = parse_rational(row.at(c).get<std::string>());
      }
      m.maps[a] = std::move(mat);
    }
  }
  validate_representation(A, m);
  return m;
}

Json representation_to_json(const BoundAlgebra& A, const Representation& m) {
  const Quiver& q = A.quiver();
  Json j;
  j["dims"] = Json::object();
  for (int v = 0; v < q.num_vertices(); ++v) j["dims"][q.vertex(v)] = m.dims[v];
  j["maps"] = Json::object();
  for (int a = 0; a < q.num_arrows(); ++a) {
    Json rows = Json::array();
    for (long r = 0; r < m.maps[a].rows(); ++r) {
      Json row = Json::array();
      for (long c = 0; c < m.maps[a].cols(); ++c)
        row.push_back(rational_to_string(m.maps[a](r, c)));
      rows.push_back(std::move(row));
    }
    j["maps"][q.arrow(a).id] = std::move(rows);
  }
  return j;
}

TiltingInput tilting_from_json(const Json& j) {
  TiltingInput in{quiver_from_json(j.at("quiver")), {}};
  for (const auto& s : j.at("summands"))
    in.summands.push_back({in.quiver.vertex_index(s.at("vertex").get<std::string>()),
                           s.at("power").get<int>()});
  return in;
}

Json translation_quiver_to_json(const TranslationQuiver& t) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : t.vertices) {
    Json vj;
    vj["j"] = t.base.vertex(v.j);
    vj["p"] = v.p;
    vj["dim"] = v.dim;
    j["vertices"].push_back(std::move(vj));
  }
  j["arrows"] = Json::array();
  for (const auto& e : t.edges) {
    Json ej;
    ej["from"] = {{"j", t.base.vertex(t.vertices[e.from].j)}, {"p", t.vertices[e.from].p}};
    ej["to"] = {{"j", t.base.vertex(t.vertices[e.to].j)}, {"p", t.vertices[e.to].p}};
    ej["arrow"] = t.base.arrow(e.base_arrow).id;
    ej["translate"] = e.translate;
    j["arrows"].push_back(std::move(ej));
  }
  j["complete"] = t.complete;
  return j;
}

Json pipeline_report(const PipelineData& p) {
  Json j;
  j["quiver"] = quiver_to_json(p.q0);
  j["M"] = Json::array();
  const int N = static_cast<int>(p.objects.size());
  for (int i = 0; i < N; ++i) {
    const auto& o = p.objects[i];
    Json oj;
    oj["index"] = i + 1;
    oj["vertex"] = p.q0.vertex(p.window.vertices[o.knit].j);
    oj["power"] = p.window.vertices[o.knit].p;
    oj["dim"] = o.dim;
    oj["dim_B"] = o.rep.dims;
    oj["phi"] = o.phi + 1;
    oj["q"] = o.q;
    oj["projective"] = o.projective;
    j["M"].push_back(std::move(oj));
  }
  j["B"] = algebra_to_json(p.B.algebra);
  j["B"]["dim"] = p.B.algebra.dim();
  j["B"]["hereditary"] = p.hereditary_b;
  Json phi = Json::array();
  for (int i = 0; i < N; ++i) phi.push_back(p.objects[i].phi + 1);
  j["phi"] = std::move(phi);
  j["word"] = word_to_string(p.word, p.q0.num_vertices());
  CoxeterSystem w(p.q0);
  j["word_reduced"] = w.is_reduced(p.word);
  Json f = Json::array();
  for (int i = 0; i < N; ++i) {
    Json fj;
    fj["index"] = i + 1;
    fj["wedge"] = p.f_wedge(i);
    fj["projective_injective"] = p.objects[i].q == 0;
    f.push_back(std::move(fj));
  }
  j["F"] = std::move(f);
  Json seq = Json::array();
  for (int i : p.mbar) {
    SequenceCheck s = p.fundamental_sequence(i);
    Json sj;
    sj["object"] = i + 1;
    sj["h0_mult"] = s.h0_mult;
    sj["h1_mult"] = s.h1_mult;
    sj["dims"] = {s.f_x, s.f_h0, s.f_h1, s.f_x_vee};
    sj["exact"] = s.exact;
    seq.push_back(std::move(sj));
  }
  j["sequence_checks"] = std::move(seq);
  Json tilde = Json::array();
  long total = 0;
  for (int u : p.mbar)
    for (int v : p.mbar) {
      std::vector<long> parts;
      long d = p.tilde_endo_dim(u, v, &parts);
      total += d;
      if (d == 0) continue;
      Json tj;
      tj["from"] = u + 1;
      tj["to"] = v + 1;
      tj["dim"] = d;
      tj["parts"] = parts;
      tilde.push_back(std::move(tj));
    }
  j["tilde_dims"] = std::move(tilde);
  j["tilde_total"] = total;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("malformed json in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace qpkit
