#include "dpz/json_io.hpp"

#include "dpz/errors.hpp"

namespace dpz {

namespace {

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v);
  return a;
}

std::vector<Vector> vectors_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of vectors");
  std::vector<Vector> out;
  for (const auto& v : j) {
    if (!v.is_array()) throw InputError("expected an integer vector");
    Vector x;
    for (const auto& e : v) {
      if (!e.is_number_integer()) throw InputError("vector entries must be integers");
      x.push_back(e.get<Int>());
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

Json to_json(const IntMatrix& m) { return vectors_to_json(m.row_list()); }

IntMatrix matrix_from_json(const Json& j) {
  auto rows = vectors_from_json(j);
  if (rows.empty()) throw InputError("matrix must be non-empty");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw InputError("matrix rows have different lengths");
  return IntMatrix::from_rows(rows);
}

Json to_json(const Lattice& l) {
  return Json{{"rank", l.rank()}, {"gram", to_json(l.gram)}, {"basis", l.labels}};
}

Lattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram")) throw InputError("lattice needs a gram member");
  IntMatrix gram = matrix_from_json(j.at("gram"));
  std::vector<std::string> labels;
  if (j.contains("basis")) labels = j.at("basis").get<std::vector<std::string>>();
  if (j.contains("rank") && j.at("rank").get<std::size_t>() != gram.rows()) throw InputError("rank does not match gram");
  return lattice_from_gram(gram, labels);
}

Json to_json(const Obstruction& o) {
  return Json{{"criterion", to_string(o.criterion)}, {"kind", to_string(o.kind)}, {"check", to_string(o.check)},
              {"norm", o.norm},  {"other_norm", o.other_norm},     {"predicate", o.predicate}};
}

Obstruction obstruction_from_json(const Json& j) {
  Obstruction o{criterion_from_string(j.at("criterion").get<std::string>()),
                certificate_kind_from_string(j.at("kind").get<std::string>()),
                obstruction_check_from_string(j.at("check").get<std::string>()),
                j.value("norm", Int{0}),
                j.value("other_norm", Int{0}),
                j.value("predicate", std::string{})};
  return o;
}

Json to_json(const ReducibilityResult& r) {
  const auto& c = r.certificate;
  Json obs = Json::array();
  for (const auto& o : c.obstructions) obs.push_back(to_json(o));
  Json undecided = Json::array();
  for (auto u : c.undecided) undecided.push_back(to_string(u));
  return Json{{"verdict", to_string(r.verdict)},
              {"kind", to_string(c.kind)},
              {"witnesses", vectors_to_json(c.witnesses)},
              {"predicate", c.predicate},
              {"height", c.height},
              {"height_bound", c.height_bound},
              {"obstructions", obs},
              {"undecided", undecided}};
}

ReducibilityResult result_from_json(const Json& j) {
  try {
    ReducibilityResult r;
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    auto& c = r.certificate;
    c.kind = certificate_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("witnesses")) c.witnesses = vectors_from_json(j.at("witnesses"));
    c.predicate = j.value("predicate", std::string{});
    c.height = j.value("height", Int{0});
    c.height_bound = j.value("height_bound", Int{0});
    if (j.contains("obstructions"))
      for (const auto& o : j.at("obstructions")) c.obstructions.push_back(obstruction_from_json(o));
    if (j.contains("undecided"))
      for (const auto& u : j.at("undecided")) c.undecided.push_back(criterion_from_string(u.get<std::string>()));
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

Json to_json(const InvolutionClass& c) {
  const auto& inv = c.invariants;
  Json j{{"n", c.n},
         {"index", c.index},
         {"carter_exponent", c.carter_exponent},
         {"zg", {{"t", c.zg.t}, {"c", c.zg.c}, {"r", c.zg.r}}},
         {"invariants",
          {{"plus_even", inv.plus_even},
           {"minus_even", inv.minus_even},
           {"det_plus", inv.det_plus},
           {"det_minus", inv.det_minus},
           {"fixes_norm_plus1", inv.fixes_norm_plus1},
           {"fixes_norm_minus1", inv.fixes_norm_minus1},
           {"fixes_hyperbolic_pair", inv.fixes_hyperbolic_pair},
           {"swaps_minus1_pair", inv.swaps_minus1_pair}}},
         {"representative", to_json(c.representative)},
         {"root_set", vectors_to_json(c.root_set)},
         {"class_size", c.class_size},
         {"conjugacy_verified", c.conjugacy_verified},
         {"realized_by", c.realized_by}};
  j["verdict"] = c.verdict ? to_json(*c.verdict) : Json(nullptr);
  return j;
}

Json to_json(const DecompositionTree& t) {
  const auto& leaf = t.leaf;
  Json node{{"node", "leaf"},
            {"type", to_string(leaf.type)},
            {"index", leaf.index},
            {"basis", vectors_to_json(leaf.basis)},
            {"gram", to_json(leaf.gram)},
            {"action", to_json(leaf.action)},
            {"check", to_json(leaf.check)}};
  for (auto it = t.splits.rbegin(); it != t.splits.rend(); ++it) {
    node = Json{{"node", "split"},
                {"block", vectors_to_json(it->block)},
                {"diagonal_part", to_json(it->action)},
                {"from", to_string(it->from)},
                {"child", node}};
  }
  return node;
}

Json to_json(const NamedInvolution& m) {
  return Json{{"name", m.label()},
              {"n", m.n},
              {"degree", m.degree},
              {"basis", m.basis == BasisKind::HE ? "HE" : "quadric"},
              {"labels", m.involution.lattice.labels},
              {"matrix", to_json(m.involution.matrix)}};
}

Isometry isometry_from_matrix_file(const Json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw InputError("matrix file needs a \"matrix\" member");
  IntMatrix m = matrix_from_json(j.at("matrix"));
  if (!m.is_square()) throw InputError("matrix must be square");
  std::string basis = j.value("basis", std::string("HE"));
  int n = static_cast<int>(m.rows()) - 1;
  Lattice l;
  if (basis == "HE") {
    l = del_pezzo(n);
  } else if (basis == "quadric") {
    if (n < 1) throw InputError("quadric basis needs rank >= 2");
    l = blown_up_quadric(n);
  } else {
    throw InputError("unknown basis \"" + basis + "\" (expected HE or quadric)");
  }
  return make_isometry(l, m);
}

Json matrix_file(const Isometry& g, BasisKind basis) {
  return Json{{"basis", basis == BasisKind::HE ? "HE" : "quadric"}, {"matrix", to_json(g.matrix)}};
}

}  // namespace dpz
