#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "hopfrad/checks.hpp"

namespace hopfrad {

using ojson = nlohmann::ordered_json;

/// Sparse rank-3 tensor entry [i, j, k, "scalar"].
using TensorQuad = std::tuple<long, long, long, std::string>;

struct DocAlgebra {
  long dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::string> unit;
  std::vector<TensorQuad> structure;
};

struct DocGroup {
  std::vector<std::vector<int>> table;
  std::vector<std::string> labels;
  bool dual = false;
};

struct DocHopf {
  std::string algebra;
  std::vector<TensorQuad> delta;
  std::vector<std::string> counit;
  std::vector<std::vector<std::string>> antipode;
  std::optional<DocGroup> group;
};

struct DocAction {
  std::string hopf;
  std::string target;
  std::vector<TensorQuad> tensor;
};

struct DocScenario {
  std::string action;
  std::optional<std::string> cocycle;
  std::optional<std::vector<std::vector<std::string>>> inner_witness;
};

/// The on-disk scenario document: named sections of sparse tensors with
/// scalar strings. Scalar strings are kept verbatim so that emit is the
/// identity on canonical documents.
struct Document {
  std::uint32_t characteristic = 0;
  std::map<std::string, DocAlgebra> algebras;
  std::map<std::string, DocHopf> hopf_algebras;
  std::map<std::string, DocAction> actions;
  std::map<std::string, DocAction> cocycles;
  std::map<std::string, DocScenario> scenarios;
};

// ---- parsing -----------------------------------------------------------------

namespace detail {

inline const ojson& need(const ojson& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw Error::parse("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

inline std::vector<TensorQuad> parse_quads(const ojson& j, const std::string& where) {
  if (!j.is_array()) throw Error::parse(where + " must be an array of [i, j, k, scalar] entries");
  std::vector<TensorQuad> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer() || !e[3].is_string())
      throw Error::parse("bad sparse tensor entry in " + where);
    out.emplace_back(e[0].get<long>(), e[1].get<long>(), e[2].get<long>(), e[3].get<std::string>());
  }
  return out;
}

inline std::vector<std::string> parse_string_row(const ojson& j, const std::string& where) {
  if (!j.is_array()) throw Error::parse(where + " must be an array of scalar strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error::parse("non-string scalar in " + where);
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline std::vector<std::vector<std::string>> parse_string_matrix(const ojson& j, const std::string& where) {
  if (!j.is_array()) throw Error::parse(where + " must be an array of rows");
  std::vector<std::vector<std::string>> out;
  for (const auto& row : j) out.push_back(parse_string_row(row, where));
  return out;
}

}  // namespace detail

inline Document parse_document(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error::parse(e.what());
  }
  if (!j.is_object()) throw Error::parse("document root must be an object");
  Document doc;
  {
    const auto& v = detail::need(j, "format_version", "document");
    if (!v.is_string() || v.get<std::string>() != "1")
      throw Error::parse("unsupported format_version (expected \"1\")");
    const auto& f = detail::need(j, "field", "document");
    const auto& c = detail::need(f, "characteristic", "field");
    if (!c.is_number_integer() || c.get<long>() < 0) throw Error::parse("field.characteristic must be a non-negative integer");
    doc.characteristic = static_cast<std::uint32_t>(c.get<long>());
    make_field(doc.characteristic);  // validates prime <= 97 or 0
  }
  if (auto it = j.find("algebras"); it != j.end())
    for (const auto& [name, a] : it->items()) {
      DocAlgebra da;
      da.dim = detail::need(a, "dim", "algebra " + name).get<long>();
      if (da.dim < 1) throw Error::parse("algebra " + name + " must have dim >= 1");
      if (a.contains("basis_labels")) da.basis_labels = detail::parse_string_row(a["basis_labels"], name);
      da.unit = detail::parse_string_row(detail::need(a, "unit", "algebra " + name), name + ".unit");
      da.structure = detail::parse_quads(detail::need(a, "structure", "algebra " + name), name + ".structure");
      doc.algebras.emplace(name, std::move(da));
    }
  if (auto it = j.find("hopf_algebras"); it != j.end())
    for (const auto& [name, h] : it->items()) {
      DocHopf dh;
      dh.algebra = detail::need(h, "algebra", "hopf " + name).get<std::string>();
      dh.delta = detail::parse_quads(detail::need(h, "delta", "hopf " + name), name + ".delta");
      dh.counit = detail::parse_string_row(detail::need(h, "counit", "hopf " + name), name + ".counit");
      dh.antipode = detail::parse_string_matrix(detail::need(h, "antipode", "hopf " + name), name + ".antipode");
      if (h.contains("group")) {
        const auto& g = h["group"];
        DocGroup dg;
        dg.table = detail::need(g, "table", "group of " + name).get<std::vector<std::vector<int>>>();
        dg.labels = detail::parse_string_row(detail::need(g, "labels", "group of " + name), name + ".group.labels");
        dg.dual = detail::need(g, "dual", "group of " + name).get<bool>();
        dh.group = std::move(dg);
      }
      doc.hopf_algebras.emplace(name, std::move(dh));
    }
  auto parse_action_like = [&](const ojson& section, std::map<std::string, DocAction>& dst, const char* what) {
    for (const auto& [name, a] : section.items()) {
      DocAction da;
      da.hopf = detail::need(a, "hopf", std::string(what) + " " + name).get<std::string>();
      da.target = detail::need(a, "target", std::string(what) + " " + name).get<std::string>();
      da.tensor = detail::parse_quads(detail::need(a, "tensor", std::string(what) + " " + name), name + ".tensor");
      dst.emplace(name, std::move(da));
    }
  };
  if (auto it = j.find("actions"); it != j.end()) parse_action_like(*it, doc.actions, "action");
  if (auto it = j.find("cocycles"); it != j.end()) parse_action_like(*it, doc.cocycles, "cocycle");
  if (auto it = j.find("scenarios"); it != j.end())
    for (const auto& [name, s] : it->items()) {
      DocScenario ds;
      ds.action = detail::need(s, "action", "scenario " + name).get<std::string>();
      if (s.contains("cocycle") && !s["cocycle"].is_null()) ds.cocycle = s["cocycle"].get<std::string>();
      if (s.contains("inner_witness"))
        ds.inner_witness = detail::parse_string_matrix(s["inner_witness"], name + ".inner_witness");
      doc.scenarios.emplace(name, std::move(ds));
    }
  return doc;
}

// ---- emission ------------------------------------------------------------------

namespace detail {

inline ojson quads_json(std::vector<TensorQuad> quads) {
  std::sort(quads.begin(), quads.end());
  ojson out = ojson::array();
  for (const auto& [i, j, k, s] : quads) out.push_back(ojson::array({i, j, k, s}));
  return out;
}

}  // namespace detail

/// Canonical bytes: fixed key order, name-sorted sections, (i,j,k)-sorted
/// tensor entries, two-space indentation, trailing newline.
inline std::string emit_document(const Document& doc) {
  ojson j;
  j["format_version"] = "1";
  j["field"] = ojson{{"characteristic", doc.characteristic}};
  ojson algs = ojson::object();
  for (const auto& [name, a] : doc.algebras) {
    ojson ja;
    ja["dim"] = a.dim;
    if (!a.basis_labels.empty()) ja["basis_labels"] = a.basis_labels;
    ja["unit"] = a.unit;
    ja["structure"] = detail::quads_json(a.structure);
    algs[name] = std::move(ja);
  }
  j["algebras"] = std::move(algs);
  ojson hopfs = ojson::object();
  for (const auto& [name, h] : doc.hopf_algebras) {
    ojson jh;
    jh["algebra"] = h.algebra;
    jh["delta"] = detail::quads_json(h.delta);
    jh["counit"] = h.counit;
    jh["antipode"] = h.antipode;
    if (h.group) {
      jh["group"] = ojson{{"table", h.group->table}, {"labels", h.group->labels}, {"dual", h.group->dual}};
    }
    hopfs[name] = std::move(jh);
  }
  j["hopf_algebras"] = std::move(hopfs);
  auto action_like = [](const std::map<std::string, DocAction>& src) {
    ojson out = ojson::object();
    for (const auto& [name, a] : src)
      out[name] = ojson{{"hopf", a.hopf}, {"target", a.target}, {"tensor", detail::quads_json(a.tensor)}};
    return out;
  };
  j["actions"] = action_like(doc.actions);
  j["cocycles"] = action_like(doc.cocycles);
  ojson scens = ojson::object();
  for (const auto& [name, s] : doc.scenarios) {
    ojson js;
    js["action"] = s.action;
    if (s.cocycle) js["cocycle"] = *s.cocycle;
    if (s.inner_witness) js["inner_witness"] = *s.inner_witness;
    scens[name] = std::move(js);
  }
  j["scenarios"] = std::move(scens);
  return j.dump(2) + "\n";
}

// ---- typed instantiation -------------------------------------------------------

namespace detail {

template <class S>
std::vector<Mat<S>> tensor_from_quads(FieldSpec f, Index d0, Index d1, Index d2,
                                      const std::vector<TensorQuad>& quads, const std::string& where) {
  std::vector<Mat<S>> t(static_cast<std::size_t>(d0), zeros<S>(f, d1, d2));
  for (const auto& [i, j, k, s] : quads) {
    if (i < 0 || i >= d0 || j < 0 || j >= d1 || k < 0 || k >= d2)
      throw Error::parse("tensor index out of range in " + where);
    t[static_cast<std::size_t>(i)](j, k) = S::from_string(f, s);
  }
  return t;
}

template <class S>
RowVec<S> row_from_strings(FieldSpec f, Index n, const std::vector<std::string>& strs, const std::string& where) {
  if (static_cast<Index>(strs.size()) != n) throw Error::parse("row of wrong length in " + where);
  RowVec<S> v = zero_row<S>(f, n);
  for (Index i = 0; i < n; ++i) v(i) = S::from_string(f, strs[static_cast<std::size_t>(i)]);
  return v;
}

template <class S>
Mat<S> matrix_from_strings(FieldSpec f, Index rows, Index cols,
                           const std::vector<std::vector<std::string>>& strs, const std::string& where) {
  if (static_cast<Index>(strs.size()) != rows) throw Error::parse("matrix of wrong shape in " + where);
  Mat<S> m = zeros<S>(f, rows, cols);
  for (Index i = 0; i < rows; ++i) m.row(i) = row_from_strings<S>(f, cols, strs[static_cast<std::size_t>(i)], where);
  return m;
}

}  // namespace detail

/// Builds and fully verifies every scenario of a document. Group metadata on
/// a Hopf entry is never trusted: the stated tensors must coincide with the
/// group algebra (or its dual) generated from the stated Cayley table.
template <class S>
std::vector<Scenario<S>> scenarios_from_document(const Document& doc) {
  FieldSpec f = make_field(doc.characteristic);
  std::map<std::string, AlgebraDef<S>> algebras;
  for (const auto& [name, a] : doc.algebras) {
    Index n = static_cast<Index>(a.dim);
    auto table = detail::tensor_from_quads<S>(f, n, n, n, a.structure, "algebra " + name);
    auto unit = detail::row_from_strings<S>(f, n, a.unit, "algebra " + name + ".unit");
    algebras.emplace(name, algebra_make<S>(f, std::move(table), std::move(unit), a.basis_labels));
  }
  std::map<std::string, HopfDef<S>> hopfs;
  for (const auto& [name, h] : doc.hopf_algebras) {
    auto ait = algebras.find(h.algebra);
    if (ait == algebras.end()) throw Error::parse("hopf " + name + " references unknown algebra " + h.algebra);
    const Index n = ait->second.dim;
    auto delta = detail::tensor_from_quads<S>(f, n, n, n, h.delta, "hopf " + name + ".delta");
    auto counit = detail::row_from_strings<S>(f, n, h.counit, "hopf " + name + ".counit");
    auto antipode = detail::matrix_from_strings<S>(f, n, n, h.antipode, "hopf " + name + ".antipode");
    std::optional<GroupMeta> meta;
    if (h.group) meta = GroupMeta{h.group->table, h.group->labels, h.group->dual};
    HopfDef<S> built = hopf_make<S>(ait->second, std::move(delta), std::move(counit), std::move(antipode), meta);
    if (meta) {
      HopfDef<S> expected = group_algebra<S>(f, meta->table, meta->labels);
      if (meta->dual) expected = dual_hopf(expected);
      bool same = equal(built.counit, expected.counit) && equal(built.antipode, expected.antipode) &&
                  equal(built.algebra.unit, expected.algebra.unit);
      for (Index i = 0; i < n && same; ++i)
        same = equal(built.algebra.table[static_cast<std::size_t>(i)],
                     expected.algebra.table[static_cast<std::size_t>(i)]) &&
               equal(built.delta[static_cast<std::size_t>(i)], expected.delta[static_cast<std::size_t>(i)]);
      if (!same)
        throw Error::axiom("BadGroupMeta", "hopf " + name + " does not match the stated group structure");
    }
    hopfs.emplace(name, std::move(built));
  }
  std::vector<Scenario<S>> out;
  for (const auto& [name, s] : doc.scenarios) {
    auto ait = doc.actions.find(s.action);
    if (ait == doc.actions.end()) throw Error::parse("scenario " + name + " references unknown action " + s.action);
    const DocAction& da = ait->second;
    auto hit = hopfs.find(da.hopf);
    if (hit == hopfs.end()) throw Error::parse("action " + s.action + " references unknown hopf " + da.hopf);
    auto tit = algebras.find(da.target);
    if (tit == algebras.end()) throw Error::parse("action " + s.action + " references unknown algebra " + da.target);
    const HopfDef<S>& hopf = hit->second;
    const AlgebraDef<S>& target = tit->second;
    auto act = detail::tensor_from_quads<S>(f, hopf.dim(), target.dim, target.dim, da.tensor,
                                            "action " + s.action);
    std::optional<std::vector<Mat<S>>> sigma;
    if (s.cocycle) {
      auto cit = doc.cocycles.find(*s.cocycle);
      if (cit == doc.cocycles.end())
        throw Error::parse("scenario " + name + " references unknown cocycle " + *s.cocycle);
      if (cit->second.hopf != da.hopf || cit->second.target != da.target)
        throw Error::parse("cocycle " + *s.cocycle + " is attached to a different hopf/target pair");
      sigma = detail::tensor_from_quads<S>(f, hopf.dim(), hopf.dim(), target.dim, cit->second.tensor,
                                           "cocycle " + *s.cocycle);
    }
    std::optional<Mat<S>> witness;
    if (s.inner_witness)
      witness = detail::matrix_from_strings<S>(f, hopf.dim(), target.dim, *s.inner_witness,
                                               "scenario " + name + ".inner_witness");
    out.push_back(make_scenario<S>(name, action_make<S>(hopf, target, std::move(act), std::move(sigma)),
                                   std::move(witness)));
  }
  return out;
}

// ---- document construction from built scenarios ---------------------------------

namespace detail {

template <class S>
std::vector<TensorQuad> quads_from_tensor(const std::vector<Mat<S>>& t) {
  std::vector<TensorQuad> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (Index j = 0; j < t[i].rows(); ++j)
      for (Index k = 0; k < t[i].cols(); ++k)
        if (!t[i](j, k).is_zero()) out.emplace_back(static_cast<long>(i), j, k, t[i](j, k).str());
  std::sort(out.begin(), out.end());
  return out;
}

template <class S>
std::vector<std::vector<std::string>> strings_from_matrix(const Mat<S>& m) {
  std::vector<std::vector<std::string>> out;
  for (Index i = 0; i < m.rows(); ++i) out.push_back(row_strings(RowVec<S>(m.row(i))));
  return out;
}

template <class S>
DocAlgebra doc_algebra(const AlgebraDef<S>& a) {
  DocAlgebra d;
  d.dim = static_cast<long>(a.dim);
  for (Index i = 0; i < a.dim; ++i) d.basis_labels.push_back(a.label(i));
  d.unit = row_strings(a.unit);
  d.structure = quads_from_tensor(a.table);
  return d;
}

}  // namespace detail

template <class S>
Document document_from_scenarios(std::uint32_t characteristic, const std::vector<Scenario<S>>& scens) {
  Document doc;
  doc.characteristic = characteristic;
  for (const auto& s : scens) {
    const std::string rname = s.name + ".R", hname = s.name + ".H", haname = s.name + ".Halg",
                      aname = s.name + ".act", cname = s.name + ".sigma";
    doc.algebras.emplace(rname, detail::doc_algebra(s.bundle.target));
    doc.algebras.emplace(haname, detail::doc_algebra(s.bundle.hopf.algebra));
    DocHopf dh;
    dh.algebra = haname;
    dh.delta = detail::quads_from_tensor(s.bundle.hopf.delta);
    dh.counit = row_strings(s.bundle.hopf.counit);
    dh.antipode = detail::strings_from_matrix(s.bundle.hopf.antipode);
    if (s.bundle.hopf.group)
      dh.group = DocGroup{s.bundle.hopf.group->table, s.bundle.hopf.group->labels, s.bundle.hopf.group->dual};
    doc.hopf_algebras.emplace(hname, std::move(dh));
    DocAction da{hname, rname, detail::quads_from_tensor(s.bundle.act)};
    doc.actions.emplace(aname, std::move(da));
    DocScenario ds;
    ds.action = aname;
    if (s.bundle.sigma_supplied) {
      DocAction dc{hname, rname, detail::quads_from_tensor(s.bundle.sigma)};
      doc.cocycles.emplace(cname, std::move(dc));
      ds.cocycle = cname;
    }
    if (s.inner_witness) ds.inner_witness = detail::strings_from_matrix(*s.inner_witness);
    doc.scenarios.emplace(s.name, std::move(ds));
  }
  return doc;
}

// ---- verdict report serialization ------------------------------------------------

inline ojson subspace_json(const SubspaceDump& d) {
  ojson basis = ojson::array();
  for (const auto& row : d.basis) basis.push_back(row);
  return ojson{{"ambient", d.ambient}, {"basis", std::move(basis)}};
}

inline ojson report_json(const VerdictReport& r) {
  ojson j;
  j["theorem_id"] = r.theorem_id;
  j["scenario"] = r.scenario;
  j["expected"] = r.expected;
  j["observed"] = r.observed;
  j["lhs"] = subspace_json(r.lhs);
  j["rhs"] = subspace_json(r.rhs);
  if (r.witness) j["witness"] = ojson{{"kind", r.witness->kind}, {"coeffs", r.witness->coeffs}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

/// One record per line, canonical order; byte-identical across runs.
inline std::string reports_jsonl(const std::vector<VerdictReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += report_json(r).dump() + "\n";
  return out;
}

}  // namespace hopfrad
