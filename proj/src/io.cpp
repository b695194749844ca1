#include "zpk/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace zpk {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

Nat uint_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(where + "." + key, "expected a nonnegative integer");
  return v.get<Nat>();
}

Modulus modulus_from(const Json& j, const std::string& where) {
  const Nat p = uint_field(j, "p", where);
  const Nat k = uint_field(j, "k", where);
  try {
    return Modulus(p, static_cast<unsigned>(k));
  } catch (const std::exception& e) {
    bad(where, e.what());
  }
}

}  // namespace

Json to_json(const GroupElement& g) {
  const GroupElement t = trim_identity_tail(g);
  Json rows = Json::array();
  for (Index i = 0; i < t.window(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < t.window(); ++j) row.push_back(t.core()(i, j));
    rows.push_back(std::move(row));
  }
  Json j;
  j["p"] = t.mod().p();
  j["k"] = t.mod().k();
  j["n"] = t.window();
  j["rows"] = std::move(rows);
  return j;
}

GroupElement matrix_from_json(const Json& j, const std::string& where) {
  const Modulus m = modulus_from(j, where);
  const Nat n = uint_field(j, "n", where);
  const Json& rows = field(j, "rows", where);
  if (!rows.is_array() || rows.size() != n)
    bad(where + ".rows", "expected " + std::to_string(n) + " rows");
  MatN e = MatN::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (size_t i = 0; i < n; ++i) {
    const Json& row = rows[i];
    const std::string rw = where + ".rows[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n) bad(rw, "expected " + std::to_string(n) + " entries");
    for (size_t c = 0; c < n; ++c) {
      const Json& v = row[c];
      const std::string ew = rw + "[" + std::to_string(c) + "]";
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        bad(ew, "expected a nonnegative integer");
      const Nat x = v.get<Nat>();
      if (x >= m.size()) bad(ew, "entry " + std::to_string(x) + " is not canonical in [0, " +
                                     std::to_string(m.size()) + ")");
      e(static_cast<Index>(i), static_cast<Index>(c)) = x;
    }
  }
  try {
    return GroupElement(ResidueMatrix(std::move(e), m));
  } catch (const std::exception& ex) {
    bad(where, ex.what());
  }
}

Json to_json(const DoubleCoset& c) {
  Json j;
  j["m"] = c.m;
  j["rep"] = to_json(c.rep);
  return j;
}

DoubleCoset coset_from_json(const Json& j, const std::string& where) {
  const Nat m = uint_field(j, "m", where);
  return DoubleCoset{static_cast<Index>(m), matrix_from_json(field(j, "rep", where), where + ".rep")};
}

Json to_json(const TrainCoset& t) {
  Json parts = Json::array();
  for (const GroupElement& g : t.rep.parts) parts.push_back(to_json(g));
  Json j;
  j["alpha"] = t.alpha;
  j["gamma"] = t.gamma;
  j["parts"] = std::move(parts);
  return j;
}

TrainCoset train_from_json(const Json& j, const std::string& where) {
  const Nat alpha = uint_field(j, "alpha", where);
  const Nat gamma = uint_field(j, "gamma", where);
  const Json& parts = field(j, "parts", where);
  if (!parts.is_array() || parts.empty()) bad(where + ".parts", "expected a nonempty array");
  TupleElement rep;
  rep.parts.reserve(parts.size());
  for (size_t l = 0; l < parts.size(); ++l)
    rep.parts.push_back(matrix_from_json(parts[l], where + ".parts[" + std::to_string(l) + "]"));
  for (const GroupElement& g : rep.parts)
    if (!(g.mod() == rep.parts.front().mod())) bad(where + ".parts", "parts mix moduli");
  return TrainCoset{static_cast<Index>(alpha), static_cast<Index>(gamma), std::move(rep)};
}

Json to_json(const CertificateRecord& rec) {
  Json j;
  j["p"] = rec.g.mod().p();
  j["k"] = rec.g.mod().k();
  j["m"] = rec.m;
  j["g"] = to_json(rec.g);
  j["q"] = to_json(rec.cert.q);
  j["r"] = to_json(rec.cert.r);
  j["out"] = to_json(rec.cert.out);
  return j;
}

CertificateRecord certificate_from_json(const Json& j, const std::string& where) {
  const Modulus m = modulus_from(j, where);
  const Nat depth = uint_field(j, "m", where);
  GroupElement g = matrix_from_json(field(j, "g", where), where + ".g");
  GroupElement q = matrix_from_json(field(j, "q", where), where + ".q");
  GroupElement r = matrix_from_json(field(j, "r", where), where + ".r");
  GroupElement out = matrix_from_json(field(j, "out", where), where + ".out");
  for (const GroupElement* e : {&g, &q, &r, &out})
    if (!(e->mod() == m)) bad(where, "matrices disagree with the record modulus");
  return CertificateRecord{static_cast<Index>(depth), std::move(g),
                           ReductionCertificate{std::move(q), std::move(r), std::move(out)}};
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::yes:
      return "yes";
    case Decision::no:
      return "no";
    default:
      return "undecided";
  }
}

Json to_json(const CosetWitness& w) {
  Json j;
  j["u"] = to_json(w.u);
  j["v"] = to_json(w.v);
  return j;
}

Json to_json(const EqResult& r) {
  Json j;
  j["decision"] = decision_name(r.decision);
  j["window"] = r.window;
  j["examined"] = r.examined;
  j["exhausted"] = r.exhausted;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

namespace {

const char* factor_kind_name(FactorKind k) {
  return k == FactorKind::permutation ? "permutation" : "gl_m";
}

}  // namespace

Json to_json(const Factor& f) {
  Json j;
  j["kind"] = factor_kind_name(f.kind);
  j["matrix"] = to_json(f.element);
  return j;
}

Json factors_to_json(const std::vector<Factor>& fs) {
  Json arr = Json::array();
  for (const Factor& f : fs) arr.push_back(to_json(f));
  return arr;
}

std::vector<Factor> factors_from_json(const Json& j, const Modulus& m, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<Factor> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string fw = where + "[" + std::to_string(i) + "]";
    const Json& kind = field(j[i], "kind", fw);
    if (!kind.is_string()) bad(fw + ".kind", "expected a string");
    FactorKind fk;
    if (kind.get<std::string>() == "permutation")
      fk = FactorKind::permutation;
    else if (kind.get<std::string>() == "gl_m")
      fk = FactorKind::gl_m;
    else
      bad(fw + ".kind", "unknown kind '" + kind.get<std::string>() + "'");
    GroupElement e = matrix_from_json(field(j[i], "matrix", fw), fw + ".matrix");
    if (!(e.mod() == m)) bad(fw, "factor modulus disagrees");
    out.push_back(Factor{fk, std::move(e)});
  }
  return out;
}

std::string orbit_csv(Index n, const Modulus& m, const OrbitTable& table) {
  std::ostringstream s;
  s << "n,p,k,N,orbit_count,stabilized\n";
  for (const OrbitRow& r : table.rows) {
    const bool st = table.stabilized && r.window >= table.stable_from;
    s << n << ',' << m.p() << ',' << m.k() << ',' << r.window << ',' << r.count << ','
      << (st ? "true" : "false") << '\n';
  }
  return s.str();
}

Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw std::invalid_argument("cannot write '" + path + "'");
}

}  // namespace zpk
