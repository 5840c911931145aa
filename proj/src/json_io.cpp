#include "abelcat/json_io.hpp"

#include <limits>

#include "json.hpp"

namespace abelcat {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw AbelError(ErrKind::parse, path + ": " + why);
}

void expect_keys(const ordered_json& j, const std::string& path,
                 std::initializer_list<const char*> allowed) {
  for (const auto& [key, val] : j.items()) {
    (void)val;
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) fail(path + "/" + key, "unknown key");
  }
}

/* Accepts a JSON integer or a decimal string; the serializer falls back to
   strings for values outside the long long range. */
Int int_value(const ordered_json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t begin = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool digits = begin < s.size();
    for (std::size_t k = begin; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') digits = false;
    if (digits) return Int(s);
  }
  fail(path, "expected an integer");
}

long long int_field(const ordered_json& j, const std::string& path) {
  Int v = int_value(j, path);
  if (v < Int(std::numeric_limits<long long>::min()) ||
      v > Int(std::numeric_limits<long long>::max()))
    fail(path, "integer out of range");
  return v.convert_to<long long>();
}

IntMatrix matrix_rows(const ordered_json& j, const std::string& path,
                      std::size_t rows, std::size_t cols) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.size() != rows)
    fail(path, "expected " + std::to_string(rows) + " rows, found " +
                   std::to_string(j.size()));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    std::string rp = path + "/" + std::to_string(i);
    if (!row.is_array()) fail(rp, "expected a row array");
    if (row.size() != cols)
      fail(rp, "expected " + std::to_string(cols) + " entries, found " +
                   std::to_string(row.size()));
    for (std::size_t k = 0; k < cols; ++k)
      m.at(i, k) = int_value(row[k], rp + "/" + std::to_string(k));
  }
  return m;
}

ordered_json json_int(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return ordered_json(v.convert_to<long long>());
  return ordered_json(v.str());
}

ordered_json json_matrix_rows(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> name_list(const ordered_json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(path + "/" + std::to_string(i), "expected a name");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

}  // namespace

InputDocument parse_input(FpCategory& c, const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail("/", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("/", "expected a JSON object");
  expect_keys(j, "", {"ring", "objects", "morphisms", "commute_mode", "assertions",
                      "subcategory"});

  InputDocument doc;

  if (!j.contains("ring")) fail("/ring", "missing");
  const auto& jr = j["ring"];
  if (jr.is_string() && jr.get<std::string>() == "integers") {
    doc.ring = RingSpec::z();
  } else if (jr.is_object()) {
    expect_keys(jr, "/ring", {"zmod"});
    if (!jr.contains("zmod")) fail("/ring", "expected \"integers\" or {\"zmod\": n}");
    long long n = int_field(jr["zmod"], "/ring/zmod");
    if (n < 2) fail("/ring/zmod", "modulus must be at least 2");
    doc.ring = RingSpec::zn(n);
  } else {
    fail("/ring", "expected \"integers\" or {\"zmod\": n}");
  }

  if (j.contains("objects")) {
    if (!j["objects"].is_object()) fail("/objects", "expected an object map");
    for (const auto& [name, jo] : j["objects"].items()) {
      std::string path = "/objects/" + name;
      if (!jo.is_object()) fail(path, "expected a presentation object");
      expect_keys(jo, path, {"gens", "relations"});
      if (!jo.contains("gens")) fail(path + "/gens", "missing");
      long long gens = int_field(jo["gens"], path + "/gens");
      if (gens < 0) fail(path + "/gens", "must be non-negative");
      IntMatrix rel(std::size_t(gens), 0);
      if (jo.contains("relations")) {
        const auto& jrel = jo["relations"];
        std::string rp = path + "/relations";
        if (!jrel.is_array()) fail(rp, "expected an array of columns");
        rel = IntMatrix(std::size_t(gens), jrel.size());
        for (std::size_t k = 0; k < jrel.size(); ++k) {
          const auto& col = jrel[k];
          std::string cp = rp + "/" + std::to_string(k);
          if (!col.is_array()) fail(cp, "expected a column array");
          if (col.size() != std::size_t(gens))
            fail(cp, "expected " + std::to_string(gens) + " entries, found " +
                         std::to_string(col.size()));
          for (std::size_t i = 0; i < col.size(); ++i)
            rel.at(i, k) = int_value(col[i], cp + "/" + std::to_string(i));
        }
      }
      doc.diagram.objects.emplace(name,
                                  c.intern(FpModule(doc.ring, std::size_t(gens), rel)));
    }
  }

  if (j.contains("morphisms")) {
    if (!j["morphisms"].is_object()) fail("/morphisms", "expected an object map");
    for (const auto& [name, jm] : j["morphisms"].items()) {
      std::string path = "/morphisms/" + name;
      if (!jm.is_object()) fail(path, "expected {dom, cod, matrix}");
      expect_keys(jm, path, {"dom", "cod", "matrix"});
      for (const char* k : {"dom", "cod"}) {
        if (!jm.contains(k) || !jm[k].is_string())
          fail(path + "/" + k, "expected an object name");
        std::string target = jm[k].get<std::string>();
        if (!doc.diagram.objects.count(target))
          fail(path + "/" + k, "unknown object '" + target + "'");
      }
      ObjHandle dom = doc.diagram.objects.at(jm["dom"].get<std::string>());
      ObjHandle cod = doc.diagram.objects.at(jm["cod"].get<std::string>());
      if (!jm.contains("matrix")) fail(path + "/matrix", "missing");
      IntMatrix m = matrix_rows(jm["matrix"], path + "/matrix", c.module(cod).gens,
                                c.module(dom).gens);
      Mor mor;
      try {
        mor = c.make_morphism(dom, cod, std::move(m));
      } catch (const AbelError& e) {
        fail(path + "/matrix", e.what());
      }
      doc.diagram.arrows.emplace(
          name, Diagram::Arrow{jm["dom"].get<std::string>(),
                               jm["cod"].get<std::string>(), std::move(mor)});
    }
  }

  if (j.contains("commute_mode")) {
    if (!j["commute_mode"].is_string()) fail("/commute_mode", "expected a string");
    std::string mode = j["commute_mode"].get<std::string>();
    if (mode == "all_paths")
      doc.diagram.mode = Diagram::CommuteMode::all_paths;
    else if (mode == "asserted")
      doc.diagram.mode = Diagram::CommuteMode::asserted_pairs;
    else
      fail("/commute_mode", "expected \"all_paths\" or \"asserted\"");
  }

  auto check_arrows = [&](const std::vector<std::string>& names,
                          const std::string& path) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (!doc.diagram.arrows.count(names[i]))
        fail(path + "/" + std::to_string(i), "unknown arrow '" + names[i] + "'");
  };

  if (j.contains("assertions")) {
    if (!j["assertions"].is_array()) fail("/assertions", "expected an array");
    for (std::size_t i = 0; i < j["assertions"].size(); ++i) {
      const auto& ja = j["assertions"][i];
      std::string path = "/assertions/" + std::to_string(i);
      if (!ja.is_object() || ja.size() != 1)
        fail(path, "expected exactly one of \"commute\" or \"exact\"");
      if (ja.contains("commute")) {
        const auto& jc = ja["commute"];
        std::string cp = path + "/commute";
        if (!jc.is_object()) fail(cp, "expected {lhs, rhs}");
        expect_keys(jc, cp, {"lhs", "rhs"});
        if (!jc.contains("lhs") || !jc.contains("rhs"))
          fail(cp, "expected both lhs and rhs");
        Diagram::PathPair pair{name_list(jc["lhs"], cp + "/lhs"),
                               name_list(jc["rhs"], cp + "/rhs")};
        check_arrows(pair.lhs, cp + "/lhs");
        check_arrows(pair.rhs, cp + "/rhs");
        doc.diagram.path_pairs.push_back(std::move(pair));
      } else if (ja.contains("exact")) {
        const auto& je = ja["exact"];
        std::string ep = path + "/exact";
        if (!je.is_object()) fail(ep, "expected {arrows, left_zero, right_zero}");
        expect_keys(je, ep, {"arrows", "left_zero", "right_zero"});
        if (!je.contains("arrows")) fail(ep + "/arrows", "missing");
        Diagram::ExactClaim claim;
        claim.arrows = name_list(je["arrows"], ep + "/arrows");
        if (claim.arrows.empty()) fail(ep + "/arrows", "must not be empty");
        check_arrows(claim.arrows, ep + "/arrows");
        for (const char* k : {"left_zero", "right_zero"}) {
          if (!je.contains(k)) continue;
          if (!je[k].is_boolean()) fail(ep + "/" + k, "expected a boolean");
        }
        if (je.contains("left_zero")) claim.left_zero = je["left_zero"].get<bool>();
        if (je.contains("right_zero")) claim.right_zero = je["right_zero"].get<bool>();
        doc.diagram.exact_claims.push_back(std::move(claim));
      } else {
        fail(path, "expected exactly one of \"commute\" or \"exact\"");
      }
    }
  }

  if (j.contains("subcategory")) {
    doc.subcategory = name_list(j["subcategory"], "/subcategory");
    for (std::size_t i = 0; i < doc.subcategory.size(); ++i)
      if (!doc.diagram.objects.count(doc.subcategory[i]))
        fail("/subcategory/" + std::to_string(i),
             "unknown object '" + doc.subcategory[i] + "'");
  }

  return doc;
}

std::string serialize_input(FpCategory& c, const InputDocument& doc) {
  ordered_json j;
  if (doc.ring.is_zmod())
    j["ring"] = ordered_json{{"zmod", json_int(doc.ring.modulus)}};
  else
    j["ring"] = "integers";

  ordered_json objs = ordered_json::object();
  for (const auto& [name, h] : doc.diagram.objects) {
    const FpModule& m = c.module(h);
    ordered_json cols = ordered_json::array();
    for (std::size_t k = 0; k < m.relations.cols(); ++k) {
      ordered_json col = ordered_json::array();
      for (std::size_t i = 0; i < m.gens; ++i) col.push_back(json_int(m.relations.at(i, k)));
      cols.push_back(std::move(col));
    }
    objs[name] = ordered_json{{"gens", m.gens}, {"relations", std::move(cols)}};
  }
  j["objects"] = std::move(objs);

  ordered_json mors = ordered_json::object();
  for (const auto& [name, a] : doc.diagram.arrows)
    mors[name] = ordered_json{
        {"dom", a.dom}, {"cod", a.cod}, {"matrix", json_matrix_rows(a.mor.map)}};
  j["morphisms"] = std::move(mors);

  j["commute_mode"] =
      doc.diagram.mode == Diagram::CommuteMode::all_paths ? "all_paths" : "asserted";

  ordered_json asserts = ordered_json::array();
  for (const auto& p : doc.diagram.path_pairs)
    asserts.push_back(
        ordered_json{{"commute", ordered_json{{"lhs", p.lhs}, {"rhs", p.rhs}}}});
  for (const auto& e : doc.diagram.exact_claims)
    asserts.push_back(ordered_json{
        {"exact", ordered_json{{"arrows", e.arrows},
                               {"left_zero", e.left_zero},
                               {"right_zero", e.right_zero}}}});
  j["assertions"] = std::move(asserts);
  j["subcategory"] = doc.subcategory;

  return j.dump(2) + "\n";
}

}  // namespace abelcat
