#include "wittext/serialize.hpp"

namespace wittext {

json to_json(const FieldElement& v) { return json(v.c); }

FieldElement element_from_json(const json& j, const FieldCtx& ctx) {
  return ctx.from_coeffs(j.get<std::vector<int64_t>>());
}

json to_json(const FieldCtx& ctx) {
  return json{{"p", ctx.p()}, {"modulus", ctx.modulus()}};
}

FieldCtx field_from_json(const json& j) {
  int64_t p = j.at("p").get<int64_t>();
  auto mod = j.at("modulus").get<std::vector<int64_t>>();
  if (mod.size() == 2) return make_prime_field(p);
  // x^p - x - c: the constant slot holds p - c
  int64_t c = (p - mod.at(0)) % p;
  FieldCtx ctx = make_artin_schreier_field(p, c);
  if (ctx.modulus() != mod)
    throw Error(Errc::InvalidArgument, "unsupported field modulus in input");
  return ctx;
}

json to_json(const PCharacter& chi) {
  json vals = json::object();
  for (const auto& [i, v] : chi.values()) vals[std::to_string(i)] = to_json(v);
  return json{{"p", chi.p()}, {"values", vals}};
}

PCharacter character_from_json(const json& j, const FieldCtx& ctx) {
  int64_t p = j.at("p").get<int64_t>();
  WittAlgebra alg(p);
  PCharacter chi(alg, ctx);
  for (const auto& [key, val] : j.at("values").items())
    chi.set_value(std::stoi(key), element_from_json(val, ctx));
  return chi;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.get(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const FieldCtx& ctx) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  Matrix m(ctx, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, element_from_json(j.at(r).at(c), ctx));
  return m;
}

json to_json(const ModuleRep& rep) {
  json actions = json::object();
  for (int i = rep.min_index(); i <= rep.max_index(); ++i)
    actions[std::to_string(i)] = to_json(rep.action(i));
  return json{{"p", rep.chi().p()},
              {"field", to_json(rep.ctx())},
              {"algebra", rep.algebra() == Algebra::W ? "W" : "W0"},
              {"dim", rep.dim()},
              {"chi", to_json(rep.chi())},
              {"actions", actions}};
}

ModuleRep module_from_json(const json& j) {
  FieldCtx ctx = field_from_json(j.at("field"));
  PCharacter chi = character_from_json(j.at("chi"), ctx);
  Algebra alg = j.at("algebra").get<std::string>() == "W" ? Algebra::W : Algebra::W0;
  ModuleRep rep(alg, chi, j.at("dim").get<int>());
  for (const auto& [key, val] : j.at("actions").items())
    rep.set_action(std::stoi(key), matrix_from_json(val, ctx));
  return rep;
}

json table_to_json(const ExtTable& t, const PCharacter& chi) {
  json simples = json::array();
  for (const auto& s : t.simples) simples.push_back(s.label);
  return json{{"p", chi.p()},
              {"chi", to_json(chi)},
              {"height", chi.height()},
              {"simples", simples},
              {"dims", t.dims}};
}

std::string table_to_csv(const ExtTable& t) {
  std::string out = "M\\N";
  for (const auto& s : t.simples) out += "," + s.label;
  out += "\n";
  for (size_t i = 0; i < t.simples.size(); ++i) {
    out += t.simples[i].label;
    for (int d : t.dims[i]) out += "," + std::to_string(d);
    out += "\n";
  }
  return out;
}

std::string table_to_markdown(const ExtTable& t) {
  std::string out = "| M\\N |";
  for (const auto& s : t.simples) out += " " + s.label + " |";
  out += "\n|---|";
  for (size_t i = 0; i < t.simples.size(); ++i) out += "---|";
  out += "\n";
  for (size_t i = 0; i < t.simples.size(); ++i) {
    out += "| " + t.simples[i].label + " |";
    for (int d : t.dims[i]) out += " " + std::to_string(d) + " |";
    out += "\n";
  }
  return out;
}

json report_to_json(const std::string& labelM, const std::string& labelN,
                    Algebra alg, const CocycleReport& rep) {
  json out{{"pair", {labelM, labelN}},
           {"algebra", alg == Algebra::W ? "W" : "W0"},
           {"solver", rep.mode_used == SolverMode::Graded ? "graded" : "dense"},
           {"dimZ", rep.dimZ},
           {"dimB", rep.dimB},
           {"ext", rep.ext}};
  if (rep.witness) {
    json w = json::array();
    for (const Matrix& m : *rep.witness) w.push_back(to_json(m));
    out["witness"] = std::move(w);
  }
  return out;
}

json report_to_json(const std::string& labelM, const std::string& labelN,
                    const ReducedReport& rep) {
  json out{{"pair", {labelM, labelN}},
           {"algebra", "W0"},
           {"solver", "reduced"},
           {"dimZ", rep.dimZ},
           {"dimB", rep.dimB},
           {"ext", rep.ext}};
  if (rep.witness) {
    json w = json::array();
    for (const FieldElement& v : rep.witness->a) w.push_back(to_json(v));
    out["witness"] = std::move(w);
  }
  return out;
}

}  // namespace wittext
