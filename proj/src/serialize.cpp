#include "numrad/serialize.hpp"

namespace numrad {

json vec_to_json(const Vec& v, Field f) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (f == Field::Complex) out.push_back(json::array({v[i].real(), v[i].imag()}));
    else out.push_back(v[i].real());
  }
  return out;
}

Vec vec_from_json(const json& j, Field f) {
  if (!j.is_array()) throw InputError("vector JSON must be an array");
  Vec v(static_cast<int>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    if (e.is_array()) {
      if (e.size() != 2) throw InputError("complex scalar JSON must be [re, im]");
      v[static_cast<int>(i)] = Complex(e[0].get<double>(), e[1].get<double>());
    } else {
      v[static_cast<int>(i)] = Complex(e.get<double>(), 0.0);
    }
  }
  if (f == Field::Real && v.imag().cwiseAbs().maxCoeff() > 0.0)
    throw InputError("complex entries in a real-space vector");
  return v;
}

json matrix_to_json(const Mat& m, Field f) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (f == Field::Complex) data.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
      else data.push_back(m(i, k).real());
    }
  }
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  out["field"] = f == Field::Complex ? "complex" : "real";
  return out;
}

std::pair<Mat, Field> matrix_from_json(const json& j) {
  for (const char* key : {"rows", "cols", "data", "field"})
    if (!j.contains(key)) throw InputError(std::string("matrix JSON missing '") + key + "'");
  int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
  if (rows < 1 || cols < 1) throw InputError("matrix JSON: rows/cols must be positive");
  std::string fs = j["field"].get<std::string>();
  Field f;
  if (fs == "real") f = Field::Real;
  else if (fs == "complex") f = Field::Complex;
  else throw InputError("matrix JSON: field must be 'real' or 'complex'");
  const json& data = j["data"];
  if (static_cast<int>(data.size()) != rows * cols)
    throw InputError("matrix JSON: data length does not match rows*cols");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      const json& e = data[static_cast<size_t>(i) * cols + k];
      if (e.is_array()) {
        if (e.size() != 2) throw InputError("matrix JSON: complex entries must be [re, im]");
        m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        m(i, k) = Complex(e.get<double>(), 0.0);
      }
    }
  }
  if (f == Field::Real && m.imag().cwiseAbs().maxCoeff() > 0.0)
    throw InputError("matrix JSON: complex entries in a real matrix");
  return {m, f};
}

json real_matrix_to_json(const RMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

RMat real_matrix_from_json(const json& j) {
  if (!j.is_array()) throw InputError("matrix JSON must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows > 0 ? static_cast<int>(j[0].size()) : 0;
  RMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw InputError("ragged matrix JSON");
    for (int k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

json pwl_to_json(const PwlOperator& T, const std::string& space_spec) {
  json cells = json::array();
  for (const Cell& c : T.cells) {
    json jc;
    jc["C"] = real_matrix_to_json(c.C);
    json d = json::array();
    for (Eigen::Index i = 0; i < c.d.size(); ++i) d.push_back(c.d[i]);
    jc["d"] = std::move(d);
    jc["A"] = real_matrix_to_json(c.A);
    json b = json::array();
    for (Eigen::Index i = 0; i < c.b.size(); ++i) b.push_back(c.b[i]);
    jc["b"] = std::move(b);
    cells.push_back(std::move(jc));
  }
  json out;
  out["space"] = space_spec;
  out["cells"] = std::move(cells);
  out["box_radius"] = T.box_radius;
  return out;
}

PwlOperator pwl_from_json(const json& j) {
  for (const char* key : {"space", "cells", "box_radius"})
    if (!j.contains(key)) throw InputError(std::string("pwl JSON missing '") + key + "'");
  NormedSpace sp = parse_space(j["space"].get<std::string>());
  std::vector<Cell> cells;
  for (const json& jc : j["cells"]) {
    Cell c;
    c.C = real_matrix_from_json(jc.at("C"));
    c.A = real_matrix_from_json(jc.at("A"));
    const json& d = jc.at("d");
    c.d = RVec(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) c.d[static_cast<int>(i)] = d[i].get<double>();
    const json& b = jc.at("b");
    c.b = RVec(static_cast<int>(b.size()));
    for (size_t i = 0; i < b.size(); ++i) c.b[static_cast<int>(i)] = b[i].get<double>();
    if (c.C.rows() == 0) c.C = RMat(0, sp.dim());
    cells.push_back(std::move(c));
  }
  return PwlOperator(sp, std::move(cells), j["box_radius"].get<double>());
}

json bracket_to_json(const RadiusBracket& br, Field f) {
  json out;
  out["lower"] = br.lower;
  out["upper"] = br.upper;
  out["converged"] = br.converged;
  out["tol"] = br.tol;
  switch (br.upper_method) {
    case UpperMethod::ClosedForm:
      out["upper_method"] = "closed_form";
      break;
    case UpperMethod::LimitFormula:
      out["upper_method"] = json{{"limit_formula",
                                  {{"t_min", br.t_min}, {"alpha_count", br.alpha_count}}}};
      break;
    case UpperMethod::CellSup:
      out["upper_method"] = "cell_sup";
      break;
  }
  json w;
  w["x"] = vec_to_json(br.witness.x, f);
  w["y"] = vec_to_json(br.witness.y, f);
  w["f"] = vec_to_json(br.witness.f, f);
  w["value"] = json::array({br.witness.value.real(), br.witness.value.imag()});
  out["witness"] = std::move(w);
  return out;
}

}  // namespace numrad
