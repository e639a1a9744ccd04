// Copyright 2026 The latcirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latcirc/io.h"

#include <fstream>
#include <iostream>
#include <sstream>

namespace latcirc::io {

namespace {

[[noreturn]] void schema_error(const std::string &what) { throw Error(ErrorKind::Schema, what); }

template <class F>
auto guarded(const char *what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        schema_error(std::string(what) + ": " + e.what());
    }
}

json stamp(json j, const char *kind) {
    j["latcirc_schema"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

void expect_kind(const json &j, const char *kind) {
    check_schema(j);
    if (kind_of(j) != kind) {
        schema_error(std::string("expected a '") + kind + "' document, found '" + kind_of(j) + "'");
    }
}

json list_to_json(const std::vector<cplx> &v) {
    json a = json::array();
    for (cplx c : v) {
        a.push_back(to_json(c));
    }
    return a;
}

json vec_to_json(const Vec &v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); i++) {
        a.push_back(to_json(v(i)));
    }
    return a;
}

Vec vec_from_json(const json &j) {
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); i++) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    }
    return v;
}

json pairs_to_json(const std::set<std::pair<int, int>> &s) {
    json a = json::array();
    for (const auto &[r, c] : s) {
        a.push_back({r, c});
    }
    return a;
}

std::set<std::pair<int, int>> pairs_from_json(const json &j) {
    std::set<std::pair<int, int>> s;
    for (const auto &p : j) {
        s.insert({p.at(0).get<int>(), p.at(1).get<int>()});
    }
    return s;
}

json boundary_to_json(const Boundary &b) {
    json j{{"kind", boundary_kind_name(b.kind)}};
    if (b.kind == BoundaryKind::Fixed) {
        j["left"] = b.left;
        j["right"] = b.right;
    }
    return j;
}

Boundary boundary_from_json(const json &j) {
    std::string k = j.at("kind").get<std::string>();
    if (k == "fixed") {
        return Boundary::fixed(j.at("left").get<std::vector<int>>(), j.at("right").get<std::vector<int>>());
    }
    if (k == "open") {
        return Boundary::open();
    }
    if (k == "periodic") {
        return Boundary::periodic();
    }
    schema_error("unknown boundary kind '" + k + "'");
}

const char *plane_name(LgtPlane p) {
    switch (p) {
        case LgtPlane::XY: return "xy";
        case LgtPlane::XT: return "xt";
        case LgtPlane::YT: return "yt";
    }
    return "?";
}

LgtPlane plane_from(const std::string &s) {
    if (s == "xy") return LgtPlane::XY;
    if (s == "xt") return LgtPlane::XT;
    if (s == "yt") return LgtPlane::YT;
    schema_error("unknown face plane '" + s + "'");
}

const char *dir_name(LgtDir d) {
    switch (d) {
        case LgtDir::X: return "x";
        case LgtDir::Y: return "y";
        case LgtDir::T: return "t";
    }
    return "?";
}

LgtDir dir_from(const std::string &s) {
    if (s == "x") return LgtDir::X;
    if (s == "y") return LgtDir::Y;
    if (s == "t") return LgtDir::T;
    schema_error("unknown edge direction '" + s + "'");
}

json model_body(const VertexModel &m) {
    json vs = json::array();
    for (const auto &v : m.vertices) {
        vs.push_back({{"line", v.line}, {"weights", list_to_json(v.w)}});
    }
    return {{"family", "vertex"}, {"q", m.q}, {"width", m.width}, {"vertices", vs}, {"boundary", boundary_to_json(m.boundary)}};
}

json model_body(const EdgeModel &m) {
    const auto &g = m.graph;
    const Mat id = Mat::Identity(m.q, m.q);
    const Mat ones = Mat::Ones(m.q, m.q);
    json hs = json::array(), vs = json::array(), fs = json::array(), ps = json::array();
    for (int r = 0; r < g.n; r++) {
        for (int c = 0; c < g.m; c++) {
            if (g.has_horizontal(r, c) && m.h(r, c) != id) {
                hs.push_back({{"row", r}, {"col", c}, {"table", to_json(m.h(r, c))}});
            }
            if (g.has_vertical(r, c) && m.v(r, c) != ones) {
                vs.push_back({{"row", r}, {"col", c}, {"table", to_json(m.v(r, c))}});
            }
            if (m.f(r, c) != Vec::Ones(m.q)) {
                fs.push_back({{"row", r}, {"col", c}, {"weights", vec_to_json(m.f(r, c))}});
            }
        }
    }
    for (const Pin &p : m.pins) {
        ps.push_back({{"row", p.row}, {"col", p.col}, {"value", p.value}, {"table", to_json(p.table)}, {"label", p.label}});
    }
    return {{"family", "edge"},
            {"q", m.q},
            {"n", g.n},
            {"m", g.m},
            {"deleted_vertical", pairs_to_json(g.deleted_vertical)},
            {"contracted_horizontal", pairs_to_json(g.contracted_horizontal)},
            {"horizontal", hs},
            {"vertical", vs},
            {"fields", fs},
            {"pins", ps},
            {"boundary", boundary_to_json(m.boundary)}};
}

json model_body(const LgtModel &m) {
    json fs = json::array(), gs = json::array();
    for (const auto &[f, c] : m.faces) {
        json e{{"x", f.x}, {"y", f.y}, {"z", f.z}, {"plane", plane_name(f.plane)}, {"even", to_json(c.even)},
               {"odd", to_json(c.odd)}};
        if (!c.label.empty()) {
            e["label"] = c.label;
        }
        fs.push_back(e);
    }
    for (const auto &[e, v] : m.gauge_fixed) {
        gs.push_back({{"x", e.x}, {"y", e.y}, {"z", e.z}, {"dir", dir_name(e.dir)}, {"value", v}});
    }
    return {{"family", "lgt"}, {"q", 2},         {"X", m.X},
            {"Y", m.Y},        {"Z", m.Z},       {"faces", fs},
            {"gauge_fixed", gs}, {"boundary", boundary_to_json(m.boundary)}};
}

VertexModel vertex_from(const json &j) {
    VertexModel m;
    m.q = j.at("q").get<int>();
    m.width = j.at("width").get<int>();
    for (const auto &v : j.at("vertices")) {
        VertexModel::Vertex x;
        x.line = v.at("line").get<int>();
        for (const auto &w : v.at("weights")) {
            x.w.push_back(complex_from_json(w));
        }
        m.vertices.push_back(std::move(x));
    }
    m.boundary = boundary_from_json(j.at("boundary"));
    m.validate();
    return m;
}

EdgeModel edge_from(const json &j) {
    PlanarCircuitGraph g(j.at("n").get<int>(), j.at("m").get<int>());
    g.deleted_vertical = pairs_from_json(j.value("deleted_vertical", json::array()));
    g.contracted_horizontal = pairs_from_json(j.value("contracted_horizontal", json::array()));
    g.validate();
    EdgeModel m = EdgeModel::on_graph(g, j.at("q").get<int>());
    auto cell = [&](const json &e, const char *what) {
        int r = e.at("row").get<int>(), c = e.at("col").get<int>();
        if (r < 0 || r >= g.n || c < 0 || c >= g.m) {
            schema_error(std::string(what) + " entry outside the grid");
        }
        return std::pair{r, c};
    };
    for (const auto &e : j.value("horizontal", json::array())) {
        auto [r, c] = cell(e, "horizontal");
        if (!g.has_horizontal(r, c)) {
            schema_error("horizontal table on an absent edge");
        }
        m.h(r, c) = matrix_from_json(e.at("table"));
    }
    for (const auto &e : j.value("vertical", json::array())) {
        auto [r, c] = cell(e, "vertical");
        if (!g.has_vertical(r, c)) {
            schema_error("vertical table on an absent edge");
        }
        m.v(r, c) = matrix_from_json(e.at("table"));
    }
    for (const auto &e : j.value("fields", json::array())) {
        auto [r, c] = cell(e, "field");
        m.f(r, c) = vec_from_json(e.at("weights"));
    }
    for (const auto &e : j.value("pins", json::array())) {
        auto [r, c] = cell(e, "pin");
        m.pins.push_back(Pin{r, c, e.at("value").get<int>(), matrix_from_json(e.at("table")), e.value("label", "")});
    }
    m.boundary = boundary_from_json(j.at("boundary"));
    m.validate();
    return m;
}

LgtModel lgt_from(const json &j) {
    LgtModel m;
    m.X = j.at("X").get<int>();
    m.Y = j.at("Y").get<int>();
    m.Z = j.at("Z").get<int>();
    m.boundary = boundary_from_json(j.at("boundary"));
    for (const auto &f : j.value("faces", json::array())) {
        LgtFace face{f.at("x").get<int>(), f.at("y").get<int>(), f.at("z").get<int>(),
                     plane_from(f.at("plane").get<std::string>())};
        m.set_face(face, complex_from_json(f.at("even")), complex_from_json(f.at("odd")), f.value("label", ""));
    }
    for (const auto &e : j.value("gauge_fixed", json::array())) {
        LgtEdge edge{e.at("x").get<int>(), e.at("y").get<int>(), e.at("z").get<int>(),
                     dir_from(e.at("dir").get<std::string>())};
        m.gauge_fixed[edge] = e.at("value").get<int>();
    }
    m.validate();
    return m;
}

}  // namespace

json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        schema_error("complex numbers must be [re, im] arrays, got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Mat &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(to_json(m(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

Mat matrix_from_json(const json &j) {
    return guarded("matrix", [&] {
        if (!j.is_array() || j.empty()) {
            schema_error("matrices must be non-empty arrays of rows");
        }
        const size_t cols = j[0].size();
        Mat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
        for (size_t r = 0; r < j.size(); r++) {
            if (!j[r].is_array() || j[r].size() != cols) {
                schema_error("matrix rows must have equal length");
            }
            for (size_t c = 0; c < cols; c++) {
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
            }
        }
        return m;
    });
}

json to_json(const Kappa &k) {
    return {{"half_pow2", k.half_pow2}, {"q", k.q}, {"pow_q", k.pow_q}, {"residual", to_json(k.residual)}};
}

Kappa kappa_from_json(const json &j) {
    return guarded("kappa", [&] {
        Kappa k;
        k.half_pow2 = j.at("half_pow2").get<int>();
        k.q = j.at("q").get<int>();
        k.pow_q = j.at("pow_q").get<int>();
        k.residual = complex_from_json(j.at("residual"));
        return k;
    });
}

json to_json(const ProductState &s) {
    json a = json::array();
    for (const Vec &f : s.factors) {
        a.push_back(vec_to_json(f));
    }
    return a;
}

ProductState product_from_json(const json &j, int q) {
    return guarded("product state", [&] {
        ProductState s;
        for (const auto &f : j) {
            s.factors.push_back(vec_from_json(f));
            if (s.factors.back().size() != q) {
                schema_error("product state factors must have length q");
            }
        }
        return s;
    });
}

json model_to_json(const LatticeModel &m) {
    return stamp(std::visit([](const auto &x) { return model_body(x); }, m), "model");
}

LatticeModel model_from_json(const json &j) {
    expect_kind(j, "model");
    return guarded("model", [&]() -> LatticeModel {
        std::string fam = j.at("family").get<std::string>();
        if (fam == "vertex") return vertex_from(j);
        if (fam == "edge") return edge_from(j);
        if (fam == "lgt") return lgt_from(j);
        schema_error("unknown model family '" + fam + "'");
    });
}

json circuit_to_json(const Circuit &c) {
    json gs = json::array();
    for (const Gate &g : c.gates()) {
        gs.push_back({{"targets", g.targets}, {"matrix", to_json(g.matrix)}, {"label", g.label}});
    }
    return stamp({{"q", c.q()}, {"width", c.width()}, {"prefactor", to_json(c.prefactor())}, {"gates", gs}}, "circuit");
}

namespace {

Circuit circuit_body(const json &j) {
    Circuit c(j.at("width").get<int>(), j.at("q").get<int>());
    if (j.contains("prefactor")) {
        c.set_prefactor(complex_from_json(j.at("prefactor")));
    }
    for (const auto &g : j.at("gates")) {
        c.add(matrix_from_json(g.at("matrix")), g.at("targets").get<std::vector<int>>(), g.value("label", ""));
    }
    return c;
}

}  // namespace

Circuit circuit_from_json(const json &j) {
    check_schema(j);
    if (kind_of(j) != "circuit" && kind_of(j) != "mapped") {
        schema_error("expected a circuit document, found '" + kind_of(j) + "'");
    }
    return guarded("circuit", [&] { return circuit_body(j); });
}

json mapped_to_json(const MappedCircuit &mc) {
    json j = circuit_to_json(mc.circuit);
    j["kind"] = "mapped";
    j["kappa"] = to_json(mc.kappa.value());
    j["kappa_exact"] = to_json(mc.kappa);
    j["mode"] = boundary_kind_name(mc.mode);
    if (mc.mode != BoundaryKind::Periodic) {
        j["left"] = to_json(mc.left);
        j["right"] = to_json(mc.right);
    }
    return j;
}

MappedCircuit mapped_from_json(const json &j) {
    expect_kind(j, "mapped");
    return guarded("mapped circuit", [&] {
        MappedCircuit mc;
        mc.circuit = circuit_body(j);
        mc.kappa = j.contains("kappa_exact") ? kappa_from_json(j.at("kappa_exact")) : Kappa::scalar(complex_from_json(j.at("kappa")));
        std::string mode = j.at("mode").get<std::string>();
        if (mode == "periodic") {
            mc.mode = BoundaryKind::Periodic;
        } else {
            mc.mode = mode == "open" ? BoundaryKind::Open : BoundaryKind::Fixed;
            mc.left = product_from_json(j.at("left"), mc.circuit.q());
            mc.right = product_from_json(j.at("right"), mc.circuit.q());
        }
        return mc;
    });
}

json logical_to_json(const LogicalCircuit &c) {
    json gs = json::array();
    for (const LogicalGate &g : c.gates) {
        json e{{"name", g.name}, {"targets", g.targets}};
        if (!g.params.empty()) {
            e["params"] = g.params;
        }
        if (g.matrix.size() > 0) {
            e["matrix"] = to_json(g.matrix);
        }
        gs.push_back(e);
    }
    return stamp({{"width", c.width}, {"gates", gs}}, "logical");
}

LogicalCircuit logical_from_json(const json &j) {
    expect_kind(j, "logical");
    return guarded("logical circuit", [&] {
        LogicalCircuit c;
        c.width = j.at("width").get<int>();
        for (const auto &g : j.at("gates")) {
            LogicalGate x;
            x.name = g.at("name").get<std::string>();
            x.targets = g.at("targets").get<std::vector<int>>();
            x.params = g.value("params", std::vector<double>{});
            if (g.contains("matrix")) {
                x.matrix = matrix_from_json(g.at("matrix"));
            }
            c.gates.push_back(std::move(x));
        }
        return c;
    });
}

json compiled_to_json(const CompiledInstance &ci) {
    json ref = circuit_to_json(ci.reference);
    ref.erase("latcirc_schema");
    json model = model_to_json(ci.model);
    model.erase("latcirc_schema");
    json j{{"target", compile_target_name(ci.target)},
           {"model", model},
           {"kappa", to_json(ci.kappa.value())},
           {"kappa_exact", to_json(ci.kappa)},
           {"reference", ref},
           {"trace", ci.trace},
           {"target_description", ci.target_description},
           {"approximation_bound", ci.approximation_bound},
           {"parameters", ci.parameters}};
    if (!ci.trace) {
        j["left"] = to_json(ci.left);
        j["right"] = to_json(ci.right);
    }
    return stamp(j, "compiled");
}

CompiledInstance compiled_from_json(const json &j) {
    expect_kind(j, "compiled");
    return guarded("compiled instance", [&] {
        CompiledInstance ci;
        ci.target = parse_compile_target(j.at("target").get<std::string>());
        json model = j.at("model");
        model["latcirc_schema"] = kSchemaVersion;
        ci.model = model_from_json(model);
        ci.kappa = kappa_from_json(j.at("kappa_exact"));
        ci.reference = circuit_body(j.at("reference"));
        ci.trace = j.at("trace").get<bool>();
        if (!ci.trace) {
            ci.left = product_from_json(j.at("left"), ci.reference.q());
            ci.right = product_from_json(j.at("right"), ci.reference.q());
        }
        ci.target_description = j.value("target_description", "");
        ci.approximation_bound = j.value("approximation_bound", 0.0);
        ci.parameters = j.value("parameters", std::map<std::string, double>{});
        return ci;
    });
}

json audit_to_json(const CompiledInstance &ci) {
    json entries = json::array();
    for (const auto &p : ci.provenance) {
        entries.push_back({{"gate", p.gate}, {"interaction", p.interaction}});
    }
    return stamp({{"target", compile_target_name(ci.target)}, {"provenance", entries}}, "audit");
}

json estimate_to_json(const Estimate &e) {
    return stamp({{"value", to_json(e.value)},
                  {"epsilon", e.epsilon},
                  {"shots_used", e.shots_used},
                  {"p0_re", e.p0_re},
                  {"p0_im", e.p0_im},
                  {"rng", rng_description()}},
                 "estimate");
}

void check_schema(const json &j) {
    if (!j.is_object()) {
        schema_error("documents must be JSON objects");
    }
    if (!j.contains("latcirc_schema")) {
        schema_error("missing \"latcirc_schema\" version field");
    }
    const json &v = j.at("latcirc_schema");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) {
        schema_error("unsupported latcirc_schema " + v.dump() + " (expected " + std::to_string(kSchemaVersion) + ")");
    }
}

std::string kind_of(const json &j) {
    auto it = j.find("kind");
    if (it == j.end() || !it->is_string()) {
        schema_error("document lacks a \"kind\" tag");
    }
    return it->get<std::string>();
}

json read_document(const std::string &path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            schema_error("cannot open '" + path + "'");
        }
        buf << in.rdbuf();
    }
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error &e) {
        schema_error("'" + path + "' is not valid JSON: " + e.what());
    }
    check_schema(j);
    return j;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

}  // namespace latcirc::io
