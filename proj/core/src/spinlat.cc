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

#include "latcirc/spinlat.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "latcirc/parallel.h"

namespace latcirc {

namespace {

[[noreturn]] void geometry_error(const std::string &what) {
    throw Error(ErrorKind::MalformedGeometry, what);
}

void check_spin_values(const std::vector<int> &values, int q, const char *where) {
    for (int v : values) {
        if (v < 0 || v >= q) {
            throw Error(ErrorKind::InvalidConfig, std::string(where) + " spin value " + std::to_string(v) +
                                                      " outside 0.." + std::to_string(q - 1));
        }
    }
}

// Fixes spin s to v, recording a conflict as a zero constant.
void fix_spin(FactorGraph &fg, int s, int v) {
    if (v < 0 || v >= fg.q) {
        throw Error(ErrorKind::InvalidConfig, "fixed spin value " + std::to_string(v) + " outside 0.." +
                                                  std::to_string(fg.q - 1));
    }
    if (fg.fixed[static_cast<size_t>(s)] >= 0 && fg.fixed[static_cast<size_t>(s)] != v) {
        fg.constant = 0.0;
    }
    fg.fixed[static_cast<size_t>(s)] = v;
}

bool all_ones(const std::vector<cplx> &t) {
    return std::all_of(t.begin(), t.end(), [](cplx c) { return c == cplx(1.0, 0.0); });
}

std::vector<cplx> mat_table(const Mat &m) {
    std::vector<cplx> t;
    for (Eigen::Index a = 0; a < m.rows(); a++) {
        for (Eigen::Index b = 0; b < m.cols(); b++) {
            t.push_back(m(a, b));
        }
    }
    return t;
}

// Minimal union-find with path halving.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<size_t>(x)] != x) {
            p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
            x = p[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        p[static_cast<size_t>(b)] = a;
        return true;
    }
};

}  // namespace

const char *boundary_kind_name(BoundaryKind k) {
    switch (k) {
        case BoundaryKind::Fixed: return "fixed";
        case BoundaryKind::Open: return "open";
        case BoundaryKind::Periodic: return "periodic";
    }
    return "unknown";
}

Boundary Boundary::fixed(std::vector<int> left, std::vector<int> right) {
    return Boundary{BoundaryKind::Fixed, std::move(left), std::move(right)};
}

Boundary Boundary::open() {
    return Boundary{BoundaryKind::Open, {}, {}};
}

Boundary Boundary::periodic() {
    return Boundary{BoundaryKind::Periodic, {}, {}};
}

// ---------------------------------------------------------------- vertex

std::vector<cplx> VertexModel::identity_tensor(int q) {
    std::vector<cplx> w(static_cast<size_t>(q * q * q * q), 0.0);
    for (int i = 0; i < q; i++) {
        for (int j = 0; j < q; j++) {
            w[static_cast<size_t>(((i * q + j) * q + i) * q + j)] = 1.0;
        }
    }
    return w;
}

VertexModel VertexModel::tilted_grid(int n, int m, int q) {
    if (n < 1 || m < 1) {
        geometry_error("tilted grid needs n, m >= 1");
    }
    VertexModel vm;
    vm.q = q;
    vm.width = 2 * n;
    for (int layer = 0; layer < m; layer++) {
        int start = layer % 2 == 0 ? 0 : 1;
        for (int line = start; line + 1 < vm.width; line += 2) {
            vm.vertices.push_back(Vertex{line, identity_tensor(q)});
        }
    }
    return vm;
}

void VertexModel::validate() const {
    if (q < 2) {
        geometry_error("q must be at least 2");
    }
    if (width < 2) {
        geometry_error("vertex model needs at least two lines");
    }
    for (const Vertex &v : vertices) {
        if (v.line < 0 || v.line + 1 >= width) {
            geometry_error("vertex line out of range");
        }
        if (v.w.size() != static_cast<size_t>(q * q * q * q)) {
            geometry_error("vertex weight tensor must have q^4 entries");
        }
    }
    if (boundary.kind == BoundaryKind::Fixed) {
        if (boundary.left.size() != static_cast<size_t>(width) || boundary.right.size() != static_cast<size_t>(width)) {
            throw Error(ErrorKind::InvalidConfig, "fixed boundary length must equal the line count");
        }
        check_spin_values(boundary.left, q, "left boundary");
        check_spin_values(boundary.right, q, "right boundary");
    }
}

// ---------------------------------------------------------------- planar graph

PlanarCircuitGraph::PlanarCircuitGraph(int n_, int m_) : n(n_), m(m_) {
}

bool PlanarCircuitGraph::has_vertical(int r, int c) const {
    return r >= 0 && r + 1 < n && c >= 0 && c < m && !deleted_vertical.count({r, c});
}

bool PlanarCircuitGraph::has_horizontal(int r, int c) const {
    return r >= 0 && r < n && c >= 0 && c + 1 < m && !contracted_horizontal.count({r, c});
}

std::vector<PlanarCircuitGraph::Run> PlanarCircuitGraph::runs() const {
    std::vector<Run> out;
    for (int r = 0; r < n; r++) {
        int start = 0;
        for (int c = 0; c < m; c++) {
            bool joined_right = c + 1 < m && contracted_horizontal.count({r, c});
            if (!joined_right) {
                out.push_back(Run{r, start, c});
                start = c + 1;
            }
        }
    }
    return out;
}

int PlanarCircuitGraph::run_of(int r, int c) const {
    int id = 0;
    for (const Run &run : runs()) {
        if (run.row == r && c >= run.first_col && c <= run.last_col) {
            return id;
        }
        id++;
    }
    geometry_error("grid vertex outside graph");
}

int PlanarCircuitGraph::num_vertices() const {
    return static_cast<int>(runs().size());
}

int PlanarCircuitGraph::tau() const {
    int t = 0;
    for (int r = 0; r < n; r++) {
        for (int c = 0; c + 1 < m; c++) {
            t += has_horizontal(r, c) ? 1 : 0;
        }
    }
    return t;
}

int PlanarCircuitGraph::num_vertical() const {
    int t = 0;
    for (int r = 0; r + 1 < n; r++) {
        for (int c = 0; c < m; c++) {
            t += has_vertical(r, c) ? 1 : 0;
        }
    }
    return t;
}

void PlanarCircuitGraph::validate() const {
    if (n < 1 || m < 1) {
        geometry_error("planar circuit graph needs n, m >= 1");
    }
    for (auto [r, c] : deleted_vertical) {
        if (r < 0 || r + 1 >= n || c < 0 || c >= m) {
            geometry_error("deleted vertical edge outside grid");
        }
    }
    for (auto [r, c] : contracted_horizontal) {
        if (r < 0 || r >= n || c < 0 || c + 1 >= m) {
            geometry_error("contracted horizontal edge outside grid");
        }
    }
}

// ---------------------------------------------------------------- edge model

EdgeModel EdgeModel::on_graph(PlanarCircuitGraph g, int q) {
    EdgeModel em;
    em.q = q;
    em.graph = std::move(g);
    size_t cells = static_cast<size_t>(em.graph.n * em.graph.m);
    em.horizontal.assign(cells, Mat::Identity(q, q));
    em.vertical.assign(cells, Mat::Ones(q, q));
    em.field.assign(cells, Vec::Ones(q));
    return em;
}

int EdgeModel::num_edges() const {
    return graph.tau() + graph.num_vertical() + static_cast<int>(pins.size());
}

void EdgeModel::validate() const {
    graph.validate();
    if (q < 2) {
        geometry_error("q must be at least 2");
    }
    size_t cells = static_cast<size_t>(graph.n * graph.m);
    if (horizontal.size() != cells || vertical.size() != cells || field.size() != cells) {
        geometry_error("edge model tables must cover the n x m grid");
    }
    for (size_t i = 0; i < cells; i++) {
        if (horizontal[i].rows() != q || horizontal[i].cols() != q || vertical[i].rows() != q ||
            vertical[i].cols() != q || field[i].size() != q) {
            geometry_error("edge model table has wrong dimension");
        }
    }
    for (const Pin &p : pins) {
        if (p.row < 0 || p.row >= graph.n || p.col < 0 || p.col >= graph.m) {
            geometry_error("pin outside grid");
        }
        if (p.table.rows() != q || p.table.cols() != q) {
            geometry_error("pin table has wrong dimension");
        }
        check_spin_values({p.value}, q, "pin");
    }
    if (boundary.kind == BoundaryKind::Fixed) {
        if (boundary.left.size() != static_cast<size_t>(graph.n) || boundary.right.size() != static_cast<size_t>(graph.n)) {
            throw Error(ErrorKind::InvalidConfig, "fixed boundary length must equal the row count");
        }
        check_spin_values(boundary.left, q, "left boundary");
        check_spin_values(boundary.right, q, "right boundary");
    }
}

Mat ising_table(cplx eJ) {
    Mat t(2, 2);
    t << eJ, 1.0, 1.0, eJ;
    return t;
}

Vec ising_field(cplx eh) {
    Vec f(2);
    f << eh, 1.0;
    return f;
}

Mat potts_table(int q, cplx mu, cplx nu) {
    Mat t = Mat::Constant(q, q, nu);
    for (int i = 0; i < q; i++) {
        t(i, i) = mu;
    }
    return t;
}

cplx boltzmann(double beta, double J) {
    return std::exp(beta * J);
}

// ---------------------------------------------------------------- lgt model

int LgtModel::num_lines() const {
    return X * (Y + 1) + (X + 1) * Y;
}

int LgtModel::num_slices() const {
    return periodic() ? Z : Z + 1;
}

LgtEdge LgtModel::line_edge(int line, int z) const {
    if (line < X * (Y + 1)) {
        return LgtEdge{line % X, line / X, z, LgtDir::X};
    }
    int k = line - X * (Y + 1);
    return LgtEdge{k % (X + 1), k / (X + 1), z, LgtDir::Y};
}

int LgtModel::line_of(const LgtEdge &e) const {
    if (e.dir == LgtDir::X) {
        return e.y * X + e.x;
    }
    if (e.dir == LgtDir::Y) {
        return X * (Y + 1) + e.y * (X + 1) + e.x;
    }
    return -1;
}

bool LgtModel::edge_valid(const LgtEdge &e) const {
    int zs = num_slices();
    switch (e.dir) {
        case LgtDir::X: return e.x >= 0 && e.x < X && e.y >= 0 && e.y <= Y && e.z >= 0 && e.z < zs;
        case LgtDir::Y: return e.x >= 0 && e.x <= X && e.y >= 0 && e.y < Y && e.z >= 0 && e.z < zs;
        case LgtDir::T: return e.x >= 0 && e.x <= X && e.y >= 0 && e.y <= Y && e.z >= 0 && e.z < Z;
    }
    return false;
}

bool LgtModel::face_valid(const LgtFace &f) const {
    int zs = num_slices();
    switch (f.plane) {
        case LgtPlane::XY: return f.x >= 0 && f.x < X && f.y >= 0 && f.y < Y && f.z >= 0 && f.z < zs;
        case LgtPlane::XT: return f.x >= 0 && f.x < X && f.y >= 0 && f.y <= Y && f.z >= 0 && f.z < Z;
        case LgtPlane::YT: return f.x >= 0 && f.x <= X && f.y >= 0 && f.y < Y && f.z >= 0 && f.z < Z;
    }
    return false;
}

LgtEdge LgtModel::canonical(const LgtEdge &e) const {
    LgtEdge c = e;
    if (periodic() && c.dir != LgtDir::T && c.z == Z) {
        c.z = 0;
    }
    return c;
}

std::vector<LgtEdge> LgtModel::face_edges(const LgtFace &f) const {
    int x = f.x, y = f.y, z = f.z;
    std::vector<LgtEdge> e;
    switch (f.plane) {
        case LgtPlane::XY:
            e = {{x, y, z, LgtDir::X}, {x, y + 1, z, LgtDir::X}, {x, y, z, LgtDir::Y}, {x + 1, y, z, LgtDir::Y}};
            break;
        case LgtPlane::XT:
            e = {{x, y, z, LgtDir::X}, {x, y, z + 1, LgtDir::X}, {x, y, z, LgtDir::T}, {x + 1, y, z, LgtDir::T}};
            break;
        case LgtPlane::YT:
            e = {{x, y, z, LgtDir::Y}, {x, y, z + 1, LgtDir::Y}, {x, y, z, LgtDir::T}, {x, y + 1, z, LgtDir::T}};
            break;
    }
    for (LgtEdge &ed : e) {
        ed = canonical(ed);
    }
    return e;
}

std::vector<LgtEdge> LgtModel::all_edges() const {
    std::vector<LgtEdge> out;
    int zs = num_slices();
    for (int z = 0; z < zs; z++) {
        for (int l = 0; l < num_lines(); l++) {
            out.push_back(line_edge(l, z));
        }
    }
    for (int z = 0; z < Z; z++) {
        for (int y = 0; y <= Y; y++) {
            for (int x = 0; x <= X; x++) {
                out.push_back(LgtEdge{x, y, z, LgtDir::T});
            }
        }
    }
    return out;
}

void LgtModel::set_face(const LgtFace &f, cplx even, cplx odd, std::string label) {
    if (!face_valid(f)) {
        geometry_error("face outside lattice");
    }
    faces[f] = Coupling{even, odd, std::move(label)};
}

void LgtModel::validate() const {
    if (X < 1 || Y < 0 || Z < 1) {
        geometry_error("lgt extents must be positive");
    }
    for (const auto &[f, c] : faces) {
        if (!face_valid(f)) {
            geometry_error("face outside lattice");
        }
    }
    for (const auto &[e, v] : gauge_fixed) {
        if (!edge_valid(e)) {
            geometry_error("gauge-fixed edge outside lattice");
        }
        check_spin_values({v}, 2, "gauge-fixed");
    }
    if (boundary.kind == BoundaryKind::Fixed) {
        if (boundary.left.size() != static_cast<size_t>(num_lines()) ||
            boundary.right.size() != static_cast<size_t>(num_lines())) {
            throw Error(ErrorKind::InvalidConfig, "fixed boundary length must equal the spatial edge count");
        }
        check_spin_values(boundary.left, 2, "left boundary");
        check_spin_values(boundary.right, 2, "right boundary");
    }
}

GaugeCheck validate_gauge_fixing(const LgtModel &model) {
    // Vertices are indexed row-major; time wraps when periodic.
    int zv = model.periodic() ? model.Z : model.Z + 1;
    auto vid = [&](int x, int y, int z) {
        z = ((z % zv) + zv) % zv;
        return (z * (model.Y + 1) + y) * (model.X + 1) + x;
    };
    auto ends = [&](const LgtEdge &e) {
        int a = vid(e.x, e.y, e.z);
        int b = e.dir == LgtDir::X ? vid(e.x + 1, e.y, e.z) : e.dir == LgtDir::Y ? vid(e.x, e.y + 1, e.z)
                                                                                 : vid(e.x, e.y, e.z + 1);
        return std::pair<int, int>(a, b);
    };
    size_t nv = static_cast<size_t>((model.X + 1) * (model.Y + 1) * zv);
    Dsu dsu(nv);
    std::vector<std::vector<std::pair<int, LgtEdge>>> adj(nv);
    for (const auto &[e, v] : model.gauge_fixed) {
        auto [a, b] = ends(e);
        if (!dsu.unite(a, b)) {
            // Path a -> b inside the forest, then close it with e.
            std::vector<int> prev(nv, -1);
            std::vector<LgtEdge> via(nv);
            std::queue<int> bfs;
            bfs.push(a);
            prev[static_cast<size_t>(a)] = a;
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop();
                for (auto &[w, ed] : adj[static_cast<size_t>(u)]) {
                    if (prev[static_cast<size_t>(w)] < 0) {
                        prev[static_cast<size_t>(w)] = u;
                        via[static_cast<size_t>(w)] = ed;
                        bfs.push(w);
                    }
                }
            }
            GaugeCheck bad;
            bad.ok = false;
            for (int u = b; u != a; u = prev[static_cast<size_t>(u)]) {
                bad.cycle.push_back(via[static_cast<size_t>(u)]);
            }
            bad.cycle.push_back(e);
            return bad;
        }
        adj[static_cast<size_t>(a)].push_back({b, e});
        adj[static_cast<size_t>(b)].push_back({a, e});
    }
    return GaugeCheck{};
}

int model_q(const LatticeModel &m) {
    return std::visit(
        [](const auto &x) -> int {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, LgtModel>) {
                return 2;
            } else {
                return x.q;
            }
        },
        m);
}

std::string model_family(const LatticeModel &m) {
    switch (m.index()) {
        case 0: return "vertex";
        case 1: return "edge";
        default: return "lgt";
    }
}

int default_cap(int q) {
    return q <= 2 ? 24 : 15;
}

// ---------------------------------------------------------------- factor graphs

namespace {

FactorGraph vertex_factor_graph(const VertexModel &vm) {
    vm.validate();
    FactorGraph fg;
    fg.q = vm.q;
    // Segment ids: line l has segments 0..d_l; segment 0 is the right end.
    std::vector<int> degree(static_cast<size_t>(vm.width), 0);
    for (const auto &v : vm.vertices) {
        degree[static_cast<size_t>(v.line)]++;
        degree[static_cast<size_t>(v.line + 1)]++;
    }
    bool periodic = vm.boundary.kind == BoundaryKind::Periodic;
    std::vector<int> base(static_cast<size_t>(vm.width));
    int next = 0;
    for (int l = 0; l < vm.width; l++) {
        int d = degree[static_cast<size_t>(l)];
        base[static_cast<size_t>(l)] = next;
        next += (periodic && d > 0) ? d : d + 1;
    }
    fg.num_spins = next;
    fg.fixed.assign(static_cast<size_t>(next), -1);
    auto seg = [&](int line, int k) {
        if (periodic && k == degree[static_cast<size_t>(line)]) {
            k = 0;
        }
        return base[static_cast<size_t>(line)] + k;
    };
    std::vector<int> cursor(static_cast<size_t>(vm.width), 0);
    for (const auto &v : vm.vertices) {
        int r = v.line;
        int k = seg(r, cursor[static_cast<size_t>(r)]);
        int l = seg(r + 1, cursor[static_cast<size_t>(r + 1)]);
        int i = seg(r, ++cursor[static_cast<size_t>(r)]);
        int j = seg(r + 1, ++cursor[static_cast<size_t>(r + 1)]);
        fg.factors.push_back(FactorGraph::Factor{{i, j, k, l}, v.w, all_ones(v.w)});
    }
    if (vm.boundary.kind == BoundaryKind::Fixed) {
        for (int l = 0; l < vm.width; l++) {
            fix_spin(fg, seg(l, 0), vm.boundary.right[static_cast<size_t>(l)]);
            fix_spin(fg, seg(l, degree[static_cast<size_t>(l)]), vm.boundary.left[static_cast<size_t>(l)]);
        }
    }
    return fg;
}

FactorGraph edge_factor_graph(const EdgeModel &em) {
    em.validate();
    const PlanarCircuitGraph &g = em.graph;
    FactorGraph fg;
    fg.q = em.q;
    auto runs = g.runs();
    int nr = static_cast<int>(runs.size());
    // Spin id per grid vertex; periodic rows glue the first and last run.
    std::vector<int> spin_of(static_cast<size_t>(g.n * g.m));
    {
        int id = 0;
        for (const auto &run : runs) {
            for (int c = run.first_col; c <= run.last_col; c++) {
                spin_of[static_cast<size_t>(run.row * g.m + c)] = id;
            }
            id++;
        }
    }
    Dsu glue(static_cast<size_t>(nr));
    if (em.boundary.kind == BoundaryKind::Periodic) {
        for (int r = 0; r < g.n; r++) {
            glue.unite(spin_of[static_cast<size_t>(r * g.m)], spin_of[static_cast<size_t>(r * g.m + g.m - 1)]);
        }
    }
    std::vector<int> compact(static_cast<size_t>(nr), -1);
    int ns = 0;
    for (int s = 0; s < nr; s++) {
        int root = glue.find(s);
        if (compact[static_cast<size_t>(root)] < 0) {
            compact[static_cast<size_t>(root)] = ns++;
        }
    }
    auto spin = [&](int r, int c) { return compact[static_cast<size_t>(glue.find(spin_of[static_cast<size_t>(r * g.m + c)]))]; };
    fg.num_spins = ns + static_cast<int>(em.pins.size());
    fg.fixed.assign(static_cast<size_t>(fg.num_spins), -1);

    for (int r = 0; r < g.n; r++) {
        for (int c = 0; c + 1 < g.m; c++) {
            if (g.has_horizontal(r, c)) {
                auto t = mat_table(em.h(r, c));
                fg.factors.push_back(FactorGraph::Factor{{spin(r, c + 1), spin(r, c)}, t, all_ones(t)});
            }
        }
    }
    for (int r = 0; r + 1 < g.n; r++) {
        for (int c = 0; c < g.m; c++) {
            if (g.has_vertical(r, c)) {
                auto t = mat_table(em.v(r, c));
                fg.factors.push_back(FactorGraph::Factor{{spin(r, c), spin(r + 1, c)}, t, all_ones(t)});
            }
        }
    }
    for (int r = 0; r < g.n; r++) {
        for (int c = 0; c < g.m; c++) {
            const Vec &f = em.f(r, c);
            std::vector<cplx> t(f.data(), f.data() + f.size());
            if (!all_ones(t)) {
                fg.factors.push_back(FactorGraph::Factor{{spin(r, c)}, t, false});
            }
        }
    }
    for (size_t k = 0; k < em.pins.size(); k++) {
        const Pin &p = em.pins[k];
        int aux = ns + static_cast<int>(k);
        auto t = mat_table(p.table);
        fg.factors.push_back(FactorGraph::Factor{{aux, spin(p.row, p.col)}, t, all_ones(t)});
        fix_spin(fg, aux, p.value);
    }
    if (em.boundary.kind == BoundaryKind::Fixed) {
        for (int r = 0; r < g.n; r++) {
            fix_spin(fg, spin(r, g.m - 1), em.boundary.right[static_cast<size_t>(r)]);
            fix_spin(fg, spin(r, 0), em.boundary.left[static_cast<size_t>(r)]);
        }
    }
    return fg;
}

FactorGraph lgt_factor_graph(const LgtModel &lm) {
    lm.validate();
    FactorGraph fg;
    fg.q = 2;
    std::vector<LgtEdge> edges = lm.all_edges();
    std::map<LgtEdge, int> index;
    for (size_t i = 0; i < edges.size(); i++) {
        index[edges[i]] = static_cast<int>(i);
    }
    fg.num_spins = static_cast<int>(edges.size());
    fg.fixed.assign(edges.size(), -1);
    for (const auto &[f, c] : lm.faces) {
        FactorGraph::Factor fac;
        for (const LgtEdge &e : lm.face_edges(f)) {
            fac.spins.push_back(index.at(e));
        }
        fac.table.resize(16);
        for (int s = 0; s < 16; s++) {
            fac.table[static_cast<size_t>(s)] = (__builtin_popcount(static_cast<unsigned>(s)) % 2 == 0) ? c.even : c.odd;
        }
        fac.inert = c.even == cplx(1.0) && c.odd == cplx(1.0);
        fg.factors.push_back(std::move(fac));
    }
    for (const auto &[e, v] : lm.gauge_fixed) {
        fix_spin(fg, index.at(lm.canonical(e)), v);
    }
    if (lm.boundary.kind == BoundaryKind::Fixed) {
        for (int l = 0; l < lm.num_lines(); l++) {
            fix_spin(fg, index.at(lm.line_edge(l, 0)), lm.boundary.right[static_cast<size_t>(l)]);
            fix_spin(fg, index.at(lm.line_edge(l, lm.Z)), lm.boundary.left[static_cast<size_t>(l)]);
        }
    }
    return fg;
}

// Depth-first enumerator over `order` (a list of free spins). Factors are
// evaluated as soon as their last free spin is assigned.
struct Enumerator {
    const FactorGraph &fg;
    std::vector<int> order;
    std::vector<std::vector<const FactorGraph::Factor *>> at_depth;
    cplx constant{1.0, 0.0};
    std::vector<int> value;  // full spin assignment

    Enumerator(const FactorGraph &g, std::vector<int> ord) : fg(g), order(std::move(ord)) {
        std::vector<int> pos(static_cast<size_t>(fg.num_spins), -1);
        for (size_t d = 0; d < order.size(); d++) {
            pos[static_cast<size_t>(order[d])] = static_cast<int>(d);
        }
        at_depth.resize(order.size());
        value.assign(static_cast<size_t>(fg.num_spins), 0);
        for (int s = 0; s < fg.num_spins; s++) {
            if (fg.fixed[static_cast<size_t>(s)] >= 0) {
                value[static_cast<size_t>(s)] = fg.fixed[static_cast<size_t>(s)];
            }
        }
        constant = fg.constant;
        for (const auto &f : fg.factors) {
            if (f.inert) {
                continue;
            }
            int last = -1;
            bool free_outside_order = false;
            for (int s : f.spins) {
                if (fg.fixed[static_cast<size_t>(s)] < 0) {
                    if (pos[static_cast<size_t>(s)] < 0) {
                        free_outside_order = true;
                    }
                    last = std::max(last, pos[static_cast<size_t>(s)]);
                }
            }
            if (free_outside_order) {
                throw Error(ErrorKind::InvalidConfig, "active factor touches a spin outside the enumeration order");
            }
            if (last < 0) {
                constant *= eval(f, value);
            } else {
                at_depth[static_cast<size_t>(last)].push_back(&f);
            }
        }
    }

    cplx eval(const FactorGraph::Factor &f, const std::vector<int> &val) const {
        size_t idx = 0;
        for (int s : f.spins) {
            idx = idx * static_cast<size_t>(fg.q) + static_cast<size_t>(val[static_cast<size_t>(s)]);
        }
        return f.table[idx];
    }

    // Sums over configurations whose first |prefix| spins equal prefix.
    cplx sum_with_prefix(const std::vector<int> &prefix, bool prune) const {
        std::vector<int> val = value;
        cplx w = constant;
        if (prune && w == cplx(0.0)) {
            return 0.0;
        }
        for (size_t d = 0; d < prefix.size(); d++) {
            val[static_cast<size_t>(order[d])] = prefix[d];
            for (const auto *f : at_depth[d]) {
                w *= eval(*f, val);
            }
        }
        if (prune && w == cplx(0.0)) {
            return 0.0;
        }
        return recurse(prefix.size(), w, val, prune);
    }

    cplx recurse(size_t d, cplx w, std::vector<int> &val, bool prune) const {
        if (d == order.size()) {
            return w;
        }
        cplx total = 0.0;
        for (int s = 0; s < fg.q; s++) {
            val[static_cast<size_t>(order[d])] = s;
            cplx wd = w;
            for (const auto *f : at_depth[d]) {
                wd *= eval(*f, val);
            }
            if (prune && wd == cplx(0.0)) {
                continue;
            }
            total += recurse(d + 1, wd, val, prune);
        }
        return total;
    }

    void visit_all(const std::function<void(std::span<const int>, cplx)> &visit) const {
        std::vector<int> val = value;
        std::vector<int> cfg(order.size(), 0);
        walk(0, constant, val, cfg, visit);
    }

    void walk(size_t d, cplx w, std::vector<int> &val, std::vector<int> &cfg,
              const std::function<void(std::span<const int>, cplx)> &visit) const {
        if (d == order.size()) {
            visit(std::span<const int>(cfg), w);
            return;
        }
        for (int s = 0; s < fg.q; s++) {
            val[static_cast<size_t>(order[d])] = s;
            cfg[d] = s;
            cplx wd = w;
            for (const auto *f : at_depth[d]) {
                wd *= eval(*f, val);
            }
            walk(d + 1, wd, val, cfg, visit);
        }
    }
};

void check_cap(size_t free, int q, EnumerationOptions opt) {
    int cap = opt.cap < 0 ? default_cap(q) : opt.cap;
    if (free > static_cast<size_t>(cap)) {
        throw Error(ErrorKind::EnumerationTooLarge, std::to_string(free) + " free spins exceed the enumeration cap of " +
                                                        std::to_string(cap));
    }
}

}  // namespace

FactorGraph to_factor_graph(const LatticeModel &model) {
    switch (model.index()) {
        case 0: return vertex_factor_graph(std::get<VertexModel>(model));
        case 1: return edge_factor_graph(std::get<EdgeModel>(model));
        default: return lgt_factor_graph(std::get<LgtModel>(model));
    }
}

PartitionValue brute_force_partition(const FactorGraph &fg, EnumerationOptions opt) {
    // Free spins touching no active factor contribute a factor q each.
    std::vector<bool> active(static_cast<size_t>(fg.num_spins), false);
    for (const auto &f : fg.factors) {
        if (!f.inert) {
            for (int s : f.spins) {
                active[static_cast<size_t>(s)] = true;
            }
        }
    }
    std::vector<int> order;
    int idle = 0;
    for (int s = 0; s < fg.num_spins; s++) {
        if (fg.fixed[static_cast<size_t>(s)] >= 0) {
            continue;
        }
        if (active[static_cast<size_t>(s)]) {
            order.push_back(s);
        } else {
            idle++;
        }
    }
    check_cap(order.size(), fg.q, opt);
    Enumerator en(fg, order);

    // Fixed chunking keeps the summation order independent of worker count.
    size_t depth = 0;
    size_t chunks = 1;
    while (depth < order.size() && chunks < 64) {
        chunks *= static_cast<size_t>(fg.q);
        depth++;
    }
    std::vector<cplx> partial(chunks);
    parallel_for(chunks, [&](size_t c) {
        std::vector<int> prefix(depth);
        size_t rem = c;
        for (size_t d = depth; d-- > 0;) {
            prefix[d] = static_cast<int>(rem % static_cast<size_t>(fg.q));
            rem /= static_cast<size_t>(fg.q);
        }
        partial[c] = en.sum_with_prefix(prefix, true);
    });
    cplx z = 0.0;
    for (cplx p : partial) {
        z += p;
    }
    z *= std::pow(static_cast<double>(fg.q), idle);
    return PartitionValue{z, Kappa{}, "oracle"};
}

PartitionValue brute_force_partition(const LatticeModel &model, EnumerationOptions opt) {
    return brute_force_partition(to_factor_graph(model), opt);
}

void enumerate_configs(const LatticeModel &model, const std::function<void(std::span<const int>, cplx)> &visit,
                       EnumerationOptions opt) {
    FactorGraph fg = to_factor_graph(model);
    std::vector<int> order;
    for (int s = 0; s < fg.num_spins; s++) {
        if (fg.fixed[static_cast<size_t>(s)] < 0) {
            order.push_back(s);
        }
    }
    check_cap(order.size(), fg.q, opt);
    Enumerator(fg, order).visit_all(visit);
}

}  // namespace latcirc
