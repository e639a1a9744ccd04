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

#ifndef LATCIRC_SPINLAT_H
#define LATCIRC_SPINLAT_H

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "latcirc/common.h"
#include "latcirc/kappa.h"

namespace latcirc {

enum class BoundaryKind { Fixed, Open, Periodic };

const char *boundary_kind_name(BoundaryKind k);

// For Fixed, `right` holds the input-side spins and `left` the output side.
struct Boundary {
    BoundaryKind kind = BoundaryKind::Open;
    std::vector<int> left;
    std::vector<int> right;

    static Boundary fixed(std::vector<int> left, std::vector<int> right);
    static Boundary open();
    static Boundary periodic();
};

// Vertex model on `width` parallel lines. Each vertex couples lines (line,
// line+1); its legs (k,l) face the right boundary and (i,j) the left one.
// Vertices are listed in processing order, right boundary first.
struct VertexModel {
    struct Vertex {
        int line = 0;
        std::vector<cplx> w;  // w[((i*q+j)*q+k)*q+l]

        cplx at(int q, int i, int j, int k, int l) const { return w[static_cast<size_t>(((i * q + j) * q + k) * q + l)]; }
    };

    int q = 2;
    int width = 0;
    std::vector<Vertex> vertices;
    Boundary boundary;

    // Brick pattern on 2n lines with m layers: even layers hold n vertices on
    // lines (0,1),(2,3),..., odd layers hold n-1 vertices on (1,2),(3,4),...
    // Weights start as the identity tensor.
    static VertexModel tilted_grid(int n, int m, int q = 2);
    static std::vector<cplx> identity_tensor(int q);
    void validate() const;
};

// n x m grid; vertical edge (r,c) joins (r,c)-(r+1,c), horizontal edge (r,c)
// joins (r,c)-(r,c+1). Column m-1 is the right (input) boundary.
struct PlanarCircuitGraph {
    struct Run {
        int row = 0;
        int first_col = 0;
        int last_col = 0;
    };

    int n = 0;
    int m = 0;
    std::set<std::pair<int, int>> deleted_vertical;
    std::set<std::pair<int, int>> contracted_horizontal;

    PlanarCircuitGraph() = default;
    PlanarCircuitGraph(int n, int m);

    bool has_vertical(int r, int c) const;
    bool has_horizontal(int r, int c) const;
    // Runs of grid vertices merged by contracted horizontal edges.
    std::vector<Run> runs() const;
    int run_of(int r, int c) const;
    int num_vertices() const;
    // Count of horizontal edges surviving contraction.
    int tau() const;
    int num_vertical() const;
    void validate() const;
};

// Auxiliary spin fixed to `value`, joined by one edge to grid vertex
// (row, col). table(aux, spin) is the edge weight.
struct Pin {
    int row = 0;
    int col = 0;
    int value = 0;
    Mat table;
    std::string label;
};

struct EdgeModel {
    int q = 2;
    PlanarCircuitGraph graph;
    // Tables indexed r*m+c. Horizontal: table(a,b) with a the right (input)
    // endpoint. Vertical: a is the spin on row r.
    std::vector<Mat> horizontal;
    std::vector<Mat> vertical;
    std::vector<Vec> field;  // per grid vertex, length q
    std::vector<Pin> pins;
    Boundary boundary;

    static EdgeModel on_graph(PlanarCircuitGraph g, int q);
    Mat &h(int r, int c) { return horizontal[static_cast<size_t>(r * graph.m + c)]; }
    Mat &v(int r, int c) { return vertical[static_cast<size_t>(r * graph.m + c)]; }
    Vec &f(int r, int c) { return field[static_cast<size_t>(r * graph.m + c)]; }
    const Mat &h(int r, int c) const { return horizontal[static_cast<size_t>(r * graph.m + c)]; }
    const Mat &v(int r, int c) const { return vertical[static_cast<size_t>(r * graph.m + c)]; }
    const Vec &f(int r, int c) const { return field[static_cast<size_t>(r * graph.m + c)]; }
    int num_edges() const;
    void validate() const;
};

Mat ising_table(cplx eJ);
Vec ising_field(cplx eh);
Mat potts_table(int q, cplx mu, cplx nu);
// Convenience constructor for physical couplings: e^{beta J}.
cplx boltzmann(double beta, double J);

enum class LgtDir { X = 0, Y = 1, T = 2 };
enum class LgtPlane { XY = 0, XT = 1, YT = 2 };

struct LgtEdge {
    int x = 0, y = 0, z = 0;
    LgtDir dir = LgtDir::X;
    auto operator<=>(const LgtEdge &) const = default;
};

struct LgtFace {
    int x = 0, y = 0, z = 0;
    LgtPlane plane = LgtPlane::XY;
    auto operator<=>(const LgtFace &) const = default;
};

// Z2 gauge theory on a cubic lattice with X x Y x Z cells; z is time.
// A face weighs `even` when its four spins sum to 0 mod 2 and `odd`
// otherwise; absent faces weigh 1 either way.
struct LgtModel {
    struct Coupling {
        cplx even{1.0, 0.0};
        cplx odd{1.0, 0.0};
        std::string label;
    };

    int X = 1, Y = 1, Z = 1;
    std::map<LgtFace, Coupling> faces;
    std::map<LgtEdge, int> gauge_fixed;
    // Fixed boundaries list the spatial edges of slice Z (left) and slice 0
    // (right) in line order.
    Boundary boundary;

    int num_lines() const;
    LgtEdge line_edge(int line, int z) const;
    int line_of(const LgtEdge &e) const;
    int num_slices() const;  // Z+1, or Z when periodic
    bool periodic() const { return boundary.kind == BoundaryKind::Periodic; }
    bool edge_valid(const LgtEdge &e) const;
    bool face_valid(const LgtFace &f) const;
    std::vector<LgtEdge> face_edges(const LgtFace &f) const;
    std::vector<LgtEdge> all_edges() const;
    LgtEdge canonical(const LgtEdge &e) const;  // wraps z when periodic
    void set_face(const LgtFace &f, cplx even, cplx odd = 1.0, std::string label = "");
    void validate() const;
};

using LatticeModel = std::variant<VertexModel, EdgeModel, LgtModel>;

int model_q(const LatticeModel &m);
std::string model_family(const LatticeModel &m);

struct PartitionValue {
    cplx Z{0.0, 0.0};
    Kappa kappa;
    std::string provenance;  // "oracle", "circuit", "estimator"
};

struct EnumerationOptions {
    int cap = -1;  // -1 selects 24 for q=2 and 15 for q>=3
};

int default_cap(int q);

// Generic factor graph used by the enumerator.
struct FactorGraph {
    struct Factor {
        std::vector<int> spins;
        std::vector<cplx> table;  // first spin most significant
        bool inert = false;
    };
    int q = 2;
    int num_spins = 0;
    std::vector<int> fixed;  // -1 when free
    std::vector<Factor> factors;
    cplx constant{1.0, 0.0};
};

FactorGraph to_factor_graph(const LatticeModel &model);

PartitionValue brute_force_partition(const LatticeModel &model, EnumerationOptions opt = {});
PartitionValue brute_force_partition(const FactorGraph &fg, EnumerationOptions opt = {});

// Visits every free-spin configuration in row-major order over the canonical
// spin indexing (last spin fastest). `config` lists the free spins only.
void enumerate_configs(const LatticeModel &model, const std::function<void(std::span<const int>, cplx)> &visit,
                       EnumerationOptions opt = {});

struct GaugeCheck {
    bool ok = true;
    std::vector<LgtEdge> cycle;
};

GaugeCheck validate_gauge_fixing(const LgtModel &model);

}  // namespace latcirc

#endif
