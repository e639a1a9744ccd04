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

#include "latcirc/qcirc.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "latcirc/parallel.h"

namespace latcirc {

namespace {

void require(bool cond, const std::string &what) {
    if (!cond) {
        throw Error(ErrorKind::DimensionMismatch, what);
    }
}

size_t checked_dim(int q, int width) {
    return static_cast<size_t>(ipow(static_cast<uint64_t>(q), static_cast<unsigned>(width)));
}

std::vector<size_t> target_offsets(const std::vector<int> &targets, int width, int q) {
    size_t k = targets.size();
    size_t local = checked_dim(q, static_cast<int>(k));
    std::vector<size_t> strides(k);
    for (size_t j = 0; j < k; j++) {
        strides[j] = checked_dim(q, width - 1 - targets[j]);
    }
    std::vector<size_t> off(local, 0);
    for (size_t a = 0; a < local; a++) {
        size_t rem = a;
        size_t o = 0;
        for (size_t j = k; j-- > 0;) {
            o += (rem % q) * strides[j];
            rem /= q;
        }
        off[a] = o;
    }
    return off;
}

}  // namespace

bool Gate::is_diagonal(double tol) const {
    for (Eigen::Index r = 0; r < matrix.rows(); r++) {
        for (Eigen::Index c = 0; c < matrix.cols(); c++) {
            if (r != c && std::abs(matrix(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

Circuit::Circuit(int width, int q) : width_(width), q_(q) {
    require(width >= 0, "negative circuit width");
    require(q >= 2, "qudit dimension must be at least 2");
}

size_t Circuit::dimension() const {
    return checked_dim(q_, width_);
}

void Circuit::add(Gate gate) {
    size_t k = gate.targets.size();
    require(k >= 1 && k <= 4, "gate must act on 1 to 4 qudits");
    std::set<int> seen;
    for (int t : gate.targets) {
        require(t >= 0 && t < width_, "gate target out of range");
        require(seen.insert(t).second, "gate targets must be distinct");
    }
    size_t local = checked_dim(q_, static_cast<int>(k));
    require(static_cast<size_t>(gate.matrix.rows()) == local && static_cast<size_t>(gate.matrix.cols()) == local,
            "gate matrix size does not match q^k");
    gates_.push_back(std::move(gate));
}

void Circuit::add(Mat matrix, std::vector<int> targets, std::string label) {
    add(Gate{std::move(matrix), std::move(targets), std::move(label)});
}

ProductState ProductState::basis(int q, const std::vector<int> &digits) {
    ProductState p;
    for (int d : digits) {
        require(d >= 0 && d < q, "basis digit out of range");
        Vec v = Vec::Zero(q);
        v(d) = 1.0;
        p.factors.push_back(v);
    }
    return p;
}

ProductState ProductState::uniform(int q, int width) {
    ProductState p;
    Vec v = Vec::Constant(q, cplx(1.0 / std::sqrt(static_cast<double>(q)), 0.0));
    p.factors.assign(static_cast<size_t>(width), v);
    return p;
}

StateVector to_state_vector(const ProductState &p) {
    StateVector s = StateVector::Ones(1);
    for (const Vec &f : p.factors) {
        StateVector next(s.size() * f.size());
        for (Eigen::Index i = 0; i < s.size(); i++) {
            for (Eigen::Index j = 0; j < f.size(); j++) {
                next(i * f.size() + j) = s(i) * f(j);
            }
        }
        s = std::move(next);
    }
    return s;
}

StateVector basis_state(int q, const std::vector<int> &digits) {
    return to_state_vector(ProductState::basis(q, digits));
}

void apply_gate_inplace(StateVector &state, const Gate &gate, int width, int q) {
    size_t dim = checked_dim(q, width);
    require(static_cast<size_t>(state.size()) == dim, "state size does not match q^width");
    for (int t : gate.targets) {
        require(t >= 0 && t < width, "gate target out of range");
    }
    size_t local = checked_dim(q, static_cast<int>(gate.targets.size()));
    require(static_cast<size_t>(gate.matrix.rows()) == local, "gate matrix size does not match q^k");
    std::vector<size_t> off = target_offsets(gate.targets, width, q);

    // Mask of indices whose target digits are all zero.
    std::vector<size_t> strides;
    for (int t : gate.targets) {
        strides.push_back(checked_dim(q, width - 1 - t));
    }
    auto is_base = [&](size_t idx) {
        for (size_t s : strides) {
            if ((idx / s) % q != 0) {
                return false;
            }
        }
        return true;
    };

    bool diag = gate.is_diagonal();
    size_t chunks = dim >= (size_t{1} << 16) ? static_cast<size_t>(worker_count()) : 1;
    size_t per = (dim + chunks - 1) / chunks;
    parallel_for(chunks, [&](size_t ch) {
        std::vector<cplx> in(local);
        size_t lo = ch * per;
        size_t hi = std::min(dim, lo + per);
        for (size_t idx = lo; idx < hi; idx++) {
            if (!is_base(idx)) {
                continue;
            }
            if (diag) {
                for (size_t a = 0; a < local; a++) {
                    state(idx + off[a]) *= gate.matrix(a, a);
                }
                continue;
            }
            for (size_t a = 0; a < local; a++) {
                in[a] = state(idx + off[a]);
            }
            for (size_t r = 0; r < local; r++) {
                cplx acc = 0.0;
                for (size_t c = 0; c < local; c++) {
                    acc += gate.matrix(r, c) * in[c];
                }
                state(idx + off[r]) = acc;
            }
        }
    });
}

StateVector apply_gate(const StateVector &state, const Gate &gate, int width, int q) {
    StateVector out = state;
    apply_gate_inplace(out, gate, width, q);
    return out;
}

StateVector run(const Circuit &c, StateVector state) {
    for (const Gate &g : c.gates()) {
        apply_gate_inplace(state, g, c.width(), c.q());
    }
    return state;
}

cplx matrix_element(const Circuit &c, const ProductState &left, const ProductState &right) {
    require(left.width() == c.width() && right.width() == c.width(), "boundary state width mismatch");
    for (const auto *p : {&left, &right}) {
        for (const Vec &f : p->factors) {
            require(f.size() == c.q(), "boundary factor dimension mismatch");
        }
    }
    StateVector out = run(c, to_state_vector(right));
    StateVector l = to_state_vector(left);
    return c.prefactor() * l.dot(out);
}

cplx trace(const Circuit &c, int cap_qubits) {
    double bits = c.width() * std::log2(static_cast<double>(c.q()));
    if (bits > cap_qubits + 1e-9) {
        throw Error(ErrorKind::EnumerationTooLarge, "trace width exceeds cap of " + std::to_string(cap_qubits) + " qubits");
    }
    size_t dim = c.dimension();
    std::vector<cplx> diag(dim);
    parallel_for(dim, [&](size_t s) {
        StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dim));
        v(static_cast<Eigen::Index>(s)) = 1.0;
        for (const Gate &g : c.gates()) {
            apply_gate_inplace(v, g, c.width(), c.q());
        }
        diag[s] = v(static_cast<Eigen::Index>(s));
    });
    cplx sum = 0.0;
    for (cplx d : diag) {
        sum += d;
    }
    return c.prefactor() * sum;
}

Mat circuit_matrix(const Circuit &c) {
    size_t dim = c.dimension();
    Mat m(dim, dim);
    for (size_t s = 0; s < dim; s++) {
        StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dim));
        v(static_cast<Eigen::Index>(s)) = 1.0;
        m.col(static_cast<Eigen::Index>(s)) = run(c, v);
    }
    return c.prefactor() * m;
}

Circuit compose(const Circuit &first, const Circuit &second) {
    require(first.width() == second.width() && first.q() == second.q(), "compose needs equal width and q");
    Circuit out(first.width(), first.q());
    for (const Gate &g : first.gates()) {
        out.add(g);
    }
    for (const Gate &g : second.gates()) {
        out.add(g);
    }
    out.set_prefactor(first.prefactor() * second.prefactor());
    return out;
}

Circuit adjoint(const Circuit &c) {
    Circuit out(c.width(), c.q());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        out.add(Gate{it->matrix.adjoint(), it->targets, it->label.empty() ? "" : it->label + "^dag"});
    }
    out.set_prefactor(std::conj(c.prefactor()));
    return out;
}

Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Mat embed_gate(const Gate &g, int width, int q) {
    size_t dim = checked_dim(q, width);
    Mat full = Mat::Zero(dim, dim);
    size_t k = g.targets.size();
    auto digit = [&](size_t idx, int qudit) { return static_cast<int>((idx / checked_dim(q, width - 1 - qudit)) % q); };
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            bool others_equal = true;
            for (int w = 0; w < width && others_equal; w++) {
                if (std::find(g.targets.begin(), g.targets.end(), w) == g.targets.end() && digit(r, w) != digit(c, w)) {
                    others_equal = false;
                }
            }
            if (!others_equal) {
                continue;
            }
            size_t lr = 0;
            size_t lc = 0;
            for (size_t j = 0; j < k; j++) {
                lr = lr * q + digit(r, g.targets[j]);
                lc = lc * q + digit(c, g.targets[j]);
            }
            full(r, c) = g.matrix(lr, lc);
        }
    }
    return full;
}

double operator_norm(const Mat &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(0);
}

double distance_up_to_phase(const Mat &a, const Mat &b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "distance needs equal shapes");
    auto f = [&](double phi) { return operator_norm(a - std::polar(1.0, phi) * b); };
    cplx overlap = (b.adjoint() * a).trace();
    double phi0 = std::abs(overlap) > 0 ? std::arg(overlap) : 0.0;
    double best_phi = phi0;
    double best = f(phi0);
    const int grid = 64;
    for (int k = 1; k < grid; k++) {
        double phi = phi0 + 2 * kPi * k / grid;
        double v = f(phi);
        if (v < best) {
            best = v;
            best_phi = phi;
        }
    }
    // Golden-section refinement around the best grid point.
    const double g = (std::sqrt(5.0) - 1) / 2;
    double lo = best_phi - 2 * kPi / grid;
    double hi = best_phi + 2 * kPi / grid;
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-15; it++) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    return std::min({best, f1, f2});
}

bool is_unitary(const Mat &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    Mat d = m.adjoint() * m - Mat::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace latcirc
