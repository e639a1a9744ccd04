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

#include "latcirc/estimate.h"

#include <sodium.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "latcirc/parallel.h"

namespace latcirc {

namespace {

constexpr uint64_t kChunk = 4096;
constexpr int kDenseCapQubits = 12;

enum class Part : uint8_t { Real = 0, Imag = 1 };

// Uniforms in [0, 1) from the ChaCha20 keystream; key = seed, nonce = (part, chunk).
class ChunkStream {
   public:
    ChunkStream(uint64_t seed, Part part, uint64_t chunk, size_t count) : words_(count) {
        std::array<unsigned char, crypto_stream_chacha20_KEYBYTES> key{};
        std::array<unsigned char, crypto_stream_chacha20_NONCEBYTES> nonce{};
        for (int i = 0; i < 8; i++) {
            key[static_cast<size_t>(i)] = static_cast<unsigned char>(seed >> (8 * i));
        }
        uint64_t n = (static_cast<uint64_t>(part) << 56) | chunk;
        for (int i = 0; i < 8; i++) {
            nonce[static_cast<size_t>(i)] = static_cast<unsigned char>(n >> (8 * i));
        }
        crypto_stream_chacha20(reinterpret_cast<unsigned char *>(words_.data()), count * sizeof(uint64_t), nonce.data(),
                               key.data());
    }
    double uniform(size_t i) const { return static_cast<double>(words_[i] >> 11) * 0x1.0p-53; }

   private:
    std::vector<uint64_t> words_;
};

void ensure_sodium() {
    static const int rc = sodium_init();
    if (rc < 0) {
        throw Error(ErrorKind::BadConfig, "libsodium failed to initialise");
    }
}

void check_config(const EstimatorConfig &cfg) {
    if (cfg.shots == 0) {
        if (!(cfg.epsilon > 0.0) || !(cfg.epsilon <= 2.0)) {
            throw Error(ErrorKind::BadConfig, "epsilon must lie in (0, 2]");
        }
        if (!(cfg.delta > 0.0) || !(cfg.delta < 1.0)) {
            throw Error(ErrorKind::BadConfig, "delta must lie in (0, 1)");
        }
    }
}

void check_unitary(const Circuit &c) {
    if (std::abs(std::abs(c.prefactor()) - 1.0) > 1e-10) {
        throw Error(ErrorKind::NonUnitaryCircuit, "circuit prefactor has modulus " +
                                                      std::to_string(std::abs(c.prefactor())));
    }
    for (size_t i = 0; i < c.gates().size(); i++) {
        if (!is_unitary(c.gates()[i].matrix, 1e-10)) {
            throw Error(ErrorKind::NonUnitaryCircuit,
                        "gate " + std::to_string(i) + " (" + c.gates()[i].label + ") is not unitary");
        }
    }
}

void check_state(const ProductState &s, const Circuit &c, const char *what) {
    if (s.width() != c.width()) {
        throw Error(ErrorKind::BadConfig, std::string(what) + " state width differs from the circuit");
    }
    for (const Vec &f : s.factors) {
        if (f.size() != c.q() || std::abs(f.norm() - 1.0) > 1e-10) {
            throw Error(ErrorKind::BadConfig, std::string(what) + " state factors must be normalized q-vectors");
        }
    }
}

uint64_t shots_for(const EstimatorConfig &cfg) { return cfg.shots ? cfg.shots : auto_shots(cfg.epsilon, cfg.delta); }

// Number of zero outcomes over `shots`; p0(stream, i) returns the ancilla
// P(0) for shot i and the index of its Bernoulli uniform.
template <class Shot>
uint64_t count_zeros(uint64_t seed, Part part, uint64_t shots, size_t draws_per_shot, const Shot &shot) {
    const uint64_t chunks = (shots + kChunk - 1) / kChunk;
    std::vector<uint64_t> zeros(chunks, 0);
    parallel_for(chunks, [&](size_t ch) {
        uint64_t first = ch * kChunk;
        uint64_t len = std::min(kChunk, shots - first);
        ChunkStream rs(seed, part, ch, len * draws_per_shot);
        uint64_t z = 0;
        for (uint64_t i = 0; i < len; i++) {
            z += shot(rs, i * draws_per_shot) ? 1 : 0;
        }
        zeros[ch] = z;
    });
    uint64_t total = 0;
    for (uint64_t z : zeros) {
        total += z;
    }
    return total;
}

Estimate assemble(uint64_t z_re, uint64_t z_im, uint64_t shots, const EstimatorConfig &cfg) {
    Estimate e;
    e.p0_re = static_cast<double>(z_re) / static_cast<double>(shots);
    e.p0_im = static_cast<double>(z_im) / static_cast<double>(shots);
    e.value = cplx(2.0 * e.p0_re - 1.0, 1.0 - 2.0 * e.p0_im);
    // Hoeffding radius per part at the realized shot count and delta/2.
    e.epsilon = std::sqrt(2.0 * std::log(4.0 / cfg.delta) / static_cast<double>(shots));
    e.shots_used = 2 * shots;
    return e;
}

Mat completion(const Vec &r) {
    const int d = static_cast<int>(r.size());
    Mat a = Mat::Identity(d, d);
    a.col(0) = r;
    Mat q = a.householderQr().householderQ();
    cplx ph = q.col(0).dot(r);
    q.col(0) *= ph;
    return q;
}

}  // namespace

uint64_t auto_shots(double epsilon, double delta) {
    if (!(epsilon > 0.0) || !(delta > 0.0) || !(delta < 1.0)) {
        throw Error(ErrorKind::BadConfig, "auto shots need epsilon > 0 and 0 < delta < 1");
    }
    return static_cast<uint64_t>(std::ceil(2.0 * std::log(4.0 / delta) / (epsilon * epsilon)));
}

Estimate hadamard_test(const Circuit &circuit, const ProductState &left, const ProductState &right,
                       const EstimatorConfig &cfg) {
    ensure_sodium();
    check_config(cfg);
    check_unitary(circuit);
    check_state(left, circuit, "left");
    check_state(right, circuit, "right");
    const cplx c = matrix_element(circuit, left, right);
    const double p_re = std::clamp((1.0 + c.real()) / 2.0, 0.0, 1.0);
    const double p_im = std::clamp((1.0 - c.imag()) / 2.0, 0.0, 1.0);
    const uint64_t shots = shots_for(cfg);
    uint64_t z_re = count_zeros(cfg.seed, Part::Real, shots, 1,
                                [&](const ChunkStream &rs, size_t i) { return rs.uniform(i) < p_re; });
    uint64_t z_im = count_zeros(cfg.seed, Part::Imag, shots, 1,
                                [&](const ChunkStream &rs, size_t i) { return rs.uniform(i) < p_im; });
    return assemble(z_re, z_im, shots, cfg);
}

Estimate dqc1_trace_estimate(const Circuit &circuit, const EstimatorConfig &cfg) {
    ensure_sodium();
    check_config(cfg);
    check_unitary(circuit);
    const size_t dim = circuit.dimension();
    if (static_cast<double>(dim) > std::ldexp(1.0, kDefaultTraceCapQubits)) {
        throw Error(ErrorKind::BadConfig, "circuit dimension exceeds the trace cap");
    }
    std::vector<double> p_re(dim), p_im(dim);
    parallel_for(dim, [&](size_t s) {
        StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dim));
        v(static_cast<Eigen::Index>(s)) = 1.0;
        cplx d = circuit.prefactor() * run(circuit, v)(static_cast<Eigen::Index>(s));
        p_re[s] = std::clamp((1.0 + d.real()) / 2.0, 0.0, 1.0);
        p_im[s] = std::clamp((1.0 - d.imag()) / 2.0, 0.0, 1.0);
    });
    auto draw = [dim](double u) { return std::min(dim - 1, static_cast<size_t>(u * static_cast<double>(dim))); };
    const uint64_t shots = shots_for(cfg);
    uint64_t z_re = count_zeros(cfg.seed, Part::Real, shots, 2, [&](const ChunkStream &rs, size_t i) {
        return rs.uniform(i + 1) < p_re[draw(rs.uniform(i))];
    });
    uint64_t z_im = count_zeros(cfg.seed, Part::Imag, shots, 2, [&](const ChunkStream &rs, size_t i) {
        return rs.uniform(i + 1) < p_im[draw(rs.uniform(i))];
    });
    return assemble(z_re, z_im, shots, cfg);
}

double controlled_u_p0(const Circuit &circuit, const ProductState &left, const ProductState &right,
                       bool phase_gate) {
    check_unitary(circuit);
    check_state(left, circuit, "left");
    check_state(right, circuit, "right");
    if (std::log2(static_cast<double>(circuit.dimension())) > kDenseCapQubits) {
        throw Error(ErrorKind::BadConfig, "explicit controlled-U construction is capped at 12 qubits");
    }
    Mat wl = Mat::Identity(1, 1), wr = Mat::Identity(1, 1);
    for (int k = 0; k < circuit.width(); k++) {
        wl = kron(wl, completion(left.factors[static_cast<size_t>(k)]));
        wr = kron(wr, completion(right.factors[static_cast<size_t>(k)]));
    }
    const Mat u = wl.adjoint() * circuit_matrix(circuit) * wr;
    const Eigen::Index d = u.rows();
    Mat h = Mat{{1.0, 1.0}, {1.0, -1.0}} / std::sqrt(2.0);
    Mat p = Mat::Identity(2, 2);
    if (phase_gate) {
        p(1, 1) = kI;
    }
    Mat cu = Mat::Zero(2 * d, 2 * d);
    cu.topLeftCorner(d, d) = Mat::Identity(d, d);
    cu.bottomRightCorner(d, d) = u;
    const Mat id = Mat::Identity(d, d);
    Vec psi = Vec::Zero(2 * d);
    psi(0) = 1.0;
    psi = kron(h, id) * cu * kron(p, id) * kron(h, id) * psi;
    return psi.head(d).squaredNorm();
}

std::string rng_description() {
    return "ChaCha20 keystream (libsodium " + std::string(sodium_version_string()) +
           " crypto_stream_chacha20; key = seed, nonce = part << 56 | chunk, chunk = 4096 shots)";
}

}  // namespace latcirc
