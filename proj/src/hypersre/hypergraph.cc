// Copyright 2026 The hypersre Authors
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

#include "hypersre/hypergraph.h"

#include <algorithm>

#include "hypersre/errors.h"

namespace hypersre {

Hypergraph3::Hypergraph3(size_t n) : n_(n) {
    if (n > kMaxMatrixDim) {
        throw CapacityError("hypergraph with " + std::to_string(n) + " qubits exceeds the matrix limit");
    }
}

void Hypergraph3::check_vertex(uint32_t v) const {
    if (v >= n_) {
        throw ContractViolation("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

bool Hypergraph3::add_edge3(uint32_t a, uint32_t b, uint32_t c) {
    check_vertex(a);
    check_vertex(b);
    check_vertex(c);
    Edge3 e{a, b, c};
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2]) {
        throw ContractViolation(
            "hyperedge (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
            ") repeats a vertex");
    }
    return edges3_.insert(e).second;
}

bool Hypergraph3::add_edge2(uint32_t a, uint32_t b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) {
        throw ContractViolation("edge (" + std::to_string(a) + "," + std::to_string(b) + ") repeats a vertex");
    }
    return edges2_.insert(Edge2{std::min(a, b), std::max(a, b)}).second;
}

bool Hypergraph3::add_edge1(uint32_t a) {
    check_vertex(a);
    return edges1_.insert(a).second;
}

BitMatrix c_matrix(const Hypergraph3 &h, std::span<const uint8_t> x) {
    if (x.size() != h.num_qubits()) {
        throw ContractViolation(
            "bit string has length " + std::to_string(x.size()) + ", expected " + std::to_string(h.num_qubits()));
    }
    BitMatrix c(h.num_qubits(), h.num_qubits());
    for (const auto &[i, j, k] : h.edges3()) {
        // i < j < k; each vertex in turn plays the role of the X factor.
        if (x[i]) {
            c.flip(j, k);
        }
        if (x[j]) {
            c.flip(i, k);
        }
        if (x[k]) {
            c.flip(i, j);
        }
    }
    return c;
}

BitMatrix vertex_matrix(const Hypergraph3 &h, size_t k) {
    if (k >= h.num_qubits()) {
        throw ContractViolation("vertex index " + std::to_string(k) + " out of range");
    }
    BitString x(h.num_qubits(), 0);
    x[k] = 1;
    return c_matrix(h, x);
}

VertexStats vertex_stats(const Hypergraph3 &h) {
    const size_t n = h.num_qubits();
    VertexStats stats;
    stats.h.resize(n);
    stats.delta.resize(n);
    int64_t h_sum = 0;
    int64_t delta_sum = 0;
    for (size_t k = 0; k < n; k++) {
        BitMatrix ck = vertex_matrix(h, k);
        stats.h[k] = rank(symmetrize_upper(ck)) / 2;
        stats.delta[k] = ck.popcount();
        h_sum += static_cast<int64_t>(stats.h[k]);
        delta_sum += static_cast<int64_t>(stats.delta[k]);
    }
    if (n > 0) {
        stats.h_bar = Rational(h_sum, static_cast<int64_t>(n));
        stats.delta_bar = Rational(delta_sum, static_cast<int64_t>(n));
    }
    return stats;
}

Hypergraph3 chain(size_t n) {
    if (n < 3) {
        throw ContractViolation("chain needs n >= 3, got " + std::to_string(n));
    }
    Hypergraph3 h(n);
    for (uint32_t i = 0; i + 2 < n; i++) {
        h.add_edge3(i, i + 1, i + 2);
    }
    return h;
}

Hypergraph3 union_jack(size_t l) {
    if (l < 2) {
        throw ContractViolation("union_jack needs L >= 2, got " + std::to_string(l));
    }
    const auto L = static_cast<uint32_t>(l);
    Hypergraph3 h(2 * l * l);
    auto corner = [&](uint32_t r, uint32_t c) { return (r % L) * L + (c % L); };
    for (uint32_t r = 0; r < L; r++) {
        for (uint32_t c = 0; c < L; c++) {
            uint32_t center = L * L + r * L + c;
            // Boundary of the square, going around.
            std::array<uint32_t, 4> ring{corner(r, c), corner(r, c + 1), corner(r + 1, c + 1), corner(r + 1, c)};
            for (size_t s = 0; s < 4; s++) {
                h.add_edge3(center, ring[s], ring[(s + 1) % 4]);
            }
        }
    }
    return h;
}

Hypergraph3 triangular(size_t l) {
    if (l < 3) {
        throw ContractViolation("triangular needs L >= 3, got " + std::to_string(l));
    }
    const auto L = static_cast<uint32_t>(l);
    Hypergraph3 h(l * l);
    auto site = [&](uint32_t r, uint32_t c) { return (r % L) * L + (c % L); };
    for (uint32_t r = 0; r < L; r++) {
        for (uint32_t c = 0; c < L; c++) {
            h.add_edge3(site(r, c), site(r + 1, c), site(r, c + 1));
            h.add_edge3(site(r + 1, c), site(r, c + 1), site(r + 1, c + 1));
        }
    }
    return h;
}

nlohmann::json to_json(const Hypergraph3 &h) {
    nlohmann::json j;
    j["n"] = h.num_qubits();
    j["edges3"] = nlohmann::json::array();
    for (const auto &e : h.edges3()) {
        j["edges3"].push_back({e[0], e[1], e[2]});
    }
    j["edges2"] = nlohmann::json::array();
    for (const auto &e : h.edges2()) {
        j["edges2"].push_back({e[0], e[1]});
    }
    j["edges1"] = nlohmann::json::array();
    for (uint32_t v : h.edges1()) {
        j["edges1"].push_back({v});
    }
    return j;
}

namespace {

std::vector<uint32_t> read_edge(const nlohmann::json &e, size_t arity, const std::string &where) {
    if (!e.is_array() || e.size() != arity) {
        throw std::invalid_argument(where + ": expected an array of " + std::to_string(arity) + " indices");
    }
    std::vector<uint32_t> out;
    for (const auto &v : e) {
        if (!v.is_number_integer() || v.get<int64_t>() < 0) {
            throw std::invalid_argument(where + ": indices must be non-negative integers");
        }
        out.push_back(v.get<uint32_t>());
    }
    return out;
}

}  // namespace

Hypergraph3 hypergraph_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("hypergraph: expected a JSON object");
    }
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int64_t>() < 0) {
        throw std::invalid_argument("n: expected a non-negative integer");
    }
    for (const auto &[key, value] : j.items()) {
        if (key != "n" && key != "edges3" && key != "edges2" && key != "edges1") {
            throw std::invalid_argument(key + ": unknown field");
        }
    }
    Hypergraph3 h(j["n"].get<size_t>());
    auto each = [&](const char *field, size_t arity, auto &&insert) {
        if (!j.contains(field)) {
            return;
        }
        const auto &list = j[field];
        if (!list.is_array()) {
            throw std::invalid_argument(std::string(field) + ": expected an array");
        }
        for (size_t idx = 0; idx < list.size(); idx++) {
            std::string where = std::string(field) + "[" + std::to_string(idx) + "]";
            auto v = read_edge(list[idx], arity, where);
            bool inserted;
            try {
                inserted = insert(v);
            } catch (const ContractViolation &ex) {
                throw std::invalid_argument(where + ": " + ex.what());
            }
            if (!inserted) {
                throw std::invalid_argument(where + ": duplicate edge");
            }
        }
    };
    each("edges3", 3, [&](const std::vector<uint32_t> &v) { return h.add_edge3(v[0], v[1], v[2]); });
    each("edges2", 2, [&](const std::vector<uint32_t> &v) { return h.add_edge2(v[0], v[1]); });
    each("edges1", 1, [&](const std::vector<uint32_t> &v) { return h.add_edge1(v[0]); });
    return h;
}

}  // namespace hypersre
