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

#ifndef HYPERSRE_HYPERGRAPH_H
#define HYPERSRE_HYPERGRAPH_H

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hypersre/gf2.h"
#include "json.hpp"

namespace hypersre {

using Edge3 = std::array<uint32_t, 3>;
using Edge2 = std::array<uint32_t, 2>;

/// Bit string x_0 ... x_{n-1}, one byte (0 or 1) per position.
using BitString = std::vector<uint8_t>;

/// Hypergraph state description: n qubits, CCZ hyperedges, and optional CZ
/// and Z edges.
///
/// Edges are stored sorted with sorted vertices. The CZ and Z edges define the
/// state (the oracle includes them) but are Clifford and never change any
/// entropy value, so the fast paths ignore them.
class Hypergraph3 {
   public:
    Hypergraph3() = default;
    explicit Hypergraph3(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    const std::set<Edge3> &edges3() const {
        return edges3_;
    }
    const std::set<Edge2> &edges2() const {
        return edges2_;
    }
    const std::set<uint32_t> &edges1() const {
        return edges1_;
    }

    /// Insert an edge; vertex order does not matter. Returns false when the
    /// edge was already present. Throws ContractViolation on an out-of-range
    /// or repeated vertex.
    bool add_edge3(uint32_t a, uint32_t b, uint32_t c);
    bool add_edge2(uint32_t a, uint32_t b);
    bool add_edge1(uint32_t a);

    bool operator==(const Hypergraph3 &other) const = default;

   private:
    void check_vertex(uint32_t v) const;

    size_t n_ = 0;
    std::set<Edge3> edges3_;
    std::set<Edge2> edges2_;
    std::set<uint32_t> edges1_;
};

using Rational = boost::rational<int64_t>;

struct VertexStats {
    /// Half the rank of C'_k + C'_k^T for each vertex k.
    std::vector<size_t> h;
    /// Number of hyperedges containing vertex k.
    std::vector<size_t> delta;
    Rational h_bar;
    Rational delta_bar;
};

/// C(x): strictly upper n x n matrix with C[i][j] = parity of x_k over the
/// hyperedges {i, j, k}.
BitMatrix c_matrix(const Hypergraph3 &h, std::span<const uint8_t> x);

/// C'_k, i.e. c_matrix with x the indicator of vertex k.
BitMatrix vertex_matrix(const Hypergraph3 &h, size_t k);

VertexStats vertex_stats(const Hypergraph3 &h);

/// Open chain with hyperedges (0,1,2), (1,2,3), ..., (n-3,n-2,n-1).
Hypergraph3 chain(size_t n);

/// Periodic L x L Union Jack lattice with 2 L^2 qubits.
///
/// Corner (row, col) is qubit row * L + col; the center of the square whose
/// top-left corner is (row, col) is qubit L^2 + row * L + col. Each square
/// holds four triangles {center, corner, next corner} around its boundary.
Hypergraph3 union_jack(size_t l);

/// Periodic L x L triangular lattice; site (row, col) is qubit row * L + col.
/// Each cell holds the triangles {(r,c), (r+1,c), (r,c+1)} and
/// {(r+1,c), (r,c+1), (r+1,c+1)}.
Hypergraph3 triangular(size_t l);

/// JSON form: {"n": int, "edges3": [[i,j,k],...], "edges2": [[i,j],...],
/// "edges1": [[i],...]}, 0-based. Missing edge lists are empty.
nlohmann::json to_json(const Hypergraph3 &h);
/// Throws std::invalid_argument naming the offending field.
Hypergraph3 hypergraph_from_json(const nlohmann::json &j);

}  // namespace hypersre

#endif
