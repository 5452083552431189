#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/rational.hpp"
#include "skein/rootdata.hpp"

namespace skein {

// A trivalent ribbon graph: the spine of a genus-g handlebody. Vertices are
// 0..V-1; edges carry an orientation (src -> dst). The rotation system lists
// the cyclic order of half-edges at each vertex; half-edge h of edge e is
// 2e (source end) or 2e+1 (target end).
struct TriGraph {
    int num_vertices = 0;
    struct Edge {
        int src = 0, dst = 0;
        std::string name;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation; // per vertex, cyclic half-edge order

    int valence(int v) const {
        int d = 0;
        for (const auto& e : edges) d += (e.src == v) + (e.dst == v);
        return d;
    }
    bool connected_without(int skip_edge) const {
        if (num_vertices == 0) return true;
        std::vector<bool> seen(num_vertices, false);
        std::vector<int> stack = {0};
        seen[0] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (size_t e = 0; e < edges.size(); ++e) {
                if (static_cast<int>(e) == skip_edge) continue;
                int w = -1;
                if (edges[e].src == v) w = edges[e].dst;
                else if (edges[e].dst == v) w = edges[e].src;
                if (w >= 0 && !seen[w]) { seen[w] = true; stack.push_back(w); }
            }
        }
        for (bool s : seen)
            if (!s) return false;
        return true;
    }
    long betti() const {
        return static_cast<long>(edges.size()) - num_vertices + 1;
    }
    // incidence of edge e at vertex v: +1 outgoing, -1 incoming, 0 otherwise
    // (a loop contributes 0)
    int incidence(int v, int e) const {
        int r = 0;
        if (edges[e].src == v) r += 1;
        if (edges[e].dst == v) r -= 1;
        return r;
    }
};

// A dual curve beta crossing a cyclic sequence of edges once each. Between
// consecutive crossed edges the curve turns inside a vertex ball, passing a
// flanking third edge there. Slot signs for the 6j factors are derived from
// the incidence of the edges at the turning vertex.
struct BetaCurve {
    std::string name;
    std::vector<int> crossed;          // edge ids, cyclic order
    std::vector<int> crossed_sign;     // cycle coefficient on each crossed edge
    struct Turn {
        int vertex = 0;
        int flank_edge = 0;
    };
    std::vector<Turn> turns;           // turns[t] sits between crossed[t] and crossed[t+1 mod L]
};

// Per-edge boundary values omega(gamma_e) in C/2Z, one rational per edge in
// exact mode. Admissibility: at every vertex the signed sum of values is an
// even integer, and no value lies in (1/2)Z.
struct OmegaData {
    std::vector<Rational> value; // indexed by edge

    void validate(const TriGraph& g) const {
        if (value.size() != g.edges.size())
            throw inadmissible_error("omega: one value per edge required");
        for (const auto& v : value) {
            Rational twice = v * 2;
            if (is_integer(twice))
                throw inadmissible_error("omega value " + to_string(v) + " lies in (1/2)Z");
        }
        for (int vtx = 0; vtx < g.num_vertices; ++vtx) {
            Rational sum = 0;
            bool touches = false;
            for (size_t e = 0; e < g.edges.size(); ++e) {
                int inc = g.incidence(vtx, static_cast<int>(e));
                if (inc != 0) touches = true;
                sum += Rational(inc) * value[e];
            }
            if (!touches) continue;
            if (!is_integer(sum) || to_long(sum) % 2 != 0)
                throw inadmissible_error("omega violates the vertex relation at vertex " +
                                         std::to_string(vtx));
        }
    }
};

struct SurfacePreset {
    long genus = 2;
    TriGraph graph;
    std::vector<BetaCurve> betas;

    void validate() const {
        for (int v = 0; v < graph.num_vertices; ++v)
            if (graph.valence(v) != 3)
                throw inadmissible_error("graph vertex " + std::to_string(v) + " is not trivalent");
        if (graph.betti() != genus)
            throw inadmissible_error("graph first Betti number does not match the genus");
        if (!graph.connected_without(-1)) throw inadmissible_error("graph is disconnected");
        for (size_t e = 0; e < graph.edges.size(); ++e)
            if (!graph.connected_without(static_cast<int>(e)))
                throw inadmissible_error("edge " + graph.edges[e].name + " is separating");
        for (const auto& b : betas) {
            if (b.crossed.empty() || b.crossed.size() != b.turns.size() ||
                b.crossed.size() != b.crossed_sign.size())
                throw inadmissible_error("beta curve " + b.name + " has inconsistent data");
            for (int s : b.crossed_sign)
                if (s != 1 && s != -1)
                    throw inadmissible_error("beta curve cycle entries must be +-1");
        }
    }
};

// Standard presets: the theta graph for genus 2 and the circular double
// ladder for genus 3. Higher genus needs a user fixture.
inline SurfacePreset preset_surface(long genus) {
    if (genus < 2) throw inadmissible_error("presets require genus >= 2");
    SurfacePreset p;
    p.genus = genus;
    if (genus == 2) {
        p.graph.num_vertices = 2;
        p.graph.edges = {{0, 1, "e1"}, {0, 1, "e2"}, {0, 1, "e3"}};
        p.graph.rotation = {{0, 2, 4}, {1, 3, 5}};
        // beta_1 crosses e1,e2 turning at both vertices around e3
        p.betas.push_back({"beta1", {0, 1}, {1, -1}, {{0, 2}, {1, 2}}});
        // beta_2 crosses e2,e3 turning around e1
        p.betas.push_back({"beta2", {1, 2}, {1, -1}, {{0, 0}, {1, 0}}});
    } else if (genus == 3) {
        // circular ladder: doubled pairs (e1,e2): v0->v1 and (e4,e5): v2->v3,
        // joined by e3: v1->v2 and e6: v3->v0
        p.graph.num_vertices = 4;
        p.graph.edges = {{0, 1, "e1"}, {0, 1, "e2"}, {1, 2, "e3"},
                         {2, 3, "e4"}, {2, 3, "e5"}, {3, 0, "e6"}};
        p.graph.rotation = {{0, 2, 11}, {1, 3, 4}, {5, 6, 8}, {7, 9, 10}};
        p.betas.push_back({"beta1", {0, 1}, {1, -1}, {{0, 5}, {1, 2}}});
        p.betas.push_back({"beta2", {3, 4}, {1, -1}, {{2, 2}, {3, 5}}});
        // the third curve crosses four edges once each
        p.betas.push_back({"beta3",
                           {2, 3, 5, 0},
                           {1, 1, 1, 1},
                           {{2, 4}, {3, 4}, {0, 1}, {1, 1}}});
    } else {
        throw inadmissible_error("genus > 3 requires a user fixture");
    }
    p.validate();
    return p;
}

// Sample generic omega data for a preset, built from small rationals that
// satisfy the vertex relations and avoid (1/2)Z.
inline OmegaData preset_omega(const SurfacePreset& p, int variant = 0) {
    OmegaData w;
    if (p.genus == 2) {
        std::vector<std::vector<Rational>> choices = {
            {rat(1, 5), rat(2, 5), rat(-3, 5)},
            {rat(3, 10), rat(9, 10), rat(-6, 5)},
            {rat(1, 7), rat(3, 7), rat(-4, 7)},
            {rat(2, 7), rat(-3, 7), rat(1, 7)},
        };
        w.value = choices[variant % choices.size()];
    } else if (p.genus == 3) {
        // relations: e1+e2-e3 = 0, e3-e4-e5 = 0, ... chosen directly:
        std::vector<std::vector<Rational>> choices = {
            {rat(1, 5), rat(2, 5), rat(3, 5), rat(1, 5), rat(2, 5), rat(3, 5)},
            {rat(2, 7), rat(3, 7), rat(5, 7), rat(1, 7), rat(4, 7), rat(5, 7)},
        };
        // edge order e1..e6 with relations v0: e1+e2-e6, v1: e3-e1-e2,
        // v2: e4+e5-e3, v3: e6-e4-e5  => e3 = e1+e2 (mod 2), e6 = e4+e5 (mod 2),
        // e3 = e4+e5 (mod 2)
        w.value = choices[variant % choices.size()];
    } else {
        throw inadmissible_error("no preset omega for this genus");
    }
    w.validate(p.graph);
    return w;
}

} // namespace skein
