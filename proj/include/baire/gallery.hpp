#pragma once

#include <optional>
#include <vector>

#include "baire/checkers.hpp"

namespace baire {

// ---- F1 on the Cantor grid ----

bool r_membership(const CantorGridPoint& g, Nat m);
// Least n after which row m is all zero, plus one. Throws when row m is in R_m.
Nat n_of(const CantorGridPoint& g, Nat m);
// Defining points with index m <= M.
ClosedSet f1_value(const CantorGridPoint& g, Nat M);

// The inner clause "for all i < k there is s ... with gamma(m,s) = 1" can be read
// with s >= i (the default) or with s > i as printed; the latter rejects every
// m + 1/(k+2) with k >= 1.
enum class F1Clause { AtLeast, Greater };
// Explicit graph formula. With a window, only m <= window are considered.
bool f1_graph_member(const CantorGridPoint& g, const Rational& y, std::optional<Nat> window = std::nullopt,
                     F1Clause clause = F1Clause::AtLeast);

MultiMap f1_multimap(Nat M = 8);
ProbeGen f1_probes(Nat M = 8);
Witness f1_witness(const CantorGridPoint& g, Nat M, const CheckConfig& cfg);
// Deltas down to 2^-17 so the schedule reaches the moduli of the continuity
// points, and n_bound 16 for single-1 rows up to position 6.
CheckConfig f1_check_config();

// gamma on every cell of index < pinned, `fill` elsewhere.
CantorGridPoint grid_fill(const CantorGridPoint& g, const BigNat& pinned, Bit fill);

// ---- F2 on trees ----

MultiMap f2_multimap();
ProbeGen f2_probes();
Witness f2_witness(const Tree& t, const CheckConfig& cfg);
// Coarse eps (to 2^-3) with deltas to 2^-20; dense_bound 4096 reaches the
// shifted branches with small entries.
CheckConfig f2_check_config();
// t with the extra node u^(t0), t0 fresh for the given number of pinned slots.
Tree extend_terminal(const Tree& t, const Node& u, const BigNat& pinned);

// ---- dense split on [0,1] ----

enum class DenseSpec { Dyadic, Thirds };
DenseSpec parse_dense_spec(std::string_view name);
const char* dense_spec_name(DenseSpec spec);
bool in_dense_set(DenseSpec spec, const Rational& q);
MultiMap dense_split(DenseSpec spec);
ProbeGen dense_split_probes(DenseSpec spec);
// Strong-mode witness: table for y = 0 on A, refutation of y = 1 off A.
Witness dense_split_witness(DenseSpec spec, const Rational& x, const CheckConfig& cfg);

// ---- spike function on the line ----

// Either a finite list of distinct points or the harmonic list x_n = 1/(n+1).
struct SpikeSpec {
  std::vector<Rational> points;
  bool harmonic = false;

  static SpikeSpec listed(std::vector<Rational> pts);  // throws on duplicates
  static SpikeSpec harmonic_list() { return SpikeSpec{{}, true}; }
  std::optional<Nat> index_of(const Rational& x) const;
  // Indices n < bound with their points.
  std::vector<std::pair<Nat, Rational>> first(Nat bound) const;
};

MultiMap spike_function(const SpikeSpec& spec);
ProbeGen spike_probes(const SpikeSpec& spec);
Witness spike_witness(const SpikeSpec& spec, const Rational& x, const CheckConfig& cfg);

// ---- tabular maps, extension, composition ----

MultiMap tabular(PointSpace domain, PointSpace codomain, std::vector<ClosedSet> values);

// Isometric injection of FinitePoints spaces given by label indices.
struct FiniteEmbedding {
  PointSpace from;
  PointSpace to;
  std::vector<std::size_t> image;  // image[i] = f(i)

  FiniteEmbedding(PointSpace from, PointSpace to, std::vector<std::size_t> image);
  std::optional<std::size_t> preimage(std::size_t j) const;
};

// F0 on the image, the whole codomain elsewhere.
MultiMap extend(const MultiMap& F0, const FiniteEmbedding& f);

struct AffineMap {
  Rational a, b;  // t -> a t + b, a != 0
  Rational operator()(const Rational& t) const { return a * t + b; }
};

MultiMap compose_affine(const AffineMap& pi, const MultiMap& F);
MultiMap compose_baire_embed(const MultiMap& F);

// ---- nested interval embedding of Baire space into [0,1] ----

Interval interval_of(const Node& u);
Interval baire_embed(const BairePoint& a, Nat depth);
// The common point of the chain interval_of(a|n), exactly.
Rational baire_embed_point(const BairePoint& a);

}  // namespace baire
