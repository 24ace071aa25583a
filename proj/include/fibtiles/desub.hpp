#pragma once

#include <string>
#include <vector>

#include "fibtiles/morphism.hpp"
#include "fibtiles/wang.hpp"

namespace fibtiles {

// Letter subset whose occurrences fill whole nonadjacent layers orthogonal to
// the stored direction.  Checked through radius-bounded local conditions on
// admissible dominoes, so the claim is scoped to the stored radius.
struct MarkerSet {
    int direction;
    std::vector<int> letters;  // sorted
    int radius;
};

// Maximal letter subsets satisfying the local marker conditions: along
// layer-parallel admissible dominoes membership is constant, across layers
// two markers never touch.  Sorted by smallest member.
std::vector<MarkerSet> find_markers(const WangTileSet& set, int direction, int radius);

enum class Side { right, left };

// Fused alphabet and the morphism mapping it back onto the old tiles.  Every
// image is a single non-marker letter or a (non-marker, marker) domino in the
// marker direction (mirrored for Side::left).
struct DesubResult {
    WangTileSet new_set;
    Morphism2D morphism;
    Side side;
};

DesubResult find_substitution(const WangTileSet& set, const MarkerSet& markers, Side side);

// Letter-to-letter 2D morphism induced by a certificate's tile bijection.
Morphism2D relabel_morphism(const EquivalenceCertificate& cert);

// Two desubstitution rounds (e2 radius 2, then e1 radius 1) followed by the
// equivalence with the input set; the composite re-derives the expansion
// morphism of the shift.
struct PipelineResult {
    MarkerSet markers0;
    DesubResult step0;  // 18-tile intermediate set, morphism gamma0
    MarkerSet markers1;
    DesubResult step1;  // 16-tile set, morphism gamma1
    EquivalenceCertificate certificate;  // input set -> step1 set
    Morphism2D relabel;                  // gamma2
    Morphism2D composite;                // gamma0 . gamma1 . gamma2
    bool composite_is_phi;
};

PipelineResult self_similarity_pipeline(const WangTileSet& set);

// Stable text transcript of a pipeline run (marker lists, cardinalities,
// morphism tables, final verdict).
std::string pipeline_transcript(const PipelineResult& r);

}  // namespace fibtiles
