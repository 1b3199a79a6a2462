//! Projectification, projective quotients and restricted arrangements.

use std::collections::BTreeSet;

use crate::crystal::{
    classify_projective_components, is_projective_crystallograph, ArrangementReport,
    ArrangementType, Tag,
};
use crate::error::{Error, Result};
use crate::graphs::{arrangement_from_graph, ColouredGraph, Hyperplane, Palette, BLUE, GREEN, RED};
use crate::quotient::{quotient_graph, quotient_masks};
use crate::rootsys::SignedPermutation;

/// Fuses the red and green loops at each node into one blue loop.
pub fn projectify(g: &ColouredGraph) -> ColouredGraph {
    let mut p = g.clone().with_palette(Palette::Trichromatic);
    for k in 0..g.n() {
        if g.loop_mask(k) != 0 {
            p.set_loop_mask(k, BLUE);
        }
    }
    p
}

/// Repaints blue loops red.
pub fn lift(g: &ColouredGraph) -> Result<ColouredGraph> {
    if g.palette() != Palette::Trichromatic {
        return Err(Error::Palette("lift needs a trichromatic graph".into()));
    }
    let mut b = g.clone().with_palette(Palette::Bichromatic);
    for k in 0..g.n() {
        match g.loop_mask(k) {
            0 => {}
            BLUE => b.set_loop_mask(k, RED),
            _ => return Err(Error::Palette("lift needs blue loops only".into())),
        }
    }
    Ok(b)
}

/// Quotient of nested projective crystallographs: the bichromatic rules,
/// every produced loop blue.
pub fn quotient_projective(g: &ColouredGraph, gp: &ColouredGraph) -> Result<ColouredGraph> {
    if g.n() != gp.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: gp.n(),
        });
    }
    if !is_projective_crystallograph(g) {
        return Err(Error::Precondition("g is not a projective crystallograph".into()));
    }
    if !is_projective_crystallograph(gp) {
        return Err(Error::Precondition("gp is not a projective crystallograph".into()));
    }
    if !gp.is_subgraph_of(g) {
        return Err(Error::NotNested);
    }
    let report = classify_projective_components(gp)?;
    if report.parts.iter().any(|c| matches!(c.kind, ArrangementType::Bipartite(..))) {
        return Err(Error::BipartiteSubgraph);
    }
    let parts = report.red_parts();
    Ok(quotient_masks(g, gp, &parts, Palette::Trichromatic, Some(BLUE)))
}

/// `P(G)/P(G') = P(G/G')`.
pub fn verify_projectification_compatibility(
    g: &ColouredGraph,
    gp: &ColouredGraph,
) -> Result<bool> {
    let right = projectify(&quotient_graph(g, gp)?);
    let left = quotient_projective(&projectify(g), &projectify(gp))?;
    Ok(left == right)
}

/// Types of the arrangement restricted to the kernel of `gp`.
pub fn classify_restricted_arrangement(
    g: &ColouredGraph,
    gp: &ColouredGraph,
) -> Result<ArrangementReport> {
    classify_projective_components(&projectify(&quotient_graph(g, gp)?))
}

/// Hyperplanes of `projectify(quotient_graph(g, gp))`.
pub fn restricted_arrangement(
    g: &ColouredGraph,
    gp: &ColouredGraph,
) -> Result<BTreeSet<Hyperplane>> {
    arrangement_from_graph(&projectify(&quotient_graph(g, gp)?))
}

fn act(w: &SignedPermutation, h: &Hyperplane) -> Hyperplane {
    let mut image = vec![0i64; h.dim()];
    for (i, &x) in h.normal().iter().enumerate() {
        image[w.perm()[i]] = w.signs()[i] as i64 * x;
    }
    Hyperplane::new(&image).expect("signed permutations preserve hyperplane shapes")
}

/// Searches W(BC_n) for an element carrying one arrangement onto another.
/// Only offered for `n ≤ limit`.
pub fn arrangement_isomorphism(
    n: usize,
    a: &BTreeSet<Hyperplane>,
    b: &BTreeSet<Hyperplane>,
    limit: usize,
) -> Result<Option<SignedPermutation>> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "arrangement isomorphism search",
            n,
            limit,
        });
    }
    if a.len() != b.len() {
        return Ok(None);
    }
    Ok(SignedPermutation::all(n).find(|w| a.iter().all(|h| b.contains(&act(w, h)))))
}

/// The arrangement assembled from model components, in the report's node
/// labelling.
pub fn model_arrangement(report: &ArrangementReport) -> Result<BTreeSet<Hyperplane>> {
    arrangement_from_graph(&report.synthesize(Palette::Trichromatic))
}

/// Distinct lines spanned by the roots of a bichromatic graph: ±e_k and
/// ±2e_k share a line.
pub fn root_line_count(g: &ColouredGraph) -> usize {
    let straight: usize = (0..g.n())
        .flat_map(|i| (i + 1..g.n()).map(move |j| (i, j)))
        .map(|(i, j)| (g.straight_mask(i, j) & (RED | GREEN)).count_ones() as usize)
        .sum();
    straight + (0..g.n()).filter(|&k| g.loop_mask(k) != 0).count()
}

/// Tag check shared by the sweeps: exotic arrangement tags must have
/// `0 < r < r + s`, and nothing outside the classical list may appear.
pub fn allowed_restricted_tag(t: &ArrangementType) -> bool {
    match *t {
        ArrangementType::A(_) | ArrangementType::D(_) | ArrangementType::BorC(_) => true,
        ArrangementType::ExoticBD(r, s) => r > 0 && s > 0,
        ArrangementType::Bipartite(..) => false,
    }
}

impl ArrangementType {
    pub fn node_count(&self) -> usize {
        self.params().iter().sum()
    }
}
