//! Kernels, orthogonal projections, quotient graphs and restricted systems.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::crystal::{
    bipartite_normalize, classify_components, is_crystallograph, ComponentReport, ComponentType,
    Generator, Tag, WeylWord,
};
use crate::error::{Error, Result};
use crate::graphs::{disjoint_union, roots_from_graph, ColouredGraph, Palette, BLUE, GREEN, RED};
use crate::models;
use crate::rational::{Rational, RationalMatrix, RationalVector};
use crate::rootsys::weyl_apply;

/// Basis `v_I = e_I / |I|` of the kernel, one vector per red component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub n: usize,
    pub parts: Vec<Vec<usize>>,
    pub vectors: Vec<RationalVector>,
}

fn reject_bipartite(report: &ComponentReport) -> Result<()> {
    if report
        .parts
        .iter()
        .any(|c| matches!(c.kind, ComponentType::Bipartite(..)))
    {
        Err(Error::BipartiteSubgraph)
    } else {
        Ok(())
    }
}

/// Red components of a crystallograph in classical normal form.
fn classical_red_parts(g: &ColouredGraph) -> Result<Vec<Vec<usize>>> {
    if !is_crystallograph(g) {
        return Err(Error::Precondition("graph is not a crystallograph".into()));
    }
    let report = classify_components(g)?;
    reject_bipartite(&report)?;
    Ok(report.red_parts())
}

fn part_vector(n: usize, part: &[usize]) -> RationalVector {
    let mut v = RationalVector::zeros(n);
    let w = Rational::new(1, part.len() as i64);
    for &i in part {
        v[i] = w;
    }
    v
}

pub fn kernel_basis(g: &ColouredGraph) -> Result<KernelBasis> {
    let parts = classical_red_parts(g)?;
    let vectors = parts.iter().map(|p| part_vector(g.n(), p)).collect();
    Ok(KernelBasis {
        n: g.n(),
        parts,
        vectors,
    })
}

/// `π_U`: `e_i ↦ v_{I_i}` for nodes of red components, `0` elsewhere.
pub fn orthogonal_projection(g: &ColouredGraph) -> Result<RationalMatrix> {
    let parts = classical_red_parts(g)?;
    Ok(projection_from_parts(g.n(), &parts))
}

pub(crate) fn projection_from_parts(n: usize, parts: &[Vec<usize>]) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    for part in parts {
        let w = Rational::new(1, part.len() as i64);
        for &i in part {
            for &j in part {
                m[(i, j)] = w;
            }
        }
    }
    m
}

/// Checks the shared preconditions of the quotient operations and returns
/// the red components of `gp`.
fn nested_pair(g: &ColouredGraph, gp: &ColouredGraph) -> Result<Vec<Vec<usize>>> {
    if g.n() != gp.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: gp.n(),
        });
    }
    if g.palette() != Palette::Bichromatic || gp.palette() != Palette::Bichromatic {
        return Err(Error::Palette("quotients need bichromatic graphs".into()));
    }
    if !is_crystallograph(g) {
        return Err(Error::Precondition("g is not a crystallograph".into()));
    }
    if !is_crystallograph(gp) {
        return Err(Error::Precondition("gp is not a crystallograph".into()));
    }
    if !gp.is_subgraph_of(g) {
        return Err(Error::NotNested);
    }
    let report = classify_components(gp)?;
    reject_bipartite(&report)?;
    Ok(report.red_parts())
}

/// The quotient rules on the masks of `g ∖ gp`. `loop_colour` replaces every
/// loop colour when set (projective quotients).
pub(crate) fn quotient_masks(
    g: &ColouredGraph,
    gp: &ColouredGraph,
    parts: &[Vec<usize>],
    palette: Palette,
    loop_colour: Option<u8>,
) -> ColouredGraph {
    let n = g.n();
    let mut part_of = vec![None; n];
    for (a, p) in parts.iter().enumerate() {
        for &i in p {
            part_of[i] = Some(a);
        }
    }
    let paint = |c: u8| loop_colour.unwrap_or(c);
    let mut q = ColouredGraph::empty(parts.len(), palette);
    let add_loop = |q: &mut ColouredGraph, a: usize, c: u8| {
        let m = q.loop_mask(a);
        q.set_loop_mask(a, m | c);
    };
    for i in 0..n {
        let extra = g.loop_mask(i) & !gp.loop_mask(i);
        if let (Some(a), true) = (part_of[i], extra != 0) {
            for c in [RED, GREEN, BLUE] {
                if extra & c != 0 {
                    add_loop(&mut q, a, paint(c));
                }
            }
        }
        for j in i + 1..n {
            let extra = g.straight_mask(i, j) & !gp.straight_mask(i, j);
            if extra == 0 {
                continue;
            }
            match (part_of[i], part_of[j]) {
                (Some(a), Some(b)) if a != b => {
                    let m = q.straight_mask(a, b);
                    q.set_straight_mask(a, b, m | extra);
                }
                // The red edge inside a red part already lies in gp.
                (Some(a), Some(_)) => {
                    if extra & GREEN != 0 {
                        add_loop(&mut q, a, paint(GREEN));
                    }
                }
                (Some(a), None) | (None, Some(a)) => add_loop(&mut q, a, paint(RED)),
                (None, None) => {}
            }
        }
    }
    q
}

/// `G/G'`: a graph on the red components of `gp`, ordered by smallest node.
pub fn quotient_graph(g: &ColouredGraph, gp: &ColouredGraph) -> Result<ColouredGraph> {
    let parts = nested_pair(g, gp)?;
    Ok(quotient_masks(g, gp, &parts, Palette::Bichromatic, None))
}

/// Nonzero restrictions of `Φ^g ∖ Φ^{gp}` to the kernel of `Φ^{gp}`, in
/// the dual basis of `(e_{I_k})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedSystem {
    pub dimension: usize,
    pub covectors: BTreeSet<Vec<i64>>,
}

/// Evaluates every root of `g ∖ gp` on the vectors `e_{I_k}`. No graph
/// rules are involved.
pub fn restricted_system(g: &ColouredGraph, gp: &ColouredGraph) -> Result<RestrictedSystem> {
    let parts = nested_pair(g, gp)?;
    let indicators: Vec<Vec<i64>> = parts
        .iter()
        .map(|p| {
            let mut v = vec![0; g.n()];
            for &i in p {
                v[i] = 1;
            }
            v
        })
        .collect();
    let rest = roots_from_graph(g)?.difference(&roots_from_graph(gp)?);
    let covectors = rest
        .iter()
        .map(|alpha| indicators.iter().map(|e| alpha.eval(e)).collect::<Vec<i64>>())
        .filter(|c| c.iter().any(|&x| x != 0))
        .collect();
    Ok(RestrictedSystem {
        dimension: parts.len(),
        covectors,
    })
}

/// `Φ^{G/G'} = Φ^G|_U`, comparing the graph rules with the evaluation.
pub fn verify_quotient_theorem(g: &ColouredGraph, gp: &ColouredGraph) -> Result<bool> {
    let q = quotient_graph(g, gp)?;
    let restricted = restricted_system(g, gp)?;
    let from_graph: BTreeSet<Vec<i64>> = roots_from_graph(&q)?.iter().map(|r| r.to_vec()).collect();
    Ok(q.n() == restricted.dimension && from_graph == restricted.covectors)
}

/// Moves a nested pair into classical normal form: first the bipartite
/// components of `gp`, then those of `g`, are flipped by one sign-flip word
/// applied to both graphs. The second step fixes the already classical `gp`.
pub fn normalize_pair(
    g: &ColouredGraph,
    gp: &ColouredGraph,
) -> Result<(ColouredGraph, ColouredGraph, WeylWord)> {
    if !gp.is_subgraph_of(g) || g.n() != gp.n() {
        return Err(Error::NotNested);
    }
    let apply = |w: &WeylWord, h: &ColouredGraph| h.apply_signed_permutation(w.product());
    let (gp1, w1) = bipartite_normalize(gp)?;
    let g1 = apply(&w1, g);
    let (g2, w2) = bipartite_normalize(&g1)?;
    let gp2 = apply(&w2, &gp1);
    if gp2 != gp1 {
        return Err(Error::Inconsistency("normalizing g moved a classical gp".into()));
    }
    let mut word: Vec<Generator> = w2.word().to_vec();
    word.extend_from_slice(w1.word());
    let w = WeylWord::new(g.n(), word);
    debug_assert_eq!(roots_from_graph(&g2).ok(), weyl_apply(w.product(), &roots_from_graph(g)?).ok());
    Ok((g2, gp2, w))
}

/// A nested pair `(G, G')` whose quotient, relabelled by `order`, is the
/// given quasi-crystallograph: `quotient(G, G').induced(&order) == q`.
#[derive(Debug, Clone)]
pub struct QuasiRealization {
    pub g: ColouredGraph,
    pub gp: ColouredGraph,
    pub order: Vec<usize>,
}

/// Realizes a quasi-crystallograph as a quotient: each exotic component
/// comes from a `G_{r,s}` quotient, every other component from itself.
pub fn realize_quasi(q: &ColouredGraph) -> Result<QuasiRealization> {
    let report = classify_components(q)?;
    let mut big = ColouredGraph::bichromatic(0);
    let mut sub = ColouredGraph::bichromatic(0);
    // position of each quotient node, in report order
    let mut position = vec![0usize; q.n()];
    let mut next = 0;
    for c in &report.parts {
        let (g, gp) = match c.kind {
            ComponentType::BplusC(r, s) => (models::b_graph(2 * r + s), models::g_rs(r, s)),
            ComponentType::CplusD(r, s) => (models::d_graph(2 * r + s), models::g_rs(r, s)),
            kind => {
                let model = kind.model();
                let empty = ColouredGraph::bichromatic(model.n());
                (model, empty)
            }
        };
        big = disjoint_union(&big, &g)?;
        sub = disjoint_union(&sub, &gp)?;
        for &v in &c.nodes {
            position[v] = next;
            next += 1;
        }
    }
    Ok(QuasiRealization {
        g: big,
        gp: sub,
        order: position,
    })
}

/// `true` when `π` is idempotent and symmetric, fixes every basis vector and
/// has its image killed by every given root.
pub fn projection_is_consistent(
    pi: &RationalMatrix,
    basis: &KernelBasis,
    roots: &crate::rootsys::RootSet,
) -> bool {
    if pi.mul(pi) != *pi || pi.transpose() != *pi {
        return false;
    }
    if basis.vectors.iter().any(|v| pi.apply(v) != *v) {
        return false;
    }
    (0..pi.cols()).all(|j| {
        let image = pi.column(j);
        roots.iter().all(|r| r.to_rational().dot(&image).is_zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::is_quasi_crystallograph;
    use crate::graphs::{ColouredEdge, Colour};
    use crate::models::*;

    fn red_edge_12(n: usize) -> ColouredGraph {
        let mut g = ColouredGraph::bichromatic(n);
        g.add(ColouredEdge::straight(0, 1, Colour::Red)).unwrap();
        g
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&a_graph(4)).unwrap();
        assert_eq!(k.parts, vec![vec![0, 1, 2, 3]]);
        assert_eq!(k.vectors[0], RationalVector::from(vec![q(1, 4); 4]));
        let k = kernel_basis(&ColouredGraph::bichromatic(3)).unwrap();
        assert_eq!(k.vectors, (0..3).map(|i| RationalVector::unit(3, i)).collect::<Vec<_>>());
        assert!(kernel_basis(&bc_graph(3)).unwrap().vectors.is_empty());
        assert!(matches!(kernel_basis(&bipartite_graph(1, 2)), Err(Error::BipartiteSubgraph)));
    }

    #[test]
    fn projection_examples() {
        let p = orthogonal_projection(&a_graph(2)).unwrap();
        assert!((0..2).all(|i| (0..2).all(|j| p[(i, j)] == q(1, 2))));
        assert_eq!(orthogonal_projection(&ColouredGraph::bichromatic(3)).unwrap(), RationalMatrix::identity(3));
        assert_eq!(orthogonal_projection(&b_graph(2)).unwrap(), RationalMatrix::zeros(2, 2));
    }

    #[test]
    fn seven_edge_example() {
        let g = d_graph(4);
        let gp = red_edge_12(4);
        let quot = quotient_graph(&g, &gp).unwrap();
        assert_eq!(quot, c_plus_d_graph(1, 2));
        assert_eq!(quot.edge_count(), 7);
        assert!(is_quasi_crystallograph(&quot));
        let r = restricted_system(&g, &gp).unwrap();
        assert_eq!(r.dimension, 3);
        assert_eq!(r.covectors.len(), 14);
        assert!(r.covectors.contains(&vec![2, 0, 0]));
        assert!(verify_quotient_theorem(&g, &gp).unwrap());
    }

    #[test]
    fn g_rs_quotients() {
        for r in 0..=2 {
            for s in 0..=2 {
                let gp = g_rs(r, s);
                let qb = quotient_graph(&b_graph(2 * r + s), &gp).unwrap();
                assert_eq!(qb, b_plus_c_graph(r, s), "B r={r} s={s}");
                let qd = quotient_graph(&d_graph(2 * r + s), &gp).unwrap();
                assert_eq!(qd, c_plus_d_graph(r, s), "D r={r} s={s}");
                assert!(verify_quotient_theorem(&d_graph(2 * r + s), &gp).unwrap());
            }
        }
    }

    #[test]
    fn trivial_quotients() {
        let g = disjoint_union(&a_graph(2), &b_graph(2)).unwrap();
        let empty = ColouredGraph::bichromatic(4);
        assert_eq!(quotient_graph(&g, &empty).unwrap(), g);
        let r = restricted_system(&g, &empty).unwrap();
        let roots: BTreeSet<Vec<i64>> = roots_from_graph(&g).unwrap().iter().map(|r| r.to_vec()).collect();
        assert_eq!(r.covectors, roots);
        let self_q = quotient_graph(&g, &g).unwrap();
        assert_eq!(self_q, ColouredGraph::bichromatic(1));
        assert!(verify_quotient_theorem(&g, &g).unwrap());
        let r = restricted_system(&b_graph(2), &d_graph(2)).unwrap();
        assert_eq!(r.dimension, 0);
        assert!(r.covectors.is_empty());
    }

    #[test]
    fn type_a_quotients_stay_red() {
        let g = a_graph(5);
        let mut gp = red_edge_12(5);
        gp.add(ColouredEdge::straight(2, 3, Colour::Red)).unwrap();
        assert_eq!(quotient_graph(&g, &gp).unwrap(), a_graph(3));
    }

    #[test]
    fn pair_preconditions() {
        let g = a_graph(3);
        assert!(matches!(quotient_graph(&red_edge_12(3), &g), Err(Error::NotNested)));
        let mut path = red_edge_12(3);
        path.add(ColouredEdge::straight(1, 2, Colour::Red)).unwrap();
        assert!(matches!(quotient_graph(&d_graph(3), &path), Err(Error::Precondition(_))));
        let bip = bipartite_graph(1, 1);
        assert!(matches!(quotient_graph(&d_graph(2), &bip), Err(Error::BipartiteSubgraph)));
    }

    #[test]
    fn normalize_pair_flips_both() {
        let g = d_graph(2);
        let gp = bipartite_graph(1, 1);
        let (g2, gp2, w) = normalize_pair(&g, &gp).unwrap();
        assert_eq!(g2, d_graph(2));
        assert_eq!(gp2, a_graph(2));
        assert_eq!(w.word(), &[Generator::Flip(0)]);
        let (g3, gp3, _) = normalize_pair(&bipartite_graph(2, 2), &ColouredGraph::bichromatic(4)).unwrap();
        assert_eq!(g3, a_graph(4));
        assert_eq!(gp3, ColouredGraph::bichromatic(4));
    }

    #[test]
    fn realizations_reproduce_quasi_graphs() {
        for q in [c_plus_d_graph(2, 1), b_plus_c_graph(1, 1), disjoint_union(&c_plus_d_graph(1, 1), &a_graph(2)).unwrap()] {
            let r = realize_quasi(&q).unwrap();
            let quot = quotient_graph(&r.g, &r.gp).unwrap();
            assert_eq!(quot.induced(&r.order), q);
        }
    }
}
