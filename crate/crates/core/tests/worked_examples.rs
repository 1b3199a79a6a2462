//! Worked examples: small systems with known answers.

use std::collections::BTreeSet;

use crystallograph::arrange::{classify_restricted_arrangement, lift, projectify};
use crystallograph::crystal::{
    classify_components, is_crystallograph, is_projective_crystallograph, red_components,
    ArrangementType, ComponentType,
};
use crystallograph::graphs::{
    arrangement_from_graph, disjoint_union, graph_from_roots, roots_from_graph, Colour,
    ColouredEdge, ColouredGraph,
};
use crystallograph::models::*;
use crystallograph::quotient::{quotient_graph, restricted_system};
use crystallograph::rootsys::{
    a_system, bc_system, is_root_subsystem, reflect, weyl_equivalent, Root, RootSet,
    SignedPermutation,
};

fn root(c: &[i64]) -> Root {
    Root::new(c).unwrap()
}

#[test]
fn reflection_identities() {
    let n = 3;
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let minus = |a: usize, b: usize| Root::straight(n, a, b, 1, -1);
        let plus = |a: usize, b: usize| Root::straight(n, a, b, 1, 1);
        // σ^-_{ij}(e^-_{jk}) = e^-_{ik},  σ^+_{ij}(e^+_{jk}) = −e^-_{ik}
        assert_eq!(reflect(&minus(i, j), &minus(j, k)).unwrap(), minus(i, k));
        assert_eq!(reflect(&plus(i, j), &plus(j, k)).unwrap(), minus(i, k).neg());
        // σ_i(e^±_{ij}) = −e^∓_{ij}
        let e_i = Root::axis(n, i, 1);
        assert_eq!(reflect(&e_i, &plus(i, j)).unwrap(), minus(i, j).neg());
        assert_eq!(reflect(&e_i, &minus(i, j)).unwrap(), plus(i, j).neg());
        // σ_i(2e_i) = −2e_i
        assert_eq!(reflect(&e_i, &Root::axis(n, i, 2)).unwrap(), Root::axis(n, i, -2));
    }
}

/// `I_i = {i} ∪ {j : α^-_{ij} ∈ Φ}` read straight off the roots.
fn type_a_partition(phi: &RootSet) -> BTreeSet<Vec<usize>> {
    let n = phi.n();
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j == i || phi.contains(&Root::straight(n, i, j, 1, -1)))
                .collect()
        })
        .collect()
}

fn subsystems_of_a(n: usize) -> Vec<RootSet> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let roots = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &(i, j))| Root::straight(n, i, j, 1, -1));
            RootSet::from_pairs(n, roots).unwrap()
        })
        .filter(is_root_subsystem)
        .collect()
}

#[test]
fn type_a_partition_and_decomposition() {
    for n in 1..=5 {
        for phi in subsystems_of_a(n) {
            let parts = type_a_partition(&phi);
            // a partition of the nodes
            let flat: Vec<usize> = parts.iter().flatten().copied().collect();
            assert_eq!(flat.len(), n);
            assert_eq!(flat.iter().collect::<BTreeSet<_>>().len(), n);
            // Φ ≅ ⊕ A_{I_i}
            let mut sum = RootSet::new(n);
            for p in &parts {
                sum = sum.union(&a_system(n, p)).unwrap();
            }
            assert_eq!(sum, phi);
            // the graph is a disjoint union of complete red graphs on the I_i
            let g = graph_from_roots(&phi).unwrap();
            let reds: BTreeSet<Vec<usize>> = red_components(&g).unwrap().into_iter().collect();
            assert_eq!(reds, parts);
        }
    }
}

#[test]
fn type_a_quotients() {
    // A_{n-1} / Φ' ≅ A_{|J'|-1}, and the quotient of a type-A pair fuses
    // components exactly when the larger graph joins them.
    for n in 1..=5 {
        let systems = subsystems_of_a(n);
        for phi in &systems {
            let g = graph_from_roots(phi).unwrap();
            let j = type_a_partition(phi).len();
            assert_eq!(quotient_graph(&a_graph(n), &g).unwrap(), a_graph(j));
            for psi in systems.iter().filter(|psi| psi.is_subset(phi)) {
                let gp = graph_from_roots(psi).unwrap();
                let q = quotient_graph(&g, &gp).unwrap();
                let parts: Vec<Vec<usize>> = red_components(&gp).unwrap();
                for a in 0..parts.len() {
                    for b in a + 1..parts.len() {
                        let fused = parts[a]
                            .iter()
                            .any(|&x| parts[b].iter().any(|&y| g.straight_mask(x, y) != 0));
                        let expected = if fused { 1 } else { 0 };
                        assert_eq!(q.straight_mask(a, b), expected);
                    }
                }
                assert!(!q.has_loops());
            }
        }
    }
}

#[test]
fn classical_crystallographs() {
    for m in 1..=6 {
        let all: Vec<usize> = (0..m).collect();
        assert_eq!(roots_from_graph(&a_graph(m)).unwrap(), a_system(m, &all));
        assert_eq!(roots_from_graph(&bc_graph(m)).unwrap(), bc_system(m, &all));
        for g in [a_graph(m), d_graph(m), b_graph(m), c_graph(m), bc_graph(m)] {
            assert!(is_crystallograph(&g));
            assert_eq!(roots_from_graph(&g).unwrap().len(), 2 * g.edge_count());
        }
    }
    let b2 = roots_from_graph(&b_graph(2)).unwrap();
    assert_eq!(b2.len(), 8);
}

#[test]
fn main_correspondence_figures() {
    let mut g = ColouredGraph::bichromatic(2);
    g.add(ColouredEdge::looped(1, Colour::Green)).unwrap();
    let phi = roots_from_graph(&g).unwrap();
    assert_eq!(phi, RootSet::from_pairs(2, [root(&[0, 2])]).unwrap());
    let plus = RootSet::from_pairs(2, [root(&[1, 1])]).unwrap();
    let h = graph_from_roots(&plus).unwrap();
    assert_eq!(h.edges(), vec![ColouredEdge::straight(0, 1, Colour::Green)]);
}

#[test]
fn bipartite_equivalence() {
    let a1 = RootSet::from_pairs(2, [root(&[1, -1])]).unwrap();
    let g11 = RootSet::from_pairs(2, [root(&[1, 1])]).unwrap();
    let w = weyl_equivalent(&a1, &g11, 6).unwrap().unwrap();
    assert_eq!(crystallograph::rootsys::weyl_apply(&w, &a1).unwrap(), g11);
    // flipping one node of G^{3,4} gives G^{2,5}
    let g = bipartite_graph(3, 4);
    let flipped = g.apply_signed_permutation(&SignedPermutation::sign_flip(7, 0));
    assert_eq!(
        classify_components(&flipped).unwrap().kinds(),
        vec![ComponentType::Bipartite(2, 5)]
    );
}

#[test]
fn seven_hyperplanes() {
    let g = d_graph(4);
    let gp = g_rs(1, 2);
    let q = quotient_graph(&g, &gp).unwrap();
    assert_eq!(q.n(), 3);
    assert_eq!(q.edge_count(), 7);
    assert!(!is_crystallograph(&q));
    let r = restricted_system(&g, &gp).unwrap();
    assert_eq!(r.covectors.len(), 14);
    let h = arrangement_from_graph(&projectify(&q)).unwrap();
    assert_eq!(h.len(), 7);
}

#[test]
fn exotic_arrangement_only_exotic() {
    for r in 1..=2 {
        for s in 1..=2 {
            let report = classify_restricted_arrangement(&d_graph(2 * r + s), &g_rs(r, s)).unwrap();
            assert_eq!(report.kinds(), vec![ArrangementType::ExoticBD(r, s)]);
            let report = classify_restricted_arrangement(&b_graph(2 * r + s), &g_rs(r, s)).unwrap();
            assert_eq!(report.kinds(), vec![ArrangementType::BorC(r + s)]);
        }
    }
}

#[test]
fn projective_figures() {
    let hb4 = borc_graph(4);
    assert!(is_projective_crystallograph(&hb4));
    assert_eq!(arrangement_from_graph(&hb4).unwrap().len(), 16);
    assert_eq!(lift(&hb4).unwrap(), b_graph(4));
    let mut bad = ColouredGraph::trichromatic(2);
    bad.add(ColouredEdge::looped(0, Colour::Blue)).unwrap();
    bad.add(ColouredEdge::straight(0, 1, Colour::Red)).unwrap();
    assert!(!is_projective_crystallograph(&bad));
}

#[test]
fn union_g_rs() {
    let g = disjoint_union(&a_graph(2), &a_graph(2)).unwrap();
    assert_eq!(g, g_rs(2, 0));
    let reds = red_components(&g_rs(1, 1)).unwrap();
    assert_eq!(reds, vec![vec![0, 1], vec![2]]);
}
