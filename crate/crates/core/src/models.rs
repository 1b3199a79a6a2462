//! Model graphs of every component type, on nodes `0..m`.

use crate::graphs::{ColouredGraph, Palette, BLUE, GREEN, RED};

fn complete(m: usize, mask: u8, palette: Palette) -> ColouredGraph {
    let mut g = ColouredGraph::empty(m, palette);
    for i in 0..m {
        for j in i + 1..m {
            g.set_straight_mask(i, j, mask);
        }
    }
    g
}

/// Complete red simply-laced graph: `G^{A_{m-1}}`. `a_graph(1)` is an
/// isolated node.
pub fn a_graph(m: usize) -> ColouredGraph {
    complete(m, RED, Palette::Bichromatic)
}

/// Simply-laced complete bichromatic graph: `G^{D_m}`.
pub fn d_graph(m: usize) -> ColouredGraph {
    complete(m, RED | GREEN, Palette::Bichromatic)
}

fn with_loops(mut g: ColouredGraph, nodes: impl IntoIterator<Item = usize>, mask: u8) -> ColouredGraph {
    for k in nodes {
        let m = g.loop_mask(k);
        g.set_loop_mask(k, m | mask);
    }
    g
}

pub fn b_graph(m: usize) -> ColouredGraph {
    with_loops(d_graph(m), 0..m, RED)
}

pub fn c_graph(m: usize) -> ColouredGraph {
    with_loops(d_graph(m), 0..m, GREEN)
}

/// Complete bichromatic graph: both loops everywhere.
pub fn bc_graph(m: usize) -> ColouredGraph {
    with_loops(d_graph(m), 0..m, RED | GREEN)
}

/// `G^{d1,d2}`: red cliques on `0..d1` and `d1..d1+d2`, green edges across.
pub fn bipartite_graph(d1: usize, d2: usize) -> ColouredGraph {
    let m = d1 + d2;
    let mut g = ColouredGraph::bichromatic(m);
    for i in 0..m {
        for j in i + 1..m {
            let same = (i < d1) == (j < d1);
            g.set_straight_mask(i, j, if same { RED } else { GREEN });
        }
    }
    g
}

/// `G^{B_{r+s}C_r}`: type B on `r + s` nodes with green loops at the first `r`.
pub fn b_plus_c_graph(r: usize, s: usize) -> ColouredGraph {
    with_loops(b_graph(r + s), 0..r, GREEN)
}

/// `G^{C_rD_{r+s}}`: type D on `r + s` nodes with green loops at the first `r`.
pub fn c_plus_d_graph(r: usize, s: usize) -> ColouredGraph {
    with_loops(d_graph(r + s), 0..r, GREEN)
}

/// `G_{r,s}`: `r` disjoint red edges `{2a, 2a+1}` followed by `s` isolated
/// nodes, on `2r + s` nodes.
pub fn g_rs(r: usize, s: usize) -> ColouredGraph {
    let mut g = ColouredGraph::bichromatic(2 * r + s);
    for a in 0..r {
        g.set_straight_mask(2 * a, 2 * a + 1, RED);
    }
    g
}

/// Projective `G^{H_{B_m}}`: simply-laced complete bichromatic with blue
/// loops at every node.
pub fn borc_graph(m: usize) -> ColouredGraph {
    with_loops(complete(m, RED | GREEN, Palette::Trichromatic), 0..m, BLUE)
}

/// Projective `(B_r/C_r)D_{r+s}`: blue loops at the first `r` nodes.
pub fn exotic_bd_graph(r: usize, s: usize) -> ColouredGraph {
    with_loops(complete(r + s, RED | GREEN, Palette::Trichromatic), 0..r, BLUE)
}
