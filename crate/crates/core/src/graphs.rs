//! Bichromatic and trichromatic coloured graphs and their two
//! correspondences: with symmetric subsets of BC_n, and with
//! sub-arrangements of the B/C hyperplane arrangement.
//!
//! A graph on `n` nodes stores, for every endpoint set (a node pair or a
//! single node), the set of colours present as a bitmask. At most one edge
//! of each colour per endpoint set is therefore built in.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSet, SignedPermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Palette {
    Bichromatic,
    Trichromatic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    Red,
    Green,
    Blue,
}

pub const RED: u8 = 1;
pub const GREEN: u8 = 2;
pub const BLUE: u8 = 4;

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::Red, Colour::Green, Colour::Blue];

    pub fn bit(self) -> u8 {
        match self {
            Colour::Red => RED,
            Colour::Green => GREEN,
            Colour::Blue => BLUE,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Colour::Red => "R",
            Colour::Green => "G",
            Colour::Blue => "B",
        }
    }

    pub fn from_label(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(Colour::Red),
            "G" => Ok(Colour::Green),
            "B" => Ok(Colour::Blue),
            _ => Err(Error::Parse(format!("unknown colour {s:?}"))),
        }
    }

    /// Colours in the order of their labels, which is the serialization
    /// order: B < G < R.
    fn rank(self) -> u8 {
        match self {
            Colour::Blue => 0,
            Colour::Green => 1,
            Colour::Red => 2,
        }
    }

    pub fn swapped(self) -> Colour {
        match self {
            Colour::Red => Colour::Green,
            Colour::Green => Colour::Red,
            Colour::Blue => Colour::Blue,
        }
    }
}

/// Nodes are 0-based here; serialized forms add one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColouredEdge {
    Straight { i: usize, j: usize, colour: Colour },
    Loop { k: usize, colour: Colour },
}

impl ColouredEdge {
    pub fn straight(i: usize, j: usize, colour: Colour) -> Self {
        ColouredEdge::Straight {
            i: i.min(j),
            j: i.max(j),
            colour,
        }
    }

    pub fn looped(k: usize, colour: Colour) -> Self {
        ColouredEdge::Loop { k, colour }
    }

    pub fn colour(&self) -> Colour {
        match *self {
            ColouredEdge::Straight { colour, .. } | ColouredEdge::Loop { colour, .. } => colour,
        }
    }

    /// Serialization key: `(kind, i, j or k, colour)` compared as the JSON
    /// field values, so `"loop"` sorts before `"straight"`.
    fn key(&self) -> (u8, usize, usize, u8) {
        match *self {
            ColouredEdge::Loop { k, colour } => (0, k, 0, colour.rank()),
            ColouredEdge::Straight { i, j, colour } => (1, i.min(j), i.max(j), colour.rank()),
        }
    }
}

impl Ord for ColouredEdge {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for ColouredEdge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColouredGraph {
    n: usize,
    palette: Palette,
    /// `n × n`, symmetric, zero diagonal.
    straight: Vec<u8>,
    loops: Vec<u8>,
}

impl ColouredGraph {
    pub fn empty(n: usize, palette: Palette) -> Self {
        Self {
            n,
            palette,
            straight: vec![0; n * n],
            loops: vec![0; n],
        }
    }

    pub fn bichromatic(n: usize) -> Self {
        Self::empty(n, Palette::Bichromatic)
    }

    pub fn trichromatic(n: usize) -> Self {
        Self::empty(n, Palette::Trichromatic)
    }

    pub fn from_edges(
        n: usize,
        palette: Palette,
        edges: impl IntoIterator<Item = ColouredEdge>,
    ) -> Result<Self> {
        let mut g = Self::empty(n, palette);
        for e in edges {
            g.add(e)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn palette(&self) -> Palette {
        self.palette
    }

    fn check_node(&self, node: usize) -> Result<()> {
        if node >= self.n {
            Err(Error::NodeOutOfRange { node, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Inserts an edge; returns whether it was new.
    pub fn add(&mut self, edge: ColouredEdge) -> Result<bool> {
        match edge {
            ColouredEdge::Straight { i, j, colour } => {
                self.check_node(i)?;
                self.check_node(j)?;
                if i == j {
                    return Err(Error::DegenerateEdge(i));
                }
                if colour == Colour::Blue {
                    return Err(Error::Palette("blue straight edges are not allowed".into()));
                }
                let had = self.straight[i * self.n + j] & colour.bit() != 0;
                self.straight[i * self.n + j] |= colour.bit();
                self.straight[j * self.n + i] |= colour.bit();
                Ok(!had)
            }
            ColouredEdge::Loop { k, colour } => {
                self.check_node(k)?;
                if colour == Colour::Blue && self.palette == Palette::Bichromatic {
                    return Err(Error::Palette(
                        "blue loops need a trichromatic graph".into(),
                    ));
                }
                let had = self.loops[k] & colour.bit() != 0;
                self.loops[k] |= colour.bit();
                Ok(!had)
            }
        }
    }

    pub fn remove(&mut self, edge: ColouredEdge) -> bool {
        match edge {
            ColouredEdge::Straight { i, j, colour } => {
                let had = self.straight_mask(i, j) & colour.bit() != 0;
                self.straight[i * self.n + j] &= !colour.bit();
                self.straight[j * self.n + i] &= !colour.bit();
                had
            }
            ColouredEdge::Loop { k, colour } => {
                let had = self.loops[k] & colour.bit() != 0;
                self.loops[k] &= !colour.bit();
                had
            }
        }
    }

    pub fn contains(&self, edge: &ColouredEdge) -> bool {
        match *edge {
            ColouredEdge::Straight { i, j, colour } => {
                i < self.n && j < self.n && self.straight_mask(i, j) & colour.bit() != 0
            }
            ColouredEdge::Loop { k, colour } => k < self.n && self.loops[k] & colour.bit() != 0,
        }
    }

    /// Colours of straight edges between `i` and `j`.
    #[inline]
    pub fn straight_mask(&self, i: usize, j: usize) -> u8 {
        self.straight[i * self.n + j]
    }

    /// Colours of loops at `k`.
    #[inline]
    pub fn loop_mask(&self, k: usize) -> u8 {
        self.loops[k]
    }

    pub(crate) fn set_straight_mask(&mut self, i: usize, j: usize, mask: u8) {
        debug_assert!(i != j);
        self.straight[i * self.n + j] = mask;
        self.straight[j * self.n + i] = mask;
    }

    pub(crate) fn set_loop_mask(&mut self, k: usize, mask: u8) {
        self.loops[k] = mask;
    }

    pub(crate) fn with_palette(mut self, palette: Palette) -> Self {
        self.palette = palette;
        self
    }

    pub fn edge_count(&self) -> usize {
        let straight: u32 = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.straight_mask(i, j).count_ones())
            .sum();
        let loops: u32 = self.loops.iter().map(|m| m.count_ones()).sum();
        (straight + loops) as usize
    }

    pub fn has_loops(&self) -> bool {
        self.loops.iter().any(|&m| m != 0)
    }

    /// All edges in serialization order.
    pub fn edges(&self) -> Vec<ColouredEdge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for k in 0..self.n {
            for c in Colour::ALL {
                if self.loops[k] & c.bit() != 0 {
                    out.push(ColouredEdge::Loop { k, colour: c });
                }
            }
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                for c in Colour::ALL {
                    if self.straight_mask(i, j) & c.bit() != 0 {
                        out.push(ColouredEdge::Straight { i, j, colour: c });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Edge-set inclusion on the same node set; palettes must agree.
    pub fn is_subgraph_of(&self, other: &ColouredGraph) -> bool {
        self.n == other.n
            && self.palette == other.palette
            && self.straight.iter().zip(&other.straight).all(|(a, b)| a & !b == 0)
            && self.loops.iter().zip(&other.loops).all(|(a, b)| a & !b == 0)
    }

    /// Subgraph induced on `nodes`, relabelled `0..nodes.len()` in the given
    /// order.
    pub fn induced(&self, nodes: &[usize]) -> ColouredGraph {
        let mut g = Self::empty(nodes.len(), self.palette);
        for (a, &i) in nodes.iter().enumerate() {
            g.loops[a] = self.loops[i];
            for (b, &j) in nodes.iter().enumerate() {
                if a != b {
                    g.straight[a * g.n + b] = self.straight_mask(i, j);
                }
            }
        }
        g
    }

    /// Number of bit slots in the enumeration encoding of bichromatic
    /// graphs: two per node pair, two per node.
    pub fn slot_count(n: usize) -> usize {
        n * (n + 1)
    }

    /// Decodes a bichromatic graph from its slot bitmask. Pairs `(i, j)`
    /// come first in lexicographic order with red then green bits, followed
    /// by red/green loop bits per node.
    pub fn from_bits(n: usize, bits: u64) -> ColouredGraph {
        assert!(Self::slot_count(n) <= 64, "bit encoding supports n ≤ 7");
        let mut g = Self::bichromatic(n);
        let mut pos = 0;
        for i in 0..n {
            for j in i + 1..n {
                let mask = ((bits >> pos) & 3) as u8;
                g.set_straight_mask(i, j, mask);
                pos += 2;
            }
        }
        for k in 0..n {
            g.loops[k] = ((bits >> pos) & 3) as u8;
            pos += 2;
        }
        g
    }

    pub fn to_bits(&self) -> u64 {
        assert!(Self::slot_count(self.n) <= 64, "bit encoding supports n ≤ 7");
        let mut bits = 0u64;
        let mut pos = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                bits |= ((self.straight_mask(i, j) & 3) as u64) << pos;
                pos += 2;
            }
        }
        for k in 0..self.n {
            bits |= ((self.loops[k] & 3) as u64) << pos;
            pos += 2;
        }
        bits
    }

    /// The Weyl group action read on graphs: nodes move by the permutation,
    /// and a straight edge swaps red/green once for each sign-flipped
    /// endpoint. Loops keep their colour.
    pub fn apply_signed_permutation(&self, w: &SignedPermutation) -> ColouredGraph {
        assert_eq!(w.n(), self.n, "signed permutation degree mismatch");
        let (perm, signs) = (w.perm(), w.signs());
        let mut g = Self::empty(self.n, self.palette);
        for i in 0..self.n {
            g.loops[perm[i]] = self.loops[i];
            for j in i + 1..self.n {
                let mut mask = self.straight_mask(i, j);
                if signs[i] != signs[j] {
                    mask = swap_red_green(mask);
                }
                g.set_straight_mask(perm[i], perm[j], mask);
            }
        }
        g
    }
}

pub(crate) fn swap_red_green(mask: u8) -> u8 {
    ((mask & RED) << 1) | ((mask & GREEN) >> 1) | (mask & BLUE)
}

impl fmt::Debug for ColouredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::graph_to_json(self))
    }
}

/// `Φ^G`: red straight ↦ ±(e_i − e_j), green straight ↦ ±(e_i + e_j),
/// red loop ↦ ±e_k, green loop ↦ ±2e_k.
pub fn roots_from_graph(g: &ColouredGraph) -> Result<RootSet> {
    if g.palette != Palette::Bichromatic {
        return Err(Error::Palette("root correspondence needs a bichromatic graph".into()));
    }
    let n = g.n;
    let mut roots = Vec::with_capacity(2 * g.edge_count());
    for e in g.edges() {
        let r = match e {
            ColouredEdge::Straight { i, j, colour: Colour::Red } => Root::straight(n, i, j, 1, -1),
            ColouredEdge::Straight { i, j, .. } => Root::straight(n, i, j, 1, 1),
            ColouredEdge::Loop { k, colour: Colour::Red } => Root::axis(n, k, 1),
            ColouredEdge::Loop { k, .. } => Root::axis(n, k, 2),
        };
        roots.push(r);
    }
    RootSet::from_pairs(n, roots)
}

/// Inverse of [`roots_from_graph`] on symmetric subsets.
pub fn graph_from_roots(phi: &RootSet) -> Result<ColouredGraph> {
    let mut g = ColouredGraph::bichromatic(phi.n());
    for r in phi.iter() {
        if !phi.contains(&r.neg()) {
            return Err(Error::NotSymmetric(format!("{r:?}")));
        }
        let c = r.coords();
        let edge = match *r.support().as_slice() {
            [i, j] => {
                let colour = if c[i] == c[j] { Colour::Green } else { Colour::Red };
                ColouredEdge::straight(i, j, colour)
            }
            [k] => {
                let colour = if c[k].abs() == 1 { Colour::Red } else { Colour::Green };
                ColouredEdge::looped(k, colour)
            }
            _ => return Err(Error::NotARoot(r.to_vec())),
        };
        g.add(edge)?;
    }
    Ok(g)
}

/// A hyperplane of the BC_n arrangement, stored by its canonical normal:
/// primitive, first nonzero entry positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<i64>,
}

impl Hyperplane {
    /// Normalizes any nonzero multiple of `e_i ± e_j` or `e_i`.
    pub fn new(normal: &[i64]) -> Result<Self> {
        let content = normal.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if content == 0 {
            return Err(Error::NotAHyperplane(normal.to_vec()));
        }
        let first = normal.iter().copied().find(|&x| x != 0).unwrap();
        let scale = if first < 0 { -content } else { content };
        let normal: Vec<i64> = normal.iter().map(|&x| x / scale).collect();
        let nonzero: Vec<i64> = normal.iter().copied().filter(|&x| x != 0).collect();
        match nonzero.as_slice() {
            [1] | [1, 1] | [1, -1] => Ok(Self { normal }),
            _ => Err(Error::NotAHyperplane(normal)),
        }
    }

    pub fn from_root(root: &Root) -> Self {
        Self::new(&root.to_vec()).expect("every root spans a hyperplane of the arrangement")
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }
}

impl fmt::Debug for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{:?}", self.normal)
    }
}

/// Hyperplanes encoded by a trichromatic graph whose loops are all blue.
pub fn arrangement_from_graph(g: &ColouredGraph) -> Result<BTreeSet<Hyperplane>> {
    if g.palette != Palette::Trichromatic {
        return Err(Error::Palette("arrangements are read from trichromatic graphs".into()));
    }
    let n = g.n;
    let mut out = BTreeSet::new();
    for e in g.edges() {
        let mut normal = vec![0i64; n];
        match e {
            ColouredEdge::Straight { i, j, colour } => {
                normal[i] = 1;
                normal[j] = if colour == Colour::Red { -1 } else { 1 };
            }
            ColouredEdge::Loop { k, colour: Colour::Blue } => normal[k] = 1,
            ColouredEdge::Loop { k, colour } => {
                return Err(Error::Palette(format!(
                    "loop at node {} is {}, expected blue",
                    k + 1,
                    colour.label()
                )))
            }
        }
        out.insert(Hyperplane { normal });
    }
    Ok(out)
}

pub fn graph_from_arrangement(n: usize, h: &BTreeSet<Hyperplane>) -> Result<ColouredGraph> {
    let mut g = ColouredGraph::trichromatic(n);
    for hp in h {
        if hp.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: hp.dim(),
            });
        }
        let support: Vec<usize> = (0..n).filter(|&i| hp.normal[i] != 0).collect();
        let edge = match *support.as_slice() {
            [k] => ColouredEdge::looped(k, Colour::Blue),
            [i, j] => {
                let colour = if hp.normal[j] < 0 { Colour::Red } else { Colour::Green };
                ColouredEdge::straight(i, j, colour)
            }
            _ => return Err(Error::NotAHyperplane(hp.normal.clone())),
        };
        g.add(edge)?;
    }
    Ok(g)
}

/// Nodes of `g2` are shifted past those of `g1`.
pub fn disjoint_union(g1: &ColouredGraph, g2: &ColouredGraph) -> Result<ColouredGraph> {
    if g1.palette != g2.palette {
        return Err(Error::Palette("disjoint union of graphs with different palettes".into()));
    }
    let n = g1.n + g2.n;
    let mut g = ColouredGraph::empty(n, g1.palette);
    for (src, offset) in [(g1, 0), (g2, g1.n)] {
        for k in 0..src.n {
            g.loops[k + offset] = src.loops[k];
            for l in k + 1..src.n {
                g.set_straight_mask(k + offset, l + offset, src.straight_mask(k, l));
            }
        }
    }
    Ok(g)
}

/// Connected components by straight edges, colours ignored; each part
/// sorted, parts ordered by smallest node.
pub fn connected_components(g: &ColouredGraph) -> Vec<Vec<usize>> {
    let n = g.n;
    let mut label = vec![usize::MAX; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut part = vec![start];
        label[start] = id;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in (0..n).filter(|&u| u != v) {
                if label[u] == usize::MAX && g.straight_mask(v, u) != 0 {
                    label[u] = id;
                    part.push(u);
                    stack.push(u);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use crate::rootsys::{a_system, b_system};
    use proptest::prelude::*;

    fn root(c: &[i64]) -> Root {
        Root::new(c).unwrap()
    }

    #[test]
    fn complete_red_graph_gives_type_a() {
        let g = models::a_graph(4);
        let phi = roots_from_graph(&g).unwrap();
        assert_eq!(phi.len(), 12);
        assert_eq!(phi, a_system(4, &[0, 1, 2, 3]));
    }

    #[test]
    fn empty_graph_gives_no_roots() {
        assert!(roots_from_graph(&ColouredGraph::bichromatic(3)).unwrap().is_empty());
        let empty = graph_from_roots(&RootSet::new(3)).unwrap();
        assert_eq!(empty, ColouredGraph::bichromatic(3));
    }

    #[test]
    fn green_loop_is_long_root() {
        let mut g = ColouredGraph::bichromatic(2);
        g.add(ColouredEdge::looped(1, Colour::Green)).unwrap();
        let phi = roots_from_graph(&g).unwrap();
        assert_eq!(phi, RootSet::from_pairs(2, [root(&[0, 2])]).unwrap());
    }

    #[test]
    fn b2_graph_from_roots() {
        let g = graph_from_roots(&b_system(2, &[0, 1])).unwrap();
        let expected = ColouredGraph::from_edges(
            2,
            Palette::Bichromatic,
            [
                ColouredEdge::straight(0, 1, Colour::Red),
                ColouredEdge::straight(0, 1, Colour::Green),
                ColouredEdge::looped(0, Colour::Red),
                ColouredEdge::looped(1, Colour::Red),
            ],
        )
        .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn green_straight_edge_from_roots() {
        let g = graph_from_roots(&RootSet::from_pairs(2, [root(&[1, 1])]).unwrap()).unwrap();
        assert_eq!(g.edges(), vec![ColouredEdge::straight(0, 1, Colour::Green)]);
    }

    #[test]
    fn graph_from_roots_rejects_asymmetric_sets() {
        let phi = RootSet::from_roots(2, [root(&[1, 0])]).unwrap();
        assert!(matches!(graph_from_roots(&phi), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn palette_rules() {
        let mut bi = ColouredGraph::bichromatic(2);
        assert!(bi.add(ColouredEdge::looped(0, Colour::Blue)).is_err());
        let mut tri = ColouredGraph::trichromatic(2);
        assert!(tri.add(ColouredEdge::straight(0, 1, Colour::Blue)).is_err());
        assert!(tri.add(ColouredEdge::looped(0, Colour::Blue)).unwrap());
        assert!(!tri.add(ColouredEdge::looped(0, Colour::Blue)).unwrap());
        assert!(bi.add(ColouredEdge::straight(0, 0, Colour::Red)).is_err());
        assert!(bi.add(ColouredEdge::straight(0, 2, Colour::Red)).is_err());
        assert!(roots_from_graph(&tri).is_err());
    }

    #[test]
    fn b4_arrangement_has_sixteen_hyperplanes() {
        let g = models::borc_graph(4);
        let h = arrangement_from_graph(&g).unwrap();
        assert_eq!(h.len(), 16);
        assert_eq!(graph_from_arrangement(4, &h).unwrap(), g);
    }

    #[test]
    fn arrangement_small_cases() {
        assert!(arrangement_from_graph(&ColouredGraph::trichromatic(2)).unwrap().is_empty());
        let mut g = ColouredGraph::trichromatic(1);
        g.add(ColouredEdge::looped(0, Colour::Blue)).unwrap();
        let h = arrangement_from_graph(&g).unwrap();
        assert_eq!(h.into_iter().collect::<Vec<_>>(), vec![Hyperplane::new(&[1]).unwrap()]);
        let mut bad = ColouredGraph::trichromatic(1);
        bad.add(ColouredEdge::looped(0, Colour::Red)).unwrap();
        assert!(arrangement_from_graph(&bad).is_err());
        assert!(arrangement_from_graph(&ColouredGraph::bichromatic(1)).is_err());
    }

    #[test]
    fn graph_from_arrangement_examples() {
        let h: BTreeSet<Hyperplane> = [[1, -1, 0], [1, 1, 0], [1, 0, 0]]
            .iter()
            .map(|v| Hyperplane::new(v).unwrap())
            .collect();
        let g = graph_from_arrangement(3, &h).unwrap();
        assert_eq!(
            g.edges(),
            vec![
                ColouredEdge::looped(0, Colour::Blue),
                ColouredEdge::straight(0, 1, Colour::Green),
                ColouredEdge::straight(0, 1, Colour::Red),
            ]
        );
        assert_eq!(graph_from_arrangement(3, &BTreeSet::new()).unwrap(), ColouredGraph::trichromatic(3));
        let a2: BTreeSet<Hyperplane> = [[1, -1, 0], [1, 0, -1], [0, 1, -1]]
            .iter()
            .map(|v| Hyperplane::new(v).unwrap())
            .collect();
        let g = graph_from_arrangement(3, &a2).unwrap();
        assert_eq!(g, models::a_graph(3).with_palette(Palette::Trichromatic));
    }

    #[test]
    fn hyperplane_normalization() {
        assert_eq!(Hyperplane::new(&[0, -2]).unwrap(), Hyperplane::new(&[0, 1]).unwrap());
        assert_eq!(Hyperplane::new(&[-1, 1]).unwrap().normal(), &[1, -1]);
        assert_eq!(Hyperplane::new(&[-3, -3]).unwrap().normal(), &[1, 1]);
        assert!(Hyperplane::new(&[0, 0]).is_err());
        assert!(Hyperplane::new(&[1, 2]).is_err());
        assert!(Hyperplane::new(&[1, 1, 1]).is_err());
    }

    #[test]
    fn disjoint_union_examples() {
        let g = disjoint_union(&models::a_graph(2), &models::a_graph(2)).unwrap();
        assert_eq!(g, models::g_rs(2, 0));
        let a3 = models::a_graph(3);
        assert_eq!(disjoint_union(&a3, &ColouredGraph::bichromatic(0)).unwrap(), a3);
        let e = disjoint_union(&ColouredGraph::bichromatic(1), &ColouredGraph::bichromatic(1));
        assert_eq!(e.unwrap(), ColouredGraph::bichromatic(2));
        assert!(disjoint_union(&a3, &ColouredGraph::trichromatic(1)).is_err());
    }

    #[test]
    fn components_examples() {
        assert_eq!(connected_components(&models::g_rs(1, 1)), vec![vec![0, 1], vec![2]]);
        assert_eq!(
            connected_components(&ColouredGraph::bichromatic(3)),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(connected_components(&models::d_graph(4)), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn edge_order_is_serialization_order() {
        let g = ColouredGraph::from_edges(
            3,
            Palette::Trichromatic,
            [
                ColouredEdge::straight(2, 1, Colour::Red),
                ColouredEdge::straight(0, 1, Colour::Red),
                ColouredEdge::straight(0, 1, Colour::Green),
                ColouredEdge::looped(2, Colour::Red),
                ColouredEdge::looped(0, Colour::Blue),
                ColouredEdge::looped(2, Colour::Green),
            ],
        )
        .unwrap();
        assert_eq!(
            g.edges(),
            vec![
                ColouredEdge::looped(0, Colour::Blue),
                ColouredEdge::looped(2, Colour::Green),
                ColouredEdge::looped(2, Colour::Red),
                ColouredEdge::straight(0, 1, Colour::Green),
                ColouredEdge::straight(0, 1, Colour::Red),
                ColouredEdge::straight(1, 2, Colour::Red),
            ]
        );
    }

    #[test]
    fn correspondence_is_bijective_up_to_three_nodes() {
        for n in 0..=3 {
            let slots = ColouredGraph::slot_count(n);
            for bits in 0..1u64 << slots {
                let g = ColouredGraph::from_bits(n, bits);
                assert_eq!(g.to_bits(), bits);
                let phi = roots_from_graph(&g).unwrap();
                assert_eq!(phi.len(), 2 * g.edge_count());
                assert_eq!(graph_from_roots(&phi).unwrap(), g);
            }
        }
    }

    fn arb_graph(n: usize) -> impl Strategy<Value = ColouredGraph> {
        let slots = ColouredGraph::slot_count(n);
        any::<u64>().prop_map(move |b| ColouredGraph::from_bits(n, b & ((1u64 << slots) - 1)))
    }

    proptest! {
        #[test]
        fn correspondence_round_trips(g in (4usize..=6).prop_flat_map(arb_graph)) {
            let phi = roots_from_graph(&g).unwrap();
            prop_assert_eq!(phi.len(), 2 * g.edge_count());
            prop_assert_eq!(graph_from_roots(&phi).unwrap(), g);
        }

        #[test]
        fn correspondence_preserves_inclusion(a in arb_graph(4), b in arb_graph(4)) {
            let (ra, rb) = (roots_from_graph(&a).unwrap(), roots_from_graph(&b).unwrap());
            prop_assert_eq!(a.is_subgraph_of(&b), ra.is_subset(&rb));
        }

        #[test]
        fn union_embeds_root_sets(a in arb_graph(3), b in arb_graph(2)) {
            let u = roots_from_graph(&disjoint_union(&a, &b).unwrap()).unwrap();
            let mut expected = RootSet::new(5);
            for r in roots_from_graph(&a).unwrap().iter() {
                let mut c = r.to_vec();
                c.extend([0, 0]);
                expected.insert(Root::new(&c).unwrap()).unwrap();
            }
            for r in roots_from_graph(&b).unwrap().iter() {
                let mut c = vec![0, 0, 0];
                c.extend(r.to_vec());
                expected.insert(Root::new(&c).unwrap()).unwrap();
            }
            prop_assert_eq!(u, expected);
        }

        #[test]
        fn arrangement_round_trips(bits in any::<u64>()) {
            let g = crate::arrange::projectify(&ColouredGraph::from_bits(4, bits & ((1 << 20) - 1)));
            let h = arrangement_from_graph(&g).unwrap();
            prop_assert_eq!(h.len(), g.edge_count());
            prop_assert_eq!(graph_from_arrangement(4, &h).unwrap(), g);
        }
    }
}
