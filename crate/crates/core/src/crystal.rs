//! Crystallograph predicates and the component classifications.
//!
//! Classification is structural: every connected component is matched
//! against the model graphs in [`crate::models`]. A component that matches
//! nothing is reported as an internal inconsistency, since the
//! classification theorems say this cannot happen.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::{
    connected_components, disjoint_union, graph_from_roots, roots_from_graph, ColouredGraph,
    Palette, BLUE, GREEN, RED,
};
use crate::io::graph_to_json;
use crate::limits::Limits;
use crate::linalg;
use crate::models;
use crate::rational::RationalVector;
use crate::rootsys::{weyl_apply, SignedPermutation};

/// Straight-edge closure: two straight edges `{v,a}`, `{v,b}` (a ≠ b) force
/// `{a,b}`, red iff their colours agree.
fn triangles_close(g: &ColouredGraph) -> bool {
    let n = g.n();
    for v in 0..n {
        for a in 0..n {
            let ma = if a == v { 0 } else { g.straight_mask(v, a) & (RED | GREEN) };
            if ma == 0 {
                continue;
            }
            for b in a + 1..n {
                let mb = if b == v { 0 } else { g.straight_mask(v, b) & (RED | GREEN) };
                if mb == 0 {
                    continue;
                }
                let mut need = 0;
                for c1 in [RED, GREEN] {
                    for c2 in [RED, GREEN] {
                        if ma & c1 != 0 && mb & c2 != 0 {
                            need |= if c1 == c2 { RED } else { GREEN };
                        }
                    }
                }
                if g.straight_mask(a, b) & need != need {
                    return false;
                }
            }
        }
    }
    true
}

/// Loop closure: a loop of colour `L` at `v` next to a straight edge
/// `{v,a}` forces both straight colours on `{v,a}`, and an `L` loop at `a`
/// whenever `propagates(L)`.
fn loops_close(g: &ColouredGraph, propagates: impl Fn(u8) -> bool) -> bool {
    let n = g.n();
    for v in 0..n {
        let lm = g.loop_mask(v);
        if lm == 0 {
            continue;
        }
        for a in (0..n).filter(|&a| a != v) {
            let sm = g.straight_mask(v, a);
            if sm == 0 {
                continue;
            }
            if sm & (RED | GREEN) != RED | GREEN {
                return false;
            }
            for l in [RED, GREEN, BLUE] {
                if lm & l != 0 && propagates(l) && g.loop_mask(a) & l == 0 {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_crystallograph(g: &ColouredGraph) -> bool {
    g.palette() == Palette::Bichromatic && triangles_close(g) && loops_close(g, |_| true)
}

/// As [`is_crystallograph`], except green loops need not propagate along
/// straight edges (the straight edge still doubles).
pub fn is_quasi_crystallograph(g: &ColouredGraph) -> bool {
    g.palette() == Palette::Bichromatic && triangles_close(g) && loops_close(g, |l| l != GREEN)
}

/// Trichromatic, loops blue only, and both closure rules with blue as the
/// single loop colour.
pub fn is_projective_crystallograph(g: &ColouredGraph) -> bool {
    g.palette() == Palette::Trichromatic
        && (0..g.n()).all(|k| g.loop_mask(k) & (RED | GREEN) == 0)
        && triangles_close(g)
        && loops_close(g, |_| true)
}

/// Tag of a (quasi-)crystallograph component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentType {
    /// Complete red on `m` nodes; `A(1)` is an isolated node.
    A(usize),
    D(usize),
    B(usize),
    C(usize),
    BC(usize),
    /// `G^{d1,d2}` with `d1 ≤ d2`.
    Bipartite(usize, usize),
    /// Type B on `r + s` nodes, green loops at `r` of them; `0 < r`, `0 < s`.
    BplusC(usize, usize),
    /// Type D on `r + s` nodes, green loops at `r` of them; `0 < r`, `0 < s`.
    CplusD(usize, usize),
}

/// Tag of a component of a projectified (quasi-)crystallograph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrangementType {
    A(usize),
    D(usize),
    /// The fused B/C/BC arrangement.
    BorC(usize),
    Bipartite(usize, usize),
    /// `(B_r/C_r)D_{r+s}`: blue loops at exactly `r` nodes, `0 < r`, `0 < s`.
    ExoticBD(usize, usize),
}

pub trait Tag: Copy + fmt::Debug + Eq {
    fn name(&self) -> &'static str;
    fn params(&self) -> Vec<usize>;
    /// Model graph on nodes `0..m`.
    fn model(&self) -> ColouredGraph;
    /// Whether this tag names a type-A (red) component.
    fn is_red(&self) -> bool;
    fn from_parts(name: &str, params: &[usize]) -> Option<Self>;
}

impl Tag for ComponentType {
    fn name(&self) -> &'static str {
        match self {
            ComponentType::A(_) => "A",
            ComponentType::D(_) => "D",
            ComponentType::B(_) => "B",
            ComponentType::C(_) => "C",
            ComponentType::BC(_) => "BC",
            ComponentType::Bipartite(..) => "Bipartite",
            ComponentType::BplusC(..) => "BplusC",
            ComponentType::CplusD(..) => "CplusD",
        }
    }

    fn params(&self) -> Vec<usize> {
        match *self {
            ComponentType::A(m)
            | ComponentType::D(m)
            | ComponentType::B(m)
            | ComponentType::C(m)
            | ComponentType::BC(m) => vec![m],
            ComponentType::Bipartite(a, b)
            | ComponentType::BplusC(a, b)
            | ComponentType::CplusD(a, b) => vec![a, b],
        }
    }

    fn model(&self) -> ColouredGraph {
        match *self {
            ComponentType::A(m) => models::a_graph(m),
            ComponentType::D(m) => models::d_graph(m),
            ComponentType::B(m) => models::b_graph(m),
            ComponentType::C(m) => models::c_graph(m),
            ComponentType::BC(m) => models::bc_graph(m),
            ComponentType::Bipartite(a, b) => models::bipartite_graph(a, b),
            ComponentType::BplusC(r, s) => models::b_plus_c_graph(r, s),
            ComponentType::CplusD(r, s) => models::c_plus_d_graph(r, s),
        }
    }

    fn is_red(&self) -> bool {
        matches!(self, ComponentType::A(_))
    }

    fn from_parts(name: &str, params: &[usize]) -> Option<Self> {
        Some(match (name, params) {
            ("A", &[m]) => ComponentType::A(m),
            ("D", &[m]) => ComponentType::D(m),
            ("B", &[m]) => ComponentType::B(m),
            ("C", &[m]) => ComponentType::C(m),
            ("BC", &[m]) => ComponentType::BC(m),
            ("Bipartite", &[a, b]) => ComponentType::Bipartite(a, b),
            ("BplusC", &[a, b]) => ComponentType::BplusC(a, b),
            ("CplusD", &[a, b]) => ComponentType::CplusD(a, b),
            _ => return None,
        })
    }
}

impl ComponentType {
    /// Non-crystallographic exotic component.
    pub fn is_exotic(&self) -> bool {
        matches!(self, ComponentType::BplusC(..) | ComponentType::CplusD(..))
    }

    pub fn node_count(&self) -> usize {
        self.params().iter().sum()
    }
}

impl Tag for ArrangementType {
    fn name(&self) -> &'static str {
        match self {
            ArrangementType::A(_) => "A",
            ArrangementType::D(_) => "D",
            ArrangementType::BorC(_) => "BorC",
            ArrangementType::Bipartite(..) => "Bipartite",
            ArrangementType::ExoticBD(..) => "ExoticBD",
        }
    }

    fn params(&self) -> Vec<usize> {
        match *self {
            ArrangementType::A(m) | ArrangementType::D(m) | ArrangementType::BorC(m) => vec![m],
            ArrangementType::Bipartite(a, b) | ArrangementType::ExoticBD(a, b) => vec![a, b],
        }
    }

    fn model(&self) -> ColouredGraph {
        let tri = |g: ColouredGraph| g.with_palette(Palette::Trichromatic);
        match *self {
            ArrangementType::A(m) => tri(models::a_graph(m)),
            ArrangementType::D(m) => tri(models::d_graph(m)),
            ArrangementType::BorC(m) => models::borc_graph(m),
            ArrangementType::Bipartite(a, b) => tri(models::bipartite_graph(a, b)),
            ArrangementType::ExoticBD(r, s) => models::exotic_bd_graph(r, s),
        }
    }

    fn is_red(&self) -> bool {
        matches!(self, ArrangementType::A(_))
    }

    fn from_parts(name: &str, params: &[usize]) -> Option<Self> {
        Some(match (name, params) {
            ("A", &[m]) => ArrangementType::A(m),
            ("D", &[m]) => ArrangementType::D(m),
            ("BorC", &[m]) => ArrangementType::BorC(m),
            ("Bipartite", &[a, b]) => ArrangementType::Bipartite(a, b),
            ("ExoticBD", &[a, b]) => ArrangementType::ExoticBD(a, b),
            _ => return None,
        })
    }
}

/// One classified component. `nodes` lists the component's nodes in model
/// order: the induced subgraph on `nodes`, in that order, is exactly
/// `kind.model()`. Loop-carrying nodes of exotic components and the first
/// part of a bipartite component come first; each block is ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component<T> {
    pub nodes: Vec<usize>,
    pub kind: T,
}

impl<T> Component<T> {
    pub fn min_node(&self) -> usize {
        self.nodes.iter().copied().min().unwrap_or(usize::MAX)
    }

    pub fn sorted_nodes(&self) -> Vec<usize> {
        let mut v = self.nodes.clone();
        v.sort_unstable();
        v
    }
}

/// Components partitioning the nodes, ordered by smallest node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report<T> {
    pub n: usize,
    pub parts: Vec<Component<T>>,
}

pub type ComponentReport = Report<ComponentType>;
pub type ArrangementReport = Report<ArrangementType>;

impl<T: Tag> Report<T> {
    pub fn kinds(&self) -> Vec<T> {
        self.parts.iter().map(|c| c.kind).collect()
    }

    /// Node sets of the red components, ordered by smallest node.
    pub fn red_parts(&self) -> Vec<Vec<usize>> {
        self.parts
            .iter()
            .filter(|c| c.kind.is_red())
            .map(Component::sorted_nodes)
            .collect()
    }

    /// Checks that the parts partition the nodes and that every part
    /// induces exactly its model graph.
    pub fn reconstructs(&self, g: &ColouredGraph) -> bool {
        let mut seen = vec![false; g.n()];
        for c in &self.parts {
            for &v in &c.nodes {
                if v >= g.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            let mut model = c.kind.model();
            if model.palette() != g.palette() {
                model = model.with_palette(g.palette());
            }
            if g.induced(&c.nodes) != model {
                return false;
            }
        }
        seen.into_iter().all(|s| s) && self.n == g.n()
    }

    /// Reassembles the graph from the report.
    pub fn synthesize(&self, palette: Palette) -> ColouredGraph {
        let mut g = ColouredGraph::empty(self.n, palette);
        for c in &self.parts {
            let model = c.kind.model();
            for (a, &i) in c.nodes.iter().enumerate() {
                g.set_loop_mask(i, model.loop_mask(a));
                for (b, &j) in c.nodes.iter().enumerate().skip(a + 1) {
                    g.set_straight_mask(i, j, model.straight_mask(a, b));
                }
            }
        }
        g
    }
}

/// Shapes shared by both palettes. Returns `None` when the component is
/// none of them.
enum Shape {
    Single(u8),
    CompleteRed,
    /// All straight pairs doubled; per-node loop masks.
    CompleteBichromatic(Vec<u8>),
    /// Red cliques on both parts, green across; first part in model order.
    Bipartite(Vec<usize>, Vec<usize>),
}

fn shape_of(h: &ColouredGraph) -> Option<Shape> {
    let m = h.n();
    if m == 1 {
        return Some(Shape::Single(h.loop_mask(0)));
    }
    let pairs = || (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)));
    if pairs().all(|(i, j)| h.straight_mask(i, j) == RED | GREEN) {
        return Some(Shape::CompleteBichromatic((0..m).map(|k| h.loop_mask(k)).collect()));
    }
    if h.has_loops() {
        return None;
    }
    if pairs().all(|(i, j)| h.straight_mask(i, j) == RED) {
        return Some(Shape::CompleteRed);
    }
    let (p, q): (Vec<usize>, Vec<usize>) =
        (0..m).partition(|&v| v == 0 || h.straight_mask(0, v) == RED);
    if q.is_empty() {
        return None;
    }
    let ok = pairs().all(|(i, j)| {
        let same = p.contains(&i) == p.contains(&j);
        h.straight_mask(i, j) == if same { RED } else { GREEN }
    });
    if !ok {
        return None;
    }
    // p holds node 0, so it wins ties.
    Some(if q.len() < p.len() {
        Shape::Bipartite(q, p)
    } else {
        Shape::Bipartite(p, q)
    })
}

fn split_by_loops(loops: &[u8], first: u8) -> Vec<usize> {
    let (mut head, tail): (Vec<usize>, Vec<usize>) =
        (0..loops.len()).partition(|&k| loops[k] == first);
    head.extend(tail);
    head
}

/// Tags one component; `nodes` is the sorted node set. Returns the model
/// ordering of `nodes` with its tag.
fn classify_component(g: &ColouredGraph, nodes: &[usize]) -> Option<Component<ComponentType>> {
    let h = g.induced(nodes);
    let m = nodes.len();
    let relabel = |order: Vec<usize>| order.into_iter().map(|a| nodes[a]).collect::<Vec<_>>();
    let (order, kind) = match shape_of(&h)? {
        Shape::Single(mask) => (
            vec![0],
            match mask {
                0 => ComponentType::A(1),
                RED => ComponentType::B(1),
                GREEN => ComponentType::C(1),
                x if x == RED | GREEN => ComponentType::BC(1),
                _ => return None,
            },
        ),
        Shape::CompleteRed => ((0..m).collect(), ComponentType::A(m)),
        Shape::Bipartite(p, q) => {
            let d = (p.len(), q.len());
            (p.into_iter().chain(q).collect(), ComponentType::Bipartite(d.0, d.1))
        }
        Shape::CompleteBichromatic(loops) => {
            let count = |mask: u8| loops.iter().filter(|&&l| l == mask).count();
            let both = RED | GREEN;
            if count(0) == m {
                ((0..m).collect(), ComponentType::D(m))
            } else if count(RED) == m {
                ((0..m).collect(), ComponentType::B(m))
            } else if count(GREEN) == m {
                ((0..m).collect(), ComponentType::C(m))
            } else if count(both) == m {
                ((0..m).collect(), ComponentType::BC(m))
            } else if count(both) + count(RED) == m {
                let r = count(both);
                (split_by_loops(&loops, both), ComponentType::BplusC(r, m - r))
            } else if count(GREEN) + count(0) == m {
                let r = count(GREEN);
                (split_by_loops(&loops, GREEN), ComponentType::CplusD(r, m - r))
            } else {
                return None;
            }
        }
    };
    Some(Component {
        nodes: relabel(order),
        kind,
    })
}

/// Decomposes a quasi-crystallograph (crystallographs included) into typed
/// components.
pub fn classify_components(g: &ColouredGraph) -> Result<ComponentReport> {
    if !is_quasi_crystallograph(g) {
        return Err(Error::Precondition("graph is not a quasi-crystallograph".into()));
    }
    let mut parts = Vec::new();
    for nodes in connected_components(g) {
        let c = classify_component(g, &nodes).ok_or_else(|| {
            Error::Inconsistency(format!(
                "component {:?} of {} matches no model",
                nodes.iter().map(|v| v + 1).collect::<Vec<_>>(),
                graph_to_json(g)
            ))
        })?;
        parts.push(c);
    }
    Ok(Report { n: g.n(), parts })
}

fn classify_projective_component(
    g: &ColouredGraph,
    nodes: &[usize],
) -> Option<Component<ArrangementType>> {
    let h = g.induced(nodes);
    let m = nodes.len();
    let relabel = |order: Vec<usize>| order.into_iter().map(|a| nodes[a]).collect::<Vec<_>>();
    let (order, kind) = match shape_of(&h)? {
        Shape::Single(0) => (vec![0], ArrangementType::A(1)),
        Shape::Single(BLUE) => (vec![0], ArrangementType::BorC(1)),
        Shape::Single(_) => return None,
        Shape::CompleteRed => ((0..m).collect(), ArrangementType::A(m)),
        Shape::Bipartite(p, q) => {
            let d = (p.len(), q.len());
            (p.into_iter().chain(q).collect(), ArrangementType::Bipartite(d.0, d.1))
        }
        Shape::CompleteBichromatic(loops) => {
            if loops.iter().any(|&l| l != 0 && l != BLUE) {
                return None;
            }
            let r = loops.iter().filter(|&&l| l == BLUE).count();
            let kind = match r {
                0 => ArrangementType::D(m),
                r if r == m => ArrangementType::BorC(m),
                r => ArrangementType::ExoticBD(r, m - r),
            };
            (split_by_loops(&loops, BLUE), kind)
        }
    };
    Some(Component {
        nodes: relabel(order),
        kind,
    })
}

/// Decomposes a trichromatic graph with blue loops into arrangement types.
pub fn classify_projective_components(g: &ColouredGraph) -> Result<ArrangementReport> {
    if g.palette() != Palette::Trichromatic {
        return Err(Error::Palette("projective classification needs a trichromatic graph".into()));
    }
    if (0..g.n()).any(|k| g.loop_mask(k) & (RED | GREEN) != 0) {
        return Err(Error::Palette("projective graphs carry blue loops only".into()));
    }
    let mut parts = Vec::new();
    for nodes in connected_components(g) {
        let c = classify_projective_component(g, &nodes).ok_or_else(|| {
            Error::UnmatchedComponent(format!(
                "component {:?} of {}",
                nodes.iter().map(|v| v + 1).collect::<Vec<_>>(),
                graph_to_json(g)
            ))
        })?;
        parts.push(c);
    }
    Ok(Report { n: g.n(), parts })
}

/// Node sets of the type-A components (singletons included).
pub fn red_components(g: &ColouredGraph) -> Result<Vec<Vec<usize>>> {
    Ok(classify_components(g)?.red_parts())
}

/// Generator of W(BC_n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `σ^-_{ij}`
    Minus(usize, usize),
    /// `σ^+_{ij}`
    Plus(usize, usize),
    /// `σ_i`
    Flip(usize),
}

impl Generator {
    pub fn element(&self, n: usize) -> SignedPermutation {
        match *self {
            Generator::Minus(i, j) => SignedPermutation::transposition(n, i, j),
            Generator::Plus(i, j) => SignedPermutation::signed_transposition(n, i, j),
            Generator::Flip(i) => SignedPermutation::sign_flip(n, i),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Minus(i, j) => write!(f, "s-{},{}", i + 1, j + 1),
            Generator::Plus(i, j) => write!(f, "s+{},{}", i + 1, j + 1),
            Generator::Flip(i) => write!(f, "s{}", i + 1),
        }
    }
}

/// A word in the generators together with its product; the product applies
/// the last generator first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylWord {
    word: Vec<Generator>,
    product: SignedPermutation,
}

impl WeylWord {
    pub fn new(n: usize, word: Vec<Generator>) -> Self {
        let product = word
            .iter()
            .fold(SignedPermutation::identity(n), |acc, g| acc.compose(&g.element(n)));
        Self { word, product }
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn product(&self) -> &SignedPermutation {
        &self.product
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// Flips the smaller part of every bipartite component, turning each into a
/// complete red graph. Returns the transformed graph and the word used.
pub fn bipartite_normalize(g: &ColouredGraph) -> Result<(ColouredGraph, WeylWord)> {
    if !is_crystallograph(g) {
        return Err(Error::Precondition("graph is not a crystallograph".into()));
    }
    let report = classify_components(g)?;
    let mut flips: Vec<usize> = report
        .parts
        .iter()
        .filter_map(|c| match c.kind {
            ComponentType::Bipartite(d1, _) => Some(c.nodes[..d1].to_vec()),
            _ => None,
        })
        .flatten()
        .collect();
    flips.sort_unstable();
    let word = WeylWord::new(g.n(), flips.into_iter().map(Generator::Flip).collect());
    let phi = weyl_apply(word.product(), &roots_from_graph(g)?)?;
    Ok((graph_from_roots(&phi)?, word))
}

/// Dimension of the span of the encoded roots (or hyperplane normals).
pub fn rank(g: &ColouredGraph) -> usize {
    let n = g.n();
    let rows: Vec<RationalVector> = g
        .edges()
        .into_iter()
        .map(|e| {
            let mut v = vec![0i64; n];
            match e {
                crate::graphs::ColouredEdge::Straight { i, j, colour } => {
                    v[i] = 1;
                    v[j] = if colour == crate::graphs::Colour::Red { -1 } else { 1 };
                }
                crate::graphs::ColouredEdge::Loop { k, .. } => v[k] = 1,
            }
            RationalVector::from_integers(&v)
        })
        .collect();
    linalg::rank(&rows, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    All,
    Quasi,
    UpToWeyl,
}

/// Lexicographically smallest serialization over the W(BC_n)-orbit, and
/// the graph attaining it.
pub fn orbit_canonical(g: &ColouredGraph) -> (String, ColouredGraph) {
    let mut seen = HashSet::new();
    SignedPermutation::all(g.n())
        .map(|w| g.apply_signed_permutation(&w))
        .filter(|h| seen.insert(h.clone()))
        .map(|h| (graph_to_json(&h), h))
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("the Weyl group is never empty")
}

fn sort_canonically(graphs: Vec<ColouredGraph>) -> Vec<ColouredGraph> {
    let mut keyed: Vec<(String, ColouredGraph)> =
        graphs.into_iter().map(|g| (graph_to_json(&g), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// Classical component types on exactly `m` nodes.
fn classical_types(m: usize) -> Vec<ComponentType> {
    let mut v = vec![ComponentType::A(m)];
    if m >= 2 {
        v.push(ComponentType::D(m));
    }
    v.extend([ComponentType::B(m), ComponentType::C(m), ComponentType::BC(m)]);
    v
}

/// Every disjoint union of model components on `n` nodes, each multiset of
/// types once: classical types only, or with the exotic quasi types too.
/// Bipartite components are left out since they are Weyl-equivalent to
/// type A.
pub fn model_unions(n: usize, exotic: bool) -> Vec<ColouredGraph> {
    let mut catalogue: Vec<ComponentType> = (1..=n).flat_map(classical_types).collect();
    if exotic {
        for m in 2..=n {
            for r in 1..m {
                catalogue.push(ComponentType::BplusC(r, m - r));
                catalogue.push(ComponentType::CplusD(r, m - r));
            }
        }
    }
    catalogue.sort();
    let mut out = Vec::new();
    fn go(
        catalogue: &[ComponentType],
        start: usize,
        left: usize,
        acc: ColouredGraph,
        out: &mut Vec<ColouredGraph>,
    ) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for (idx, t) in catalogue.iter().enumerate().skip(start) {
            let m = t.node_count();
            if m <= left {
                let next = disjoint_union(&acc, &t.model()).expect("same palette");
                go(catalogue, idx, left - m, next, out);
            }
        }
    }
    go(&catalogue, 0, n, ColouredGraph::bichromatic(0), &mut out);
    out
}

/// Bichromatic graphs on `n` nodes passing the mode's predicate, in
/// serialization order. `UpToWeyl` yields one orbit-minimal representative
/// per Weyl orbit of crystallographs.
pub fn enumerate_crystallographs(
    n: usize,
    mode: EnumerationMode,
    limits: &Limits,
) -> Result<Vec<ColouredGraph>> {
    match mode {
        EnumerationMode::All | EnumerationMode::Quasi => {
            Limits::check("graph enumeration", n, limits.enumerate)?;
            let keep: fn(&ColouredGraph) -> bool = if mode == EnumerationMode::All {
                is_crystallograph
            } else {
                is_quasi_crystallograph
            };
            let found = (0..1u64 << ColouredGraph::slot_count(n))
                .map(|bits| ColouredGraph::from_bits(n, bits))
                .filter(keep)
                .collect();
            Ok(sort_canonically(found))
        }
        EnumerationMode::UpToWeyl => {
            Limits::check("orbit enumeration", n, limits.up_to_weyl.min(limits.weyl))?;
            // Every crystallograph is Weyl-equivalent to a classical union,
            // so orbits are reached from those alone.
            let mut seen = HashSet::new();
            let mut reps = Vec::new();
            for g in model_unions(n, false) {
                let (key, rep) = orbit_canonical(&g);
                if seen.insert(key) {
                    reps.push(rep);
                }
            }
            Ok(sort_canonically(reps))
        }
    }
}
