//! Brute-force machinery that checks the graph algorithms without trusting
//! them: reflection tables over bitmasks, generic nullspaces, and Weyl
//! orbits computed from an independent slot action.
//!
//! Only the `Root`, `RootSet` and `ColouredGraph` types and the two
//! correspondences are shared with the rest of the crate.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arrange::{
    allowed_restricted_tag, arrangement_isomorphism, classify_restricted_arrangement, lift,
    model_arrangement, projectify, restricted_arrangement, verify_projectification_compatibility,
};
use crate::crystal::{
    bipartite_normalize, classify_components, classify_projective_components, enumerate_crystallographs,
    is_crystallograph, is_projective_crystallograph, is_quasi_crystallograph, model_unions, rank,
    ArrangementType, ComponentType, EnumerationMode,
};
use crate::error::Result;
use crate::graphs::{
    arrangement_from_graph, graph_from_arrangement, graph_from_roots, roots_from_graph,
    ColouredEdge, ColouredGraph, Hyperplane, Palette,
};
use crate::io::graph_to_json;
use crate::limits::Limits;
use crate::linalg;
use crate::quotient::{
    kernel_basis, normalize_pair, orthogonal_projection, projection_is_consistent, quotient_graph,
    realize_quasi, restricted_system, verify_quotient_theorem,
};
use crate::rational::RationalVector;
use crate::rootsys::{
    a_system, b_system, bc_roots, c_system, d_system, bc_system, positive_roots, reflect,
    reflection_closure, weyl_apply, Root, RootSet, SignedPermutation,
};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Sample count used when none is given.
pub const DEFAULT_SAMPLES: usize = 10_000;

/// Exhaustive pair sweeps stop here; larger `n` is sampled.
pub const PAIR_EXHAUSTIVE_MAX: usize = 3;

/// Reflection table of BC_n, with root sets encoded as bitmasks over the
/// positive roots.
pub struct ReflectionTable {
    n: usize,
    positive: Vec<Root>,
    /// `image[a][b]`: the positive-root index of `±σ_a(b)`.
    image: Vec<Vec<usize>>,
}

impl ReflectionTable {
    pub fn new(n: usize) -> Self {
        assert!(n * (n + 1) <= 128, "bitmask encoding supports n ≤ 10");
        let positive = positive_roots(n);
        let index: HashMap<Root, usize> = positive
            .iter()
            .enumerate()
            .flat_map(|(i, r)| [(r.clone(), i), (r.neg(), i)])
            .collect();
        let image = positive
            .iter()
            .map(|a| {
                positive
                    .iter()
                    .map(|b| index[&reflect(a, b).expect("same dimension")])
                    .collect()
            })
            .collect();
        Self { n, positive, image }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    /// Closure under the reflections of its own members.
    pub fn is_closed(&self, mask: u128) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut inner = mask;
            while inner != 0 {
                let b = inner.trailing_zeros() as usize;
                inner &= inner - 1;
                if mask >> self.image[a][b] & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn root_set(&self, mask: u128) -> RootSet {
        let chosen = (0..self.positive.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.positive[i].clone());
        RootSet::from_pairs(self.n, chosen).expect("dimensions agree")
    }

    /// Encodes a symmetric root set; `None` if it is not symmetric.
    pub fn mask_of(&self, phi: &RootSet) -> Option<u128> {
        let mut mask = 0u128;
        for (i, r) in self.positive.iter().enumerate() {
            match (phi.contains(r), phi.contains(&r.neg())) {
                (true, true) => mask |= 1 << i,
                (false, false) => {}
                _ => return None,
            }
        }
        Some(mask)
    }
}

/// Every root subsystem of BC_n, found by checking reflection closure on
/// all symmetric subsets, in `RootSet` order.
pub fn enumerate_subsystems_bruteforce(n: usize, limits: &Limits) -> Result<Vec<RootSet>> {
    Limits::check("brute-force subsystem enumeration", n, limits.bruteforce)?;
    let table = ReflectionTable::new(n);
    let mut out: Vec<RootSet> = (0..1u128 << table.positive.len())
        .filter(|&m| table.is_closed(m))
        .map(|m| table.root_set(m))
        .collect();
    out.sort();
    Ok(out)
}

/// Exact nullspace basis `{x : r·x = 0}`, one vector per free column.
pub fn nullspace(rows: &[RationalVector], cols: usize) -> Vec<RationalVector> {
    linalg::nullspace(rows, cols)
}

/// Maps graph slot bits to positive-root bits through the correspondence.
pub struct SlotMap {
    n: usize,
    to_root: Vec<usize>,
}

impl SlotMap {
    pub fn new(table: &ReflectionTable) -> Self {
        let n = table.n;
        let to_root = (0..ColouredGraph::slot_count(n))
            .map(|s| {
                let phi = roots_from_graph(&ColouredGraph::from_bits(n, 1 << s)).expect("bichromatic");
                let m = table.mask_of(&phi).expect("graphs give symmetric sets");
                m.trailing_zeros() as usize
            })
            .collect();
        Self { n, to_root }
    }

    pub fn root_mask(&self, bits: u64) -> u128 {
        let mut mask = 0u128;
        let mut rest = bits;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            mask |= 1 << self.to_root[s];
        }
        mask
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// W(BC_n) acting on graph slot bits: a straight slot `(i, j, c)` goes to
/// `(perm i, perm j, c')` with `c'` the other colour when exactly one of
/// `i`, `j` is sign-flipped; a loop slot `(k, c)` goes to `(perm k, c)`.
pub struct SlotAction {
    n: usize,
    maps: Vec<Vec<u8>>,
}

impl SlotAction {
    pub fn new(n: usize, limits: &Limits) -> Result<Self> {
        Limits::check("Weyl-orbit enumeration", n, limits.weyl)?;
        let slots = ColouredGraph::slot_count(n);
        let edge_of: Vec<ColouredEdge> = (0..slots)
            .map(|s| ColouredGraph::from_bits(n, 1 << s).edges()[0])
            .collect();
        let slot_of: HashMap<ColouredEdge, usize> =
            edge_of.iter().enumerate().map(|(s, e)| (*e, s)).collect();
        let maps = SignedPermutation::all(n)
            .map(|w| {
                edge_of
                    .iter()
                    .map(|e| {
                        let target = match *e {
                            ColouredEdge::Straight { i, j, colour } => {
                                let flip = (w.signs()[i] < 0) != (w.signs()[j] < 0);
                                let c = if flip { colour.swapped() } else { colour };
                                ColouredEdge::straight(w.perm()[i], w.perm()[j], c)
                            }
                            ColouredEdge::Loop { k, colour } => ColouredEdge::looped(w.perm()[k], colour),
                        };
                        slot_of[&target] as u8
                    })
                    .collect()
            })
            .collect();
        Ok(Self { n, maps })
    }

    pub fn group_order(&self) -> usize {
        self.maps.len()
    }

    fn apply(map: &[u8], bits: u64) -> u64 {
        let mut out = 0u64;
        let mut rest = bits;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << map[s];
        }
        out
    }

    /// Distinct graphs in the orbit of `bits`.
    pub fn orbit(&self, bits: u64) -> HashSet<u64> {
        self.maps.iter().map(|m| Self::apply(m, bits)).collect()
    }

    /// Smallest bit pattern of the orbit, and the orbit size.
    pub fn orbit_key(&self, bits: u64) -> (u64, usize) {
        let orbit = self.orbit(bits);
        (*orbit.iter().min().expect("orbits are nonempty"), orbit.len())
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// One Weyl orbit found among a list of graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically smallest serialization over the whole orbit.
    pub representative: ColouredGraph,
    /// Items of the input list lying in this orbit.
    pub members: usize,
    /// Size of the full orbit.
    pub orbit_size: usize,
}

/// Partitions bichromatic graphs on `n` nodes into W(BC_n)-orbits, ordered
/// by representative serialization.
pub fn orbit_decomposition(items: &[ColouredGraph], n: usize, limits: &Limits) -> Result<Vec<Orbit>> {
    let action = SlotAction::new(n, limits)?;
    let mut classes: BTreeMap<u64, (usize, HashSet<u64>)> = BTreeMap::new();
    for g in items {
        if g.n() != n || g.palette() != Palette::Bichromatic {
            return Err(crate::error::Error::Precondition(
                "orbit decomposition needs bichromatic graphs on n nodes".into(),
            ));
        }
        let orbit = action.orbit(g.to_bits());
        let key = *orbit.iter().min().expect("orbits are nonempty");
        classes.entry(key).or_insert_with(|| (0, orbit)).0 += 1;
    }
    let mut out: Vec<(String, Orbit)> = classes
        .into_values()
        .map(|(members, orbit)| {
            let (text, bits) = orbit
                .iter()
                .map(|&b| (graph_to_json(&ColouredGraph::from_bits(n, b)), b))
                .min()
                .expect("orbits are nonempty");
            let o = Orbit {
                representative: ColouredGraph::from_bits(n, bits),
                members,
                orbit_size: orbit.len(),
            };
            (text, o)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, o)| o).collect())
}

/// Labelled graph count and orbit count, obtained by expanding the Weyl
/// orbits of all model unions.
pub fn structural_counts(n: usize, exotic: bool, limits: &Limits) -> Result<(u64, u64)> {
    let action = SlotAction::new(n, limits)?;
    let mut keys = HashSet::new();
    let mut total = 0u64;
    for g in model_unions(n, exotic) {
        let (key, size) = action.orbit_key(g.to_bits());
        if keys.insert(key) {
            total += size as u64;
        }
    }
    Ok((total, keys.len() as u64))
}

/// Counts and failures of a [`verify_all`] run. `runtime_seconds` is kept
/// out of the default serialization so that output stays deterministic.
#[derive(Debug, Clone, Serialize)]
pub struct EnumerationSummary {
    pub n: usize,
    pub total_graphs: u64,
    pub crystallographs: u64,
    pub quasi_crystallographs: u64,
    pub orbits: u64,
    pub quasi_orbits: u64,
    /// `"exhaustive"` when every graph was filtered, `"orbit-sum"` when the
    /// counts come from [`structural_counts`].
    pub count_method: &'static str,
    pub samples: usize,
    pub seed: u64,
    #[serde(skip)]
    pub runtime_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub suite: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub summary: EnumerationSummary,
    /// Cases examined per suite.
    pub checks: BTreeMap<&'static str, u64>,
    pub failure_count: u64,
    /// The first [`Verification::MAX_RECORDED`] failures.
    pub failures: Vec<Failure>,
}

impl Verification {
    pub const MAX_RECORDED: usize = 100;

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

struct Log {
    checks: BTreeMap<&'static str, u64>,
    failure_count: u64,
    failures: Vec<Failure>,
}

impl Log {
    fn new() -> Self {
        Self {
            checks: BTreeMap::new(),
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, suite: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        *self.checks.entry(suite).or_default() += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < Verification::MAX_RECORDED {
                self.failures.push(Failure {
                    suite,
                    detail: detail(),
                });
            }
        }
    }

    fn result<T>(&mut self, suite: &'static str, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(suite, false, || format!("{}: {e}", context()));
                None
            }
        }
    }
}

/// Uniformly random bichromatic graph.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> ColouredGraph {
    let slots = ColouredGraph::slot_count(n);
    let bits = if slots == 0 { 0 } else { rng.gen::<u64>() & (u64::MAX >> (64 - slots)) };
    ColouredGraph::from_bits(n, bits)
}

/// Graph of the reflection closure of a few random roots.
pub fn random_crystallograph(n: usize, rng: &mut impl Rng) -> ColouredGraph {
    let roots = bc_roots(n);
    let k = rng.gen_range(0..=n + 1);
    let picked = (0..k).map(|_| roots[rng.gen_range(0..roots.len())].clone());
    let seed = RootSet::from_pairs(n, picked).expect("dimensions agree");
    graph_from_roots(&reflection_closure(&seed)).expect("closures are symmetric")
}

/// A crystallograph, a random sub-crystallograph closed from a random
/// subset of its roots, moved into classical normal form.
pub fn random_nested_pair(n: usize, rng: &mut impl Rng) -> (ColouredGraph, ColouredGraph) {
    let g = random_crystallograph(n, rng);
    let density: f64 = rng.gen();
    let phi = roots_from_graph(&g).expect("bichromatic");
    let sub: Vec<Root> = phi.iter().filter(|_| rng.gen_bool(density)).cloned().collect();
    let seed = RootSet::from_pairs(n, sub).expect("dimensions agree");
    let gp = graph_from_roots(&reflection_closure(&seed)).expect("closures are symmetric");
    let (g, gp, _) = normalize_pair(&g, &gp).expect("closures of sub-roots are nested crystallographs");
    (g, gp)
}

fn random_signed_permutation(n: usize, rng: &mut impl Rng) -> SignedPermutation {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let signs = (0..n).map(|_| if rng.gen_bool(0.5) { -1 } else { 1 }).collect();
    SignedPermutation::new(perm, signs).expect("valid signed permutation")
}

fn has_bipartite(g: &ColouredGraph) -> bool {
    classify_components(g)
        .map(|r| r.kinds().iter().any(|k| matches!(k, ComponentType::Bipartite(..))))
        .unwrap_or(false)
}

fn is_exotic_free(g: &ColouredGraph) -> bool {
    classify_components(g)
        .map(|r| r.kinds().iter().all(|k| !k.is_exotic()))
        .unwrap_or(false)
}

/// Checks on one bichromatic graph: correspondence, predicates,
/// classification.
fn single_graph_checks(g: &ColouredGraph, table: &ReflectionTable, slots: &SlotMap, log: &mut Log) {
    let show = || graph_to_json(g);
    let crystal = is_crystallograph(g);
    let closed = table.is_closed(slots.root_mask(g.to_bits()));
    log.check("bijection", crystal == closed, || format!("predicate {crystal}, closure {closed}: {}", show()));

    let phi = roots_from_graph(g).expect("bichromatic");
    let back = graph_from_roots(&phi);
    log.check("round_trip", back.as_ref() == Ok(g) && phi.len() == 2 * g.edge_count(), show);

    let lines: BTreeSet<Hyperplane> = phi.iter().map(Hyperplane::from_root).collect();
    let arrangement = arrangement_from_graph(&projectify(g)).expect("projectified graphs carry blue loops");
    log.check("hyperplane_count", arrangement == lines, show);

    let quasi = is_quasi_crystallograph(g);
    log.check("quasi_hierarchy", !crystal || quasi, show);
    if !quasi {
        return;
    }
    match classify_components(g) {
        Ok(report) => {
            let exotic = report.kinds().iter().any(ComponentType::is_exotic);
            log.check("classification", report.reconstructs(g), show);
            log.check("classification", report.synthesize(Palette::Bichromatic) == *g, show);
            log.check("quasi_hierarchy", crystal == !exotic, show);
        }
        Err(e) => log.check("classification", false, || format!("{e}: {}", show())),
    }
    if !crystal {
        return;
    }
    crystallograph_checks(g, log);
}

fn crystallograph_checks(g: &ColouredGraph, log: &mut Log) {
    let show = || graph_to_json(g);
    let Some((gstar, w)) = log.result("bipartite_normalize", bipartite_normalize(g), show) else {
        return;
    };
    let phi = roots_from_graph(g).expect("bichromatic");
    let moved = weyl_apply(w.product(), &phi).expect("same dimension");
    log.check("bipartite_normalize", roots_from_graph(&gstar).ok() == Some(moved), show);
    log.check("bipartite_normalize", !has_bipartite(&gstar), show);
    log.check("rank", rank(g) == linalg::rank(&phi.rows(), g.n()), show);

    let Some(basis) = log.result("kernel", kernel_basis(&gstar), show) else {
        return;
    };
    let Some(pi) = log.result("kernel", orthogonal_projection(&gstar), show) else {
        return;
    };
    let star_phi = roots_from_graph(&gstar).expect("bichromatic");
    let generic = nullspace(&star_phi.rows(), g.n());
    log.check("kernel", linalg::same_span(&basis.vectors, &generic, g.n()), show);
    log.check("kernel", basis.vectors.len() == generic.len(), show);
    log.check("kernel", projection_is_consistent(&pi, &basis, &star_phi), show);
}

/// Checks on one nested pair with classical `gp`.
fn pair_checks(g: &ColouredGraph, gp: &ColouredGraph, log: &mut Log) {
    let show = || format!("g={} gp={}", graph_to_json(g), graph_to_json(gp));
    let Some(holds) = log.result("quotient_theorem", verify_quotient_theorem(g, gp), show) else {
        return;
    };
    log.check("quotient_theorem", holds, show);
    let q = quotient_graph(g, gp).expect("checked above");
    log.check("quotient_is_quasi", is_quasi_crystallograph(&q), show);
    let compatible = verify_projectification_compatibility(g, gp);
    log.check("projectification", compatible == Ok(true), show);

    let restricted = restricted_system(g, gp).expect("checked above");
    let lines: BTreeSet<Hyperplane> = restricted.covectors.iter().map(|c| Hyperplane::new(c)).collect::<Result<_>>().unwrap_or_default();
    let arrangement = restricted_arrangement(g, gp).expect("checked above");
    log.check("restricted_arrangement", lines == arrangement, show);

    // Raw tags: a bipartite tag can only come from a bipartite component of g.
    if let Some(raw) = log.result("arrangement_tags", classify_restricted_arrangement(g, gp), show) {
        let bip = raw.kinds().iter().any(|k| matches!(k, ArrangementType::Bipartite(..)));
        log.check("arrangement_tags", !bip || has_bipartite(g), show);
    }
    let Some((g2, gp2, _)) = log.result("arrangement_tags", normalize_pair(g, gp), show) else {
        return;
    };
    if let Some(report) = log.result("arrangement_tags", classify_restricted_arrangement(&g2, &gp2), show) {
        log.check("arrangement_tags", report.kinds().iter().all(allowed_restricted_tag), show);
        let dim = report.n;
        if dim <= 4 {
            let actual = restricted_arrangement(&g2, &gp2).expect("checked above");
            let mut layout = ColouredGraph::trichromatic(0);
            for c in &report.parts {
                layout = crate::graphs::disjoint_union(&layout, &crate::crystal::Tag::model(&c.kind))
                    .expect("same palette");
            }
            let canonical = arrangement_from_graph(&layout).expect("blue loops only");
            let iso = arrangement_isomorphism(dim, &actual, &canonical, 4).ok().flatten().is_some();
            log.check("arrangement_isomorphism", iso, show);
            log.check("arrangement_isomorphism", model_arrangement(&report).ok() == Some(actual), show);
        }
    }
    if let Ok(report) = classify_components(g) {
        if report.kinds().iter().all(|k| matches!(k, ComponentType::A(_))) {
            let all_red = classify_components(&q).map(|r| r.kinds().iter().all(|k| matches!(k, ComponentType::A(_))));
            log.check("type_a_quotient", all_red == Ok(true), show);
        }
    }
}

fn projective_checks(t: &ColouredGraph, subsystem_arrangements: &HashSet<BTreeSet<Hyperplane>>, log: &mut Log) {
    let show = || graph_to_json(t);
    let lifted = lift(t).expect("blue loops only");
    let projective = is_projective_crystallograph(t);
    log.check("projective", projective == is_crystallograph(&lifted), show);
    log.check("projective", projectify(&lifted) == *t, show);
    let h = arrangement_from_graph(t).expect("blue loops only");
    log.check("projective", graph_from_arrangement(t.n(), &h).as_ref() == Ok(t), show);
    log.check("projective", projective == subsystem_arrangements.contains(&h), show);
    if projective {
        let tags = classify_projective_components(t);
        log.check("projective", tags.map(|r| r.reconstructs(t)) == Ok(true), show);
    }
}

fn classical_cardinalities(n: usize, log: &mut Log) {
    let all: Vec<usize> = (0..n).collect();
    let n64 = n;
    let expect = [
        ("A", a_system(n, &all).len(), n64 * n64.saturating_sub(1)),
        ("D", d_system(n, &all).len(), 2 * n64 * n64.saturating_sub(1)),
        ("B", b_system(n, &all).len(), 2 * n64 * n64),
        ("C", c_system(n, &all).len(), 2 * n64 * n64),
        ("BC", bc_system(n, &all).len(), 2 * n64 * n64 + 2 * n64),
    ];
    for (name, got, want) in expect {
        log.check("cardinality", got == want, || format!("|{name}_{n}| = {got}, expected {want}"));
    }
}

/// Runs every invariant suite at `n`: exhaustive over all graphs for
/// `n ≤ limits.enumerate` and over all nested pairs for `n ≤ 3`, otherwise
/// on `samples` seeded random cases.
pub fn verify_all(n: usize, samples: usize, seed: u64, limits: &Limits) -> Result<Verification> {
    Limits::check("verification", n, limits.verify)?;
    let start = Instant::now();
    let mut log = Log::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let table = ReflectionTable::new(n);
    let slots = SlotMap::new(&table);
    let total_graphs = 1u64 << ColouredGraph::slot_count(n);
    let exhaustive = n <= limits.enumerate && n <= limits.bruteforce;

    classical_cardinalities(n, &mut log);

    let (crystal_count, quasi_count, orbits, quasi_orbits, method);
    if exhaustive {
        let mut crystals = Vec::new();
        let mut quasi = 0u64;
        for bits in 0..total_graphs {
            let g = ColouredGraph::from_bits(n, bits);
            single_graph_checks(&g, &table, &slots, &mut log);
            if is_quasi_crystallograph(&g) {
                quasi += 1;
            }
            if is_crystallograph(&g) {
                crystals.push(g);
            }
        }
        // Oracle side: closed symmetric subsets.
        let from_roots: HashSet<u64> = enumerate_subsystems_bruteforce(n, limits)?
            .iter()
            .map(|phi| graph_from_roots(phi).expect("subsystems are symmetric").to_bits())
            .collect();
        let from_graphs: HashSet<u64> = crystals.iter().map(ColouredGraph::to_bits).collect();
        log.check("oracle_agreement", from_roots == from_graphs, || {
            format!("{} subsystems vs {} crystallographs", from_roots.len(), from_graphs.len())
        });

        let decomposition = orbit_decomposition(&crystals, n, limits)?;
        let (s_crystal, s_orbits) = structural_counts(n, false, limits)?;
        let (s_quasi, s_quasi_orbits) = structural_counts(n, true, limits)?;
        log.check("orbit_counts", s_crystal == crystals.len() as u64, || {
            format!("orbit sum {s_crystal}, exhaustive {}", crystals.len())
        });
        log.check("orbit_counts", s_orbits == decomposition.len() as u64, || {
            format!("structural orbits {s_orbits}, decomposition {}", decomposition.len())
        });
        log.check("orbit_counts", decomposition.iter().all(|o| o.members == o.orbit_size), || {
            "an orbit of crystallographs left the crystallograph set".into()
        });
        log.check("orbit_counts", s_quasi == quasi, || format!("orbit sum {s_quasi}, exhaustive {quasi}"));
        if n <= limits.up_to_weyl {
            let reps = enumerate_crystallographs(n, EnumerationMode::UpToWeyl, limits)?;
            let same = reps.len() == decomposition.len()
                && reps.iter().zip(&decomposition).all(|(a, b)| *a == b.representative);
            log.check("orbit_counts", same, || "up-to-Weyl enumeration disagrees with the decomposition".into());
        }
        crystal_count = crystals.len() as u64;
        quasi_count = quasi;
        orbits = s_orbits;
        quasi_orbits = s_quasi_orbits;
        method = "exhaustive";
    } else {
        for i in 0..samples {
            let g = match i % 3 {
                0 => random_graph(n, &mut rng),
                1 => random_crystallograph(n, &mut rng),
                _ => {
                    let g = random_crystallograph(n, &mut rng);
                    let slot = rng.gen_range(0..ColouredGraph::slot_count(n).max(1));
                    ColouredGraph::from_bits(n, g.to_bits() ^ (1 << slot))
                }
            };
            single_graph_checks(&g, &table, &slots, &mut log);
        }
        let (c, o) = structural_counts(n, false, limits)?;
        let (q, qo) = structural_counts(n, true, limits)?;
        crystal_count = c;
        quasi_count = q;
        orbits = o;
        quasi_orbits = qo;
        method = "orbit-sum";
    }

    // Weyl action against the correspondence, spot-checked.
    let action = SlotAction::new(n, limits)?;
    for _ in 0..samples.min(10_000) {
        let g = random_graph(n, &mut rng);
        let w = random_signed_permutation(n, &mut rng);
        let phi = roots_from_graph(&g).expect("bichromatic");
        let image = graph_from_roots(&weyl_apply(&w, &phi).expect("same dimension")).expect("symmetric");
        let show = || format!("w={w:?} g={}", graph_to_json(&g));
        log.check("weyl_action", image == g.apply_signed_permutation(&w), show);
        log.check("weyl_action", action.orbit(g.to_bits()).contains(&image.to_bits()), show);
        let closed = table.is_closed(slots.root_mask(g.to_bits()));
        log.check("weyl_action", closed == table.is_closed(slots.root_mask(image.to_bits())), show);
    }

    // Projective correspondence, exhaustive where the pair sweeps are.
    if n <= PAIR_EXHAUSTIVE_MAX {
        let arrangements: HashSet<BTreeSet<Hyperplane>> = enumerate_subsystems_bruteforce(n, limits)?
            .iter()
            .map(|phi| phi.iter().map(Hyperplane::from_root).collect())
            .collect();
        for bits in 0..total_graphs {
            let g = ColouredGraph::from_bits(n, bits);
            // Red loops only: projectify is then a bijection onto B-loop graphs.
            if (0..n).any(|k| g.loop_mask(k) & crate::graphs::GREEN != 0) {
                continue;
            }
            projective_checks(&projectify(&g), &arrangements, &mut log);
        }
    }

    // Nested pairs.
    if n <= PAIR_EXHAUSTIVE_MAX {
        let crystals = enumerate_crystallographs(n, EnumerationMode::All, limits)?;
        let classical: Vec<&ColouredGraph> = crystals.iter().filter(|g| !has_bipartite(g)).collect();
        for g in &crystals {
            for gp in classical.iter().filter(|gp| gp.is_subgraph_of(g)) {
                pair_checks(g, gp, &mut log);
            }
        }
    } else {
        for _ in 0..samples {
            let (g, gp) = random_nested_pair(n, &mut rng);
            pair_checks(&g, &gp, &mut log);
        }
    }

    // Every quasi-crystallograph is a quotient.
    if n <= PAIR_EXHAUSTIVE_MAX {
        for q in enumerate_crystallographs(n, EnumerationMode::Quasi, limits)? {
            let show = || graph_to_json(&q);
            if let Some(r) = log.result("quasi_realization", realize_quasi(&q), show) {
                let quot = quotient_graph(&r.g, &r.gp);
                log.check("quasi_realization", quot.map(|x| x.induced(&r.order)) == Ok(q.clone()), show);
                log.check("quasi_realization", is_exotic_free(&q) == is_crystallograph(&q), show);
            }
        }
    }

    Ok(Verification {
        summary: EnumerationSummary {
            n,
            total_graphs,
            crystallographs: crystal_count,
            quasi_crystallographs: quasi_count,
            orbits,
            quasi_orbits,
            count_method: method,
            samples,
            seed,
            runtime_seconds: start.elapsed().as_secs_f64(),
        },
        checks: log.checks,
        failure_count: log.failure_count,
        failures: log.failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::*;

    #[test]
    fn bruteforce_small() {
        let limits = Limits::default();
        assert_eq!(enumerate_subsystems_bruteforce(1, &limits).unwrap().len(), 4);
        assert!(enumerate_subsystems_bruteforce(5, &limits).is_err());
        let graphs: HashSet<ColouredGraph> = enumerate_crystallographs(2, EnumerationMode::All, &limits)
            .unwrap()
            .into_iter()
            .collect();
        let subsystems: HashSet<ColouredGraph> = enumerate_subsystems_bruteforce(2, &limits)
            .unwrap()
            .iter()
            .map(|phi| graph_from_roots(phi).unwrap())
            .collect();
        assert_eq!(graphs, subsystems);
    }

    #[test]
    fn nullspace_examples() {
        let a2 = a_system(3, &[0, 1, 2]);
        let ns = nullspace(&a2.rows(), 3);
        assert!(linalg::same_span(&ns, &[RationalVector::from_integers(&[1, 1, 1])], 3));
        assert_eq!(nullspace(&[], 2).len(), 2);
        assert!(nullspace(&bc_system(2, &[0, 1]).rows(), 2).is_empty());
    }

    #[test]
    fn orbit_examples() {
        let limits = Limits::default();
        let orbits = orbit_decomposition(&[bipartite_graph(1, 1), a_graph(2)], 2, &limits).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].members, 2);
        assert_eq!(orbits[0].orbit_size, 2);
        let single = orbit_decomposition(&[b_graph(2)], 2, &limits).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].orbit_size, 1);
        let crystals = enumerate_crystallographs(2, EnumerationMode::All, &limits).unwrap();
        let orbits = orbit_decomposition(&crystals, 2, &limits).unwrap();
        for o in &orbits {
            assert!(classify_components(&o.representative).is_ok());
        }
        assert_eq!(orbits.iter().map(|o| o.members).sum::<usize>(), crystals.len());
    }

    #[test]
    fn slot_action_matches_graph_action() {
        let limits = Limits::default();
        let action = SlotAction::new(3, &limits).unwrap();
        assert_eq!(action.group_order(), 48);
        let g = c_plus_d_graph(1, 2);
        let orbit = action.orbit(g.to_bits());
        let direct: HashSet<u64> = SignedPermutation::all(3).map(|w| g.apply_signed_permutation(&w).to_bits()).collect();
        assert_eq!(orbit, direct);
    }

    #[test]
    fn verify_small() {
        let limits = Limits::default();
        for n in 0..=2 {
            let v = verify_all(n, 200, DEFAULT_SEED, &limits).unwrap();
            assert!(v.passed(), "{:?}", v.failures);
        }
        let v = verify_all(1, 10, DEFAULT_SEED, &limits).unwrap();
        assert_eq!(v.summary.total_graphs, 4);
        assert_eq!(v.summary.crystallographs, 4);
    }
}
