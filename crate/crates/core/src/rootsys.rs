//! Roots of BC_n, reflections, and the hyperoctahedral Weyl group.
//!
//! Coordinates are 0-based internally; the scalar product is the standard
//! one, `(e_i | e_j) = δ_ij`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rational::RationalVector;

pub type Coords = SmallVec<[i8; 8]>;

/// A root of BC_n: one of `±e_i ± e_j` (i ≠ j), `±e_i`, `±2e_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Coords,
}

/// Length classes of BC_n roots, by squared norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootShape {
    /// `±e_i`, norm 1.
    Short,
    /// `±e_i ± e_j`, norm 2.
    Straight,
    /// `±2e_i`, norm 4.
    Long,
}

impl Root {
    pub fn new(coords: &[i64]) -> Result<Self> {
        let nonzero: Vec<i64> = coords.iter().copied().filter(|&x| x != 0).collect();
        let ok = match nonzero.as_slice() {
            [x] => matches!(x.abs(), 1 | 2),
            [x, y] => x.abs() == 1 && y.abs() == 1,
            _ => false,
        };
        if !ok {
            return Err(Error::NotARoot(coords.to_vec()));
        }
        Ok(Self {
            coords: coords.iter().map(|&x| x as i8).collect(),
        })
    }

    /// `sign_i·e_i + sign_j·e_j`.
    pub fn straight(n: usize, i: usize, j: usize, sign_i: i8, sign_j: i8) -> Self {
        assert!(i != j && i < n && j < n);
        let mut coords: Coords = SmallVec::from_elem(0, n);
        coords[i] = sign_i;
        coords[j] = sign_j;
        Self { coords }
    }

    /// `scale·e_i` with `scale ∈ {±1, ±2}`.
    pub fn axis(n: usize, i: usize, scale: i8) -> Self {
        assert!(i < n && matches!(scale.abs(), 1 | 2));
        let mut coords: Coords = SmallVec::from_elem(0, n);
        coords[i] = scale;
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i8] {
        &self.coords
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.coords.iter().map(|&x| x as i64).collect()
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector::from_integers(&self.to_vec())
    }

    pub fn norm2(&self) -> i64 {
        self.coords.iter().map(|&x| (x as i64) * (x as i64)).sum()
    }

    pub fn shape(&self) -> RootShape {
        match self.norm2() {
            1 => RootShape::Short,
            2 => RootShape::Straight,
            _ => RootShape::Long,
        }
    }

    pub fn dot(&self, other: &Root) -> i64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a as i64 * b as i64)
            .sum()
    }

    pub fn neg(&self) -> Root {
        Self {
            coords: self.coords.iter().map(|&x| -x).collect(),
        }
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> SmallVec<[usize; 2]> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Pairing with a vector of `V`, as the covector `(self | ·)`.
    pub fn eval(&self, v: &[i64]) -> i64 {
        self.coords.iter().zip(v).map(|(&a, &b)| a as i64 * b).sum()
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords.as_slice())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `σ_alpha(beta) = beta − 2(beta|alpha)/(alpha|alpha)·alpha`.
pub fn reflect(alpha: &Root, beta: &Root) -> Result<Root> {
    if alpha.dim() != beta.dim() {
        return Err(Error::DimensionMismatch {
            expected: alpha.dim(),
            found: beta.dim(),
        });
    }
    Ok(reflect_unchecked(alpha, beta))
}

fn reflect_unchecked(alpha: &Root, beta: &Root) -> Root {
    let num = 2 * beta.dot(alpha);
    let den = alpha.norm2();
    // Cartan integers of BC_n always divide exactly.
    debug_assert_eq!(num % den, 0);
    let c = num / den;
    if c == 0 {
        return beta.clone();
    }
    let coords = beta
        .coords
        .iter()
        .zip(&alpha.coords)
        .map(|(&b, &a)| (b as i64 - c * a as i64) as i8)
        .collect();
    Root { coords }
}

/// A finite set of roots of BC_n, for a fixed ambient dimension `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet {
    n: usize,
    roots: BTreeSet<Root>,
}

impl RootSet {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            roots: BTreeSet::new(),
        }
    }

    pub fn from_roots(n: usize, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        let mut set = Self::new(n);
        for r in roots {
            set.insert(r)?;
        }
        Ok(set)
    }

    /// Adds `root` and `-root`.
    pub fn from_pairs(n: usize, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        let mut set = Self::new(n);
        for r in roots {
            set.insert(r.neg())?;
            set.insert(r)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, root: Root) -> Result<bool> {
        if root.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: root.dim(),
            });
        }
        Ok(self.roots.insert(root))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.roots.contains(root)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter()
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.n == other.n && self.roots.is_subset(&other.roots)
    }

    pub fn union(&self, other: &RootSet) -> Result<RootSet> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(Self {
            n: self.n,
            roots: self.roots.union(&other.roots).cloned().collect(),
        })
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        Self {
            n: self.n,
            roots: self.roots.difference(&other.roots).cloned().collect(),
        }
    }

    /// Multiset of squared lengths, sorted.
    pub fn length_profile(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.roots.iter().map(Root::norm2).collect();
        v.sort_unstable();
        v
    }

    /// Root matrix: one rational row per root.
    pub fn rows(&self) -> Vec<RationalVector> {
        self.roots.iter().map(Root::to_rational).collect()
    }

    /// Parses the text form: one root per line, space-separated integers.
    /// Blank lines and `#` comments are skipped.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut roots = Vec::new();
        let mut dim = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let coords = line
                .split_whitespace()
                .map(|t| t.parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            match dim {
                None => dim = Some(coords.len()),
                Some(d) if d != coords.len() => {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        found: coords.len(),
                    })
                }
                _ => {}
            }
            roots.push(Root::new(&coords)?);
        }
        Self::from_roots(dim.unwrap_or(0), roots)
    }

    pub fn to_text(&self) -> String {
        self.roots.iter().map(|r| format!("{r}\n")).collect()
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.roots.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a RootSet {
    type Item = &'a Root;
    type IntoIter = std::collections::btree_set::Iter<'a, Root>;
    fn into_iter(self) -> Self::IntoIter {
        self.roots.iter()
    }
}

pub fn is_symmetric(phi: &RootSet) -> bool {
    phi.iter().all(|a| phi.contains(&a.neg()))
}

/// Symmetric and closed under `σ_α` for every `α ∈ phi`.
pub fn is_root_subsystem(phi: &RootSet) -> bool {
    if !is_symmetric(phi) {
        return false;
    }
    phi.iter()
        .all(|a| phi.iter().all(|b| phi.contains(&reflect_unchecked(a, b))))
}

/// Smallest root subsystem of BC_n containing `phi`.
pub fn reflection_closure(phi: &RootSet) -> RootSet {
    let mut seen: HashSet<Root> = HashSet::new();
    let mut members: Vec<Root> = Vec::new();
    let mut queue: Vec<Root> = Vec::new();
    for r in phi.iter() {
        for x in [r.clone(), r.neg()] {
            if seen.insert(x.clone()) {
                queue.push(x);
            }
        }
    }
    while let Some(new) = queue.pop() {
        members.push(new.clone());
        for old in &members {
            for image in [reflect_unchecked(&new, old), reflect_unchecked(old, &new)] {
                if seen.insert(image.clone()) {
                    queue.push(image);
                }
            }
        }
    }
    RootSet {
        n: phi.n,
        roots: seen.into_iter().collect(),
    }
}

/// All roots of BC_n, in sorted order.
pub fn bc_roots(n: usize) -> Vec<Root> {
    bc_system(n, &(0..n).collect::<Vec<_>>())
        .roots
        .into_iter()
        .collect()
}

/// One root from each opposite pair of BC_n: `e_i − e_j`, `e_i + e_j`
/// (i < j), `e_i`, `2e_i`.
pub fn positive_roots(n: usize) -> Vec<Root> {
    let mut out = Vec::with_capacity(n * n + n);
    for i in 0..n {
        for j in i + 1..n {
            out.push(Root::straight(n, i, j, 1, -1));
            out.push(Root::straight(n, i, j, 1, 1));
        }
    }
    for i in 0..n {
        out.push(Root::axis(n, i, 1));
        out.push(Root::axis(n, i, 2));
    }
    out
}

/// `A` on the given coordinates: `±(e_i − e_j)`.
pub fn a_system(n: usize, nodes: &[usize]) -> RootSet {
    let mut set = RootSet::new(n);
    for (a, &i) in nodes.iter().enumerate() {
        for &j in &nodes[a + 1..] {
            set.roots.insert(Root::straight(n, i, j, 1, -1));
            set.roots.insert(Root::straight(n, i, j, -1, 1));
        }
    }
    set
}

/// `D` on the given coordinates: `±e_i ± e_j`.
pub fn d_system(n: usize, nodes: &[usize]) -> RootSet {
    let mut set = RootSet::new(n);
    for (a, &i) in nodes.iter().enumerate() {
        for &j in &nodes[a + 1..] {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                set.roots.insert(Root::straight(n, i, j, si, sj));
            }
        }
    }
    set
}

fn with_axes(mut set: RootSet, nodes: &[usize], scales: &[i8]) -> RootSet {
    for &i in nodes {
        for &s in scales {
            set.roots.insert(Root::axis(set.n, i, s));
            set.roots.insert(Root::axis(set.n, i, -s));
        }
    }
    set
}

pub fn b_system(n: usize, nodes: &[usize]) -> RootSet {
    with_axes(d_system(n, nodes), nodes, &[1])
}

pub fn c_system(n: usize, nodes: &[usize]) -> RootSet {
    with_axes(d_system(n, nodes), nodes, &[2])
}

pub fn bc_system(n: usize, nodes: &[usize]) -> RootSet {
    with_axes(d_system(n, nodes), nodes, &[1, 2])
}

/// Element of W(BC_n) acting by `e_i ↦ signs[i]·e_{perm[i]}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: signs.len(),
            });
        }
        let mut hit = vec![false; n];
        for &p in &perm {
            if p >= n || hit[p] {
                return Err(Error::Precondition(format!("{perm:?} is not a bijection")));
            }
            hit[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Precondition(format!("signs {signs:?} must be ±1")));
        }
        Ok(Self { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// `σ_i`: the reflection in `e_i`, flipping that coordinate.
    pub fn sign_flip(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.signs[i] = -1;
        w
    }

    /// `σ^-_{ij}`: the transposition of coordinates `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm.swap(i, j);
        w
    }

    /// `σ^+_{ij}`: `e_i ↦ −e_j`, `e_j ↦ −e_i`.
    pub fn signed_transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::transposition(n, i, j);
        w.signs[i] = -1;
        w.signs[j] = -1;
        w
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing signed permutations of different degree");
        let n = self.n();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let mid = other.perm[i];
            perm[i] = self.perm[mid];
            signs[i] = other.signs[i] * self.signs[mid];
        }
        Self { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        Self { perm, signs }
    }

    pub fn apply_root(&self, root: &Root) -> Root {
        let mut coords: Coords = SmallVec::from_elem(0, root.dim());
        for (i, &x) in root.coords.iter().enumerate() {
            coords[self.perm[i]] = self.signs[i] * x;
        }
        Root { coords }
    }

    /// All `2^n·n!` elements, permutations in lexicographic order and sign
    /// masks innermost.
    pub fn all(n: usize) -> impl Iterator<Item = SignedPermutation> {
        Permutations::new(n).flat_map(move |perm| {
            (0u32..1 << n).map(move |mask| SignedPermutation {
                perm: perm.clone(),
                signs: (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect(),
            })
        })
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.n())
            .map(|i| {
                let s = if self.signs[i] < 0 { "-" } else { "" };
                format!("{}→{s}{}", i + 1, self.perm[i] + 1)
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Lexicographic permutations of `0..n`.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Self {
            next: Some((0..n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut p = current.clone();
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            self.next = Some(p);
        }
        Some(current)
    }
}

pub fn weyl_apply(w: &SignedPermutation, phi: &RootSet) -> Result<RootSet> {
    if w.n() != phi.n {
        return Err(Error::DimensionMismatch {
            expected: phi.n,
            found: w.n(),
        });
    }
    Ok(RootSet {
        n: phi.n,
        roots: phi.iter().map(|r| w.apply_root(r)).collect(),
    })
}

/// Per-coordinate count of incident roots of each length; invariant under
/// sign changes, permuted by the permutation part.
fn coordinate_profiles(phi: &RootSet) -> Vec<[usize; 3]> {
    let mut prof = vec![[0usize; 3]; phi.n];
    for r in phi.iter() {
        let slot = match r.shape() {
            RootShape::Short => 0,
            RootShape::Straight => 1,
            RootShape::Long => 2,
        };
        for i in r.support() {
            prof[i][slot] += 1;
        }
    }
    prof
}

/// Search W(BC_n) for `w` with `w(phi) = psi`.
pub fn weyl_equivalent(
    phi: &RootSet,
    psi: &RootSet,
    limit: usize,
) -> Result<Option<SignedPermutation>> {
    if phi.n != psi.n {
        return Err(Error::DimensionMismatch {
            expected: phi.n,
            found: psi.n,
        });
    }
    let n = phi.n;
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "Weyl-orbit search",
            n,
            limit,
        });
    }
    if phi.len() != psi.len() || phi.length_profile() != psi.length_profile() {
        return Ok(None);
    }
    let (pa, pb) = (coordinate_profiles(phi), coordinate_profiles(psi));
    for perm in Permutations::new(n) {
        if (0..n).any(|i| pa[i] != pb[perm[i]]) {
            continue;
        }
        for mask in 0u32..1 << n {
            let w = SignedPermutation {
                perm: perm.clone(),
                signs: (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect(),
            };
            if phi.iter().all(|r| psi.contains(&w.apply_root(r))) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}
