//! The Markoff equation `m² + m₁² + m₂² = 3mm₁m₂`, its extended tree of
//! solutions rooted at `(2,1,1)`, maximal zigzags, and the lift of the tree
//! to symmetric matrices of determinant one.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{mod_inverse, BinQuadForm, Mat2, QuadIrr, QuadNum, SquareSplit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::Left => 'L',
            Side::Right => 'R',
        }
    }
}

/// An ordered Markoff triple with its position in the extended tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkoffTriple {
    pub m: BigInt,
    pub m1: BigInt,
    pub m2: BigInt,
    /// Steps from `(2,1,1)`; empty for `(2,1,1)` and `(1,1,1)`.
    pub path: Vec<Side>,
    /// False only for the degenerate solution `(1,1,1)`.
    pub member_sigma_star: bool,
}

pub fn is_markoff(m: &BigInt, m1: &BigInt, m2: &BigInt) -> bool {
    m.is_positive() && m1.is_positive() && m2.is_positive() && m * m + m1 * m1 + m2 * m2 == m * m1 * m2 * 3u32
}

impl MarkoffTriple {
    /// `(2,1,1)`, the root of the extended tree.
    pub fn root() -> Self {
        MarkoffTriple { m: 2.into(), m1: 1.into(), m2: 1.into(), path: vec![], member_sigma_star: true }
    }

    /// `(5,1,2)`, the root of the tree proper.
    pub fn base() -> Self {
        MarkoffTriple { m: 5.into(), m1: 1.into(), m2: 2.into(), path: vec![Side::Left], member_sigma_star: true }
    }

    /// The degenerate solution `(1,1,1)`, which is not a tree node.
    pub fn degenerate() -> Self {
        MarkoffTriple { m: 1.into(), m1: 1.into(), m2: 1.into(), path: vec![], member_sigma_star: false }
    }

    /// The node reached from `(2,1,1)` by following `path`.
    pub fn from_path(path: &[Side]) -> Result<Self> {
        let mut t = MarkoffTriple::root();
        for &s in path {
            t = t.child(s)?.ok_or_else(|| Error::NotInTree("(5,2,1)".into()))?;
        }
        Ok(t)
    }

    pub fn is_root(&self) -> bool {
        self.member_sigma_star && self.path.is_empty()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.member_sigma_star
    }

    /// Side of this node under its parent; `None` for the root.
    pub fn side(&self) -> Option<Side> {
        self.path.last().copied()
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }

    pub fn entries(&self) -> [&BigInt; 3] {
        [&self.m, &self.m1, &self.m2]
    }

    fn with(&self, m: BigInt, m1: BigInt, m2: BigInt, s: Side) -> Self {
        let mut path = self.path.clone();
        path.push(s);
        MarkoffTriple { m, m1, m2, path, member_sigma_star: true }
    }

    /// Left and right successors; the root has no right successor.
    pub fn successors(&self) -> Result<(MarkoffTriple, Option<MarkoffTriple>)> {
        if self.is_degenerate() {
            return Err(Error::Degenerate("(1,1,1) has no successors in the tree".into()));
        }
        let left = self.with(&self.m * &self.m1 * 3u32 - &self.m2, self.m1.clone(), self.m.clone(), Side::Left);
        if self.is_root() {
            return Ok((left, None));
        }
        let right = self.with(&self.m * &self.m2 * 3u32 - &self.m1, self.m.clone(), self.m2.clone(), Side::Right);
        Ok((left, Some(right)))
    }

    pub fn child(&self, s: Side) -> Result<Option<MarkoffTriple>> {
        let (l, r) = self.successors()?;
        Ok(match s {
            Side::Left => Some(l),
            Side::Right => r,
        })
    }

    pub fn parent(&self) -> Option<MarkoffTriple> {
        let (&s, rest) = self.path.split_last()?;
        let (m, m1, m2) = match s {
            Side::Left => (self.m2.clone(), self.m1.clone(), &self.m1 * &self.m2 * 3u32 - &self.m),
            Side::Right => (self.m1.clone(), &self.m1 * &self.m2 * 3u32 - &self.m, self.m2.clone()),
        };
        Some(MarkoffTriple { m, m1, m2, path: rest.to_vec(), member_sigma_star: true })
    }
}

impl fmt::Display for MarkoffTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m, self.m1, self.m2)
    }
}

fn show(m: &BigInt, m1: &BigInt, m2: &BigInt) -> String {
    format!("({m},{m1},{m2})")
}

/// Finds `(m, m₁, m₂)` in the extended tree by climbing to `(2,1,1)`.
pub fn locate(m: &BigInt, m1: &BigInt, m2: &BigInt) -> Result<MarkoffTriple> {
    let not_in = || Error::NotInTree(show(m, m1, m2));
    if !is_markoff(m, m1, m2) {
        return Err(not_in());
    }
    let (mut a, mut b, mut c) = (m.clone(), m1.clone(), m2.clone());
    let mut rev = Vec::new();
    let two = BigInt::from(2);
    loop {
        if a == two && b.is_one() && c.is_one() {
            break;
        }
        if a <= b || a <= c {
            return Err(not_in());
        }
        let up = &b * &c * 3u32 - &a;
        let s = if b < c { Side::Left } else { Side::Right };
        (a, b, c) = match s {
            Side::Left => (c, b, up),
            Side::Right => (b, up, c),
        };
        // the right child of (2,1,1) is the excluded permutation (5,2,1)
        if s == Side::Right && a == two && b.is_one() && c.is_one() {
            return Err(not_in());
        }
        rev.push(s);
    }
    rev.reverse();
    Ok(MarkoffTriple { m: m.clone(), m1: m1.clone(), m2: m2.clone(), path: rev, member_sigma_star: true })
}

/// Nodes of the tree rooted at `(5,1,2)` down to `depth` levels below it,
/// in breadth-first order; `2^(depth+1) − 1` triples.
pub fn tree(depth: usize) -> Vec<MarkoffTriple> {
    let mut out = Vec::with_capacity((1usize << (depth + 1)) - 1);
    let mut queue = VecDeque::from([MarkoffTriple::base()]);
    while let Some(t) = queue.pop_front() {
        let level = t.depth() - 1;
        if level <= depth {
            let (l, r) = t.successors().expect("tree nodes are nondegenerate");
            if level < depth {
                queue.push_back(l);
                queue.extend(r);
            }
            out.push(t);
        }
    }
    out
}

/// Like [`tree`], with `(2,1,1)` prepended.
pub fn extended_tree(depth: usize) -> Vec<MarkoffTriple> {
    let mut v = vec![MarkoffTriple::root()];
    v.extend(tree(depth));
    v
}

/// First `n` nodes of the maximal zigzag starting at `t`.
///
/// The first step goes to the same side on which `t` hangs from its parent,
/// so that no ancestor can be prepended; the root starts to the left.
pub fn maximal_zigzag(t: &MarkoffTriple, n: usize) -> Result<Vec<MarkoffTriple>> {
    if t.is_degenerate() {
        return Err(Error::Degenerate("(1,1,1) starts no zigzag".into()));
    }
    let mut s = t.side().unwrap_or(Side::Left);
    let mut out = Vec::with_capacity(n);
    let mut cur = t.clone();
    for i in 0..n {
        if i > 0 {
            cur = cur.child(s)?.expect("zigzag steps stay in the tree");
            s = s.other();
        }
        out.push(cur.clone());
    }
    Ok(out)
}

/// The symmetric matrix `(m k; k l)` of determinant one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohnMatrix {
    pub m: BigInt,
    pub k: BigInt,
    pub l: BigInt,
}

impl CohnMatrix {
    pub fn new(m: impl Into<BigInt>, k: impl Into<BigInt>, l: impl Into<BigInt>) -> Self {
        CohnMatrix { m: m.into(), k: k.into(), l: l.into() }
    }

    /// `x₍₁,₁,₁₎`.
    pub fn of_degenerate() -> Self {
        CohnMatrix::new(1, 1, 2)
    }

    /// `x₍₂,₁,₁₎`.
    pub fn of_root() -> Self {
        CohnMatrix::new(2, 1, 1)
    }

    pub fn to_mat2(&self) -> Mat2 {
        Mat2::new(self.m.clone(), self.k.clone(), self.k.clone(), self.l.clone())
    }

    /// Reads a symmetric matrix; `None` if it is not symmetric.
    pub fn from_mat2(x: &Mat2) -> Option<Self> {
        x.is_symmetric().then(|| CohnMatrix { m: x.a.clone(), k: x.b.clone(), l: x.d.clone() })
    }

    pub fn det(&self) -> BigInt {
        &self.m * &self.l - &self.k * &self.k
    }

    /// Determinant one, positive entries, `max(k, l) ≤ m ≤ 2k`, `l ≤ m`.
    pub fn satisfies_bounds(&self) -> bool {
        self.det().is_one()
            && self.k.is_positive()
            && self.l.is_positive()
            && self.k <= self.m
            && self.l <= self.m
            && self.m <= &self.k * 2u32
    }

    /// `F = mT² + (3m − 2k)TU + (l − 3k)U²`.
    pub fn form(&self) -> BinQuadForm {
        BinQuadForm { a: self.m.clone(), b: &self.m * 3u32 - &self.k * 2u32, c: &self.l - &self.k * 3u32 }
    }

    /// `(α, ᾱ)` with `α = (2k − 3m + √(9m² − 4))/(2m)`.
    pub fn alpha(&self) -> (QuadIrr, QuadIrr) {
        let d = &self.m * &self.m * 9u32 - 4u32;
        let split = SquareSplit::of(&d);
        let p = &self.k * 2u32 - &self.m * 3u32;
        let r = &self.m * 2u32;
        let a = QuadNum::with_split(p.clone(), BigInt::one(), &split, r.clone()).unwrap();
        let b = QuadNum::with_split(p, -BigInt::one(), &split, r).unwrap();
        (QuadIrr::new(a).expect("9m² − 4 is never a square"), QuadIrr::new(b).expect("9m² − 4 is never a square"))
    }

    /// `q = tr(x·M)`, equal to `3m`.
    pub fn trace_with_m(&self) -> BigInt {
        (&self.to_mat2() * &Mat2::markoff_m()).trace()
    }
}

impl fmt::Display for CohnMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.m, self.k, self.k, self.l)
    }
}

/// A node `(x, x₁, x₂)` of the matrix tree with `x = x₁·M·x₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohnNode {
    pub x: CohnMatrix,
    pub x1: CohnMatrix,
    pub x2: CohnMatrix,
}

impl CohnNode {
    /// `((5 3;3 2), (1 1;1 2), (2 1;1 1))` at `(5,1,2)`.
    pub fn base() -> Self {
        CohnNode { x: CohnMatrix::new(5, 3, 2), x1: CohnMatrix::of_degenerate(), x2: CohnMatrix::of_root() }
    }

    fn product(a: &CohnMatrix, b: &CohnMatrix) -> CohnMatrix {
        let p = &(&a.to_mat2() * &Mat2::markoff_m()) * &b.to_mat2();
        CohnMatrix::from_mat2(&p).expect("successor matrices are symmetric")
    }

    pub fn left(&self) -> CohnNode {
        CohnNode { x: Self::product(&self.x1, &self.x), x1: self.x1.clone(), x2: self.x.clone() }
    }

    pub fn right(&self) -> CohnNode {
        CohnNode { x: Self::product(&self.x, &self.x2), x1: self.x.clone(), x2: self.x2.clone() }
    }

    pub fn child(&self, s: Side) -> CohnNode {
        match s {
            Side::Left => self.left(),
            Side::Right => self.right(),
        }
    }

    /// Exact check of `x = x₁·M·x₂`.
    pub fn is_consistent(&self) -> bool {
        Self::product(&self.x1, &self.x2) == self.x
    }
}

/// The matrix node lying over `t`; `t` must be below `(2,1,1)`.
pub fn cohn_node(t: &MarkoffTriple) -> Result<CohnNode> {
    if t.is_degenerate() || t.path.first() != Some(&Side::Left) {
        return Err(Error::NotInTree(t.to_string()));
    }
    Ok(t.path[1..].iter().fold(CohnNode::base(), |n, &s| n.child(s)))
}

/// `x_m` for any member of the extended tree or `(1,1,1)`.
pub fn cohn_matrix(t: &MarkoffTriple) -> Result<CohnMatrix> {
    if t.is_degenerate() {
        Ok(CohnMatrix::of_degenerate())
    } else if t.is_root() {
        Ok(CohnMatrix::of_root())
    } else {
        Ok(cohn_node(t)?.x)
    }
}

/// Pairs every node of [`tree`] with its matrix node, sharing work down the tree.
pub fn cohn_tree(depth: usize) -> Vec<(MarkoffTriple, CohnNode)> {
    let mut out = Vec::with_capacity((1usize << (depth + 1)) - 1);
    let mut queue = VecDeque::from([(MarkoffTriple::base(), CohnNode::base())]);
    while let Some((t, n)) = queue.pop_front() {
        if t.depth() - 1 < depth {
            let (l, r) = t.successors().expect("tree nodes are nondegenerate");
            queue.push_back((l, n.left()));
            queue.push_back((r.expect("below the root"), n.right()));
        }
        out.push((t, n));
    }
    out
}

/// The `k` in `(0, m]` with `k·m₂ ≡ m₁ (mod m)`.
pub fn offdiag_congruence(t: &MarkoffTriple) -> BigInt {
    let inv = mod_inverse(&t.m2, &t.m).expect("entries of a Markoff triple are coprime");
    let k = (&t.m1 * inv).mod_floor(&t.m);
    if k.is_zero() {
        t.m.clone()
    } else {
        k
    }
}

/// `F_m`, of discriminant `9m² − 4`.
pub fn markoff_form(t: &MarkoffTriple) -> Result<BinQuadForm> {
    Ok(cohn_matrix(t)?.form())
}

/// `(α_m, ᾱ_m)`; `F_m(1, α_m) = 0`.
pub fn markoff_alpha(t: &MarkoffTriple) -> Result<(QuadIrr, QuadIrr)> {
    Ok(cohn_matrix(t)?.alpha())
}

/// `q₃² + q₂² + q₁² = q₃q₂q₁` with `q = tr(x·M)`, for three consecutive
/// zigzag matrices.
pub fn fricke_check(xs: &[CohnMatrix; 3]) -> bool {
    let q: Vec<BigInt> = xs.iter().map(CohnMatrix::trace_with_m).collect();
    fricke_identity(&q[0], &q[1], &q[2])
}

/// The trace identity on upper-left entries, `q = 3m`.
pub fn fricke_check_values(m: [&BigInt; 3]) -> bool {
    let q: Vec<BigInt> = m.iter().map(|x| *x * 3u32).collect();
    fricke_identity(&q[0], &q[1], &q[2])
}

fn fricke_identity(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    // tr(ᵗM·M⁻¹) + 2 = 0 for M = (3 1; −1 0)
    let mt = Mat2::markoff_m().transpose();
    let minv = Mat2::markoff_m().inverse().expect("det M = 1");
    let extra = (&mt * &minv).trace() + 2u32;
    a * a + b * b + c * c == a * b * c + extra
}

/// Walks the maximal zigzag from a node, yielding each triple with its matrix.
#[derive(Clone, Debug)]
pub struct ZigzagWalk {
    triple: MarkoffTriple,
    /// `None` while at the root, whose matrix has no node.
    node: Option<CohnNode>,
    side: Side,
}

impl ZigzagWalk {
    pub fn new(t: &MarkoffTriple) -> Result<Self> {
        if t.is_degenerate() {
            return Err(Error::Degenerate("(1,1,1) starts no zigzag".into()));
        }
        let node = if t.is_root() { None } else { Some(cohn_node(t)?) };
        Ok(ZigzagWalk { triple: t.clone(), node, side: t.side().unwrap_or(Side::Left) })
    }

    /// Side of the first step.
    pub fn first_side(t: &MarkoffTriple) -> Side {
        t.side().unwrap_or(Side::Left)
    }
}

impl Iterator for ZigzagWalk {
    type Item = (MarkoffTriple, CohnMatrix);

    fn next(&mut self) -> Option<Self::Item> {
        let x = match &self.node {
            Some(n) => n.x.clone(),
            None => CohnMatrix::of_root(),
        };
        let out = (self.triple.clone(), x);
        self.triple = self.triple.child(self.side).ok().flatten().expect("zigzag steps stay in the tree");
        self.node = Some(match &self.node {
            Some(n) => n.child(self.side),
            None => CohnNode::base(),
        });
        self.side = self.side.other();
        Some(out)
    }
}

/// Matrices `x_m` along the maximal zigzag from `t`.
pub fn zigzag_matrices(t: &MarkoffTriple, n: usize) -> Result<Vec<CohnMatrix>> {
    Ok(ZigzagWalk::new(t)?.take(n).map(|(_, x)| x).collect())
}

/// True when every entry pair of the triple is coprime.
pub fn pairwise_coprime(t: &MarkoffTriple) -> bool {
    t.m.gcd(&t.m1).is_one() && t.m.gcd(&t.m2).is_one() && t.m1.gcd(&t.m2).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, quadirr_make};

    fn tr(m: i64, m1: i64, m2: i64) -> MarkoffTriple {
        locate(&int(m), &int(m1), &int(m2)).unwrap()
    }

    fn triple_of(t: &MarkoffTriple) -> (BigInt, BigInt, BigInt) {
        (t.m.clone(), t.m1.clone(), t.m2.clone())
    }

    #[test]
    fn equation() {
        assert!(is_markoff(&int(5), &int(1), &int(2)));
        assert!(is_markoff(&int(1), &int(1), &int(1)));
        assert!(!is_markoff(&int(2), &int(2), &int(1)));
        assert!(!is_markoff(&int(0), &int(0), &int(0)));
    }

    #[test]
    fn successors_of_small_nodes() {
        let (l, r) = MarkoffTriple::base().successors().unwrap();
        assert_eq!(triple_of(&l), (int(13), int(1), int(5)));
        assert_eq!(triple_of(&r.unwrap()), (int(29), int(5), int(2)));
        let (l, r) = tr(13, 1, 5).successors().unwrap();
        assert_eq!(triple_of(&l), (int(34), int(1), int(13)));
        assert_eq!(triple_of(&r.unwrap()), (int(194), int(13), int(5)));
        let (l, r) = MarkoffTriple::root().successors().unwrap();
        assert_eq!(l, MarkoffTriple::base());
        assert!(r.is_none());
        assert!(MarkoffTriple::degenerate().successors().is_err());
    }

    #[test]
    fn locating() {
        assert_eq!(tr(29, 5, 2).path, vec![Side::Left, Side::Right]);
        assert!(tr(2, 1, 1).path.is_empty());
        for bad in [(5, 2, 1), (1, 1, 1), (2, 2, 1), (1, 2, 5), (29, 2, 5)] {
            assert!(matches!(locate(&int(bad.0), &int(bad.1), &int(bad.2)), Err(Error::NotInTree(_))));
        }
    }

    #[test]
    fn zigzags() {
        let ms = |t: &MarkoffTriple, n| -> Vec<_> { maximal_zigzag(t, n).unwrap().iter().map(triple_of).collect() };
        let v = |x: &[(i64, i64, i64)]| -> Vec<_> { x.iter().map(|&(a, b, c)| (int(a), int(b), int(c))).collect() };
        assert_eq!(ms(&MarkoffTriple::root(), 4), v(&[(2, 1, 1), (5, 1, 2), (29, 5, 2), (433, 5, 29)]));
        assert_eq!(ms(&MarkoffTriple::base(), 3), v(&[(5, 1, 2), (13, 1, 5), (194, 13, 5)]));
        assert_eq!(ms(&tr(29, 5, 2), 2), v(&[(29, 5, 2), (169, 29, 2)]));
    }

    #[test]
    fn cohn_nodes() {
        let n = cohn_node(&MarkoffTriple::base()).unwrap();
        assert_eq!(n, CohnNode::base());
        let n = cohn_node(&tr(13, 1, 5)).unwrap();
        assert_eq!(n.x, CohnMatrix::new(13, 8, 5));
        assert_eq!(n.x2, CohnMatrix::new(5, 3, 2));
        let n = cohn_node(&tr(29, 5, 2)).unwrap();
        assert_eq!(
            (n.x, n.x1, n.x2),
            (CohnMatrix::new(29, 17, 10), CohnMatrix::new(5, 3, 2), CohnMatrix::new(2, 1, 1))
        );
        assert!(cohn_node(&MarkoffTriple::root()).is_err());
        assert_eq!(cohn_matrix(&MarkoffTriple::root()).unwrap(), CohnMatrix::new(2, 1, 1));
        assert_eq!(cohn_matrix(&MarkoffTriple::degenerate()).unwrap(), CohnMatrix::new(1, 1, 2));
    }

    #[test]
    fn congruence() {
        assert_eq!(offdiag_congruence(&MarkoffTriple::base()), int(3));
        assert_eq!(offdiag_congruence(&MarkoffTriple::degenerate()), int(1));
        assert_eq!(offdiag_congruence(&tr(13, 1, 5)), int(8));
        assert_eq!(offdiag_congruence(&MarkoffTriple::root()), int(1));
    }

    #[test]
    fn forms_and_roots() {
        let f = markoff_form(&MarkoffTriple::degenerate()).unwrap();
        assert_eq!((f.a.clone(), f.b.clone(), f.c.clone(), f.disc()), (int(1), int(1), int(-1), int(5)));
        let f = markoff_form(&MarkoffTriple::root()).unwrap();
        assert_eq!((f.a.clone(), f.b.clone(), f.c.clone(), f.disc()), (int(2), int(4), int(-2), int(32)));
        let f = markoff_form(&MarkoffTriple::base()).unwrap();
        assert_eq!((f.a.clone(), f.b.clone(), f.c.clone(), f.disc()), (int(5), int(9), int(-7), int(221)));

        let (a, b) = markoff_alpha(&MarkoffTriple::degenerate()).unwrap();
        assert_eq!((a, b), (quadirr_make(-1, 1, 5, 2).unwrap(), quadirr_make(-1, -1, 5, 2).unwrap()));
        let (a, b) = markoff_alpha(&MarkoffTriple::root()).unwrap();
        assert_eq!((a, b), (quadirr_make(-1, 1, 2, 1).unwrap(), quadirr_make(-1, -1, 2, 1).unwrap()));
        let (a, b) = markoff_alpha(&MarkoffTriple::base()).unwrap();
        assert_eq!((a, b), (quadirr_make(-9, 1, 221, 10).unwrap(), quadirr_make(-9, -1, 221, 10).unwrap()));
    }

    #[test]
    fn fricke() {
        assert!(fricke_check_values([&int(2), &int(5), &int(29)]));
        assert!(fricke_check_values([&int(13), &int(1), &int(5)]));
        assert!(!fricke_check_values([&int(5), &int(1), &int(3)]));
        let xs = zigzag_matrices(&MarkoffTriple::root(), 3).unwrap();
        assert!(fricke_check(&[xs[0].clone(), xs[1].clone(), xs[2].clone()]));
    }

    #[test]
    fn zigzag_matrix_lists() {
        assert_eq!(
            zigzag_matrices(&MarkoffTriple::base(), 2).unwrap(),
            vec![CohnMatrix::new(5, 3, 2), CohnMatrix::new(13, 8, 5)]
        );
        assert_eq!(zigzag_matrices(&MarkoffTriple::base(), 3).unwrap()[2], CohnMatrix::new(194, 119, 73));
        assert_eq!(
            zigzag_matrices(&MarkoffTriple::root(), 3).unwrap(),
            vec![CohnMatrix::new(2, 1, 1), CohnMatrix::new(5, 3, 2), CohnMatrix::new(29, 17, 10)]
        );
    }

    #[test]
    fn tree_sizes() {
        assert_eq!(tree(0).len(), 1);
        assert_eq!(tree(3).len(), 15);
        assert!(tree(3).iter().any(|t| triple_of(t) == (int(433), int(5), int(29))));
        assert_eq!(cohn_tree(3).len(), 15);
    }
}
