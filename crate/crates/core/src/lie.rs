//! Root systems of the classical families, painted Dynkin diagrams and the
//! Poincaré polynomial of the associated flag manifold.
//!
//! Every root is written in the basis `e_1, …, e_d` of linear functionals on
//! the diagonal Cartan subalgebra, and simple roots are always the canonical
//! ones:
//!
//! | family | group       | simple roots                                   |
//! |--------|-------------|------------------------------------------------|
//! | A      | SU(d)       | `e_i − e_{i+1}`, `i < d`                        |
//! | B      | SO(2d+1)    | `e_i − e_{i+1}`, `i < d`, then `e_d`            |
//! | C      | Sp(d)       | `e_i − e_{i+1}`, `i < d`, then `2e_d`           |
//! | D      | SO(2d)      | `e_i − e_{i+1}`, `i < d`, then `e_{d−1} + e_d`  |

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Classical Lie algebra family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `SU(d)`.
    A,
    /// `SO(2d+1)`.
    B,
    /// `Sp(d)`.
    C,
    /// `SO(2d)`.
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    /// Smallest rank accepted by [`GroupSpec::new`].
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 2,
            Family::B | Family::C => 1,
            Family::D => 3,
        }
    }
}

/// A classical compact group, identified by family and the integer `d`
/// (the number of basis functionals `e_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSpec {
    family: Family,
    rank: usize,
}

impl GroupSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        if rank < family.min_rank() {
            return Err(Error::InvalidGroup { family, rank, min: family.min_rank() });
        }
        Ok(GroupSpec { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The integer `d`; for family A this is the matrix size, not the Lie rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        let d = self.rank;
        match self.family {
            Family::A => d,
            Family::B => 2 * d + 1,
            Family::C | Family::D => 2 * d,
        }
    }

    /// Number of nodes of the Dynkin diagram.
    pub fn num_simple_roots(&self) -> usize {
        match self.family {
            Family::A => self.rank - 1,
            _ => self.rank,
        }
    }

    /// Canonical simple roots, node `k` (1-based) at index `k − 1`.
    pub fn simple_roots(&self) -> Vec<Root> {
        let d = self.rank;
        let mut out: Vec<Root> = (1..d).map(|i| Root::from_pairs(d, &[(i, 1), (i + 1, -1)])).collect();
        match self.family {
            Family::A => {}
            Family::B => out.push(Root::from_pairs(d, &[(d, 1)])),
            Family::C => out.push(Root::from_pairs(d, &[(d, 2)])),
            Family::D => out.push(Root::from_pairs(d, &[(d - 1, 1), (d, 1)])),
        }
        out
    }

    /// The full root system `R`, in lexicographic order.
    pub fn roots(&self) -> Vec<Root> {
        let d = self.rank;
        let mut set = BTreeSet::new();
        for i in 1..=d {
            for j in 1..=d {
                if i != j {
                    set.insert(Root::from_pairs(d, &[(i, 1), (j, -1)]));
                }
            }
        }
        if self.family != Family::A {
            for i in 1..=d {
                for j in (i + 1)..=d {
                    set.insert(Root::from_pairs(d, &[(i, 1), (j, 1)]));
                    set.insert(Root::from_pairs(d, &[(i, -1), (j, -1)]));
                }
            }
        }
        match self.family {
            Family::B => {
                for i in 1..=d {
                    set.insert(Root::from_pairs(d, &[(i, 1)]));
                    set.insert(Root::from_pairs(d, &[(i, -1)]));
                }
            }
            Family::C => {
                for i in 1..=d {
                    set.insert(Root::from_pairs(d, &[(i, 2)]));
                    set.insert(Root::from_pairs(d, &[(i, -2)]));
                }
            }
            _ => {}
        }
        set.into_iter().collect()
    }

    pub fn contains(&self, root: &Root) -> bool {
        root.dim() == self.rank && is_root_pattern(self.family, &root.0)
    }

    /// Coefficients of `root` in the canonical simple roots, or `None` when
    /// `root` is not an integral combination of them.
    pub fn simple_coordinates(&self, root: &Root) -> Option<Vec<i32>> {
        let d = self.rank;
        if root.dim() != d {
            return None;
        }
        let v = &root.0;
        let partial = |k: usize| -> i32 { v[..k].iter().sum() };
        let mut k = Vec::with_capacity(self.num_simple_roots());
        match self.family {
            Family::A => {
                if partial(d) != 0 {
                    return None;
                }
                k.extend((1..d).map(partial));
            }
            Family::B => k.extend((1..=d).map(partial)),
            Family::C => {
                k.extend((1..d).map(partial));
                let total = partial(d);
                if total % 2 != 0 {
                    return None;
                }
                k.push(total / 2);
            }
            Family::D => {
                k.extend((1..d - 1).map(partial));
                let (s1, s) = (partial(d - 1), partial(d));
                let last = v[d - 1];
                if (s1 - last) % 2 != 0 {
                    return None;
                }
                k.push((s1 - last) / 2);
                k.push(s / 2);
            }
        }
        Some(k)
    }

    /// Positive roots with respect to the canonical simple roots.
    pub fn positive_roots(&self) -> Vec<Root> {
        self.roots()
            .into_iter()
            .filter(|r| self.simple_coordinates(r).is_some_and(|k| k.iter().all(|&c| c >= 0)))
            .collect()
    }

    /// Sum of the simple-root coefficients of a positive root.
    pub fn height(&self, root: &Root) -> Result<u32, Error> {
        if !self.contains(root) {
            return Err(Error::NotARoot(root.clone()));
        }
        let k = self.simple_coordinates(root).ok_or_else(|| Error::NotARoot(root.clone()))?;
        if k.iter().any(|&c| c < 0) {
            return Err(Error::NotPositive(root.clone()));
        }
        Ok(k.iter().map(|&c| c as u32).sum())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.rank;
        match self.family {
            Family::A => write!(f, "SU({d})"),
            Family::B => write!(f, "SO({})", 2 * d + 1),
            Family::C => write!(f, "Sp({d})"),
            Family::D => write!(f, "SO({})", 2 * d),
        }
    }
}

fn is_root_pattern(family: Family, v: &[i32]) -> bool {
    let nz: Vec<i32> = v.iter().copied().filter(|&c| c != 0).collect();
    match (family, nz.as_slice()) {
        (Family::A, [a, b]) => a + b == 0 && a.abs() == 1,
        (Family::A, _) => false,
        (_, [a, b]) => a.abs() == 1 && b.abs() == 1,
        (Family::B, [a]) => a.abs() == 1,
        (Family::C, [a]) => a.abs() == 2,
        _ => false,
    }
}

/// An integer vector in the basis `e_1, …, e_d`.
///
/// Ordering is lexicographic on the coefficient vector; downstream code
/// relies on it to number the coordinate variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// Builds a root of dimension `dim` from 1-based `(index, coefficient)` pairs.
    pub fn from_pairs(dim: usize, pairs: &[(usize, i32)]) -> Self {
        let mut v = vec![0; dim];
        for &(i, c) in pairs {
            v[i - 1] += c;
        }
        Root(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Evaluates the functional on `diag(h_1, …, h_d)`.
    pub fn eval(&self, h: &[i64]) -> i64 {
        self.0.iter().zip(h).map(|(&c, &x)| c as i64 * x).sum()
    }
}

/// Prints as a signed combination, e.g. `-e1-e2`, `2e3`, `-e1+e4`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}e{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A Dynkin diagram of a classical group with some nodes painted black.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PaintedDiagram {
    group: GroupSpec,
    black: Vec<usize>,
}

impl PaintedDiagram {
    /// `black` holds 1-based node positions; it is sorted and deduplicated.
    ///
    /// Orthogonal paintings whose white tail is a single `SO(2)`/`SO(3)` factor
    /// (last black node `d − 1` with node `d` white) are rejected: the
    /// admissible-minor description does not cover them.
    pub fn new(group: GroupSpec, black: &[usize]) -> Result<Self, Error> {
        let mut black = black.to_vec();
        black.sort_unstable();
        black.dedup();
        if black.is_empty() {
            return Err(Error::EmptyPainting);
        }
        let n = group.num_simple_roots();
        if let Some(&bad) = black.iter().find(|&&k| k == 0 || k > n) {
            return Err(Error::NodeOutOfRange { node: bad, nodes: n });
        }
        let d = group.rank();
        if matches!(group.family(), Family::B | Family::D) && d >= 2 {
            let last = *black.last().expect("nonempty");
            if last == d - 1 {
                return Err(Error::UnitTail { group });
            }
        }
        Ok(PaintedDiagram { group, black })
    }

    /// Every supported painting of `group` with `1..=max_black` black nodes,
    /// in lexicographic order of the black set.
    pub fn enumerate(group: GroupSpec, max_black: usize) -> Vec<PaintedDiagram> {
        let n = group.num_simple_roots();
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << n) {
            if mask.count_ones() as usize > max_black {
                continue;
            }
            let black: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            if let Ok(d) = PaintedDiagram::new(group, &black) {
                out.push(d);
            }
        }
        out.sort_by(|a, b| a.black.cmp(&b.black));
        out
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn black(&self) -> &[usize] {
        &self.black
    }

    /// `(R_M, Q)`: roots touching a black node, and the positive ones among them.
    pub fn black_roots(&self) -> BlackRoots {
        let mut r_m = Vec::new();
        let mut q = Vec::new();
        for root in self.group.roots() {
            let k = self.group.simple_coordinates(&root).expect("roots expand integrally");
            if self.black.iter().any(|&b| k[b - 1] != 0) {
                if k.iter().all(|&c| c >= 0) {
                    q.push(root.clone());
                }
                r_m.push(root);
            }
        }
        BlackRoots { r_m, q }
    }

    /// Complex dimension of the flag manifold.
    pub fn dim(&self) -> usize {
        self.black_roots().q.len()
    }

    /// Poincaré polynomial in `s`, from the product over `Q` of
    /// `(1 − t^{h+1}) / (1 − t^h)` with `t = s²`.
    pub fn poincare(&self) -> Result<PoincarePoly, Error> {
        let heights: Vec<u32> = self.black_roots().q.iter().map(|r| self.group.height(r)).collect::<Result<_, _>>()?;
        let mut num: Vec<i128> = vec![1];
        for &h in &heights {
            num = mul_binomial(&num, h as usize + 1).ok_or(Error::PoincareOverflow)?;
        }
        for &h in &heights {
            num = div_binomial(&num, h as usize).ok_or(Error::PoincareNotPolynomial)?;
        }
        let mut coeffs = vec![0u64; 2 * (num.len() - 1) + 1];
        for (i, &c) in num.iter().enumerate() {
            coeffs[2 * i] = u64::try_from(c).map_err(|_| Error::PoincareNotPolynomial)?;
        }
        Ok(PoincarePoly { coeffs })
    }
}

impl fmt::Display for PaintedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} black {{", self.group)?;
        for (i, b) in self.black.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

/// Multiplies by `1 − t^k`.
fn mul_binomial(p: &[i128], k: usize) -> Option<Vec<i128>> {
    let mut out = vec![0i128; p.len() + k];
    for (i, &c) in p.iter().enumerate() {
        out[i] = out[i].checked_add(c)?;
        out[i + k] = out[i + k].checked_sub(c)?;
    }
    Some(out)
}

/// Exact division by `1 − t^k`; `None` when the remainder is nonzero.
fn div_binomial(p: &[i128], k: usize) -> Option<Vec<i128>> {
    if p.len() <= k {
        return None;
    }
    // p = (1 − t^k) q  ⇔  q_i = p_i + q_{i−k}
    let qlen = p.len() - k;
    let mut q = vec![0i128; qlen];
    for i in 0..qlen {
        q[i] = p[i] + if i >= k { q[i - k] } else { 0 };
    }
    for i in qlen..p.len() {
        let expect = if i >= k && i - k < qlen { -q[i - k] } else { 0 };
        let carried = if i < qlen { q[i] } else { 0 };
        if p[i] != expect + carried {
            return None;
        }
    }
    Some(q)
}

/// `R_M` and `Q = R_M ∩ R⁺` for a painted diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlackRoots {
    pub r_m: Vec<Root>,
    pub q: Vec<Root>,
}

/// Checks that `q` is a maximal closed nonsymmetric subset of `r_m`.
pub fn validate_q(group: &GroupSpec, q: &[Root], r_m: &[Root]) -> bool {
    let qs: BTreeSet<&Root> = q.iter().collect();
    let ms: BTreeSet<&Root> = r_m.iter().collect();
    let negs: Vec<Root> = q.iter().map(Root::neg).collect();
    let mut union: BTreeSet<&Root> = qs.clone();
    union.extend(negs.iter());
    if union != ms {
        return false;
    }
    if negs.iter().any(|n| qs.contains(n)) {
        return false;
    }
    for a in q {
        for b in q {
            let s = a.add(b);
            if group.contains(&s) && !qs.contains(&s) {
                return false;
            }
        }
    }
    true
}

/// Poincaré polynomial coefficients, index `i` holding the coefficient of `s^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePoly {
    pub coeffs: Vec<u64>,
}

impl PoincarePoly {
    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0).unwrap_or(0)
    }

    /// Second Betti number.
    pub fn b2(&self) -> u64 {
        self.coeffs.get(2).copied().unwrap_or(0)
    }
}

impl fmt::Display for PoincarePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (i, 1) => write!(f, "s^{i}")?,
                (i, c) => write!(f, "{c}s^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn g(f: Family, d: usize) -> GroupSpec {
        GroupSpec::new(f, d).unwrap()
    }

    #[test]
    fn su3_positive_roots() {
        let pos = g(Family::A, 3).positive_roots();
        let expect = [
            Root::from_pairs(3, &[(1, 1), (2, -1)]),
            Root::from_pairs(3, &[(2, 1), (3, -1)]),
            Root::from_pairs(3, &[(1, 1), (3, -1)]),
        ];
        assert_eq!(pos.len(), 3);
        for r in &expect {
            assert!(pos.contains(r), "{r}");
        }
    }

    #[test]
    fn sp1_has_single_positive_root() {
        assert_eq!(g(Family::C, 1).positive_roots(), vec![Root::from_pairs(1, &[(1, 2)])]);
    }

    #[test]
    fn classical_positive_root_counts() {
        for d in 2..=7 {
            assert_eq!(g(Family::A, d).positive_roots().len(), d * (d - 1) / 2);
            assert_eq!(g(Family::B, d).positive_roots().len(), d * d);
            assert_eq!(g(Family::C, d).positive_roots().len(), d * d);
            if d >= 3 {
                assert_eq!(g(Family::D, d).positive_roots().len(), d * (d - 1));
            }
        }
    }

    #[test]
    fn heights() {
        let su3 = g(Family::A, 3);
        assert_eq!(su3.height(&Root::from_pairs(3, &[(1, 1), (3, -1)])).unwrap(), 2);
        let sp2 = g(Family::C, 2);
        assert_eq!(sp2.height(&Root::from_pairs(2, &[(1, 2)])).unwrap(), 3);
        assert!(matches!(su3.height(&Root::from_pairs(3, &[(3, 1), (1, -1)])), Err(Error::NotPositive(_))));
        assert!(matches!(su3.height(&Root::from_pairs(3, &[(1, 2)])), Err(Error::NotARoot(_))));
    }

    #[test]
    fn rejects_bad_groups_and_paintings() {
        assert!(GroupSpec::new(Family::D, 2).is_err());
        assert!(GroupSpec::new(Family::A, 1).is_err());
        let su4 = g(Family::A, 4);
        assert!(matches!(PaintedDiagram::new(su4, &[]), Err(Error::EmptyPainting)));
        assert!(matches!(PaintedDiagram::new(su4, &[4]), Err(Error::NodeOutOfRange { .. })));
        assert!(matches!(PaintedDiagram::new(g(Family::D, 5), &[4]), Err(Error::UnitTail { .. })));
        assert!(matches!(PaintedDiagram::new(g(Family::B, 4), &[1, 3]), Err(Error::UnitTail { .. })));
        assert!(PaintedDiagram::new(g(Family::D, 5), &[4, 5]).is_ok());
        assert!(PaintedDiagram::new(g(Family::C, 4), &[3]).is_ok());
    }

    #[test]
    fn grassmannian_q() {
        let diag = PaintedDiagram::new(g(Family::A, 4), &[2]).unwrap();
        let q = diag.black_roots().q;
        assert_eq!(q.len(), 4);
        for r in &q {
            let c = r.coeffs();
            let i = c.iter().position(|&x| x == 1).unwrap() + 1;
            let j = c.iter().position(|&x| x == -1).unwrap() + 1;
            assert!(i <= 2 && j > 2, "{r}");
        }
    }

    #[test]
    fn so_even_black_one_and_fork() {
        let d = 5;
        let diag = PaintedDiagram::new(g(Family::D, d), &[1, d]).unwrap();
        let q = diag.black_roots().q;
        for j in 2..=d {
            assert!(q.contains(&Root::from_pairs(d, &[(1, 1), (j, -1)])));
        }
        for i in 1..=d {
            for j in (i + 1)..=d {
                assert!(q.contains(&Root::from_pairs(d, &[(i, 1), (j, 1)])));
            }
        }
    }

    #[test]
    fn validate_q_cases() {
        let su3 = g(Family::A, 3);
        let diag = PaintedDiagram::new(su3, &[1, 2]).unwrap();
        let br = diag.black_roots();
        assert!(validate_q(&su3, &br.q, &br.r_m));
        assert!(validate_q(&su3, &[], &[]));
        // Swap e1 − e3 for e3 − e1: (e1 − e2) + (e2 − e3) leaves Q.
        let mut bad = br.q.clone();
        let idx = bad.iter().position(|r| *r == Root::from_pairs(3, &[(1, 1), (3, -1)])).unwrap();
        bad[idx] = bad[idx].neg();
        assert!(!validate_q(&su3, &bad, &br.r_m));
    }

    #[test]
    fn poincare_small() {
        let cp1 = PaintedDiagram::new(g(Family::A, 2), &[1]).unwrap();
        assert_eq!(cp1.poincare().unwrap().coeffs, vec![1, 0, 1]);
        let full = PaintedDiagram::new(g(Family::A, 3), &[1, 2]).unwrap();
        let p = full.poincare().unwrap();
        assert_eq!(p.coeffs, vec![1, 0, 2, 0, 2, 0, 1]);
        assert_eq!(p.eval_at_one(), 6);
        let gr24 = PaintedDiagram::new(g(Family::A, 4), &[2]).unwrap();
        assert_eq!(gr24.poincare().unwrap().coeffs, vec![1, 0, 1, 0, 2, 0, 1, 0, 1]);
    }

    #[test]
    fn binomial_division_detects_remainder() {
        assert_eq!(div_binomial(&[1, 0, -1], 1), Some(vec![1, 1]));
        assert_eq!(div_binomial(&[1, 1], 1), None);
    }

    #[test]
    fn root_display() {
        assert_eq!(Root::from_pairs(3, &[(1, -1), (2, -1)]).to_string(), "-e1-e2");
        assert_eq!(Root::from_pairs(2, &[(1, -2)]).to_string(), "-2e1");
        assert_eq!(Root::from_pairs(4, &[(1, -1), (4, 1)]).to_string(), "-e1+e4");
    }
}
