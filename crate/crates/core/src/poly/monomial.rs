use alloc::vec::Vec;
use core::cmp::Ordering;

/// A monomial `z^j z̄^k`, stored as sparse exponent lists sorted by variable.
///
/// Exponents are strictly positive. Ordering is graded: total degree first,
/// then lexicographic on the holomorphic exponents, then on the conjugate
/// ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    holo: Vec<(u32, u32)>,
    anti: Vec<(u32, u32)>,
    deg: (u32, u32),
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// `z_var`.
    pub fn holo_var(var: usize) -> Self {
        Monomial { holo: alloc::vec![(var as u32, 1)], anti: Vec::new(), deg: (1, 0) }
    }

    /// `z̄_var`.
    pub fn anti_var(var: usize) -> Self {
        Monomial { holo: Vec::new(), anti: alloc::vec![(var as u32, 1)], deg: (0, 1) }
    }

    /// Builds from `(variable, exponent)` lists; zero exponents are dropped
    /// and repeated variables merged.
    pub fn from_exponents(holo: &[(usize, u32)], anti: &[(usize, u32)]) -> Self {
        let norm = |v: &[(usize, u32)]| {
            let mut out: Vec<(u32, u32)> = Vec::new();
            let mut sorted: Vec<(u32, u32)> = v.iter().map(|&(k, e)| (k as u32, e)).collect();
            sorted.sort_unstable();
            for (k, e) in sorted {
                if e == 0 {
                    continue;
                }
                match out.last_mut() {
                    Some(last) if last.0 == k => last.1 += e,
                    _ => out.push((k, e)),
                }
            }
            out
        };
        let holo = norm(holo);
        let anti = norm(anti);
        let deg = (holo.iter().map(|x| x.1).sum(), anti.iter().map(|x| x.1).sum());
        Monomial { holo, anti, deg }
    }

    pub fn holo(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.holo.iter().map(|&(k, e)| (k as usize, e))
    }

    pub fn anti(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.anti.iter().map(|&(k, e)| (k as usize, e))
    }

    /// `(p, q)`: holomorphic and antiholomorphic degree.
    pub fn bidegree(&self) -> (u32, u32) {
        self.deg
    }

    pub fn degree(&self) -> u32 {
        self.deg.0 + self.deg.1
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    /// `z_α z̄_α` for some α.
    pub fn is_diagonal_quadratic(&self) -> bool {
        self.holo.len() == 1 && self.holo == self.anti && self.holo[0].1 == 1
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            holo: merge(&self.holo, &other.holo),
            anti: merge(&self.anti, &other.anti),
            deg: (self.deg.0 + other.deg.0, self.deg.1 + other.deg.1),
        }
    }

    /// Swaps holomorphic and conjugate exponents.
    pub fn conj(&self) -> Monomial {
        Monomial { holo: self.anti.clone(), anti: self.holo.clone(), deg: (self.deg.1, self.deg.0) }
    }

    /// Exponent of `z_var` plus exponent of `z̄_var`.
    pub fn exponent_of(&self, var: usize) -> u32 {
        let find = |v: &[(u32, u32)]| v.iter().find(|x| x.0 as usize == var).map_or(0, |x| x.1);
        find(&self.holo) + find(&self.anti)
    }
}

fn merge(a: &[(u32, u32)], b: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Lexicographic comparison of sparse exponent vectors: a larger exponent on
/// an earlier variable wins.
fn lex(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.0.cmp(&y.0) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => match x.1.cmp(&y.1) {
                Ordering::Equal => {}
                o => return o,
            },
        }
    }
    a.len().cmp(&b.len())
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex(&self.holo, &other.holo))
            .then_with(|| lex(&self.anti, &other.anti))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
