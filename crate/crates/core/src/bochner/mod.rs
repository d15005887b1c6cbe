//! Forbidden monomials and the decision of when the chart coordinates are
//! Bochner coordinates up to a diagonal rescaling.
//!
//! The potential is Bochner up to rescaling iff its expansion has no
//! monomial of bidegree `(1, q ≥ 2)` or `(p ≥ 2, 1)` and its `(1, 1)` part is
//! diagonal. Each such monomial carries a linear form in the Kähler
//! parameters; the coordinates are Bochner exactly for the positive
//! parameters annihilating all of them, through the degree examined.

mod catalog;
pub mod solve;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::expansion::{diastasis, DiastasisExpansion, KahlerParams};
use crate::lie::PaintedDiagram;
use num_traits::Zero;

use crate::poly::{CoeffForm, Coefficient, Monomial, Rational};

pub use catalog::{catalog_trinomials, sum_catalog, Trinomial, TrinomialKind};

/// Whether a monomial obstructs Bochner coordinates.
pub fn is_forbidden(m: &Monomial) -> bool {
    match m.bidegree() {
        (1, 1) => !m.is_diagonal_quadratic(),
        (1, q) => q >= 2,
        (p, 1) => p >= 2,
        _ => false,
    }
}

/// Every forbidden monomial of an expansion with its coefficient form.
#[derive(Debug, Clone, PartialEq)]
pub struct ForbiddenReport {
    /// In monomial order.
    pub entries: Vec<(Monomial, CoeffForm)>,
    pub degree_checked: u32,
}

impl ForbiddenReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, m: &Monomial) -> Option<&CoeffForm> {
        self.entries.iter().find(|(x, _)| x == m).map(|(_, f)| f)
    }
}

pub fn forbidden_report(expansion: &DiastasisExpansion) -> ForbiddenReport {
    ForbiddenReport {
        entries: expansion.poly.terms().filter(|(m, _)| is_forbidden(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        degree_checked: expansion.degree,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BochnerStatus {
    /// No forbidden monomial for any parameters.
    BochnerForAllC,
    /// Bochner exactly on a nonempty slice of the positive orthant.
    BochnerIff,
    /// Forbidden monomials survive for every positive choice of parameters.
    NeverBochner,
}

impl BochnerStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            BochnerStatus::BochnerForAllC => "BochnerForAllC",
            BochnerStatus::BochnerIff => "BochnerIff",
            BochnerStatus::NeverBochner => "NeverBochner",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [BochnerStatus::BochnerForAllC, BochnerStatus::BochnerIff, BochnerStatus::NeverBochner]
            .into_iter()
            .find(|v| v.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BochnerVerdict {
    pub status: BochnerStatus,
    /// Reduced row echelon basis of `{ form = 0 }`; nonempty iff `BochnerIff`.
    pub constraints: Vec<CoeffForm>,
    /// Smallest monomial of `obstruction`; present iff `NeverBochner`.
    pub witness: Option<(Monomial, CoeffForm)>,
    /// A minimal set of forbidden monomials whose forms have no common zero
    /// in the positive orthant. A single entry means its form alone never
    /// vanishes there.
    pub obstruction: Vec<(Monomial, CoeffForm)>,
    /// Positive parameters (by black node) meeting every constraint.
    pub admissible_point: Option<BTreeMap<usize, Rational>>,
    pub degree_checked: u32,
}

/// Classifies the symbolic expansion of `diagram` through total degree `degree`.
pub fn classify(diagram: &PaintedDiagram, degree: u32) -> Result<BochnerVerdict, Error> {
    let expansion = diastasis(diagram, degree, &KahlerParams::Symbolic)?;
    Ok(verdict_from_report(diagram.black(), &forbidden_report(&expansion)))
}

/// Solves the constraint system carried by a report.
pub fn verdict_from_report(nodes: &[usize], report: &ForbiddenReport) -> BochnerVerdict {
    let forms: Vec<CoeffForm> = report.entries.iter().map(|(_, f)| f.clone()).collect();
    let to_point = |x: Vec<Rational>| nodes.iter().copied().zip(x).collect::<BTreeMap<_, _>>();
    let degree_checked = report.degree_checked;
    if report.is_empty() {
        let point = solve::positive_solution(&[], nodes).map(to_point);
        return BochnerVerdict {
            status: BochnerStatus::BochnerForAllC,
            constraints: Vec::new(),
            witness: None,
            obstruction: Vec::new(),
            admissible_point: point,
            degree_checked,
        };
    }
    if let Some(x) = solve::positive_solution(&forms, nodes) {
        let constraints = solve::reduced_constraints(&forms, nodes).expect("feasible systems are consistent");
        return BochnerVerdict {
            status: BochnerStatus::BochnerIff,
            constraints,
            witness: None,
            obstruction: Vec::new(),
            admissible_point: Some(to_point(x)),
            degree_checked,
        };
    }
    let obstruction = minimal_obstruction(nodes, &report.entries);
    BochnerVerdict {
        status: BochnerStatus::NeverBochner,
        constraints: Vec::new(),
        witness: obstruction.first().cloned(),
        obstruction,
        admissible_point: None,
        degree_checked,
    }
}

/// Deterministic irreducible infeasible subset, preferring small monomials.
fn minimal_obstruction(nodes: &[usize], entries: &[(Monomial, CoeffForm)]) -> Vec<(Monomial, CoeffForm)> {
    if let Some(single) = entries.iter().find(|(_, f)| f.nonvanishing_on_orthant()) {
        return alloc::vec![single.clone()];
    }
    // One representative (the smallest monomial) per distinct form.
    let mut reps: Vec<(Monomial, CoeffForm)> = Vec::new();
    for (m, f) in entries {
        if !reps.iter().any(|(_, g)| proportional(f, g)) {
            reps.push((m.clone(), f.clone()));
        }
    }
    // Deletion filter from the largest monomial down.
    let mut keep = alloc::vec![true; reps.len()];
    for i in (0..reps.len()).rev() {
        keep[i] = false;
        let trial: Vec<CoeffForm> = reps.iter().zip(&keep).filter(|(_, &k)| k).map(|(r, _)| r.1.clone()).collect();
        if solve::positive_solution(&trial, nodes).is_some() {
            keep[i] = true;
        }
    }
    reps.into_iter().zip(keep).filter(|(_, k)| *k).map(|(r, _)| r).collect()
}

fn proportional(f: &CoeffForm, g: &CoeffForm) -> bool {
    let lead = |h: &CoeffForm| -> Option<Rational> {
        if !h.constant_part().is_zero() {
            return Some(h.constant_part().clone());
        }
        h.terms().next().map(|(_, v)| v.clone())
    };
    match (lead(f), lead(g)) {
        (Some(a), Some(b)) => f.scale(&b) == g.scale(&a),
        _ => false,
    }
}
