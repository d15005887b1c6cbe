//! Report documents (JSON, schema version 1) and their human-readable tables.

use std::collections::BTreeMap;
use std::fmt::Write;

use flag_bochner_core::bochner::{
    forbidden_report, verdict_from_report, BochnerStatus, BochnerVerdict, ForbiddenReport,
};
use flag_bochner_core::expansion::{diastasis_on, KahlerParams};
use flag_bochner_core::lie::{PaintedDiagram, Root};
use flag_bochner_core::poly::{CoeffForm, Coefficient, Monomial, Rational};
use flag_bochner_core::realization::CoordinateAtlas;
use serde::{Deserialize, Serialize};

use crate::numeric::NumericCheck;
use crate::request::{family_token, parse_rational, CaseRequest};
use crate::Failure;

pub const SCHEMA_VERSION: u32 = 1;

/// Forbidden monomials listed in a table before eliding the rest.
const TABLE_FORBIDDEN_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RequestEcho {
    pub group: String,
    pub black: Vec<usize>,
    pub coeffs: String,
    pub max_degree: u32,
    pub audit_degree: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub family: String,
    pub rank: usize,
    pub group: String,
    pub black: Vec<usize>,
    pub dim: usize,
    pub b2: u64,
    /// Coefficient of `s^i` at index `i`.
    pub poincare: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinorDoc {
    pub node: usize,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForbiddenDoc {
    pub monomial: String,
    pub coeff_form: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub status: String,
    /// Each entry reads `form = 0`; only the form is stored.
    pub constraints: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ForbiddenDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub obstruction: Vec<ForbiddenDoc>,
    /// Parameter name (`c<node>`) to value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub admissible_point: Option<BTreeMap<String, String>>,
    pub degree_checked: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseReport {
    pub schema_version: u32,
    pub request: RequestEcho,
    pub diagram: DiagramDoc,
    pub minors: Vec<MinorDoc>,
    pub nilpotency: usize,
    pub verdict: VerdictDoc,
    /// With numeric parameters the forms are their values.
    pub forbidden: Vec<ForbiddenDoc>,
    /// Whether the given numeric parameters meet every constraint.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bochner_at_coeffs: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit: Option<VerdictDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric_check: Option<NumericCheck>,
}

fn forbidden_doc(atlas: &CoordinateAtlas, m: &Monomial, f: &CoeffForm) -> ForbiddenDoc {
    ForbiddenDoc { monomial: atlas.render_monomial(m), coeff_form: f.to_string() }
}

impl VerdictDoc {
    pub fn from_verdict(v: &BochnerVerdict, atlas: &CoordinateAtlas) -> Self {
        VerdictDoc {
            status: v.status.as_str().to_string(),
            constraints: v.constraints.iter().map(|f| f.to_string()).collect(),
            witness: v.witness.as_ref().map(|(m, f)| forbidden_doc(atlas, m, f)),
            obstruction: v.obstruction.iter().map(|(m, f)| forbidden_doc(atlas, m, f)).collect(),
            admissible_point: v
                .admissible_point
                .as_ref()
                .map(|p| p.iter().map(|(k, x)| (format!("c{k}"), x.to_string())).collect()),
            degree_checked: v.degree_checked,
        }
    }

    /// Rebuilds the verdict; monomials are resolved against `atlas`.
    pub fn to_verdict(&self, atlas: &CoordinateAtlas) -> Result<BochnerVerdict, Failure> {
        let bad = |what: &str, s: &str| Failure::Validation(format!("unreadable {what} '{s}' in report"));
        let status = BochnerStatus::parse(&self.status).ok_or_else(|| bad("status", &self.status))?;
        let entry = |d: &ForbiddenDoc| -> Result<(Monomial, CoeffForm), Failure> {
            Ok((parse_monomial(&d.monomial, atlas)?, parse_coeff_form(&d.coeff_form)?))
        };
        let admissible_point = match &self.admissible_point {
            None => None,
            Some(p) => {
                let mut out = BTreeMap::new();
                for (k, v) in p {
                    let node = k.strip_prefix('c').and_then(|n| n.parse().ok()).ok_or_else(|| bad("parameter", k))?;
                    out.insert(node, parse_rational(v).map_err(|_| bad("value", v))?);
                }
                Some(out)
            }
        };
        Ok(BochnerVerdict {
            status,
            constraints: self.constraints.iter().map(|s| parse_coeff_form(s)).collect::<Result<_, _>>()?,
            witness: self.witness.as_ref().map(entry).transpose()?,
            obstruction: self.obstruction.iter().map(entry).collect::<Result<_, _>>()?,
            admissible_point,
            degree_checked: self.degree_checked,
        })
    }
}

/// Parses the rendering of [`CoeffForm`], e.g. `1/2*c1 - 1/2*c2`, `-c3`, `3/2`.
pub fn parse_coeff_form(s: &str) -> Result<CoeffForm, Failure> {
    let bad = || Failure::Validation(format!("unreadable coefficient form '{s}'"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    // Split before every sign that is not the leading one.
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if i > 0 && (ch == '+' || ch == '-') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut form = CoeffForm::default();
    for t in terms {
        let (neg, body) = match t.as_bytes().first() {
            Some(b'-') => (true, &t[1..]),
            Some(b'+') => (false, &t[1..]),
            _ => (false, t),
        };
        let (coef, var) = match body.split_once('*') {
            Some((c, v)) => (parse_rational(c).map_err(|_| bad())?, Some(v)),
            None if body.starts_with('c') => (Rational::from_integer(1.into()), Some(body)),
            None => (parse_rational(body).map_err(|_| bad())?, None),
        };
        let coef = if neg { -coef } else { coef };
        let piece = match var {
            Some(v) => {
                let node: usize = v.strip_prefix('c').and_then(|n| n.parse().ok()).ok_or_else(bad)?;
                CoeffForm::term(node, coef)
            }
            None => CoeffForm::constant(coef),
        };
        form.add_assign(&piece);
    }
    Ok(form)
}

/// Parses a root such as `-e1+e3` or `-2e1` in dimension `dim`.
pub fn parse_root(s: &str, dim: usize) -> Option<Root> {
    let mut coeffs = vec![0i32; dim];
    let mut rest = s;
    if rest.is_empty() {
        return None;
    }
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let e = body.find('e')?;
        let mult: i32 = if e == 0 { 1 } else { body[..e].parse().ok()? };
        let digits = body[e + 1..].find(|c: char| !c.is_ascii_digit()).map_or(body.len() - e - 1, |p| p);
        let index: usize = body[e + 1..e + 1 + digits].parse().ok()?;
        if index == 0 || index > dim {
            return None;
        }
        coeffs[index - 1] += sign * mult;
        rest = &body[e + 1 + digits..];
    }
    Some(Root::new(coeffs))
}

/// Parses the `z[α]*zb[β]^k` rendering back into a monomial of `atlas`.
pub fn parse_monomial(s: &str, atlas: &CoordinateAtlas) -> Result<Monomial, Failure> {
    let bad = || Failure::Validation(format!("unreadable monomial '{s}'"));
    if s == "1" {
        return Ok(Monomial::one());
    }
    let dim = atlas.group().rank();
    let (mut holo, mut anti) = (Vec::new(), Vec::new());
    for factor in s.split('*') {
        let (conj, rest) = if let Some(r) = factor.strip_prefix("zb[") {
            (true, r)
        } else if let Some(r) = factor.strip_prefix("z[") {
            (false, r)
        } else {
            return Err(bad());
        };
        let (root, tail) = rest.split_once(']').ok_or_else(bad)?;
        let exp: u32 = match tail.strip_prefix('^') {
            Some(e) => e.parse().map_err(|_| bad())?,
            None if tail.is_empty() => 1,
            None => return Err(bad()),
        };
        let var = parse_root(root, dim).and_then(|r| atlas.var_index(&r)).ok_or_else(bad)?;
        if conj {
            anti.push((var, exp))
        } else {
            holo.push((var, exp))
        }
    }
    Ok(Monomial::from_exponents(&holo, &anti))
}

pub fn diagram_doc(diagram: &PaintedDiagram) -> Result<DiagramDoc, Failure> {
    let g = diagram.group();
    let p = diagram.poincare().map_err(Failure::Core)?;
    Ok(DiagramDoc {
        family: family_token(g.family()).to_string(),
        rank: g.rank(),
        group: g.to_string(),
        black: diagram.black().to_vec(),
        dim: diagram.dim(),
        b2: p.b2(),
        poincare: p.coeffs,
    })
}

/// Full single-case analysis.
pub fn run_case(request: &CaseRequest) -> Result<CaseReport, Failure> {
    let diagram = &request.diagram;
    let atlas = CoordinateAtlas::build(diagram).map_err(Failure::Core)?;
    let nilpotency = atlas.nilpotency_index();

    let symbolic = diastasis_on(atlas.clone(), request.max_degree, &KahlerParams::Symbolic).map_err(Failure::Core)?;
    let symbolic_report = forbidden_report(&symbolic);
    let verdict = verdict_from_report(diagram.black(), &symbolic_report);

    let (forbidden, bochner_at_coeffs) = match request.numeric_coeffs() {
        None => (symbolic_report.entries.clone(), None),
        Some(values) => {
            let point: BTreeMap<usize, Rational> =
                diagram.black().iter().copied().zip(values.iter().cloned()).collect();
            let numeric = diastasis_on(atlas.clone(), request.max_degree, &request.params()).map_err(Failure::Core)?;
            let entries = forbidden_report(&numeric).entries;
            debug_assert!(entries
                .iter()
                .all(|(m, f)| symbolic_report.get(m).map(|g| g.eval(&point)) == f.as_rational().cloned()));
            let ok = entries.is_empty();
            (entries, Some(ok))
        }
    };

    let audit = match request.audit_degree {
        None => None,
        Some(d) => {
            let e = diastasis_on(atlas.clone(), d, &KahlerParams::Symbolic).map_err(Failure::Core)?;
            Some(VerdictDoc::from_verdict(&verdict_from_report(diagram.black(), &forbidden_report(&e)), &atlas))
        }
    };

    Ok(CaseReport {
        schema_version: SCHEMA_VERSION,
        request: RequestEcho {
            group: request.group_string(),
            black: diagram.black().to_vec(),
            coeffs: request.coeffs.to_string(),
            max_degree: request.max_degree,
            audit_degree: request.audit_degree,
        },
        diagram: diagram_doc(diagram)?,
        minors: symbolic.minors.pairs().iter().map(|&(node, size)| MinorDoc { node, size }).collect(),
        nilpotency,
        verdict: VerdictDoc::from_verdict(&verdict, &atlas),
        forbidden: forbidden.iter().map(|(m, f)| forbidden_doc(&atlas, m, f)).collect(),
        bochner_at_coeffs,
        audit,
        numeric_check: None,
    })
}

/// Reconstructs the verdict of a parsed report.
pub fn verdict_of(report: &CaseReport) -> Result<BochnerVerdict, Failure> {
    let group = crate::request::parse_group(&report.request.group)?;
    let diagram = PaintedDiagram::new(group, &report.request.black).map_err(Failure::Core)?;
    let atlas = CoordinateAtlas::build(&diagram).map_err(Failure::Core)?;
    report.verdict.to_verdict(&atlas)
}

/// Re-derives a report's forbidden list as a [`ForbiddenReport`].
pub fn forbidden_of(report: &CaseReport, atlas: &CoordinateAtlas) -> Result<ForbiddenReport, Failure> {
    Ok(ForbiddenReport {
        entries: report
            .forbidden
            .iter()
            .map(|d| Ok((parse_monomial(&d.monomial, atlas)?, parse_coeff_form(&d.coeff_form)?)))
            .collect::<Result<_, Failure>>()?,
        degree_checked: report.request.max_degree,
    })
}

pub fn constraint_text(v: &VerdictDoc) -> String {
    v.constraints.iter().map(|c| format!("{c} = 0")).collect::<Vec<_>>().join(", ")
}

fn verdict_lines(out: &mut String, label: &str, v: &VerdictDoc) {
    let _ = write!(out, "{label}: {}", v.status);
    if !v.constraints.is_empty() {
        let _ = write!(out, " iff {}", constraint_text(v));
    }
    out.push('\n');
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "  witness: {}  ({})", w.monomial, w.coeff_form);
        if v.obstruction.len() > 1 {
            let _ = writeln!(out, "  no common positive zero of:");
            for o in &v.obstruction {
                let _ = writeln!(out, "    {}  ({})", o.monomial, o.coeff_form);
            }
        }
    }
    if let Some(p) = &v.admissible_point {
        let parts: Vec<String> = p.iter().map(|(k, x)| format!("{k} = {x}")).collect();
        let _ = writeln!(out, "  admissible parameters: {}", parts.join(", "));
    }
    let _ = writeln!(out, "  (checked through total degree {}; higher-degree terms not examined)", v.degree_checked);
}

pub fn render_case_table(r: &CaseReport) -> String {
    let mut out = String::new();
    let d = &r.diagram;
    let black: Vec<String> = d.black.iter().map(|b| b.to_string()).collect();
    let _ = writeln!(out, "{} black {{{}}}   [{}]", d.group, black.join(","), r.request.group);
    let _ = writeln!(out, "complex dimension: {}", d.dim);
    let _ = writeln!(out, "b2: {}", d.b2);
    let poincare = flag_bochner_core::lie::PoincarePoly { coeffs: d.poincare.clone() };
    let _ = writeln!(out, "Poincaré polynomial: {poincare}");
    let minors: Vec<String> = r.minors.iter().map(|m| format!("c{} -> Δ{}", m.node, m.size)).collect();
    let _ = writeln!(out, "admissible minors: {}", minors.join(", "));
    let _ = writeln!(out, "nilpotency index of Z: {}", r.nilpotency);
    let _ = writeln!(out, "coefficients: {}", r.request.coeffs);
    let _ = writeln!(out, "forbidden monomials through degree {}: {}", r.request.max_degree, r.forbidden.len());
    for f in r.forbidden.iter().take(TABLE_FORBIDDEN_LIMIT) {
        let _ = writeln!(out, "  {:<48} {}", f.monomial, f.coeff_form);
    }
    if r.forbidden.len() > TABLE_FORBIDDEN_LIMIT {
        let _ = writeln!(out, "  ... {} more (use --emit json)", r.forbidden.len() - TABLE_FORBIDDEN_LIMIT);
    }
    verdict_lines(&mut out, "verdict", &r.verdict);
    if let Some(ok) = r.bochner_at_coeffs {
        let _ = writeln!(out, "Bochner at the given coefficients: {}", if ok { "yes" } else { "no" });
    }
    if let Some(a) = &r.audit {
        verdict_lines(&mut out, "audit verdict", a);
    }
    if let Some(c) = &r.numeric_check {
        render_check(&mut out, c);
    }
    out
}

pub fn render_check(out: &mut String, c: &NumericCheck) {
    let _ = writeln!(out, "numeric check (seed {}, {} samples at |z|max = {}):", c.seed, c.samples.len(), c.radius);
    let _ = writeln!(
        out,
        "  Hessian at 0 vs quadratic coefficients: max error {:.3e} (tolerance {:.0e}), positive definite: {}",
        c.hessian_max_error, c.hessian_tolerance, c.positive_definite
    );
    let _ = writeln!(out, "  potential at 0: {}", c.origin_potential);
    if let Some(w) = c.worst_sample() {
        let _ = writeln!(
            out,
            "  degree-{} truncation vs exact: max error {:.3e} (tolerance {:.0e})",
            c.degree, w.error, c.truncation_tolerance
        );
    }
    let _ = writeln!(out, "  result: {}", if c.passed() { "pass" } else { "FAIL" });
}
