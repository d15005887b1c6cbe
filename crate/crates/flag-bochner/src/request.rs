//! Parsing of the textual case and sweep requests.
//!
//! Group strings read `FAMILY:RANK` with `FAMILY` one of `SU`, `Sp`, `SOeven`
//! and `SOodd`. The rank is the `d` of `SU(d)`, `Sp(d)`, `SO(2d)` and
//! `SO(2d+1)` respectively, so `SU:4` is `SU(4)` and `SOodd:3` is `SO(7)`.

use std::fmt;

use flag_bochner_core::expansion::KahlerParams;
use flag_bochner_core::lie::{Family, GroupSpec, PaintedDiagram};
use flag_bochner_core::poly::Rational;
use num_traits::Signed;

use crate::Failure;

/// A parse failure, pointing at a 1-based character column of the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {what} '{input}' at column {column}: {reason}")]
pub struct ParseError {
    pub what: &'static str,
    pub input: String,
    pub column: usize,
    pub reason: String,
}

impl ParseError {
    fn new(what: &'static str, input: &str, byte: usize, reason: impl Into<String>) -> Self {
        ParseError { what, input: input.to_string(), column: input[..byte].chars().count() + 1, reason: reason.into() }
    }
}

/// The token used for a family on the command line and in reports.
pub fn family_token(f: Family) -> &'static str {
    match f {
        Family::A => "SU",
        Family::B => "SOodd",
        Family::C => "Sp",
        Family::D => "SOeven",
    }
}

pub fn parse_family(s: &str) -> Option<Family> {
    Family::ALL.into_iter().find(|&f| family_token(f) == s)
}

pub fn parse_group(input: &str) -> Result<GroupSpec, Failure> {
    let err = |byte, reason: &str| Failure::Parse(ParseError::new("group", input, byte, reason));
    let Some(colon) = input.find(':') else {
        return Err(err(input.len(), "expected FAMILY:RANK"));
    };
    let family = parse_family(&input[..colon]).ok_or_else(|| err(0, "family must be SU, Sp, SOeven or SOodd"))?;
    let rank_str = &input[colon + 1..];
    if rank_str.is_empty() {
        return Err(err(colon + 1, "missing rank"));
    }
    if let Some(pos) = rank_str.find(|c: char| !c.is_ascii_digit()) {
        return Err(err(colon + 1 + pos, "rank must be a positive integer"));
    }
    let rank: usize = rank_str.parse().map_err(|_| err(colon + 1, "rank out of range"))?;
    GroupSpec::new(family, rank).map_err(Failure::Core)
}

/// Comma-separated list; each item is handed to `item` with its byte offset.
fn parse_list<T>(
    what: &'static str,
    input: &str,
    mut item: impl FnMut(&str) -> Result<T, String>,
) -> Result<Vec<T>, Failure> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in input.split(',') {
        let lead = raw.len() - raw.trim_start().len();
        let token = raw.trim();
        if token.is_empty() {
            return Err(Failure::Parse(ParseError::new(what, input, offset + lead, "empty item")));
        }
        match item(token) {
            Ok(v) => out.push(v),
            Err(reason) => return Err(Failure::Parse(ParseError::new(what, input, offset + lead, reason))),
        }
        offset += raw.len() + 1;
    }
    Ok(out)
}

pub fn parse_black(input: &str) -> Result<Vec<usize>, Failure> {
    parse_list("black node list", input, |t| {
        t.parse::<usize>().map_err(|_| "node positions are positive integers".to_string())
    })
}

/// Parses `7`, `-2/3` or `0.125` exactly.
pub fn parse_rational(t: &str) -> Result<Rational, String> {
    if let Some((int, frac)) = t.split_once('.') {
        let digits = format!("{int}{frac}");
        let scale = format!("1{}", "0".repeat(frac.len()));
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err("malformed decimal".into());
        }
        return format!("{digits}/{scale}").parse::<Rational>().map_err(|_| "malformed decimal".into());
    }
    let r = t.parse::<Rational>().map_err(|_| "expected an integer, fraction or decimal".to_string())?;
    Ok(r)
}

#[derive(Debug, Clone, PartialEq)]
pub enum CoeffSpec {
    Symbolic,
    Numeric(Vec<Rational>),
}

pub fn parse_coeffs(input: &str) -> Result<CoeffSpec, Failure> {
    if input.trim() == "symbolic" {
        return Ok(CoeffSpec::Symbolic);
    }
    parse_list("coefficient list", input, |t| {
        let r = parse_rational(t)?;
        if !r.is_positive() {
            return Err("Kähler parameters must be positive".into());
        }
        Ok(r)
    })
    .map(CoeffSpec::Numeric)
}

/// A single painted diagram to analyse.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseRequest {
    pub diagram: PaintedDiagram,
    pub coeffs: CoeffSpec,
    pub max_degree: u32,
    pub audit_degree: Option<u32>,
}

impl CaseRequest {
    pub fn parse(
        group: &str,
        black: &str,
        coeffs: &str,
        max_degree: u32,
        audit_degree: Option<u32>,
    ) -> Result<Self, Failure> {
        let diagram = PaintedDiagram::new(parse_group(group)?, &parse_black(black)?).map_err(Failure::Core)?;
        let coeffs = parse_coeffs(coeffs)?;
        if let CoeffSpec::Numeric(v) = &coeffs {
            if v.len() != diagram.black().len() {
                return Err(Failure::Validation(format!(
                    "{} coefficients given for {} black nodes",
                    v.len(),
                    diagram.black().len()
                )));
            }
        }
        if max_degree < 2 {
            return Err(Failure::Validation(format!("--max-degree must be at least 2, got {max_degree}")));
        }
        if let Some(a) = audit_degree {
            if a <= max_degree {
                return Err(Failure::Validation(format!("--audit-degree {a} must exceed --max-degree {max_degree}")));
            }
        }
        Ok(CaseRequest { diagram, coeffs, max_degree, audit_degree })
    }

    pub fn group_string(&self) -> String {
        let g = self.diagram.group();
        format!("{}:{}", family_token(g.family()), g.rank())
    }

    pub fn params(&self) -> KahlerParams {
        match &self.coeffs {
            CoeffSpec::Symbolic => KahlerParams::Symbolic,
            CoeffSpec::Numeric(v) => KahlerParams::Numeric(v.clone()),
        }
    }

    /// Numeric parameters, if any.
    pub fn numeric_coeffs(&self) -> Option<&[Rational]> {
        match &self.coeffs {
            CoeffSpec::Numeric(v) => Some(v),
            CoeffSpec::Symbolic => None,
        }
    }
}

/// A batch classification over all paintings in a range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRequest {
    pub families: Vec<Family>,
    pub max_rank: usize,
    pub max_black: usize,
    pub degree: u32,
}

/// Rank bound for sweeps; the symbolic cost grows like `2^rank` per minor.
pub const MAX_SWEEP_RANK: usize = 10;

impl SweepRequest {
    pub fn parse_families(input: &str) -> Result<Vec<Family>, Failure> {
        if input.trim() == "all" {
            return Ok(Family::ALL.to_vec());
        }
        parse_list("family list", input, |t| parse_family(t).ok_or_else(|| "unknown family".to_string()))
    }

    pub fn validate(&self) -> Result<(), Failure> {
        if self.families.is_empty() {
            return Err(Failure::Validation("no families selected".into()));
        }
        if self.max_rank == 0 || self.max_rank > MAX_SWEEP_RANK {
            return Err(Failure::Validation(format!("--max-rank must lie in 1..={MAX_SWEEP_RANK}")));
        }
        if self.max_black == 0 {
            return Err(Failure::Validation("--max-black must be positive".into()));
        }
        if self.degree < 2 {
            return Err(Failure::Validation("sweep degree must be at least 2".into()));
        }
        Ok(())
    }

    /// Every diagram in the sweep, ordered by family, rank and black set.
    pub fn diagrams(&self) -> Vec<PaintedDiagram> {
        let mut out = Vec::new();
        for &f in &self.families {
            for d in f.min_rank()..=self.max_rank {
                let g = GroupSpec::new(f, d).expect("rank at least the family minimum");
                out.extend(PaintedDiagram::enumerate(g, self.max_black));
            }
        }
        out
    }
}

impl fmt::Display for CoeffSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffSpec::Symbolic => write!(f, "symbolic"),
            CoeffSpec::Numeric(v) => {
                let parts: Vec<String> = v.iter().map(|r| r.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}
