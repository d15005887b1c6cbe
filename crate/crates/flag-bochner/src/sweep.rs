//! Batch classification over every painting in a range of groups.

use std::fmt::Write;

use flag_bochner_core::bochner::classify;
use flag_bochner_core::realization::CoordinateAtlas;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::{constraint_text, VerdictDoc, SCHEMA_VERSION};
use crate::request::{family_token, SweepRequest};
use crate::Failure;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: String,
    pub rank: usize,
    pub group: String,
    pub black: Vec<usize>,
    pub dim: usize,
    pub verdict: VerdictDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepEcho {
    pub families: Vec<String>,
    pub max_rank: usize,
    pub max_black: usize,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub sweep: SweepEcho,
    pub rows: Vec<SweepRow>,
}

/// Classifies every diagram of the request in parallel; rows keep request order.
pub fn run_sweep(request: &SweepRequest) -> Result<SweepReport, Failure> {
    request.validate()?;
    let rows = request
        .diagrams()
        .par_iter()
        .map(|d| {
            let atlas = CoordinateAtlas::build(d).map_err(Failure::Core)?;
            let v = classify(d, request.degree).map_err(Failure::Core)?;
            let g = d.group();
            Ok(SweepRow {
                family: family_token(g.family()).to_string(),
                rank: g.rank(),
                group: g.to_string(),
                black: d.black().to_vec(),
                dim: d.dim(),
                verdict: VerdictDoc::from_verdict(&v, &atlas),
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    Ok(SweepReport {
        schema_version: SCHEMA_VERSION,
        sweep: SweepEcho {
            families: request.families.iter().map(|&f| family_token(f).to_string()).collect(),
            max_rank: request.max_rank,
            max_black: request.max_black,
            degree: request.degree,
        },
        rows,
    })
}

pub fn render_sweep_table(r: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<10} {:<10} {:>4}  {:<15} condition / witness", "group", "black", "N", "verdict");
    for row in &r.rows {
        let black: Vec<String> = row.black.iter().map(|b| b.to_string()).collect();
        let detail = match (&row.verdict.witness, row.verdict.constraints.is_empty()) {
            (Some(w), _) => w.monomial.clone(),
            (None, false) => constraint_text(&row.verdict),
            (None, true) => String::new(),
        };
        let line = format!(
            "{:<10} {:<10} {:>4}  {:<15} {}",
            row.group,
            format!("{{{}}}", black.join(",")),
            row.dim,
            row.verdict.status,
            detail
        );
        let _ = writeln!(out, "{}", line.trim_end());
    }
    let _ = writeln!(
        out,
        "{} diagrams; verdicts checked through total degree {}; higher-degree terms not examined",
        r.rows.len(),
        r.sweep.degree
    );
    out
}
