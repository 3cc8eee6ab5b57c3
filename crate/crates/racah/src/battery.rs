//! Default parameter packs for verification runs.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::RelationReport;
use crate::error::Result;
use crate::exactnum::{rat, Rational};
use crate::racah1::Su11Weights;
use crate::suites::{bivariate_all, univariate_all};

/// Five weight packs built from {3/5, 3/4, 1, 7/6, 3/2}. ν₁ avoids 1 and 3/2, so −N+β₀ is
/// never a nonpositive integer and the displayed R₂ normalizer has no poles. Each pack runs at
/// every N of its battery.
pub fn default_packs() -> Vec<Su11Weights> {
    let packs: [[(i64, i64); 4]; 5] = [
        [(3, 5), (3, 4), (1, 1), (7, 6)],
        [(3, 4), (1, 1), (7, 6), (3, 2)],
        [(7, 6), (3, 2), (3, 5), (3, 4)],
        [(3, 5), (3, 2), (7, 6), (1, 1)],
        [(3, 4), (7, 6), (3, 2), (3, 5)],
    ];
    packs
        .iter()
        .map(|p| Su11Weights::new(p.iter().map(|&(a, b)| rat(a, b)).collect()).expect("positive weights"))
        .collect()
}

/// The first three weights of each default pack.
pub fn default_packs3() -> Vec<Su11Weights> {
    default_packs()
        .into_iter()
        .map(|w| Su11Weights::new(w.nu()[..3].to_vec()).expect("positive weights"))
        .collect()
}

pub const BIVARIATE_N: std::ops::RangeInclusive<usize> = 2..=6;
pub const UNIVARIATE_N: std::ops::RangeInclusive<usize> = 2..=8;

/// Every (pack, N) pair of the bivariate battery.
pub fn bivariate_runs() -> Vec<(Su11Weights, usize)> {
    default_packs()
        .into_iter()
        .flat_map(|w| BIVARIATE_N.map(move |n| (w.clone(), n)))
        .collect()
}

/// Every (pack, N) pair of the univariate battery.
pub fn univariate_runs() -> Vec<(Su11Weights, usize)> {
    default_packs3()
        .into_iter()
        .flat_map(|w| UNIVARIATE_N.map(move |n| (w.clone(), n)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Univariate,
    Bivariate,
}

/// Reports of one (weights, N) run.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub family: Family,
    #[serde(serialize_with = "crate::exactnum::serialize_rationals")]
    pub nu: Vec<Rational>,
    #[serde(rename = "N")]
    pub n: usize,
    pub reports: Vec<RelationReport>,
}

pub fn run_univariate(w: &Su11Weights, n: usize) -> Result<RunReport> {
    Ok(RunReport {
        family: Family::Univariate,
        nu: w.nu().to_vec(),
        n,
        reports: univariate_all(w, n)?,
    })
}

pub fn run_bivariate(w: &Su11Weights, n: usize) -> Result<RunReport> {
    Ok(RunReport {
        family: Family::Bivariate,
        nu: w.nu().to_vec(),
        n,
        reports: bivariate_all(w, n)?,
    })
}

/// The full default verification run: every univariate then every bivariate battery entry.
pub fn run_default() -> Result<Vec<RunReport>> {
    let uni = univariate_runs();
    let bi = bivariate_runs();
    let mut out: Vec<RunReport> = uni.par_iter().map(|(w, n)| run_univariate(w, *n)).collect::<Result<_>>()?;
    out.extend(bi.par_iter().map(|(w, n)| run_bivariate(w, *n)).collect::<Result<Vec<_>>>()?);
    Ok(out)
}
