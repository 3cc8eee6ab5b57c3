//! K₁..K₅ as matrices and the QR(3), QR(9) and Casimir relation catalogs.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Rational};
use crate::gridop::{anticommutator, commutator, OperatorMatrix, Witness};
use crate::racah1::{kappa, lambda1_stencil, qr3_constants, qr3_constants_casimir, RacahParams1, Su11Weights};
use crate::racah2::{lambda1x_op, lambda2x_op, omega1_op, RacahParams2};
use crate::Reading;

/// Verdict record for one relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RelationReport {
    pub relation_id: String,
    pub printed_form_holds: bool,
    pub corrected_form_holds: Option<bool>,
    pub correction_note: String,
    pub residual_witness: Option<Witness>,
}

impl RelationReport {
    pub fn from_verdicts(id: &str, printed: bool, corrected: Option<bool>, note: &str, witness: Option<Witness>) -> Self {
        RelationReport {
            relation_id: id.to_string(),
            printed_form_holds: printed,
            corrected_form_holds: corrected,
            correction_note: note.to_string(),
            residual_witness: witness,
        }
    }

    /// Verdicts from residual matrices (zero means the form holds).
    pub fn from_residuals(id: &str, printed: &OperatorMatrix, corrected: Option<&OperatorMatrix>, note: &str) -> Self {
        let pw = printed.residual();
        let cw = corrected.map(|c| c.residual());
        let witness = match (&pw, &cw) {
            (Some(w), _) => Some(w.clone()),
            (None, Some(Some(w))) => Some(w.clone()),
            _ => None,
        };
        Self::from_verdicts(id, pw.is_none(), cw.map(|w| w.is_none()), note, witness)
    }

    /// Verdicts from scalar identities `lhs = rhs`.
    pub fn from_scalars(id: &str, printed: (&Rational, &Rational), corrected: Option<(&Rational, &Rational)>, note: &str) -> Self {
        let diff = |(a, b): (&Rational, &Rational)| a - b;
        let witness = |v: Rational| Witness {
            row: "scalar".into(),
            col: "scalar".into(),
            value: v,
        };
        let pd = diff(printed);
        let cd = corrected.map(diff);
        let w = if !pd.is_zero() {
            Some(witness(pd.clone()))
        } else {
            cd.clone().filter(|c| !c.is_zero()).map(witness)
        };
        Self::from_verdicts(id, pd.is_zero(), cd.map(|c| c.is_zero()), note, w)
    }

    /// Neither the printed nor a corrected form holds.
    pub fn failed(&self) -> bool {
        !self.printed_form_holds && self.corrected_form_holds != Some(true)
    }

    pub fn verdict(&self) -> &'static str {
        if self.printed_form_holds {
            "printed"
        } else if self.corrected_form_holds == Some(true) {
            "corrected"
        } else {
            "FAILED"
        }
    }
}

/// Errors with `SuiteFailure` naming every relation for which both verdicts are false.
pub fn ensure_passed(reports: &[RelationReport]) -> Result<()> {
    let bad: Vec<&str> = reports.iter().filter(|r| r.failed()).map(|r| r.relation_id.as_str()).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::SuiteFailure(bad.join(", ")))
    }
}

/// Shift in the diagonal operators κ(x₁, ·), κ(x₂, ·) and the total Casimir κ(N, ·).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalShift {
    /// κ(x₁, (β₁+1)/2), κ(x₂, (β₂+1)/2), κ(N, (β₃+1)/2)
    Half,
    /// κ(x₁, β₁), κ(x₂, β₂), κ(N, β₃) as in the operator summary
    Full,
}

pub struct OperatorSet {
    pub params: RacahParams2,
    /// K₁..K₅ at indices 0..4.
    pub k: [OperatorMatrix; 5],
    /// L₁ = [K₁,K₂], L₂ = [K₁,K₄], L₃ = [K₃,K₅], L₄ = [K₂,K₅].
    pub l: [OperatorMatrix; 4],
    /// Q⁽¹⁾..Q⁽⁴⁾.
    pub q: [Rational; 4],
    pub q_total: Rational,
    /// Q⁽ⁱʲ⁾ for i < j, direct (12, 23, 34) and derived (13, 24, 14).
    pub q_pair: BTreeMap<(usize, usize), OperatorMatrix>,
    pub identity: OperatorMatrix,
}

impl OperatorSet {
    pub fn k(&self, i: usize) -> &OperatorMatrix {
        &self.k[i - 1]
    }

    pub fn l(&self, i: usize) -> &OperatorMatrix {
        &self.l[i - 1]
    }

    pub fn qs(&self, i: usize) -> &Rational {
        &self.q[i - 1]
    }

    pub fn scalar(&self, s: &Rational) -> OperatorMatrix {
        OperatorMatrix::scalar(self.identity.grid(), s)
    }

    /// Q⁽ⁱʲ⁾ in either index order.
    pub fn qp(&self, i: usize, j: usize) -> &OperatorMatrix {
        &self.q_pair[&(i.min(j), i.max(j))]
    }

    /// Q⁽ⁱʲᵏ⁾ = Q⁽ⁱʲ⁾+Q⁽ⁱᵏ⁾+Q⁽ʲᵏ⁾−Q⁽ⁱ⁾−Q⁽ʲ⁾−Q⁽ᵏ⁾.
    pub fn q_triple(&self, i: usize, j: usize, k: usize) -> OperatorMatrix {
        let s = self.qs(i) + self.qs(j) + self.qs(k);
        self.qp(i, j) + self.qp(i, k) + self.qp(j, k) - self.scalar(&s)
    }
}

pub fn build_operator_set(w: &Su11Weights, n: usize) -> Result<OperatorSet> {
    build_operator_set_with(w, n, DiagonalShift::Half, Reading::Corrected)
}

/// Operator set with a chosen diagonal shift and Ω₁ reading.
pub fn build_operator_set_with(w: &Su11Weights, n: usize, shift: DiagonalShift, omega: Reading) -> Result<OperatorSet> {
    let p = w.params2(n)?;
    let b = p.beta().clone();
    let grid = p.grid();
    let m_half = rat(-1, 2);
    let arg = |beta: &Rational| match shift {
        DiagonalShift::Half => (beta + Rational::one()) / int(2),
        DiagonalShift::Full => beta.clone(),
    };
    let (a1, a2) = (arg(&b[1]), arg(&b[2]));
    let k1 = OperatorMatrix::diagonal(grid, |x| &m_half * kappa(&int(x[0]), &a1));
    let k3 = OperatorMatrix::diagonal(grid, |x| &m_half * kappa(&int(x[1]), &a2));
    let k2 = lambda1x_op(&p).materialize()?.scale(&m_half);
    let k4 = lambda2x_op(&p, Reading::Corrected).materialize()?.scale(&m_half);
    let k5 = omega1_op(&p, omega).materialize()?.scale(&m_half);
    let l = [
        commutator(&k1, &k2)?,
        commutator(&k1, &k4)?,
        commutator(&k3, &k5)?,
        commutator(&k2, &k5)?,
    ];
    let cas = w.casimirs();
    let q = [cas[0].clone(), cas[1].clone(), cas[2].clone(), cas[3].clone()];
    let q_total = kappa(&int(n as i64), &arg(&b[3]));
    let identity = OperatorMatrix::identity(grid);
    let sc = |s: &Rational| OperatorMatrix::scalar(grid, s);
    let m2 = int(-2);
    let q12 = k1.scale(&m2);
    let q23 = k2.scale(&m2);
    let q34 = k5.scale(&m2);
    let q123 = k3.scale(&m2);
    let q234 = k4.scale(&m2);
    let q13 = &q123 - &q12 - &q23 + sc(&(&q[0] + &q[1] + &q[2]));
    let q24 = &q234 - &q23 - &q34 + sc(&(&q[1] + &q[2] + &q[3]));
    let all_single: Rational = q.iter().sum();
    let q14 = sc(&(&q_total + int(2) * all_single)) - &q12 - &q13 - &q23 - &q24 - &q34;
    let q_pair = BTreeMap::from([
        ((1, 2), q12),
        ((1, 3), q13),
        ((1, 4), q14),
        ((2, 3), q23),
        ((2, 4), q24),
        ((3, 4), q34),
    ]);
    Ok(OperatorSet {
        params: p,
        k: [k1, k2, k3, k4, k5],
        l,
        q,
        q_total,
        q_pair,
        identity,
    })
}

fn sq(a: &OperatorMatrix) -> OperatorMatrix {
    a * a
}

fn ac(a: &OperatorMatrix, b: &OperatorMatrix) -> OperatorMatrix {
    anticommutator(a, b).expect("same grid")
}

fn cm(a: &OperatorMatrix, b: &OperatorMatrix) -> OperatorMatrix {
    commutator(a, b).expect("same grid")
}

/// [k_b, [k_a, k_b]] and [[k_a, k_b], k_a] against the QR(3) template whose structure constants
/// come from singles (Q_a, Q_b, Q_c) and total T: d = ½(Q_a+Q_b+Q_c+T), e₁ = −¼(Q_c−Q_b)(Q_a−T),
/// e₂ = ¼(Q_b−Q_a)(Q_c−T). T may be an operator commuting with both k's.
fn template_residuals(
    s: &OperatorSet,
    ka: &OperatorMatrix,
    kb: &OperatorMatrix,
    singles: [&Rational; 3],
    total: &OperatorMatrix,
) -> (OperatorMatrix, OperatorMatrix) {
    let [qa, qb, qc] = singles;
    let kc = cm(ka, kb);
    let d = rat(1, 2) * (s.scalar(&(qa + qb + qc)) + total);
    let e1 = rat(-1, 4) * (&(s.scalar(qa) - total) * &s.scalar(&(qc - qb)));
    let e2 = rat(1, 4) * (&(s.scalar(qc) - total) * &s.scalar(&(qb - qa)));
    let r1 = cm(kb, &kc) - (sq(kb) + ac(ka, kb) + &d * kb + e1);
    let r2 = cm(&kc, ka) - (sq(ka) + ac(ka, kb) + &d * ka + e2);
    (r1, r2)
}

/// Every displayed QR(9) relation, with printed and corrected forms where they differ.
pub fn verify_qr9_catalog(s: &OperatorSet) -> Vec<RelationReport> {
    let (k1, k2, k3, k4, k5) = (s.k(1), s.k(2), s.k(3), s.k(4), s.k(5));
    let (l1, l2, l3, l4) = (s.l(1), s.l(2), s.l(3), s.l(4));
    let (q1, q2, q3, q4, q) = (s.qs(1), s.qs(2), s.qs(3), s.qs(4), &s.q_total);
    let sc = |r: Rational| s.scalar(&r);
    let two = int(2);
    let half = rat(1, 2);
    let quarter = rat(1, 4);
    let mut out = Vec::new();
    let mut push = |r: RelationReport| out.push(r);

    // Stated commutations.
    for (id, a, b, note) in [
        ("qr9.comm.k1k3", k1, k3, ""),
        ("qr9.comm.k2k3", k2, k3, ""),
        ("qr9.comm.k1k5", k1, k5, "K1 commutes with K3 and K5"),
        ("qr9.comm.k2k4", k2, k4, "K4 commutes with K2 and K5"),
        ("qr9.comm.k4k5", k4, k5, "K4 commutes with K2 and K5"),
    ] {
        push(RelationReport::from_residuals(id, &cm(a, b), None, note));
    }

    // Copy 1: K1, K2.
    let d1 = sc(&half * (q1 + q2 + q3)) - k3;
    let e11 = (k3.scale(&two) + sc(q1.clone())).scale(&(rat(-1, 4) * (q3 - q2)));
    let e12 = (k3.scale(&two) + sc(q3.clone())).scale(&(&quarter * (q2 - q1)));
    push(RelationReport::from_residuals(
        "qr9.copy1.k2l1",
        &(cm(k2, l1) - (sq(k2) + ac(k1, k2) + &d1 * k2 + e11)),
        None,
        "",
    ));
    push(RelationReport::from_residuals(
        "qr9.copy1.l1k1",
        &(cm(l1, k1) - (sq(k1) + ac(k1, k2) + &d1 * k1 + e12)),
        None,
        "",
    ));

    // Copy 2: K1, K4.
    push(RelationReport::from_residuals(
        "qr9.copy2.l2-definition",
        &(cm(k1, k3) - l2),
        Some(&(cm(k1, k4) - l2)),
        "[K1,K3] = L2 read as [K1,K4] = L2",
    ));
    let d2_printed = &half * &(&two * k5 - sc(q1 + q2));
    let d2 = sc(&half * (q1 + q2 + q)) - k5;
    let e21 = rat(-1, 4) * (&sc(q - q1) * &(&two * k5 + sc(q2.clone())));
    let e22 = &quarter * &(&sc(q1 - q2) * &(&two * k5 + sc(q.clone())));
    let lhs = cm(k4, l2);
    let base = sq(k4) + ac(k1, k4) + &e21;
    push(RelationReport::from_residuals(
        "qr9.copy2.k4l2",
        &(&lhs - &(&base + &(&d2_printed * k4))),
        Some(&(&lhs - &(&base + &(&d2 * k4)))),
        "d2 = ½(Q1+Q2+Q)−K5 instead of ½(2K5−Q1−Q2)",
    ));
    let lhs = cm(l2, k1);
    let base = sq(k1) + ac(k1, k4) + &e22;
    push(RelationReport::from_residuals(
        "qr9.copy2.l2k1",
        &(&lhs - &(&base + &(&d2_printed * k1))),
        Some(&(&lhs - &(&base + &(&d2 * k1)))),
        "d2 = ½(Q1+Q2+Q)−K5 instead of ½(2K5−Q1−Q2)",
    ));

    // Copy 3: K3, K5.
    let d3 = sc(&half * (q + q3 + q4)) - k1;
    let e31 = rat(-1, 4) * (&sc(q3 - q4) * &(sc(q.clone()) + &two * k1));
    let e32_printed = &quarter * &(&sc(q - q4) * &(&two * k1 + sc(q3.clone())));
    let e32 = -&e32_printed;
    let lhs = cm(k5, l3);
    let base = sq(k5) + ac(k3, k5) + &e31;
    push(RelationReport::from_residuals(
        "qr9.copy3.k5l3",
        &(&lhs - &(&base + &(&d3 * k3))),
        Some(&(&lhs - &(&base + &(&d3 * k5)))),
        "d3·K3 read as d3·K5",
    ));
    let lhs = cm(l3, k3);
    let base = sq(k3) + ac(k3, k5);
    push(RelationReport::from_residuals(
        "qr9.copy3.l3k3",
        &(&lhs - &(&base + &(&d3 * k4) + &e32_printed)),
        Some(&(&lhs - &(&base + &(&d3 * k3) + &e32))),
        "d3·K4 read as d3·K3 and e32 = −¼(Q−Q4)(2K1+Q3)",
    ));

    // Copy 4: K2, K5.
    let d4_printed = rat(-1, 2) * (sc(q2 + q3 + q4) - &two * k4);
    let d4 = -&d4_printed;
    let e41_printed = rat(-1, 4) * (&sc(q3 - q4) * &(sc(q2.clone()) + &two * k4));
    let e41 = -&e41_printed;
    let e42_printed = &quarter * &(&sc(q2 - q3) * &(sc(q4.clone()) + &two * k4));
    let e42 = -&e42_printed;
    let lhs = cm(k5, l4);
    push(RelationReport::from_residuals(
        "qr9.copy4.k5l4",
        &(&lhs - &(sq(k5) + ac(k2, k5) + &d4_printed * k4 + e41_printed)),
        Some(&(&lhs - &(sq(k5) + ac(k2, k5) + &d4 * k5 + e41))),
        "d4·K4 read as d4·K5; d4 and e41 change sign",
    ));
    let lhs = cm(l4, k2);
    push(RelationReport::from_residuals(
        "qr9.copy4.l4k2",
        &(&lhs - &(sq(k2) + ac(k2, k4) + &d4_printed * k2 + e42_printed)),
        Some(&(&lhs - &(sq(k2) + ac(k2, k5) + &d4 * k2 + e42))),
        "{K2,K4} read as {K2,K5}; d4 and e42 change sign",
    ));

    // Closure. The corrected form is the displayed identity with L2 = [K4,K1], L4 = [K5,K2].
    let lhs = cm(k3, k4);
    push(RelationReport::from_residuals(
        "qr9.closure.k3k4",
        &(&lhs - &(l4 + l3 - l2 - l1)),
        Some(&(&lhs - &(-l4 + l3 + l2 - l1))),
        "holds with the opposite orientation of L2 and L4 (L2 = [K4,K1], L4 = [K5,K2])",
    ));

    // Further relations.
    push(RelationReport::from_residuals("qr9.extra.k3l1", &cm(k3, l1), None, ""));
    let common = &half * &(ac(k1, k2) + ac(k1, k4) + ac(k2, k4) + ac(k3, k5) - ac(k2, k5))
        + &(&half * q4) * k1
        + &(&half * q1) * &(k2 + k5)
        + &(&half * q2) * &(k3 + k4)
        + sc(&quarter * (q1 * q2 + q1 * q4 + q2 * q4));
    let lhs = cm(k4, l1);
    push(RelationReport::from_residuals(
        "qr9.extra.k4l1",
        &(&lhs - &(&common - &(&half * &ac(k3, k5)))),
        Some(&(&lhs - &(&common - &(&half * &ac(k3, k4))))),
        "last term −½{K3,K5} read as −½{K3,K4}",
    ));
    let common = &half * &(ac(k1, k4) + ac(k3, k5) - ac(k1, k2) - ac(k1, k5) - ac(k3, k4) - ac(k2, k5))
        - &(&half * q3) * &(k1 + k4)
        - &(&half * q2) * &(k3 + k5)
        - &(&half * q) * k2;
    let constant = &quarter * ((q2 + q3) * q + q2 * q3);
    let lhs = cm(k5, l1);
    push(RelationReport::from_residuals(
        "qr9.extra.k5l1",
        &(&lhs - &(&common + &sc(constant.clone()))),
        Some(&(&lhs - &(&common - &sc(constant)))),
        "scalar term ¼((Q2+Q3)Q+Q2Q3) changes sign",
    ));
    out
}

/// Copy 1 of QR(3) and the closure under both diagonal shifts; the summary line prints κ(x₁, β₁).
pub fn verify_diagonal_shift(w: &Su11Weights, n: usize) -> Result<Vec<RelationReport>> {
    let full = build_operator_set_with(w, n, DiagonalShift::Full, Reading::Corrected)?;
    let half = build_operator_set(w, n)?;
    let residual = |s: &OperatorSet| {
        let (r1, r2) = template_residuals(s, s.k(1), s.k(2), [s.qs(1), s.qs(2), s.qs(3)], &s.k(3).scale(&int(-2)));
        let r3 = cm(s.k(3), s.k(4)) - (-s.l(4) + s.l(3) + s.l(2) - s.l(1));
        (r1, r2, r3)
    };
    let (f1, f2, f3) = residual(&full);
    let (h1, h2, h3) = residual(&half);
    let note = "κ(x, β) read as κ(x, (β+1)/2)";
    Ok(vec![
        RelationReport::from_residuals("qr9.diagonal-shift.copy1.k2l1", &f1, Some(&h1), note),
        RelationReport::from_residuals("qr9.diagonal-shift.copy1.l1k1", &f2, Some(&h2), note),
        RelationReport::from_residuals("qr9.diagonal-shift.closure", &f3, Some(&h3), note),
    ])
}

const TRIPLES: [[usize; 3]; 24] = {
    let mut out = [[0; 3]; 24];
    let mut c = 0;
    let mut i = 1;
    while i <= 4 {
        let mut j = 1;
        while j <= 4 {
            let mut k = 1;
            while k <= 4 {
                if i != j && j != k && i != k {
                    out[c] = [i, j, k];
                    c += 1;
                }
                k += 1;
            }
            j += 1;
        }
        i += 1;
    }
    out
};

fn perm_sign(t: &[usize]) -> i64 {
    let mut s = 1;
    for a in 0..t.len() {
        for b in a + 1..t.len() {
            if t[a] > t[b] {
                s = -s;
            }
        }
    }
    s
}

/// Sign ε_ijk of (i, j, k) relative to increasing order.
pub fn epsilon(i: usize, j: usize, k: usize) -> i64 {
    perm_sign(&[i, j, k])
}

/// [Q⁽ⁱʲ⁾, Q⁽ʲᵏ⁾] for all 24 ordered triples (no ε).
fn plain_r(s: &OperatorSet) -> BTreeMap<[usize; 3], OperatorMatrix> {
    TRIPLES
        .par_iter()
        .map(|t| (*t, cm(s.qp(t[0], t[1]), s.qp(t[1], t[2]))))
        .collect()
}

/// Both displayed families of Casimir relations over every ordered index assignment, under the
/// displayed R_ijk = ε_ijk[Q⁽ⁱʲ⁾,Q⁽ʲᵏ⁾] (printed) and R_ijk = [Q⁽ⁱʲ⁾,Q⁽ʲᵏ⁾] (corrected).
pub fn verify_casimir_catalog(s: &OperatorSet) -> Vec<RelationReport> {
    let r = plain_r(s);
    let two_v = int(2);
    let two = &two_v;
    let qi = |i: usize| s.qs(i).clone();
    let note_r = "R_ijk = [Q(ij),Q(jk)] without the ε_ijk prefactor";

    let mut jobs: Vec<(String, Box<dyn Fn() -> RelationReport + Send + Sync + '_>)> = Vec::new();

    for t in TRIPLES.iter() {
        for i in 1..=4usize {
            if t.contains(&i) {
                continue;
            }
            let [j, k, l] = *t;
            let id = format!("casimir.quad4.{j}{k}{l}.{i}{j}");
            let r = &r;
            jobs.push((
                id.clone(),
                Box::new(move || {
                    let lhs = cm(&r[&[j, k, l]], s.qp(i, j));
                    let rhs = ac(s.qp(i, k), s.qp(j, l)) - ac(s.qp(i, l), s.qp(j, k))
                        - s.scalar(&(two * (qi(i) - qi(j)) * (qi(k) - qi(l))))
                        + &(two * (qi(j) + qi(k))) * s.qp(i, l)
                        + &(two * (qi(i) + qi(l))) * s.qp(j, k)
                        - &(two * (qi(j) + qi(l))) * s.qp(i, k)
                        - &(two * (qi(i) + qi(k))) * s.qp(j, l);
                    let eps = int(epsilon(j, k, l));
                    let printed = &(&eps * &lhs) - &rhs;
                    let corrected = &lhs - &rhs;
                    RelationReport::from_residuals(&id, &printed, Some(&corrected), note_r)
                }),
            ));
        }
    }
    for t in TRIPLES.iter() {
        let [i, j, k] = *t;
        let id = format!("casimir.quad3.{i}{j}{k}");
        let r = &r;
        jobs.push((
            id.clone(),
            Box::new(move || {
                let lhs = cm(&r[&[i, j, k]], s.qp(i, j));
                let qijk = s.q_triple(i, j, k);
                let rhs = ac(s.qp(i, j), s.qp(i, k))
                    - ac(s.qp(i, j), s.qp(j, k))
                    - &(two * (qi(i) - qi(j))) * &(&qijk - &s.scalar(&qi(k)));
                let eps = int(epsilon(i, j, k));
                let printed = &(&eps * &lhs) - &rhs;
                let corrected = &lhs - &rhs;
                RelationReport::from_residuals(&id, &printed, Some(&corrected), note_r)
            }),
        ));
        let id = format!("casimir.restricted.{i}{j}{k}");
        jobs.push((
            id.clone(),
            Box::new(move || {
                let lhs = cm(&r[&[i, j, k]], s.qp(i, j));
                let qijk = s.q_triple(i, j, k);
                let qij = s.qp(i, j);
                let coeff = &qijk + &s.scalar(&(qi(i) + qi(j) + qi(k)));
                let rhs = int(-2) * sq(qij) - two * &ac(qij, s.qp(j, k)) + two * &(&coeff * qij)
                    - &(two * (qi(i) - qi(j))) * &(&qijk - &s.scalar(&qi(k)));
                let eps = int(epsilon(i, j, k));
                let printed = &(&eps * &lhs) - &rhs;
                let corrected = &lhs - &rhs;
                RelationReport::from_residuals(&id, &printed, Some(&corrected), note_r)
            }),
        ));
    }
    for t in TRIPLES.iter().filter(|t| t[0] < t[1]) {
        let [i, j, k] = *t;
        let id = format!("casimir.r-antisymmetry.{i}{j}{k}");
        let r = &r;
        jobs.push((
            id.clone(),
            Box::new(move || {
                let printed = &(int(epsilon(i, j, k)) * &r[&[i, j, k]]) + &(int(epsilon(j, i, k)) * &r[&[j, i, k]]);
                let corrected = &r[&[i, j, k]] + &r[&[j, i, k]];
                RelationReport::from_residuals(&id, &printed, Some(&corrected), note_r)
            }),
        ));
    }
    jobs.push((
        "casimir.r123-forms".into(),
        Box::new(|| {
            let a = cm(s.qp(1, 2), s.qp(2, 3));
            let res = (&a - &cm(s.qp(1, 3), s.qp(1, 2))) + (&a - &cm(s.qp(2, 3), s.qp(1, 3)));
            RelationReport::from_residuals("casimir.r123-forms", &res, None, "")
        }),
    ));
    jobs.push((
        "casimir.linear.123".into(),
        Box::new(|| {
            let res = s.q_triple(1, 2, 3) - s.k(3).scale(&int(-2));
            RelationReport::from_residuals("casimir.linear.123", &res, None, "")
        }),
    ));
    jobs.push((
        "casimir.linear.234".into(),
        Box::new(|| {
            let res = s.q_triple(2, 3, 4) - s.k(4).scale(&int(-2));
            RelationReport::from_residuals("casimir.linear.234", &res, None, "")
        }),
    ));
    for (a, b, c, d) in [(1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3)] {
        let id = format!("casimir.commuting.{a}{b}.{c}{d}");
        jobs.push((
            id.clone(),
            Box::new(move || RelationReport::from_residuals(&id, &cm(s.qp(a, b), s.qp(c, d)), None, "")),
        ));
    }
    let mut reports: Vec<RelationReport> = jobs.par_iter().map(|(_, f)| f()).collect();
    reports.sort_by(|a, b| a.relation_id.cmp(&b.relation_id));
    reports
}

/// The three QR(3) relations with the Casimir-form constants, and the closed β-forms of d, e₁, e₂.
pub fn verify_univariate_qr3(p: &RacahParams1) -> Result<Vec<RelationReport>> {
    let lam = lambda1_stencil(p).materialize()?;
    let grid = p.grid();
    let h = (&p.beta()[1] + Rational::one()) / int(2);
    let k1 = OperatorMatrix::diagonal(grid, |x| rat(-1, 2) * kappa(&int(x[0]), &h));
    let k2 = lam.scale(&rat(-1, 2));
    let k3 = cm(&k1, &k2);
    let c = qr3_constants_casimir(p);
    let sc = |r: &Rational| OperatorMatrix::scalar(grid, r);
    let r1 = cm(&k2, &k3) - (sq(&k2) + ac(&k1, &k2) + &c.d * &k2 + sc(&c.e1));
    let r2 = cm(&k3, &k1) - (sq(&k1) + ac(&k1, &k2) + &c.d * &k1 + sc(&c.e2));
    let anti = &k3 + &cm(&k2, &k1);
    let printed = qr3_constants(p, Reading::Printed);
    let corrected = qr3_constants(p, Reading::Corrected);
    Ok(vec![
        RelationReport::from_residuals("qr3.k1k2", &anti, None, "k3 = [k1,k2] = −[k2,k1]"),
        RelationReport::from_residuals("qr3.k2k3", &r1, None, ""),
        RelationReport::from_residuals("qr3.k3k1", &r2, None, ""),
        RelationReport::from_scalars("qr3.constant.d", (&printed.d, &c.d), None, ""),
        RelationReport::from_scalars(
            "qr3.constant.e1",
            (&printed.e1, &c.e1),
            Some((&corrected.e1, &c.e1)),
            "factor (β1+β0−c) read as (β1−β0−c), c = (β2−β0)/2",
        ),
        RelationReport::from_scalars("qr3.constant.e2", (&printed.e2, &c.e2), None, ""),
    ])
}

/// QR(3) template check for one copy, exposed for the generic-template tests.
pub fn qr3_template_residuals(
    s: &OperatorSet,
    ka: &OperatorMatrix,
    kb: &OperatorMatrix,
    singles: [&Rational; 3],
    total: &OperatorMatrix,
) -> (OperatorMatrix, OperatorMatrix) {
    template_residuals(s, ka, kb, singles, total)
}
