//! Grids, stencil operators, dense rational matrices and weight solving.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};

/// Integer grid coordinates. One-dimensional grids use `[x, 0]`.
pub type Point = [i64; 2];

/// Finite index sets, each enumerated in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grid {
    /// {0, ..., N}
    Segment(usize),
    /// {(x1, x2) : 0 <= x1 <= x2 <= N}
    Triangle(usize),
    /// {(n1, n2) : n1, n2 >= 0, n1 + n2 <= N}
    Simplex(usize),
}

impl Grid {
    pub fn size_param(&self) -> usize {
        match *self {
            Grid::Segment(n) | Grid::Triangle(n) | Grid::Simplex(n) => n,
        }
    }

    pub fn len(&self) -> usize {
        let n = self.size_param();
        match self {
            Grid::Segment(_) => n + 1,
            _ => (n + 1) * (n + 2) / 2,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> Vec<Point> {
        let n = self.size_param() as i64;
        match self {
            Grid::Segment(_) => (0..=n).map(|x| [x, 0]).collect(),
            Grid::Triangle(_) => (0..=n).flat_map(|a| (a..=n).map(move |b| [a, b])).collect(),
            Grid::Simplex(_) => (0..=n).flat_map(|a| (0..=n - a).map(move |b| [a, b])).collect(),
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        let n = self.size_param() as i64;
        match self {
            Grid::Segment(_) => p[1] == 0 && (0..=n).contains(&p[0]),
            Grid::Triangle(_) => 0 <= p[0] && p[0] <= p[1] && p[1] <= n,
            Grid::Simplex(_) => p[0] >= 0 && p[1] >= 0 && p[0] + p[1] <= n,
        }
    }

    pub fn index_of(&self, p: Point) -> Option<usize> {
        if !self.contains(p) {
            return None;
        }
        let n = self.size_param() as i64;
        let [a, b] = p;
        let before = a * (n + 1) - a * (a - 1) / 2;
        let i = match self {
            Grid::Segment(_) => a,
            Grid::Triangle(_) => before + b - a,
            Grid::Simplex(_) => before + b,
        };
        Some(i as usize)
    }

    pub fn label(&self, p: Point) -> String {
        match self {
            Grid::Segment(_) => p[0].to_string(),
            _ => format!("({},{})", p[0], p[1]),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.points().into_iter().map(|p| self.label(p)).collect()
    }
}

/// Coefficient of one shift, as a function of the (rational) coordinates of the point.
pub type CoeffFn = Arc<dyn Fn(&Rational, &Rational) -> Rational + Send + Sync>;

pub fn coeff_fn(f: impl Fn(&Rational, &Rational) -> Rational + Send + Sync + 'static) -> CoeffFn {
    Arc::new(f)
}

/// A difference operator: `(S f)(p) = sum over offsets o of c_o(p) f(p + o)`.
#[derive(Clone)]
pub struct StencilOperator {
    grid: Grid,
    terms: Vec<(Point, CoeffFn)>,
}

impl fmt::Debug for StencilOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let offsets: Vec<Point> = self.terms.iter().map(|t| t.0).collect();
        f.debug_struct("StencilOperator")
            .field("grid", &self.grid)
            .field("offsets", &offsets)
            .finish()
    }
}

impl StencilOperator {
    pub fn new(grid: Grid, terms: Vec<(Point, CoeffFn)>) -> Self {
        let mut merged: Vec<(Point, CoeffFn)> = Vec::new();
        for (o, f) in terms {
            if let Some(slot) = merged.iter_mut().find(|(p, _)| *p == o) {
                let g = slot.1.clone();
                slot.1 = coeff_fn(move |a, b| g(a, b) + f(a, b));
            } else {
                merged.push((o, f));
            }
        }
        StencilOperator { grid, terms: merged }
    }

    /// `constant - sum_o C_o(x) (T^o - 1)`: shift coefficient `-C_o`, diagonal `constant + sum C_o`.
    pub fn difference(grid: Grid, shifts: Vec<(Point, CoeffFn)>, constant: Rational) -> Self {
        let mut terms: Vec<(Point, CoeffFn)> = Vec::new();
        let all: Vec<CoeffFn> = shifts.iter().map(|s| s.1.clone()).collect();
        terms.push((
            [0, 0],
            coeff_fn(move |a, b| all.iter().fold(constant.clone(), |acc, f| acc + f(a, b))),
        ));
        for (o, f) in shifts {
            terms.push((o, coeff_fn(move |a, b| -f(a, b))));
        }
        Self::new(grid, terms)
    }

    pub fn identity(grid: Grid) -> Self {
        Self::new(grid, vec![([0, 0], coeff_fn(|_, _| Rational::one()))])
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn offsets(&self) -> Vec<Point> {
        self.terms.iter().map(|t| t.0).collect()
    }

    pub fn coefficient(&self, offset: Point, p: Point) -> Rational {
        let (a, b) = (int(p[0]), int(p[1]));
        self.terms
            .iter()
            .filter(|t| t.0 == offset)
            .fold(Rational::zero(), |acc, t| acc + (t.1)(&a, &b))
    }

    /// Sum of two stencils on the same grid.
    pub fn plus(&self, other: &StencilOperator) -> Result<StencilOperator> {
        if self.grid != other.grid {
            return Err(Error::Dimension {
                left: self.grid.len(),
                right: other.grid.len(),
            });
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Self::new(self.grid, terms))
    }

    /// Every (offset, point, coefficient) whose shift leaves the grid with a nonzero coefficient.
    pub fn boundary_violations(&self) -> Vec<(Point, Point, Rational)> {
        let mut out = Vec::new();
        for p in self.grid.points() {
            let (a, b) = (int(p[0]), int(p[1]));
            for (o, f) in &self.terms {
                let q = [p[0] + o[0], p[1] + o[1]];
                if !self.grid.contains(q) {
                    let c = f(&a, &b);
                    if !c.is_zero() {
                        out.push((*o, p, c));
                    }
                }
            }
        }
        out
    }

    pub fn materialize(&self) -> Result<OperatorMatrix> {
        let grid = self.grid;
        let pts = grid.points();
        let rows: Vec<Result<Vec<Rational>>> = pts
            .par_iter()
            .map(|&p| {
                let mut row = vec![Rational::zero(); pts.len()];
                let (a, b) = (int(p[0]), int(p[1]));
                for (o, f) in &self.terms {
                    let c = f(&a, &b);
                    let q = [p[0] + o[0], p[1] + o[1]];
                    match grid.index_of(q) {
                        Some(j) => row[j] += c,
                        None if c.is_zero() => {}
                        None => {
                            return Err(Error::Closure {
                                offset: *o,
                                point: p,
                                coefficient: c,
                            })
                        }
                    }
                }
                Ok(row)
            })
            .collect();
        let mut entries = Vec::with_capacity(pts.len() * pts.len());
        for r in rows {
            entries.extend(r?);
        }
        Ok(OperatorMatrix::from_entries(grid, entries))
    }

    /// Pointwise application, independent of `materialize`.
    pub fn apply(&self, f: &GridFunction) -> Result<GridFunction> {
        if f.grid != self.grid {
            return Err(Error::Dimension {
                left: self.grid.len(),
                right: f.grid.len(),
            });
        }
        let mut values = Vec::with_capacity(f.values.len());
        for p in self.grid.points() {
            let (a, b) = (int(p[0]), int(p[1]));
            let mut acc = Rational::zero();
            for (o, c) in &self.terms {
                let q = [p[0] + o[0], p[1] + o[1]];
                let c = c(&a, &b);
                match self.grid.index_of(q) {
                    Some(j) => acc += c * &f.values[j],
                    None if c.is_zero() => {}
                    None => {
                        return Err(Error::Closure {
                            offset: *o,
                            point: p,
                            coefficient: c,
                        })
                    }
                }
            }
            values.push(acc);
        }
        Ok(GridFunction { grid: self.grid, values })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridFunction {
    pub grid: Grid,
    pub values: Vec<Rational>,
}

impl GridFunction {
    pub fn from_fn(grid: Grid, f: impl Fn(Point) -> Rational) -> Self {
        GridFunction {
            grid,
            values: grid.points().into_iter().map(f).collect(),
        }
    }

    pub fn at(&self, p: Point) -> Option<&Rational> {
        self.grid.index_of(p).map(|i| &self.values[i])
    }
}

/// Largest-magnitude nonzero entry of a residual matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: String,
    pub col: String,
    #[serde(serialize_with = "crate::exactnum::serialize_rational")]
    pub value: Rational,
}

/// Dense square matrix over the points of a grid, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    grid: Grid,
    dim: usize,
    entries: Vec<Rational>,
}

impl OperatorMatrix {
    fn from_entries(grid: Grid, entries: Vec<Rational>) -> Self {
        let dim = grid.len();
        debug_assert_eq!(entries.len(), dim * dim);
        OperatorMatrix { grid, dim, entries }
    }

    pub fn zeros(grid: Grid) -> Self {
        let dim = grid.len();
        Self::from_entries(grid, vec![Rational::zero(); dim * dim])
    }

    pub fn identity(grid: Grid) -> Self {
        Self::scalar(grid, &Rational::one())
    }

    pub fn scalar(grid: Grid, s: &Rational) -> Self {
        let mut m = Self::zeros(grid);
        for i in 0..m.dim {
            m.entries[i * m.dim + i] = s.clone();
        }
        m
    }

    pub fn diagonal(grid: Grid, f: impl Fn(Point) -> Rational) -> Self {
        let mut m = Self::zeros(grid);
        for (i, p) in grid.points().into_iter().enumerate() {
            m.entries[i * m.dim + i] = f(p);
        }
        m
    }

    /// Builds a matrix from explicit rows; rows must be square over `grid`.
    pub fn from_rows(grid: Grid, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = grid.len();
        if rows.len() != dim {
            return Err(Error::Dimension { left: dim, right: rows.len() });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            if r.len() != dim {
                return Err(Error::Dimension { left: dim, right: r.len() });
            }
            entries.extend(r);
        }
        Ok(Self::from_entries(grid, entries))
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    fn check_dim(&self, other: &OperatorMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        self.check_dim(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Self::from_entries(self.grid, entries))
    }

    pub fn try_sub(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        self.check_dim(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Self::from_entries(self.grid, entries))
    }

    pub fn try_mul(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        self.check_dim(other)?;
        let n = self.dim;
        // Stencil products stay sparse; skip zeros on both sides.
        let other_nz: Vec<Vec<(usize, &Rational)>> = (0..n)
            .map(|k| other.row(k).iter().enumerate().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        let rows: Vec<Vec<Rational>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![Rational::zero(); n];
                for (k, a) in self.row(i).iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for &(j, b) in &other_nz[k] {
                        row[j] += a * b;
                    }
                }
                row
            })
            .collect();
        Ok(Self::from_entries(self.grid, rows.into_iter().flatten().collect()))
    }

    pub fn scale(&self, s: &Rational) -> OperatorMatrix {
        Self::from_entries(self.grid, self.entries.iter().map(|a| a * s).collect())
    }

    pub fn transpose(&self) -> OperatorMatrix {
        let n = self.dim;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect();
        Self::from_entries(self.grid, entries)
    }

    pub fn apply(&self, f: &GridFunction) -> Result<GridFunction> {
        if f.values.len() != self.dim {
            return Err(Error::Dimension {
                left: self.dim,
                right: f.values.len(),
            });
        }
        let values = (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(&f.values)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, v)| acc + a * v)
            })
            .collect();
        Ok(GridFunction { grid: self.grid, values })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Largest-magnitude entry, or `None` for the zero matrix.
    pub fn residual(&self) -> Option<Witness> {
        let mut best: Option<(usize, &Rational)> = None;
        for (k, v) in self.entries.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(_, b)| v.abs() > b.abs()) {
                best = Some((k, v));
            }
        }
        best.map(|(k, v)| {
            let pts = self.grid.points();
            Witness {
                row: self.grid.label(pts[k / self.dim]),
                col: self.grid.label(pts[k % self.dim]),
                value: v.clone(),
            }
        })
    }

    /// Row-major "p/q" strings with the grid legend.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|i| self.row(i).iter().map(|v| v.to_string()).collect())
            .collect();
        serde_json::json!({ "legend": self.grid.labels(), "rows": rows })
    }
}

pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

pub fn anticommutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    a.try_mul(b)?.try_add(&b.try_mul(a)?)
}

// Operator sugar for relation catalogs; operands always share a grid there.
impl Add for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.try_add(rhs).expect("matrix dimensions agree")
    }
}

impl Sub for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.try_sub(rhs).expect("matrix dimensions agree")
    }
}

impl Mul for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

impl Mul<&OperatorMatrix> for &Rational {
    type Output = OperatorMatrix;
    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        rhs.scale(self)
    }
}

impl Neg for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn neg(self) -> OperatorMatrix {
        self.scale(&-Rational::one())
    }
}

/// Rectangular table of values: rows indexed by `degrees`, columns by `grid`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueTable {
    pub degrees: Grid,
    pub grid: Grid,
    pub rows: Vec<Vec<Rational>>,
}

impl ValueTable {
    pub fn from_fn(degrees: Grid, grid: Grid, f: impl Fn(Point, Point) -> Result<Rational> + Sync) -> Result<Self> {
        let gpts = grid.points();
        let rows = degrees
            .points()
            .par_iter()
            .map(|&d| gpts.iter().map(|&g| f(d, g)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(ValueTable { degrees, grid, rows })
    }

    /// The values of one degree as a function on the grid.
    pub fn row_function(&self, i: usize) -> GridFunction {
        GridFunction {
            grid: self.grid,
            values: self.rows[i].clone(),
        }
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights {
    pub omega: GridFunction,
    pub sigma: GridFunction,
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Solves for diagonal ω, σ with `V diag(ω) Vᵀ = diag(1/σ)` and ω at the first grid point equal to 1.
///
/// The orthogonality conditions for distinct degree pairs are linear in ω. If they leave more
/// than one free direction (e.g. V = I), every free unknown is set to 1 before normalizing.
pub fn solve_weight(v: &ValueTable) -> Result<Weights> {
    let m = v.grid.len();
    if v.rows.len() != m || v.degrees.len() != m {
        return Err(Error::Dimension {
            left: v.rows.len(),
            right: m,
        });
    }
    if rank(&v.rows) < m {
        return Err(Error::Singular);
    }
    // Incremental elimination over the pair conditions; at most m−1 of them are independent,
    // and the congruence pass below re-checks every pair exactly.
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    'pairs: for a in 0..m {
        for b in a + 1..m {
            if basis.len() + 1 >= m {
                break 'pairs;
            }
            let mut eq: Vec<Rational> = (0..m).map(|x| &v.rows[a][x] * &v.rows[b][x]).collect();
            for (c, row) in &basis {
                if eq[*c].is_zero() {
                    continue;
                }
                let f = eq[*c].clone();
                for (e, r) in eq.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *e -= &f * r;
                    }
                }
            }
            let Some(c) = eq.iter().position(|e| !e.is_zero()) else {
                continue;
            };
            let inv = eq[c].recip();
            for e in eq.iter_mut() {
                *e *= &inv;
            }
            for (_, row) in basis.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (r, e) in row.iter_mut().zip(&eq) {
                    if !e.is_zero() {
                        *r -= &f * e;
                    }
                }
            }
            basis.push((c, eq));
        }
    }
    let pivots: Vec<usize> = basis.iter().map(|(c, _)| *c).collect();
    let mut omega = vec![Rational::one(); m];
    for (c, row) in &basis {
        let mut s = Rational::zero();
        for (j, coef) in row.iter().enumerate() {
            if j != *c && !pivots.contains(&j) {
                s -= coef;
            }
        }
        omega[*c] = s;
    }
    if omega[0].is_zero() {
        return Err(Error::NonDiagonalizable("solved ω vanishes at the origin".into()));
    }
    let w0 = omega[0].clone();
    for w in omega.iter_mut() {
        *w /= &w0;
    }
    let weighted: Vec<Vec<Rational>> = v
        .rows
        .par_iter()
        .map(|r| r.iter().zip(&omega).map(|(a, w)| a * w).collect())
        .collect();
    let dot = |a: usize, b: usize| -> Rational { v.rows[a].iter().zip(&weighted[b]).map(|(x, y)| x * y).sum() };
    let mut sigma = Vec::with_capacity(m);
    for a in 0..m {
        let s = dot(a, a);
        if s.is_zero() {
            return Err(Error::Singular);
        }
        sigma.push(s.recip());
    }
    let offdiag = (0..m)
        .into_par_iter()
        .flat_map_iter(|a| (a + 1..m).map(move |b| (a, b)))
        .find_first(|&(a, b)| !dot(a, b).is_zero());
    if let Some((a, b)) = offdiag {
        return Err(Error::NonDiagonalizable(format!("congruence entry ({a}, {b}) = {}", dot(a, b))));
    }
    Ok(Weights {
        omega: GridFunction { grid: v.grid, values: omega },
        sigma: GridFunction { grid: v.degrees, values: sigma },
    })
}

/// `V diag(ω) Vᵀ - diag(1/σ)` as a matrix over the degree grid.
pub fn congruence_residual(v: &ValueTable, w: &Weights) -> OperatorMatrix {
    let m = v.degrees.len();
    let mut rows = vec![vec![Rational::zero(); m]; m];
    for a in 0..m {
        for b in 0..m {
            let mut s: Rational = (0..v.grid.len())
                .map(|x| &v.rows[a][x] * &v.rows[b][x] * &w.omega.values[x])
                .sum();
            if a == b {
                s -= w.sigma.values[a].recip();
            }
            rows[a][b] = s;
        }
    }
    OperatorMatrix::from_rows(v.degrees, rows).expect("square degree table")
}

impl Add for OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: OperatorMatrix) -> OperatorMatrix {
        &self + &rhs
    }
}

impl Add<&OperatorMatrix> for OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        &self + rhs
    }
}

impl Sub for OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: OperatorMatrix) -> OperatorMatrix {
        &self - &rhs
    }
}

impl Sub<&OperatorMatrix> for OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        &self - rhs
    }
}

impl Mul<OperatorMatrix> for Rational {
    type Output = OperatorMatrix;
    fn mul(self, rhs: OperatorMatrix) -> OperatorMatrix {
        rhs.scale(&self)
    }
}

impl Mul<&OperatorMatrix> for Rational {
    type Output = OperatorMatrix;
    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        rhs.scale(&self)
    }
}
