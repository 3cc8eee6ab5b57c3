//! Bivariate Racah (Tratnik) polynomials on the triangular grid, the operators
//! Λ₁ˣ, Λ₂ˣ, Ω₁, the dual map and the (m; y; γ) family.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, pochhammer, Rational};
use crate::gridop::{coeff_fn, CoeffFn, Grid, Point, StencilOperator, ValueTable};
use crate::racah1::{beta_from_nu, kappa, nu_from_beta, racah_r, Su11Weights};
use crate::Reading;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RacahParams2 {
    beta: [Rational; 4],
    n: usize,
}

impl RacahParams2 {
    /// Rejects packs where 2x+β₁ or 2x+β₂ (or either ±1) vanishes for some x in 0..=N.
    pub fn new(beta: [Rational; 4], n: usize) -> Result<Self> {
        for (name, b) in [("β₁", &beta[1]), ("β₂", &beta[2])] {
            for x in 0..=n as i64 {
                for shift in [-1, 0, 1] {
                    if (int(2 * x + shift) + b).is_zero() {
                        return Err(Error::Validity(format!("2x+{name}{shift:+} vanishes at x = {x} ({name} = {b})")));
                    }
                }
            }
        }
        Ok(RacahParams2 { beta, n })
    }

    pub fn beta(&self) -> &[Rational; 4] {
        &self.beta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nu(&self) -> Vec<Rational> {
        nu_from_beta(&self.beta)
    }

    pub fn grid(&self) -> Grid {
        Grid::Triangle(self.n)
    }

    pub fn degrees(&self) -> Grid {
        Grid::Simplex(self.n)
    }

    /// Eigenvalue of Λ₁ˣ: κ(n₁, (β₂−β₀)/2).
    pub fn lambda1_eigenvalue(&self, d: Point) -> Rational {
        kappa(&int(d[0]), &((&self.beta[2] - &self.beta[0]) / int(2)))
    }

    /// Eigenvalue of Λ₂ˣ: κ(n₁+n₂, (β₃−β₀)/2).
    pub fn lambda2_eigenvalue(&self, d: Point) -> Rational {
        kappa(&int(d[0] + d[1]), &((&self.beta[3] - &self.beta[0]) / int(2)))
    }

    /// Parameters of the dual family.
    pub fn dual(&self) -> Result<RacahParams2> {
        RacahParams2::new(dual_beta(&self.beta, self.n), self.n)
    }
}

impl Su11Weights {
    pub fn params2(&self, n: usize) -> Result<RacahParams2> {
        let b = beta_from_nu(self);
        if b.len() != 4 {
            return Err(Error::Validity("bivariate family needs four weights".into()));
        }
        RacahParams2::new([b[0].clone(), b[1].clone(), b[2].clone(), b[3].clone()], n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridPoint2 {
    pub x1: usize,
    pub x2: usize,
}

impl GridPoint2 {
    pub fn new(x1: usize, x2: usize, n: usize) -> Result<Self> {
        if x1 > x2 || x2 > n {
            return Err(Error::Validity(format!("grid point ({x1},{x2}) outside 0 <= x1 <= x2 <= {n}")));
        }
        Ok(GridPoint2 { x1, x2 })
    }

    pub fn point(&self) -> Point {
        [self.x1 as i64, self.x2 as i64]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreePair {
    pub n1: usize,
    pub n2: usize,
}

impl DegreePair {
    pub fn new(n1: usize, n2: usize, n: usize) -> Result<Self> {
        if n1 + n2 > n {
            return Err(Error::Validity(format!("degree ({n1},{n2}) exceeds N = {n}")));
        }
        Ok(DegreePair { n1, n2 })
    }

    pub fn point(&self) -> Point {
        [self.n1 as i64, self.n2 as i64]
    }
}

/// Which denominator divides the product of the two univariate factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// (−N)_{n₁+n₂}(−N+β₀)_{n₁+n₂}(β₂−β₁)_{n₁}(β₃−β₁)_{n₂}
    Printed,
    /// (−N)_{n₁+n₂}(−N−β₀)_{n₁+n₂}(β₂−β₁)_{n₁}(β₃−β₂)_{n₂}; makes R₂ invariant under duality.
    SelfDual,
}

pub fn normalizer(d: [usize; 2], beta: &[Rational; 4], n: usize, norm: Normalization) -> Rational {
    let [b0, b1, b2, b3] = beta;
    let s = d[0] + d[1];
    let nn = int(n as i64);
    let (second, last) = match norm {
        Normalization::Printed => (b0 - &nn, b3 - b1),
        Normalization::SelfDual => (-&nn - b0, b3 - b2),
    };
    pochhammer(&-&nn, s) * pochhammer(&second, s) * pochhammer(&(b2 - b1), d[0]) * pochhammer(&last, d[1])
}

/// Product of the two univariate factors at an arbitrary rational point.
pub fn racah2_factors(d: [usize; 2], x: &[Rational; 2], beta: &[Rational; 4], n: usize) -> Rational {
    let [b0, b1, b2, b3] = beta;
    let one = Rational::one();
    let nn = int(n as i64);
    let n1 = int(d[0] as i64);
    let f1 = racah_r(d[0], &(b1 - b0 - &one), &(b2 - b1 - &one), &(-&x[1] - &one), &(b1 + &x[1]), &x[0]);
    if f1.is_zero() {
        return f1;
    }
    let f2 = racah_r(
        d[1],
        &(int(2) * &n1 + b2 - b0 - &one),
        &(b3 - b2 - &one),
        &(&n1 - &nn - &one),
        &(&nn + &n1 + b2),
        &(&x[1] - &n1),
    );
    f1 * f2
}

pub fn racah2_eval_at(d: [usize; 2], x: &[Rational; 2], beta: &[Rational; 4], n: usize, norm: Normalization) -> Result<Rational> {
    let den = normalizer(d, beta, n, norm);
    if den.is_zero() {
        return Err(Error::Pole {
            what: format!("normalizer at degree ({},{})", d[0], d[1]),
            index: d[0] + d[1],
        });
    }
    Ok(racah2_factors(d, x, beta, n) / den)
}

/// R₂(n₁,n₂; x₁,x₂; β; N) with the printed normalizer.
pub fn racah2_eval(d: DegreePair, g: GridPoint2, p: &RacahParams2) -> Result<Rational> {
    racah2_eval_with(d, g, p, Normalization::Printed)
}

pub fn racah2_eval_with(d: DegreePair, g: GridPoint2, p: &RacahParams2, norm: Normalization) -> Result<Rational> {
    if d.n1 + d.n2 > p.n || g.x2 > p.n || g.x1 > g.x2 {
        return Err(Error::Validity(format!("degree/point outside N = {}", p.n)));
    }
    let x = [int(g.x1 as i64), int(g.x2 as i64)];
    racah2_eval_at([d.n1, d.n2], &x, &p.beta, p.n, norm)
}

/// Rows indexed by degrees, columns by grid points.
pub fn racah2_table(p: &RacahParams2, norm: Normalization) -> Result<ValueTable> {
    ValueTable::from_fn(p.degrees(), p.grid(), |d, g| {
        racah2_eval_at([d[0] as usize, d[1] as usize], &[int(g[0]), int(g[1])], &p.beta, p.n, norm)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    One,
    Two,
}

/// Shift offsets of 𝓛₁ˣ (level one) and 𝓛₂ˣ (level two).
pub fn level_offsets(level: Level) -> Vec<Point> {
    match level {
        Level::One => vec![[1, 0], [-1, 0]],
        Level::Two => vec![[1, 1], [-1, 1], [1, -1], [-1, -1], [1, 0], [-1, 0], [0, 1], [0, -1]],
    }
}

fn c1_base(x1: &Rational, x2: &Rational, p: &RacahParams2) -> Rational {
    let [b0, b1, b2, _] = &p.beta;
    let t = int(2) * x1 + b1;
    (x1 + b1 - b0) * (x1 + b1) * (x2 + x1 + b2) * (x2 - x1) / (&t * (&t + Rational::one()))
}

fn c11_base(x1: &Rational, x2: &Rational, p: &RacahParams2) -> Rational {
    let [b0, b1, b2, b3] = &p.beta;
    let nn = int(p.n as i64);
    let one = Rational::one();
    let t1 = int(2) * x1 + b1;
    let t2 = int(2) * x2 + b2;
    (x1 + b1) * (x1 + b1 - b0) * (x2 + x1 + b2) * (x2 + x1 + b2 + &one) * (&nn - x2) * (&nn + x2 + b3)
        / (&t1 * (&t1 + &one) * &t2 * (&t2 + &one))
}

fn c10_base(x1: &Rational, x2: &Rational, p: &RacahParams2, reading: Reading) -> Rational {
    let [b0, b1, b2, b3] = &p.beta;
    let nn = int(p.n as i64);
    let one = Rational::one();
    let two = int(2);
    let t1 = &two * x1 + b1;
    let t2 = &two * x2 + b2;
    // The displayed factor reads (x₂+x₂+β₂).
    let sum = match reading {
        Reading::Printed => x2 + x2 + b2,
        Reading::Corrected => x2 + x1 + b2,
    };
    let left = (x1 + b1) * (x1 + b1 - b0) * (x2 - x1) * sum / (&t1 * (&t1 + &one));
    let right = (&two * x2 * (x2 + b2) + &two * &nn * (&nn + b3) + (b2 + &one) * (b3 - &one))
        / ((&t2 - &one) * (&t2 + &one));
    left * right
}

fn c01_base(x1: &Rational, x2: &Rational, p: &RacahParams2) -> Rational {
    let [b0, b1, b2, b3] = &p.beta;
    let nn = int(p.n as i64);
    let one = Rational::one();
    let two = int(2);
    let t1 = &two * x1 + b1;
    let t2 = &two * x2 + b2;
    (&two * x1 * (x1 + b1) + (b0 + &one) * (b1 - &one)) * (x2 + x1 + b2) / ((&t1 - &one) * (&t1 + &one))
        * (x2 - x1 + b2 - b1)
        * (&nn - x2)
        * (&nn + x2 + b3)
        / (&t2 * (&t2 + &one))
}

/// Shift coefficient C_(j,k) of the given level at (x₁, x₂). Offsets with a negative
/// component are the I₁ (x₁ → −x₁−β₁) and I₂ (x₂ → −x₂−β₂) images of the displayed ones.
/// Offsets outside the level's stencil give 0. `reading` only affects C⁽²⁾₍±₁,₀₎.
pub fn coeff_c(level: Level, offset: Point, x1: &Rational, x2: &Rational, p: &RacahParams2, reading: Reading) -> Rational {
    if !level_offsets(level).contains(&offset) {
        return Rational::zero();
    }
    let y1 = if offset[0] < 0 { -x1 - &p.beta[1] } else { x1.clone() };
    let y2 = if offset[1] < 0 { -x2 - &p.beta[2] } else { x2.clone() };
    match (level, offset[0].abs(), offset[1].abs()) {
        (Level::One, 1, 0) => c1_base(&y1, &y2, p),
        (Level::Two, 1, 1) => c11_base(&y1, &y2, p),
        (Level::Two, 1, 0) => c10_base(&y1, &y2, p, reading),
        (Level::Two, 0, 1) => c01_base(&y1, &y2, p),
        _ => unreachable!("offset filtered above"),
    }
}

fn level_shifts(level: Level, p: &RacahParams2, reading: Reading, offsets: &[Point]) -> Vec<(Point, CoeffFn)> {
    offsets
        .iter()
        .map(|&o| {
            let q = p.clone();
            (o, coeff_fn(move |a, b| coeff_c(level, o, a, b, &q, reading)))
        })
        .collect()
}

/// Λ₁ˣ = −𝓛₁ˣ + κ(0, (β₂−β₀)/2).
pub fn lambda1x_op(p: &RacahParams2) -> StencilOperator {
    let c = p.lambda1_eigenvalue([0, 0]);
    StencilOperator::difference(p.grid(), level_shifts(Level::One, p, Reading::Corrected, &level_offsets(Level::One)), c)
}

/// Λ₂ˣ = −𝓛₂ˣ + κ(0, (β₃−β₀)/2) over all eight level-two offsets.
pub fn lambda2x_op(p: &RacahParams2, reading: Reading) -> StencilOperator {
    lambda2x_op_offsets(p, reading, &level_offsets(Level::Two))
}

/// Λ₂ˣ restricted to a subset of the level-two offsets.
pub fn lambda2x_op_offsets(p: &RacahParams2, reading: Reading, offsets: &[Point]) -> StencilOperator {
    let c = p.lambda2_eigenvalue([0, 0]);
    StencilOperator::difference(p.grid(), level_shifts(Level::Two, p, reading, offsets), c)
}

/// Displayed eigenvalue of 𝓛₂ˣ, which carries β₂ where the operator needs β₃.
pub fn script_l2_eigenvalue(d: Point, p: &RacahParams2, reading: Reading) -> Rational {
    let s = int(d[0] + d[1]);
    let top = match reading {
        Reading::Printed => &p.beta[2],
        Reading::Corrected => &p.beta[3],
    };
    -(&s) * (&s + top - &p.beta[0] - Rational::one())
}

/// Displayed eigenvalue of 𝓛₁ˣ: −n₁(n₁+β₂−β₀−1).
pub fn script_l1_eigenvalue(d: Point, p: &RacahParams2) -> Rational {
    let s = int(d[0]);
    -(&s) * (&s + &p.beta[2] - &p.beta[0] - Rational::one())
}

pub fn omega_b(x1: &Rational, x2: &Rational, p: &RacahParams2) -> Rational {
    let [_, b1, b2, b3] = &p.beta;
    let nn = int(p.n as i64);
    let t2 = int(2) * x2 + b2;
    (x2 + x1 + b2) * (x2 - x1 + b2 - b1) * (&nn - x2) * (x2 + &nn + b3) / ((&t2 + Rational::one()) * &t2)
}

/// Ẽ; the display has (x₂+x₁+β₂) in the second factor, the commutant of Λ₂ˣ needs (x₂+x₁+β₁).
pub fn omega_e(x1: &Rational, x2: &Rational, p: &RacahParams2, reading: Reading) -> Rational {
    let [_, b1, b2, b3] = &p.beta;
    let nn = int(p.n as i64);
    let t2 = int(2) * x2 + b2;
    let second = match reading {
        Reading::Printed => x2 + x1 + b2,
        Reading::Corrected => x2 + x1 + b1,
    };
    (x2 - x1) * second * (&nn - x2 + b3 - b2) * (&nn + x2 + b2) / ((&t2 - Rational::one()) * &t2)
}

/// Diagonal constant of Ω₁: (ν₃+ν₄)(ν₃+ν₄−1)/4 as displayed, without the /4 when corrected.
pub fn omega_constant(p: &RacahParams2, reading: Reading) -> Rational {
    let s = (&p.beta[3] - &p.beta[1]) / int(2);
    let k = &s * (&s - Rational::one());
    match reading {
        Reading::Printed => k / int(4),
        Reading::Corrected => k,
    }
}

/// Ω₁ = −[B̃(T_{x₂}−1) + Ẽ(T_{x₂}⁻¹−1)] + constant.
pub fn omega1_op(p: &RacahParams2, reading: Reading) -> StencilOperator {
    let (pb, pe) = (p.clone(), p.clone());
    StencilOperator::difference(
        p.grid(),
        vec![
            ([0, 1], coeff_fn(move |a, b| omega_b(a, b, &pb))),
            ([0, -1], coeff_fn(move |a, b| omega_e(a, b, &pe, reading))),
        ],
        omega_constant(p, reading),
    )
}

/// β̃ = (β₀, β₀−β₃−2N+1, β₀−β₂−2N+1, β₀−β₁−2N+1).
pub fn dual_beta(beta: &[Rational; 4], n: usize) -> [Rational; 4] {
    let [b0, b1, b2, b3] = beta;
    let c = b0 - int(2 * n as i64) + Rational::one();
    [b0.clone(), &c - b3, &c - b2, &c - b1]
}

/// Variables and parameters on the other side of the duality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualData {
    pub x: [Rational; 2],
    pub n: [Rational; 2],
    pub beta: [Rational; 4],
}

/// Solves the displayed linear system for the tilde quantities:
/// x̃₁ = n₁+n₂+β₃−β₀+N−1, x̃₂ = n₁+β₂−β₀+N−1, ñ₁ = x₂+β₂+N, ñ₂ = x₁−x₂+β₁−β₂.
pub fn dual_map(x: &[Rational; 2], n: &[Rational; 2], beta: &[Rational; 4], big_n: usize) -> DualData {
    let [b0, b1, b2, b3] = beta;
    let nn = int(big_n as i64);
    let one = Rational::one();
    DualData {
        x: [
            &n[0] + &n[1] + b3 - b0 + &nn - &one,
            &n[0] + b2 - b0 + &nn - &one,
        ],
        n: [&x[1] + b2 + &nn, &x[0] - &x[1] + b1 - b2],
        beta: dual_beta(beta, big_n),
    }
}

/// Integer representative of the dual degree of a grid point: (N−x₂, x₂−x₁).
pub fn dual_degree(g: Point, n: usize) -> Point {
    [n as i64 - g[1], g[1] - g[0]]
}

/// Integer representative of the dual grid point of a degree: (N−n₁−n₂, N−n₁).
pub fn dual_point(d: Point, n: usize) -> Point {
    [n as i64 - d[0] - d[1], n as i64 - d[0]]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaPacks {
    pub gamma: [Rational; 4],
    pub gamma_tilde: [Rational; 4],
}

/// γ and γ̃ of the (m; y) family: γ₀ = γ̃₀ = −2N−2(ν₁+ν₂+ν₃+ν₄)+1,
/// γₖ drops ν₄, ν₃, ν₂ in turn, γ̃ₖ drops ν₁, ν₂, ν₃.
pub fn gamma_params(w: &Su11Weights, n: usize) -> Result<GammaPacks> {
    let nu = w.nu();
    if nu.len() != 4 {
        return Err(Error::Validity("the (m; y) family needs four weights".into()));
    }
    let base = -int(2 * n as i64) + Rational::one();
    let g = |s: Rational| &base - int(2) * s;
    let (a, b, c, d) = (&nu[0], &nu[1], &nu[2], &nu[3]);
    Ok(GammaPacks {
        gamma: [g(a + b + c + d), g(a + b + c), g(a + b), g(a.clone())],
        gamma_tilde: [g(a + b + c + d), g(b + c + d), g(c + d), g(d.clone())],
    })
}

/// y₁ = x₂+N+β₂, y₂ = x₁+N+β₁.
pub fn y_of_x(g: Point, p: &RacahParams2) -> [Rational; 2] {
    let nn = int(p.n as i64);
    [int(g[1]) + &nn + &p.beta[2], int(g[0]) + &nn + &p.beta[1]]
}

/// m̃ = (x₁, x₂−x₁): the triangular grid onto the degree simplex.
pub fn m_tilde_of_x(g: Point) -> Point {
    [g[0], g[1] - g[0]]
}

/// The two readings of the m₂ relation in the (m; y) change of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YsReading {
    /// m₂ = ỹ₁−ỹ₂+γ̃₁−γ̃₂
    Symmetric,
    /// m₂ = ỹ₁−ỹ₂+γ̃₂−γ̃₂, as displayed
    Literal,
}

/// Inverts m₁ = ỹ₂+γ̃₂+N and the chosen m₂ relation for (ỹ₁, ỹ₂).
pub fn y_tilde_of_m(m: Point, gp: &GammaPacks, n: usize, reading: YsReading) -> [Rational; 2] {
    let gt = &gp.gamma_tilde;
    let y2 = int(m[0]) - &gt[2] - int(n as i64);
    let y1 = match reading {
        YsReading::Symmetric => int(m[1]) + &y2 - &gt[1] + &gt[2],
        YsReading::Literal => int(m[1]) + &y2,
    };
    [y1, y2]
}

/// R₂(m; y(x); γ; N).
pub fn racah2_eval_my(m: DegreePair, g: GridPoint2, w: &Su11Weights, n: usize) -> Result<Rational> {
    let p = w.params2(n)?;
    let gp = gamma_params(w, n)?;
    racah2_eval_at([m.n1, m.n2], &y_of_x(g.point(), &p), &gp.gamma, n, Normalization::Printed)
}

/// Table of the (m; y; γ) family: rows m over the simplex, columns x over the triangle.
pub fn my_table(w: &Su11Weights, n: usize) -> Result<ValueTable> {
    let p = w.params2(n)?;
    let gp = gamma_params(w, n)?;
    ValueTable::from_fn(p.degrees(), p.grid(), |m, g| {
        racah2_eval_at([m[0] as usize, m[1] as usize], &y_of_x(g, &p), &gp.gamma, n, Normalization::Printed)
    })
}

/// Ratio of the self-dual to the printed normalizer at degree d.
pub fn normalization_gauge(d: [usize; 2], p: &RacahParams2) -> Result<Rational> {
    let printed = normalizer(d, &p.beta, p.n, Normalization::Printed);
    if printed.is_zero() {
        return Err(Error::Pole {
            what: format!("printed normalizer at degree ({},{})", d[0], d[1]),
            index: d[0] + d[1],
        });
    }
    Ok(normalizer(d, &p.beta, p.n, Normalization::SelfDual) / printed)
}
