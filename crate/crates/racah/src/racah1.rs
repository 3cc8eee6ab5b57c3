//! Univariate Racah polynomials in the β-parametrization, their difference
//! operator Λ, the QR(3) structure constants and the squared gauge factor.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, hyp4f3_terminating, int, pochhammer, rat, Rational};
use crate::gridop::{coeff_fn, Grid, StencilOperator, ValueTable};
use crate::Reading;

/// Positive discrete-series weights ν₁..ν₃ (or ν₁..ν₄).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Su11Weights {
    nu: Vec<Rational>,
}

impl Su11Weights {
    pub fn new(nu: Vec<Rational>) -> Result<Self> {
        if !(3..=4).contains(&nu.len()) {
            return Err(Error::Validity(format!("expected 3 or 4 weights, got {}", nu.len())));
        }
        if let Some(v) = nu.iter().find(|v| !v.is_positive()) {
            return Err(Error::Validity(format!("weight {v} is not positive")));
        }
        Ok(Su11Weights { nu })
    }

    pub fn nu(&self) -> &[Rational] {
        &self.nu
    }

    /// Q⁽ⁱ⁾ = νᵢ(νᵢ − 1).
    pub fn casimirs(&self) -> Vec<Rational> {
        self.nu.iter().map(|v| v * (v - Rational::one())).collect()
    }

    /// Univariate pack from ν₁, ν₂, ν₃.
    pub fn params1(&self, n: usize) -> Result<RacahParams1> {
        let b = beta_from_nu(self);
        RacahParams1::new(b[0].clone(), b[1].clone(), b[2].clone(), n)
    }
}

/// βₖ = 2(ν₁ + ... + ν_{k+1}) − 1.
pub fn beta_from_nu(w: &Su11Weights) -> Vec<Rational> {
    let mut s = Rational::zero();
    w.nu.iter()
        .map(|v| {
            s += v;
            int(2) * &s - Rational::one()
        })
        .collect()
}

/// Recovers ν from consecutive β differences: ν₁ = (β₀+1)/2, νₖ = (βₖ₋₁ − βₖ₋₂)/2.
pub fn nu_from_beta(beta: &[Rational]) -> Vec<Rational> {
    let half = rat(1, 2);
    let mut out = vec![(&beta[0] + Rational::one()) * &half];
    for w in beta.windows(2) {
        out.push((&w[1] - &w[0]) * &half);
    }
    out
}

pub fn kappa(n: &Rational, c: &Rational) -> Rational {
    let s = n + c;
    &s * (&s - Rational::one())
}

/// Classical r_n(α, β, γ, δ; x) with the Pochhammer prefactor distributed into the sum,
/// so that no 4F3 denominator is ever divided out.
pub fn racah_r(n: usize, alpha: &Rational, beta: &Rational, gamma: &Rational, delta: &Rational, x: &Rational) -> Rational {
    let one = Rational::one();
    let a = Rational::from_integer((-(n as i64)).into());
    let b = int(n as i64) + alpha + beta + &one;
    let c = -x;
    let d = x + gamma + delta + &one;
    let mut sum = Rational::zero();
    for k in 0..=n {
        let top = pochhammer(&a, k) * pochhammer(&b, k) * pochhammer(&c, k) * pochhammer(&d, k);
        if top.is_zero() {
            continue;
        }
        let kk = int(k as i64);
        let rest = pochhammer(&(alpha + &one + &kk), n - k)
            * pochhammer(&(beta + delta + &one + &kk), n - k)
            * pochhammer(&(gamma + &one + &kk), n - k);
        sum += top * rest / factorial(k);
    }
    sum
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RacahParams1 {
    beta: [Rational; 3],
    n: usize,
}

impl RacahParams1 {
    pub fn new(beta0: Rational, beta1: Rational, beta2: Rational, n: usize) -> Result<Self> {
        for x in 0..=n as i64 {
            let s = int(2 * x) + &beta1;
            for shift in [-1, 0, 1] {
                if (&s + int(shift)).is_zero() {
                    return Err(Error::Validity(format!(
                        "2x+β₁{:+} vanishes at x = {x} (β₁ = {beta1})",
                        shift
                    )));
                }
            }
        }
        Ok(RacahParams1 {
            beta: [beta0, beta1, beta2],
            n,
        })
    }

    pub fn beta(&self) -> &[Rational; 3] {
        &self.beta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nu(&self) -> Vec<Rational> {
        nu_from_beta(&self.beta)
    }

    pub fn grid(&self) -> Grid {
        Grid::Segment(self.n)
    }

    /// (β₁−β₀)_n (−N)_n (N+β₂)_n.
    pub fn prefactor(&self, n: usize) -> Rational {
        let [b0, b1, b2] = &self.beta;
        let nn = int(self.n as i64);
        pochhammer(&(b1 - b0), n) * pochhammer(&-&nn, n) * pochhammer(&(&nn + b2), n)
    }

    pub fn lambda_constant(&self) -> Rational {
        let c = (&self.beta[2] - &self.beta[0]) / int(2);
        kappa(&Rational::zero(), &c)
    }

    pub fn eigenvalue(&self, n: usize) -> Rational {
        kappa(&int(n as i64), &((&self.beta[2] - &self.beta[0]) / int(2)))
    }
}

/// r_n(x) = (β₁−β₀)_n(−N)_n(N+β₂)_n · 4F3(−n, n+β₂−β₀−1, −x, x+β₁; β₁−β₀, N+β₂, −N; 1).
pub fn racah1_eval(n: usize, x: usize, p: &RacahParams1) -> Result<Rational> {
    if n > p.n || x > p.n {
        return Err(Error::Validity(format!("(n, x) = ({n}, {x}) outside 0..={}", p.n)));
    }
    let [b0, b1, b2] = &p.beta;
    let nn = int(p.n as i64);
    let xr = int(x as i64);
    let num = [
        int(-(n as i64)),
        int(n as i64) + b2 - b0 - Rational::one(),
        -&xr,
        &xr + b1,
    ];
    let den = [b1 - b0, &nn + b2, -&nn];
    Ok(p.prefactor(n) * hyp4f3_terminating(&num, &den, n)?)
}

/// Same value through the pole-free expansion of r_n(β₁−β₀−1, β₂−β₁−1, −N−1, N+β₁; x).
pub fn racah1_eval_expanded(n: usize, x: &Rational, p: &RacahParams1) -> Rational {
    let [b0, b1, b2] = &p.beta;
    let one = Rational::one();
    let nn = int(p.n as i64);
    racah_r(n, &(b1 - b0 - &one), &(b2 - b1 - &one), &(-&nn - &one), &(&nn + b1), x)
}

pub fn racah1_table(p: &RacahParams1) -> Result<ValueTable> {
    let g = p.grid();
    ValueTable::from_fn(g, g, |d, x| racah1_eval(d[0] as usize, x[0] as usize, p))
}

pub fn coeff_b(x: &Rational, p: &RacahParams1) -> Rational {
    let [b0, b1, b2] = &p.beta;
    let nn = int(p.n as i64);
    let one = Rational::one();
    let two_x = int(2) * x + b1;
    (x + b1 - b0) * (x + b1) * (x + b2 + &nn) * (&nn - x) / (&two_x * (&two_x + &one))
}

pub fn coeff_e(x: &Rational, p: &RacahParams1) -> Rational {
    let [b0, b1, b2] = &p.beta;
    let nn = int(p.n as i64);
    let one = Rational::one();
    let two_x = int(2) * x + b1;
    x * (x + b0) * (&nn - x - b1 + b2) * (&nn + x + b1) / (&two_x * (&two_x - &one))
}

/// Λ = −[B(T−1) + E(T⁻¹−1)] + κ(0, (β₂−β₀)/2) on {0..N}.
pub fn lambda1_stencil(p: &RacahParams1) -> StencilOperator {
    let (pb, pe) = (p.clone(), p.clone());
    StencilOperator::difference(
        p.grid(),
        vec![
            ([1, 0], coeff_fn(move |x, _| coeff_b(x, &pb))),
            ([-1, 0], coeff_fn(move |x, _| coeff_e(x, &pe))),
        ],
        p.lambda_constant(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qr3Constants {
    pub d: Rational,
    pub e1: Rational,
    pub e2: Rational,
}

/// d, e₁, e₂ from the closed β-forms. `Printed` reproduces the displayed e₁ with its
/// factor (β₁+β₀−c); `Corrected` uses (β₁−β₀−c), c = (β₂−β₀)/2.
pub fn qr3_constants(p: &RacahParams1, reading: Reading) -> Qr3Constants {
    let [b0, b1, b2] = &p.beta;
    let nn = int(p.n as i64);
    let one = Rational::one();
    let half = rat(1, 2);
    let quarter = rat(1, 4);
    let d = &half
        * (&nn * (&nn + b2) + &half * b0 * (b0 - b1 + &one) + &half * b1 * (b1 - b2) + &half * b2 * (b2 - &one)
            - &half);
    let c = (b2 - b0) * &half;
    let second = match reading {
        Reading::Printed => b1 + b0 - &c,
        Reading::Corrected => b1 - b0 - &c,
    };
    let e1 = -&quarter * (&c - &one) * second * (&nn + &c) * (&nn + b0 + &c);
    let h = (b1 + &one) * &half;
    let e2 = &quarter * (&h - &one) * (b0 + &one - &h) * (&nn + &h) * (&nn + b2 - &h);
    Qr3Constants { d, e1, e2 }
}

/// The same constants through the Casimir values Q⁽ⁱ⁾ = νᵢ(νᵢ−1) and Q⁽¹²³⁾ = κ(N, (β₂+1)/2).
pub fn qr3_constants_casimir(p: &RacahParams1) -> Qr3Constants {
    let nu = p.nu();
    let q: Vec<Rational> = nu.iter().map(|v| v * (v - Rational::one())).collect();
    let qt = kappa(&int(p.n as i64), &((&p.beta[2] + Rational::one()) / int(2)));
    let quarter = rat(1, 4);
    Qr3Constants {
        d: (&q[0] + &q[1] + &q[2] + &qt) / int(2),
        e1: -&quarter * (&q[2] - &q[1]) * (&q[0] - &qt),
        e2: &quarter * (&q[1] - &q[0]) * (&q[2] - &qt),
    }
}

/// The squared gauge factor split into its x-block ω_x, n-block and N-only block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeFactors {
    pub omega: Rational,
    pub n_block: Rational,
    pub n_const: Rational,
}

impl GaugeFactors {
    pub fn value(&self) -> Rational {
        &self.omega * &self.n_block * &self.n_const
    }
}

fn ratio(num: &[(Rational, usize)], den: &[(Rational, usize)], what: &str) -> Result<Rational> {
    let mut d = Rational::one();
    for (i, (a, k)) in den.iter().enumerate() {
        let f = pochhammer(a, *k);
        if f.is_zero() {
            return Err(Error::Pole {
                what: format!("{what} denominator factor {i}"),
                index: *k,
            });
        }
        d *= f;
    }
    let n: Rational = num.iter().map(|(a, k)| pochhammer(a, *k)).product();
    Ok(n / d)
}

/// G(x,n)² exactly as displayed, factored as ω_x · (n-block) · (N-block).
pub fn gauge_squared(x: usize, n: usize, w: &Su11Weights, big_n: usize) -> Result<GaugeFactors> {
    let nu = w.nu();
    let (v1, v2, v3) = (&nu[0], &nu[1], &nu[2]);
    let two = int(2);
    let one = Rational::one();
    let half = rat(1, 2);
    let nn = int(big_n as i64);
    let omega = ratio(
        &[
            (-&nn, x),
            (&two * v2, x),
            (&two * (v1 + v2) - &one, x),
            (&nn + &two * (v1 + v2 + v3) - &one, x),
            (v1 + v2 + &half, x),
        ],
        &[
            (&two * v1, x),
            (-&nn - &two * v3 + &one, x),
            (v1 + v2 - &half, x),
            (&nn + &two * (v1 + v2), x),
            (one.clone(), x),
        ],
        "x-block",
    )?;
    let n_block = ratio(
        &[
            (one.clone(), n),
            (&two * v3, n),
            (int(n as i64) + &two * (v2 + v3) - &one, n),
            (&nn + &two * (v2 + v3), n),
            (-&nn - &two * v1 + &one, n),
        ],
        &[
            (-&nn, n),
            (&two * (v2 + v3), 2 * n),
            (&two * v2, n),
            (&nn + &two * (v1 + v2 + v3) - &one, n),
        ],
        "n-block",
    )?;
    let n_const = ratio(
        &[(&two * (v2 + v3), big_n), (-&nn - &two * (v1 + v2) + &one, big_n)],
        &[(-&nn - &two * v1 + &one, big_n), (&two * v3, big_n)],
        "N-block",
    )?;
    Ok(GaugeFactors {
        omega,
        n_block,
        n_const,
    })
}
