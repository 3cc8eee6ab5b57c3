use num_traits::{One, Zero};
use proptest::prelude::*;
use racah::exactnum::{int, rat, Rational};
use racah::gridop::{Grid, GridFunction, Point};
use racah::racah1::Su11Weights;
use racah::racah2::*;
use racah::{Error, Reading};

fn poch(a: &Rational, k: usize) -> Rational {
    (0..k).map(|j| a + int(j as i64)).product()
}

/// (α+1)_n(β+δ+1)_n(γ+1)_n · 4F3 with plain division, valid off the poles.
fn r_generic(n: usize, al: &Rational, be: &Rational, ga: &Rational, de: &Rational, x: &Rational) -> Rational {
    let one = Rational::one();
    let num = [int(-(n as i64)), int(n as i64) + al + be + &one, -x, x + ga + de + &one];
    let den = [al + &one, be + de + &one, ga + &one];
    let pre: Rational = den.iter().map(|d| poch(d, n)).product();
    let mut s = Rational::zero();
    for k in 0..=n {
        let top: Rational = num.iter().map(|a| poch(a, k)).product();
        let bottom: Rational = den.iter().map(|a| poch(a, k)).product::<Rational>() * poch(&one, k);
        s += top / bottom;
    }
    pre * s
}

/// r_n is a polynomial of degree n in γ (δ held fixed), so its value at a pole of the 4F3 is
/// recovered by Lagrange interpolation from n+1 shifted γ.
fn r_oracle(n: usize, al: &Rational, be: &Rational, ga: &Rational, de: &Rational, x: &Rational) -> Rational {
    let ts: Vec<Rational> = (0..=n).map(|k| rat(2 * k as i64 + 1, 2)).collect();
    let mut acc = Rational::zero();
    for (i, ti) in ts.iter().enumerate() {
        let mut l = Rational::one();
        for (j, tj) in ts.iter().enumerate() {
            if i != j {
                l *= -tj / (ti - tj);
            }
        }
        acc += l * r_generic(n, al, be, &(ga + ti), de, x);
    }
    acc
}

fn r2_oracle(d: [usize; 2], x: [i64; 2], b: &[Rational; 4], big_n: usize) -> Rational {
    let one = Rational::one();
    let [b0, b1, b2, b3] = b;
    let nn = int(big_n as i64);
    let (x1, x2) = (int(x[0]), int(x[1]));
    let n1 = int(d[0] as i64);
    let f1 = r_oracle(d[0], &(b1 - b0 - &one), &(b2 - b1 - &one), &(-&x2 - &one), &(b1 + &x2), &x1);
    let f2 = r_oracle(
        d[1],
        &(int(2) * &n1 + b2 - b0 - &one),
        &(b3 - b2 - &one),
        &(&n1 - &nn - &one),
        &(&nn + &n1 + b2),
        &(&x2 - &n1),
    );
    let s = d[0] + d[1];
    let den = poch(&-&nn, s) * poch(&(-&nn + b0), s) * poch(&(b2 - b1), d[0]) * poch(&(b3 - b1), d[1]);
    f1 * f2 / den
}

fn weights4(v: [(i64, i64); 4]) -> Su11Weights {
    Su11Weights::new(v.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
}

fn battery() -> Vec<Su11Weights> {
    vec![
        weights4([(3, 5), (3, 4), (1, 1), (7, 6)]),
        weights4([(7, 6), (3, 2), (3, 5), (3, 4)]),
        weights4([(3, 4), (7, 6), (3, 2), (3, 5)]),
    ]
}

#[test]
fn eval_matches_oracle() {
    for w in battery() {
        for big_n in 1..=4 {
            let p = w.params2(big_n).unwrap();
            for d in p.degrees().points() {
                for x in p.grid().points() {
                    let dp = DegreePair::new(d[0] as usize, d[1] as usize, big_n).unwrap();
                    let gp = GridPoint2::new(x[0] as usize, x[1] as usize, big_n).unwrap();
                    let v = racah2_eval(dp, gp, &p).unwrap();
                    assert_eq!(v, r2_oracle([dp.n1, dp.n2], x, p.beta(), big_n), "d={d:?} x={x:?} N={big_n}");
                }
            }
        }
    }
}

#[test]
fn degree_zero_is_one() {
    for w in battery() {
        for big_n in 0..=5 {
            let p = w.params2(big_n).unwrap();
            let t = racah2_table(&p, Normalization::Printed).unwrap();
            assert!(t.rows[0].iter().all(|v| v.is_one()));
            let t = racah2_table(&p, Normalization::SelfDual).unwrap();
            assert!(t.rows[0].iter().all(|v| v.is_one()));
        }
    }
}

#[test]
fn coefficients_vanish_at_edges() {
    for w in battery() {
        for big_n in 1..=5 {
            let p = w.params2(big_n).unwrap();
            let nn = int(big_n as i64);
            for x in 0..=big_n as i64 {
                let x = int(x);
                for r in [Reading::Printed, Reading::Corrected] {
                    assert!(coeff_c(Level::Two, [1, 1], &x, &nn, &p, r).is_zero());
                    assert!(coeff_c(Level::One, [1, 0], &x, &x, &p, r).is_zero());
                }
                assert!(omega_b(&x, &nn, &p).is_zero());
                assert!(omega_e(&x, &x, &p, Reading::Corrected).is_zero());
                assert!(omega_e(&x, &x, &p, Reading::Printed).is_zero());
            }
        }
    }
}

#[test]
fn negative_offsets_are_mirror_images() {
    for w in battery() {
        let p = w.params2(4).unwrap();
        let [_, b1, b2, _] = p.beta().clone();
        for (a, b) in [(rat(1, 3), rat(5, 2)), (int(2), int(3)), (rat(-7, 5), rat(2, 9))] {
            let ma = -&a - &b1;
            let mb = -&b - &b2;
            for r in [Reading::Printed, Reading::Corrected] {
                for (j, k) in [(1, 0), (1, 1), (0, 1)] {
                    let lvl = if k == 0 { vec![Level::One, Level::Two] } else { vec![Level::Two] };
                    for level in lvl {
                        let c = coeff_c(level, [j, k], &a, &b, &p, r);
                        if j != 0 {
                            assert_eq!(coeff_c(level, [-j, k], &ma, &b, &p, r), c);
                        }
                        if k != 0 {
                            assert_eq!(coeff_c(level, [j, -k], &a, &mb, &p, r), c);
                            assert_eq!(coeff_c(level, [-j, -k], &ma, &mb, &p, r), c);
                        }
                    }
                }
            }
            assert!(coeff_c(Level::One, [0, 1], &a, &b, &p, Reading::Corrected).is_zero());
        }
    }
}

#[test]
fn operators_close_on_the_triangle() {
    for w in battery() {
        for big_n in 1..=5 {
            let p = w.params2(big_n).unwrap();
            assert!(lambda1x_op(&p).boundary_violations().is_empty());
            assert!(lambda2x_op(&p, Reading::Corrected).boundary_violations().is_empty());
            assert!(omega1_op(&p, Reading::Corrected).boundary_violations().is_empty());
        }
    }
}

#[test]
fn lambda_operators_diagonalize_the_table() {
    for w in battery() {
        for big_n in 1..=4 {
            let p = w.params2(big_n).unwrap();
            let t = racah2_table(&p, Normalization::Printed).unwrap();
            let l1 = lambda1x_op(&p).materialize().unwrap();
            let l2 = lambda2x_op(&p, Reading::Corrected).materialize().unwrap();
            for (i, d) in p.degrees().points().into_iter().enumerate() {
                let f = t.row_function(i);
                let scaled = |ev: Rational| GridFunction {
                    grid: f.grid,
                    values: f.values.iter().map(|v| &ev * v).collect(),
                };
                assert_eq!(l1.apply(&f).unwrap(), scaled(p.lambda1_eigenvalue(d)));
                assert_eq!(l2.apply(&f).unwrap(), scaled(p.lambda2_eigenvalue(d)));
            }
        }
    }
}

#[test]
fn dual_map_is_an_involution() {
    for w in battery() {
        for big_n in 1..=5 {
            let p = w.params2(big_n).unwrap();
            let beta = p.beta();
            let bt = dual_beta(beta, big_n);
            assert_eq!(bt[0], beta[0]);
            assert_eq!(&dual_beta(&bt, big_n), beta);
            let x = [rat(1, 3), rat(7, 2)];
            let n = [rat(-2, 5), int(3)];
            let once = dual_map(&x, &n, beta, big_n);
            let twice = dual_map(&once.x, &once.n, &once.beta, big_n);
            assert_eq!((twice.x, twice.n, &twice.beta), (x, n, beta));
            for g in p.grid().points() {
                let d = dual_degree(g, big_n);
                assert!(p.degrees().contains(d));
                assert_eq!(dual_point(d, big_n), g);
            }
        }
    }
}

/// The closed form γ₃ = −2N−2ν₁+1 gives −5 here.
#[test]
fn gamma_example() {
    let w = Su11Weights::new(vec![int(1); 4]).unwrap();
    let g = gamma_params(&w, 2).unwrap();
    assert_eq!(g.gamma, [int(-11), int(-9), int(-7), int(-5)]);
    assert_eq!(g.gamma_tilde, [int(-11), int(-9), int(-7), int(-5)]);
    let w = weights4([(1, 2), (1, 3), (1, 5), (1, 7)]);
    let g = gamma_params(&w, 1).unwrap();
    assert_eq!(g.gamma[0], g.gamma_tilde[0]);
    assert_eq!(&g.gamma[0] - &g.gamma[1], rat(-2, 7));
    assert_eq!(&g.gamma_tilde[0] - &g.gamma_tilde[1], int(-1));
}

#[test]
fn m_tilde_is_a_bijection() {
    for big_n in 0..=8 {
        let mut image: Vec<Point> = Grid::Triangle(big_n).points().into_iter().map(m_tilde_of_x).collect();
        image.sort();
        assert_eq!(image, Grid::Simplex(big_n).points());
    }
}

#[test]
fn my_family_degree_zero() {
    for w in battery() {
        for big_n in 1..=4 {
            for g in Grid::Triangle(big_n).points() {
                let gp = GridPoint2::new(g[0] as usize, g[1] as usize, big_n).unwrap();
                let m = DegreePair::new(0, 0, big_n).unwrap();
                assert_eq!(racah2_eval_my(m, gp, &w, big_n).unwrap(), int(1));
            }
        }
    }
}

#[test]
fn index_validation() {
    assert!(matches!(GridPoint2::new(2, 1, 3), Err(Error::Validity(_))));
    assert!(matches!(GridPoint2::new(1, 4, 3), Err(Error::Validity(_))));
    assert!(GridPoint2::new(3, 3, 3).is_ok());
    assert!(matches!(DegreePair::new(2, 2, 3), Err(Error::Validity(_))));
    assert!(DegreePair::new(0, 3, 3).is_ok());
    let w = Su11Weights::new(vec![int(1); 3]).unwrap();
    assert!(w.params2(2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn eval_matches_oracle_random_weights(
        nu in prop::collection::vec((1i64..12, 1i64..5), 4), big_n in 1usize..4,
    ) {
        let w = Su11Weights::new(nu.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap();
        let p = match w.params2(big_n) {
            Ok(p) => p,
            Err(_) => return Ok(()),
        };
        for d in p.degrees().points() {
            for x in p.grid().points() {
                let got = racah2_eval_at([d[0] as usize, d[1] as usize], &[int(x[0]), int(x[1])], p.beta(), big_n, Normalization::Printed);
                match got {
                    Ok(v) => prop_assert_eq!(v, r2_oracle([d[0] as usize, d[1] as usize], x, p.beta(), big_n)),
                    Err(e) => prop_assert!(matches!(e, Error::Pole { .. }), "unexpected error {}", e),
                }
            }
        }
    }
}
