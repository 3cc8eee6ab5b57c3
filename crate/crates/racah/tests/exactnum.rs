use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use racah::exactnum::{hyp4f3_terminating, int, pochhammer, rat, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(p, q)| rat(p, q))
}

/// Term-by-term sum with every Pochhammer written out as a product.
fn hyp_oracle(num: &[Rational; 4], den: &[Rational; 3], degree: usize) -> Option<Rational> {
    let mut sum = Rational::zero();
    for k in 0..=degree {
        let mut top = Rational::one();
        let mut bottom = Rational::one();
        for j in 0..k {
            let j = int(j as i64);
            for a in num {
                top *= a + &j;
            }
            for b in den {
                bottom *= b + &j;
            }
            bottom *= &j + Rational::one();
        }
        if bottom.is_zero() {
            return None;
        }
        sum += top / bottom;
    }
    Some(sum)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn three_term_instance_matches_oracle() {
    let num = [int(-2), rat(5, 3), rat(-1, 2), rat(7, 4)];
    let den = [rat(2, 5), int(3), rat(-9, 7)];
    let v = hyp4f3_terminating(&num, &den, 2).unwrap();
    assert_eq!(Some(v.clone()), hyp_oracle(&num, &den, 2));
    // 1 + (-2)(5/3)(-1/2)(7/4) / ((2/5)(3)(-9/7)) + (-2)(-1)(5/3)(8/3)(-1/2)(1/2)(7/4)(11/4) / ((2/5)(7/5)(3)(4)(-9/7)(-2/7) 2!)
    let t1 = (int(-2) * rat(5, 3) * rat(-1, 2) * rat(7, 4)) / (rat(2, 5) * int(3) * rat(-9, 7));
    let t2 = (int(-2) * int(-1) * rat(5, 3) * rat(8, 3) * rat(-1, 2) * rat(1, 2) * rat(7, 4) * rat(11, 4))
        / (rat(2, 5) * rat(7, 5) * int(3) * int(4) * rat(-9, 7) * rat(-2, 7) * int(2));
    assert_eq!(v, int(1) + t1 + t2);
}

#[test]
fn overflows_i64_without_loss() {
    let v = pochhammer(&rat(1, 7), 40);
    let mut expect = Rational::one();
    for j in 0..40 {
        expect *= Rational::new(BigInt::from(1 + 7 * j), BigInt::from(7));
    }
    assert_eq!(v, expect);
    assert!(v.denom().bits() > 64);
}

proptest! {
    #[test]
    fn pochhammer_splits(a in small_rational(), j in 0usize..=20, k in 0usize..=20) {
        let aj = &a + int(j as i64);
        prop_assert_eq!(pochhammer(&a, j + k), pochhammer(&a, j) * pochhammer(&aj, k));
    }

    #[test]
    fn hyp_matches_oracle(
        degree in 0usize..5,
        b in small_rational(), c in small_rational(), d in small_rational(),
        e in small_rational(), f in small_rational(), g in small_rational(),
    ) {
        let num = [int(-(degree as i64)), b, c, d];
        let den = [e, f, g];
        match hyp_oracle(&num, &den, degree) {
            Some(v) => prop_assert_eq!(hyp4f3_terminating(&num, &den, degree).unwrap(), v),
            None => prop_assert!(hyp4f3_terminating(&num, &den, degree).is_err()),
        }
    }

    #[test]
    fn hyp_is_symmetric(
        degree in 0usize..5,
        b in small_rational(), c in small_rational(), d in small_rational(),
        e in (1i64..30, 1i64..7), f in (1i64..30, 1i64..7), g in (1i64..30, 1i64..7),
        pn in 0usize..24, pd in 0usize..6,
    ) {
        let num = [int(-(degree as i64)), b, c, d];
        let den = [rat(e.0, e.1), rat(f.0, f.1), rat(g.0, g.1)];
        let base = hyp4f3_terminating(&num, &den, degree).unwrap();
        let p4 = permutations(4);
        let p3 = permutations(3);
        let num_p: [Rational; 4] = std::array::from_fn(|i| num[p4[pn][i]].clone());
        let den_p: [Rational; 3] = std::array::from_fn(|i| den[p3[pd][i]].clone());
        prop_assert_eq!(hyp4f3_terminating(&num_p, &den_p, degree).unwrap(), base);
    }

    #[test]
    fn unreduced_inputs_give_canonical_results(p in -30i64..30, q in 1i64..10, m in 1i64..20, k in 0usize..8) {
        let reduced = rat(p, q);
        let scaled = Rational::new(BigInt::from(p * m), BigInt::from(q * m));
        let v = pochhammer(&scaled, k);
        prop_assert_eq!(&v, &pochhammer(&reduced, k));
        prop_assert!(num_integer::Integer::gcd(v.numer(), v.denom()).is_one());
        prop_assert!(v.denom() > &BigInt::zero());
    }
}
