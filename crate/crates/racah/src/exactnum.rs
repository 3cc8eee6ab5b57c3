//! Exact rationals, Pochhammer symbols and terminating 4F3 sums.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Canonical arbitrary-precision rational. `Display` gives "p/q", or "p" when q = 1.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses "p/q" or "p" (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Validity(format!("not a rational: {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Rising factorial a(a+1)...(a+k-1).
pub fn pochhammer(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut f = a.clone();
    for _ in 0..k {
        acc *= &f;
        if acc.is_zero() {
            return acc;
        }
        f += Rational::one();
    }
    acc
}

pub fn factorial(k: usize) -> Rational {
    pochhammer(&Rational::one(), k)
}

/// Terminating 4F3 at unit argument, summed for k = 0..=degree.
///
/// The termination index is explicit; terms past the first vanishing numerator
/// are zero anyway, but a vanishing denominator inside the range is a pole.
pub fn hyp4f3_terminating(num: &[Rational; 4], den: &[Rational; 3], degree: usize) -> Result<Rational> {
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for k in 0..=degree {
        if k > 0 {
            for (i, d) in den.iter().enumerate() {
                let f = d + int(k as i64 - 1);
                if f.is_zero() {
                    return Err(Error::Pole {
                        what: format!("denominator parameter {} ({})", i, d),
                        index: k,
                    });
                }
                term /= f;
            }
            for a in num {
                term *= a + int(k as i64 - 1);
            }
            term /= int(k as i64);
        }
        sum += &term;
    }
    Ok(sum)
}

/// True when `a + j` is zero for some j in 0..k, i.e. (a)_k = 0.
pub fn pochhammer_vanishes(a: &Rational, k: usize) -> bool {
    if !a.is_integer() {
        return false;
    }
    let a = a.to_integer();
    a <= BigInt::zero() && -a < BigInt::from(k)
}

pub fn serialize_rational<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn serialize_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(5, 7), 0), int(1));
        assert_eq!(pochhammer(&int(2), 3), int(24));
        assert_eq!(pochhammer(&int(-3), 5), int(0));
        assert_eq!(factorial(5), int(120));
    }

    #[test]
    fn vanishing_detection() {
        assert!(pochhammer_vanishes(&int(-3), 4));
        assert!(!pochhammer_vanishes(&int(-3), 3));
        assert!(!pochhammer_vanishes(&rat(-1, 2), 10));
        assert!(!pochhammer_vanishes(&int(1), 10));
    }

    #[test]
    fn hyp_degree_zero_is_one() {
        let v = hyp4f3_terminating(&[int(0), int(3), int(4), int(5)], &[int(1), int(2), int(3)], 0).unwrap();
        assert_eq!(v, int(1));
    }

    #[test]
    fn hyp_two_terms() {
        let v = hyp4f3_terminating(&[int(-1), int(1), int(1), int(1)], &[int(2), int(2), int(2)], 1).unwrap();
        assert_eq!(v, rat(7, 8));
    }

    #[test]
    fn hyp_pole_inside_range() {
        let e = hyp4f3_terminating(&[int(-2), int(1), int(1), int(1)], &[int(-1), int(2), int(2)], 2).unwrap_err();
        assert_eq!(
            e,
            Error::Pole {
                what: "denominator parameter 0 (-1)".into(),
                index: 2
            }
        );
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_rational(" 6/8 ").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("3/-4").unwrap(), rat(-3, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert_eq!(rat(6, 8).to_string(), "3/4");
        assert_eq!(rat(8, 4).to_string(), "2");
        assert_eq!(rat(1, -3).to_string(), "-1/3");
    }
}
