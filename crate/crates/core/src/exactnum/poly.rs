//! Dense univariate polynomial helpers over `Int` and `Rat`.
//!
//! Coefficients are stored in ascending degree order. Only the handful of
//! operations the cyclotomic layer needs are provided: exact division by a
//! monic divisor, the cyclotomic polynomial by iterated division of
//! `x^n - 1`, and an extended gcd over the rationals.

use crate::{Int, Rat};
use num_traits::{One, Zero};

pub fn trim_int(mut p: Vec<Int>) -> Vec<Int> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn trim_rat(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Exact division of integer polynomials; the divisor must be monic and the
/// remainder must vanish. Panics otherwise: callers only divide known
/// divisors of `x^n - 1`.
pub fn int_div_exact(num: &[Int], den: &[Int]) -> Vec<Int> {
    assert!(!den.is_empty() && den.last().unwrap().is_one(), "divisor must be monic");
    let mut rem: Vec<Int> = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        assert!(rem.iter().all(|c| c.is_zero()), "non-zero remainder in exact division");
        return vec![];
    }
    let mut quot = vec![Int::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, dc) in den.iter().enumerate() {
            let t = dc * &c;
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-zero remainder in exact division");
    trim_int(quot)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            ds.push(d);
            if d != n / d {
                ds.push(n / d);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    ds
}

/// The n-th cyclotomic polynomial, by peeling every proper divisor's factor
/// off `x^n - 1` in increasing order of the divisor.
pub fn cyclotomic_polynomial(n: u64) -> Vec<Int> {
    assert!(n >= 1);
    let mut known: Vec<(u64, Vec<Int>)> = Vec::new();
    for d in divisors(n) {
        // x^d - 1
        let mut q = vec![Int::zero(); d as usize + 1];
        q[0] = -Int::one();
        q[d as usize] = Int::one();
        for (e, phi_e) in &known {
            if d % e == 0 {
                q = int_div_exact(&q, phi_e);
            }
        }
        known.push((d, q));
    }
    known.pop().unwrap().1
}

/// Quotient and remainder over the rationals; the divisor need not be monic.
pub fn rat_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let den = trim_rat(den.to_vec());
    assert!(!den.is_empty(), "division by zero polynomial");
    let mut rem = trim_rat(num.to_vec());
    let dd = den.len() - 1;
    let lead = den.last().unwrap().clone();
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, dc) in den.iter().enumerate() {
            let t = dc * &c;
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    (trim_rat(quot), trim_rat(rem))
}

/// Extended gcd over `Q[x]`: returns `(g, s)` with `s*a + t*b = g` for some
/// `t`, `g` the (unnormalised) gcd. Only `s` is needed to invert modulo `b`.
pub fn rat_xgcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r0 = trim_rat(a.to_vec());
    let mut r1 = trim_rat(b.to_vec());
    let mut s0 = vec![Rat::one()];
    let mut s1: Vec<Rat> = vec![];
    while !r1.is_empty() {
        let (q, r) = rat_divmod(&r0, &r1);
        let s = rat_sub(&s0, &rat_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

pub fn rat_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    trim_rat(out)
}

pub fn rat_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rat::zero());
    }
    for (i, cb) in b.iter().enumerate() {
        out[i] -= cb;
    }
    trim_rat(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn int_poly(coeffs: &[i64]) -> Vec<Int> {
        coeffs.iter().map(|&c| Int::from(c)).collect()
    }

    #[test]
    fn cyclotomic_small_orders() {
        assert_eq!(cyclotomic_polynomial(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), int_poly(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), int_poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(5), int_poly(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        let totient = |n: u64| (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
        for n in 1..=120u64 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n), "order {n}");
        }
    }

    #[test]
    fn product_of_cyclotomics_is_xn_minus_1() {
        for n in [1u64, 2, 6, 12, 30] {
            let mut prod = vec![Int::one()];
            for d in divisors(n) {
                let phi = cyclotomic_polynomial(d);
                let mut out = vec![Int::zero(); prod.len() + phi.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in phi.iter().enumerate() {
                        out[i + j] += a * b;
                    }
                }
                prod = out;
            }
            let lead = prod.pop().unwrap();
            assert!(lead.is_one());
            assert_eq!(prod[0].to_i64(), Some(-1));
            assert!(prod[1..].iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn xgcd_inverts_mod_cyclotomic() {
        // a = 1 + x mod x^2 + x + 1 (order 3): inverse should be -x.
        let a = vec![Rat::one(), Rat::one()];
        let m: Vec<Rat> = cyclotomic_polynomial(3).iter().map(|c| Rat::from_integer(c.clone())).collect();
        let (g, s) = rat_xgcd(&a, &m);
        assert_eq!(g.len(), 1);
        let inv: Vec<Rat> = s.iter().map(|c| c / &g[0]).collect();
        let (_, r) = rat_divmod(&rat_mul(&a, &inv), &m);
        assert_eq!(r, vec![Rat::one()]);
    }
}
