//! Torus-centraliser arithmetic for general linear groups at a prime
//! `l | q - 1`, and the closed-form invariants of the Coxeter-torus series.
//!
//! The model: `l^c` exactly divides `q - 1`, and valuations of `q^k - 1`
//! follow the rule `v_l(q^k - 1) = c + v_l(k)` (for l = 2 this presumes
//! `q = 1 mod 4`). Everything below is integer arithmetic in that model.

use crate::exactnum::{int_valuation, is_prime};
use serde::Serialize;

/// The shape of a semisimple-element centraliser in `GL_n(q)`: a multiset of
/// factors `GL_{n_i}(q^{a_i})` with every `a_i` a power of l and
/// `sum n_i * a_i = n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerShape {
    /// Sorted `(n_i, a_i)` pairs.
    pub factors: Vec<(u64, u64)>,
}

impl CentralizerShape {
    pub fn describe(&self) -> String {
        self.factors
            .iter()
            .map(|&(n, a)| {
                if a == 1 {
                    format!("GL{n}(q)")
                } else {
                    format!("GL{n}(q^{a})")
                }
            })
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Enumerate the centraliser shapes whose l-part can stay within `l^(2+c)`:
/// multisets `{(n_i, l^(f_i))}` with `sum n_i l^(f_i) = n` and
/// `sum (c + f_i) n_i <= 2 + c` (the factor-wise lower bound on the l-adic
/// valuation of the centraliser order). Each factor's central l-element
/// must generate its field, which is what pins `a_i` to a power of l.
pub fn centralizer_shapes(n: u64, ell: u64, c: u32) -> Vec<CentralizerShape> {
    assert!(n >= 4, "the enumeration models n >= 4");
    assert!(is_prime(ell));
    assert!(c >= 1);
    let budget = 2 + c as u64;
    // f is capped by l^f <= n.
    let mut powers = Vec::new();
    let mut pw = 1u64;
    let mut f = 0u64;
    while pw <= n {
        powers.push((f, pw));
        f += 1;
        match pw.checked_mul(ell) {
            Some(next) => pw = next,
            None => break,
        }
    }
    let mut out = Vec::new();
    let mut current: Vec<(u64, u64)> = Vec::new();
    // Depth-first over factors in non-decreasing (f, n_i) order to produce
    // each multiset once.
    fn rec(
        remaining: u64,
        budget_left: i64,
        min_factor: usize,
        powers: &[(u64, u64)],
        c: u64,
        current: &mut Vec<(u64, u64)>,
        out: &mut Vec<CentralizerShape>,
    ) {
        if remaining == 0 {
            let mut factors: Vec<(u64, u64)> = current.clone();
            factors.sort_unstable();
            out.push(CentralizerShape { factors });
            return;
        }
        for (idx, &(f, a)) in powers.iter().enumerate().skip(min_factor) {
            if a > remaining {
                continue;
            }
            let max_n = remaining / a;
            for ni in 1..=max_n {
                let cost = (c + f) as i64 * ni as i64;
                if cost > budget_left {
                    break;
                }
                current.push((ni, a));
                rec(remaining - ni * a, budget_left - cost, idx + 1, powers, c, current, out);
                current.pop();
            }
        }
    }
    rec(n, budget as i64, 0, &powers, c as u64, &mut current, &mut out);
    out.sort_by(|x, y| x.factors.cmp(&y.factors));
    out
}

/// Invariants of the regular Coxeter-torus character series in `GL_n(q)`
/// with `n = l^a` and `l^c || q - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterInvariants {
    pub n: u64,
    /// `v_l(|GL_n(q)|) = c*n + (n-1)/(l-1)`.
    pub group_valuation: u64,
    /// `v_l(o(t)) = c + a` for a maximal l-element of the Coxeter torus.
    pub element_order_valuation: u64,
    /// Height of the associated character: `c(n-1) + (n-1)/(l-1) - a`.
    pub height: u64,
    /// Its defect: `c + a`.
    pub defect: u64,
}

/// Compute the closed-form invariants and re-derive the group valuation
/// independently by summing `v_l(q^k - 1) = c + v_l(k)` over `k = 1..=n`;
/// the two routes are asserted equal.
pub fn coxeter_series_invariants(ell: u64, a: u32, c: u32) -> CoxeterInvariants {
    assert!(is_prime(ell));
    assert!(a >= 1 && c >= 1);
    let n = ell.pow(a);
    let closed = c as u64 * n + (n - 1) / (ell - 1);
    let rederived: u64 = (1..=n).map(|k| c as u64 + int_valuation(k, ell)).sum();
    assert_eq!(closed, rederived, "valuation routes disagree at l={ell} a={a} c={c}");
    let defect = c as u64 + a as u64;
    let height = c as u64 * (n - 1) + (n - 1) / (ell - 1) - a as u64;
    // The character's degree valuation is the group valuation minus the
    // torus valuation; its height sits in a full-defect block.
    assert_eq!(height, closed - defect);
    CoxeterInvariants {
        n,
        group_valuation: closed,
        element_order_valuation: defect,
        height,
        defect,
    }
}
