//! Exact rational and cyclotomic arithmetic, prime valuations, Gauss sums.

mod cyclotomic;
pub(crate) mod poly;

pub use cyclotomic::{CycError, Cyclotomic};

use crate::{Int, Rat};
use num_traits::Zero;

/// Trial-division primality; inputs in this crate are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Decompose a prime power: `q = p^f` with `f >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    for d in 2..=q {
        if d * d > q {
            break;
        }
        if q % d == 0 {
            p = d;
            break;
        }
    }
    let mut f = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        f += 1;
    }
    if rest == 1 {
        Some((p, f))
    } else {
        None
    }
}

/// `v_p(n!)` by Legendre's formula `sum_i floor(n / p^i)`.
pub fn legendre_valuation(n: u64, p: u64) -> u64 {
    debug_assert!(is_prime(p));
    let mut total = 0;
    let mut q = p;
    loop {
        total += n / q;
        match q.checked_mul(p) {
            Some(next) if next <= n => q = next,
            _ => break,
        }
    }
    total
}

/// `v_p(k)` for a positive integer.
pub fn int_valuation(mut k: u64, p: u64) -> u64 {
    assert!(k > 0);
    let mut v = 0;
    while k % p == 0 {
        k /= p;
        v += 1;
    }
    v
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mm = m as u128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % mm;
        }
        b = b * b % mm;
        exp >>= 1;
    }
    base = acc as u64;
    base
}

/// Legendre symbol `(t|p)` for an odd prime p, via Euler's criterion.
pub fn legendre_symbol(t: u64, p: u64) -> i32 {
    let t = t % p;
    if t == 0 {
        return 0;
    }
    if mod_pow(t, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Quadratic Gauss sum `g = sum_t (t|p) zeta_p^t`, satisfying
/// `g^2 = (-1)^((p-1)/2) * p`.
pub fn gauss_sum(p: u64) -> Result<Cyclotomic, CycError> {
    if p == 2 || !is_prime(p) {
        return Err(CycError::InvalidPrime(p));
    }
    Ok(Cyclotomic::from_terms(
        p,
        (1..p).map(|t| (t as i64, Rat::from_integer(Int::from(legendre_symbol(t, p))))),
    ))
}

/// Canonical representative of an integer-coefficient polynomial evaluated
/// at `zeta_N`, i.e. `poly(zeta_N)` reduced modulo `Phi_N`. Coefficients are
/// ascending; exponents at or above N wrap around.
pub fn reduce_mod_cyclotomic(poly: &[Int], n: u64) -> Cyclotomic {
    Cyclotomic::from_terms(
        n,
        poly.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| ((e as u64 % n) as i64, Rat::from_integer(c.clone()))),
    )
}
