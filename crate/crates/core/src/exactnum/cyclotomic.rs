//! Exact elements of the cyclotomic field `Q(zeta_N)`.
//!
//! An element is held as a sparse sum `sum c_e * zeta_N^e` with exponents in
//! `[0, N)`. That form is cheap to build from character-table data and cheap
//! to multiply (exponents add modulo N). The canonical form demanded of the
//! type — the coefficient vector of length `phi(N)` representing the element
//! modulo the N-th cyclotomic polynomial — is produced on demand through a
//! per-order reduction table and is what equality, zero tests and
//! serialisation are defined on.

use super::poly;
use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Precomputed reduction data for one order N: the cyclotomic polynomial and
/// the canonical coefficient row of every power `zeta_N^e`, `0 <= e < N`.
pub(crate) struct ReductionTable {
    pub order: u64,
    pub degree: usize,
    /// Monic `Phi_N`, ascending coefficients.
    pub cyclo: Vec<Int>,
    /// `rows[e]` = canonical coefficients of `zeta_N^e` (length `degree`).
    pub rows: Vec<Vec<i64>>,
}

impl ReductionTable {
    fn build(order: u64) -> Self {
        use num_traits::ToPrimitive;
        let cyclo = poly::cyclotomic_polynomial(order);
        let degree = cyclo.len() - 1;
        let lower: Vec<i64> = cyclo[..degree]
            .iter()
            .map(|c| c.to_i64().expect("cyclotomic coefficient fits in i64"))
            .collect();
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(order as usize);
        for e in 0..order as usize {
            if e < degree {
                let mut row = vec![0i64; degree];
                row[e] = 1;
                rows.push(row);
            } else {
                let prev = &rows[e - 1];
                let carry = prev[degree - 1];
                let mut row = vec![0i64; degree];
                row[0] = -carry * lower[0];
                for k in 1..degree {
                    row[k] = prev[k - 1] - carry * lower[k];
                }
                debug_assert!(row.iter().all(|c| c.abs() < (1 << 40)));
                rows.push(row);
            }
        }
        ReductionTable { order, degree, cyclo, rows }
    }
}

fn table(order: u64) -> Arc<ReductionTable> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<ReductionTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(order)
        .or_insert_with(|| Arc::new(ReductionTable::build(order)))
        .clone()
}

/// Errors from partial cyclotomic operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycError {
    #[error("division by zero in the cyclotomic field")]
    DivisionByZero,
    #[error("value is not rational")]
    NotRational,
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
}

/// An exact element of `Q(zeta_N)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    /// Sparse `exponent -> coefficient`; exponents reduced mod `order`,
    /// zero coefficients dropped.
    terms: BTreeMap<u64, Rat>,
}

impl Cyclotomic {
    pub fn zero(order: u64) -> Self {
        assert!(order >= 1);
        Cyclotomic { order, terms: BTreeMap::new() }
    }

    pub fn one(order: u64) -> Self {
        Self::from_rat(order, Rat::one())
    }

    pub fn from_rat(order: u64, r: Rat) -> Self {
        let mut c = Self::zero(order);
        if !r.is_zero() {
            c.terms.insert(0, r);
        }
        c
    }

    pub fn from_int(order: u64, k: i64) -> Self {
        Self::from_rat(order, Rat::from_integer(Int::from(k)))
    }

    /// `zeta_N^k` (k taken mod N, negatives allowed).
    pub fn zeta_pow(order: u64, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as u64;
        let mut c = Self::zero(order);
        c.terms.insert(e, Rat::one());
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(order: u64, it: I) -> Self {
        let mut c = Self::zero(order);
        for (k, r) in it {
            c.add_term(k, r);
        }
        c
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    fn add_term(&mut self, k: i64, r: Rat) {
        if r.is_zero() {
            return;
        }
        let e = k.rem_euclid(self.order as i64) as u64;
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += r;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Re-express in `Q(zeta_M)` for a multiple M of the current order.
    pub fn to_order(&self, m: u64) -> Self {
        assert!(m % self.order == 0, "target order must be a multiple");
        let k = m / self.order;
        let mut out = Self::zero(m);
        for (e, c) in &self.terms {
            out.terms.insert(e * k, c.clone());
        }
        out
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            (a.clone(), b.clone())
        } else {
            let m = num_integer::lcm(a.order, b.order);
            (a.to_order(m), b.to_order(m))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = Self::unify(self, other);
        for (e, c) in b.terms {
            let entry = a.terms.entry(e).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                a.terms.remove(&e);
            }
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::unify(self, other);
        let n = a.order;
        let mut out = Self::zero(n);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = (ea + eb) % n;
                let prod = ca * cb;
                let entry = out.terms.entry(e).or_insert_with(Rat::zero);
                *entry += prod;
                if entry.is_zero() {
                    out.terms.remove(&e);
                }
            }
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero(self.order);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= r;
        }
        out
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Complex conjugation `zeta -> zeta^(N-1)`; an involutive field
    /// automorphism.
    pub fn conjugate(&self) -> Self {
        let n = self.order;
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            out.terms.insert(if *e == 0 { 0 } else { n - e }, c.clone());
        }
        out
    }

    /// Canonical coefficient vector of length `phi(N)`: the representative
    /// of the element in `Q[x]/Phi_N(x)`.
    pub fn canonical_coeffs(&self) -> Vec<Rat> {
        let t = table(self.order);
        let mut out = vec![Rat::zero(); t.degree];
        for (e, c) in &self.terms {
            let row = &t.rows[*e as usize];
            for (k, &m) in row.iter().enumerate() {
                if m != 0 {
                    out[k] += c * Rat::from_integer(Int::from(m));
                }
            }
        }
        out
    }

    /// Canonical coefficients as `i64`, when the element lies in
    /// `Z[zeta_N]` and fits. Used by integer fast paths.
    pub fn canonical_int_coeffs(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.canonical_coeffs()
            .into_iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        self.canonical_coeffs().iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element is rational.
    pub fn as_rational(&self) -> Result<Rat, CycError> {
        let coeffs = self.canonical_coeffs();
        if coeffs[1..].iter().all(|c| c.is_zero()) {
            Ok(coeffs[0].clone())
        } else {
            Err(CycError::NotRational)
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map(|r| r.is_one()).unwrap_or(false)
    }

    /// Multiplicative inverse via the extended gcd of the canonical
    /// representative with `Phi_N` over `Q[x]`.
    pub fn inverse(&self) -> Result<Self, CycError> {
        let t = table(self.order);
        let a = poly::trim_rat(self.canonical_coeffs());
        if a.is_empty() {
            return Err(CycError::DivisionByZero);
        }
        let m: Vec<Rat> = t.cyclo.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let (g, s) = poly::rat_xgcd(&a, &m);
        assert!(g.len() == 1, "gcd with the irreducible modulus must be constant");
        let ginv = g[0].recip();
        let mut out = Self::zero(self.order);
        for (k, c) in s.iter().enumerate() {
            out.add_term(k as i64, c * &ginv);
        }
        Ok(out)
    }

    /// `|x|^2 = x * conj(x)`.
    pub fn norm_squared(&self) -> Self {
        self.mul(&self.conjugate())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            if self.terms == other.terms {
                return true;
            }
            return self.canonical_coeffs() == other.canonical_coeffs();
        }
        let (a, b) = Self::unify(self, other);
        a.canonical_coeffs() == b.canonical_coeffs()
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = table(self.order);
        let coeffs = self.canonical_coeffs();
        let mut first = true;
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "ζ{}^{}", t.order, k)?;
            } else {
                write!(f, "{mag}*ζ{}^{}", t.order, k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.canonical_coeffs().iter().map(|c| c.to_string()).collect();
        let mut s = serializer.serialize_struct("Cyclotomic", 2)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}
