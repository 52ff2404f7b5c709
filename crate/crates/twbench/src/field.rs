//! Exact coefficient fields: GF(p) with runtime modulus, and the rationals.
//!
//! Every arithmetic operation goes through a field object so that the modulus
//! is a runtime value rather than a type parameter.  Elements are kept in
//! canonical form at all times (least nonnegative residue for GF(p), reduced
//! fraction for the rationals), so `==` on elements means field equality.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// A computable field with exact arithmetic.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug {
    /// Canonical element representation.
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Canonical image of an integer under the ring map Z -> F.
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` exactly for the zero element.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    /// 0 for characteristic zero, p for GF(p).
    fn characteristic(&self) -> u64;
    /// Short display name, e.g. "GF(2)" or "Q".
    fn label(&self) -> String;
    /// Render an element for witnesses and reports ("3", "-1/2", ...).
    fn elem_string(&self, a: &Self::Elem) -> String;
    /// All field elements, if the field is finite (used for exhaustive
    /// hom-space searches).  `None` for infinite fields.
    fn enumerate(&self) -> Option<Vec<Self::Elem>>;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse field spec {0:?} (expected \"q\" or \"p=<prime>\")")]
    BadSpec(String),
}

/// Deterministic Miller-Rabin for u64 (the witness set below is known to be
/// exact for all 64-bit integers).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let pow_mod = |mut base: u64, mut exp: u64, m: u64| -> u64 {
        let mut acc: u128 = 1;
        let mut b: u128 = (base % m) as u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % m as u128;
            }
            b = b * b % m as u128;
            exp >>= 1;
        }
        base = acc as u64;
        base
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The prime field GF(p); elements are least nonnegative residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Primality is checked here, so every constructed value is a field.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if is_prime_u64(p) {
            Ok(PrimeField { p })
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_int(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(s0.rem_euclid(self.p as i128) as u64)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn label(&self) -> String {
        format!("GF({})", self.p)
    }
    fn elem_string(&self, a: &u64) -> String {
        a.to_string()
    }
    fn enumerate(&self) -> Option<Vec<u64>> {
        if self.p <= 1 << 16 {
            Some((0..self.p).collect())
        } else {
            None
        }
    }
}

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn label(&self) -> String {
        "Q".to_string()
    }
    fn elem_string(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else if a.denom().is_negative() {
            // num keeps denominators positive, but be safe.
            format!("{}/{}", -a.numer(), -a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn enumerate(&self) -> Option<Vec<BigRational>> {
        None
    }
}

/// Runtime description of a coefficient field, as given on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    /// Accepts "q" / "Q" for the rationals and "p=<prime>" for prime fields.
    pub fn parse(s: &str) -> Result<FieldSpec, FieldError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = t.strip_prefix("p=") {
            let p: u64 = rest
                .parse()
                .map_err(|_| FieldError::BadSpec(s.to_string()))?;
            // Validate primality eagerly so bad specs fail before any work.
            PrimeField::new(p)?;
            return Ok(FieldSpec::Prime(p));
        }
        Err(FieldError::BadSpec(s.to_string()))
    }

    pub fn label(&self) -> String {
        match self {
            FieldSpec::Prime(p) => format!("GF({p})"),
            FieldSpec::Rationals => "Q".to_string(),
        }
    }

    /// Short form usable in file names ("p2", "q").
    pub fn slug(&self) -> String {
        match self {
            FieldSpec::Prime(p) => format!("p{p}"),
            FieldSpec::Rationals => "q".to_string(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}
