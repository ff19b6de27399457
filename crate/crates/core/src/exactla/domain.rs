//! Coefficient domains for row elimination.
//!
//! Elimination is fraction-free: a row update is `r <- p_c * r - r_c * p`, so the
//! engine only needs an integral domain. Rows are meaningful up to a unit, which
//! lets each domain strip content after every update.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Row<E> = Vec<(usize, E)>;

pub trait EliminationDomain: Sync {
    type Elem: Clone + Debug + Send + Sync;

    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// `a * x`
    fn mul(&self, a: &Self::Elem, x: &Self::Elem) -> Self::Elem;

    /// `a * x - b * y`
    fn cross(&self, a: &Self::Elem, x: &Self::Elem, b: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Divide a row by a unit or content factor. Never changes the row's span.
    fn normalize(&self, row: &mut Row<Self::Elem>);
}

/// The integers, with content stripping after each update.
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

impl EliminationDomain for Integers {
    type Elem = BigInt;

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn mul(&self, a: &BigInt, x: &BigInt) -> BigInt {
        a * x
    }

    fn cross(&self, a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> BigInt {
        a * x - b * y
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn normalize(&self, row: &mut Row<BigInt>) {
        let Some((_, lead)) = row.first() else {
            return;
        };
        let mut g = lead.abs();
        for (_, v) in row.iter().skip(1) {
            if g.is_one() {
                break;
            }
            g = g.gcd(v);
        }
        if lead.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, v) in row.iter_mut() {
                *v = &*v / &g;
            }
        }
    }
}

/// The prime field `Z/pZ` with `p < 2^63`.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Caller guarantees `p` is prime.
    pub(crate) fn new_unchecked(p: u64) -> Self {
        debug_assert!((2..1 << 63).contains(&p));
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mulmod(acc, base);
            }
            base = self.mulmod(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    /// Reduce an arbitrary integer into `[0, p)`.
    pub fn reduce(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.try_into().expect("residue fits in u64")
    }
}

impl EliminationDomain for PrimeField {
    type Elem = u64;

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn mul(&self, a: &u64, x: &u64) -> u64 {
        self.mulmod(*a, *x)
    }

    fn cross(&self, a: &u64, x: &u64, b: &u64, y: &u64) -> u64 {
        let l = self.mulmod(*a, *x);
        let r = self.mulmod(*b, *y);
        if l >= r {
            l - r
        } else {
            self.p - (r - l)
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn normalize(&self, row: &mut Row<u64>) {
        let Some(&(_, lead)) = row.first() else {
            return;
        };
        if lead == 1 {
            return;
        }
        let inv = self.inv(lead).expect("nonzero entries are units");
        for (_, v) in row.iter_mut() {
            *v = self.mulmod(*v, inv);
        }
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for &a in &SMALL {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
