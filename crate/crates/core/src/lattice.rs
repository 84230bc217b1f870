//! The rectangular lattice domain.
//!
//! Points of the lattice are pairs `(a, b)` of integers standing for the
//! plane point `(a, b*sqrt(m))`, where `m` is a fixed positive square-free
//! integer. Squared lengths are then values of the norm form `a^2 + m*b^2`,
//! and vertex coordinates live in `Z[sqrt(m)]`, so every geometric predicate
//! needed here has an exact integer formulation. No floating point is used
//! anywhere in this module.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::search::is_square_free;

/// The lattice parameter `m`: the lattice is generated by `(1, 0)` and
/// `(0, sqrt(m))`.
///
/// `m` must be positive and square-free; square-freeness is what makes
/// `sqrt(m)` irrational for `m > 1` and keeps signs in `Z[sqrt(m)]` exactly
/// computable. The stricter requirement `m = 3 (mod 4)` used by the odd-gon
/// constructions is enforced at those entry points, not here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeParams {
    m: BigInt,
}

impl LatticeParams {
    /// Validates `m >= 1` and square-freeness.
    pub fn new(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::one() {
            return Err(Error::BadModulus {
                m,
                reason: "m must be a positive integer",
            });
        }
        if !is_square_free(&m) {
            return Err(Error::BadModulus {
                m,
                reason: "m must be square-free",
            });
        }
        Ok(LatticeParams { m })
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }
}

impl fmt::Display for LatticeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}", self.m)
    }
}

/// A lattice vector `(a, b)`, i.e. the plane vector `(a, b*sqrt(m))`.
///
/// The zero vector is a legal value (it shows up as an edge sum) but is
/// rejected as a polygon edge at verification time.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    pub a: BigInt,
    pub b: BigInt,
}

impl LatticeVector {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        LatticeVector {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        LatticeVector {
            a: BigInt::zero(),
            b: BigInt::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The squared length `a^2 + m*b^2`, computed exactly.
    pub fn norm_sq(&self, params: &LatticeParams) -> BigInt {
        &self.a * &self.a + params.m() * &self.b * &self.b
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;

    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;

    fn neg(self) -> LatticeVector {
        LatticeVector {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;

    fn neg(self) -> LatticeVector {
        LatticeVector {
            a: -self.a,
            b: -self.b,
        }
    }
}

/// An element `p + q*sqrt(m)` of `Z[sqrt(m)]`; `m` is supplied by context.
///
/// Vertex coordinates of a walk live in `Z x Z*sqrt(m)`, so differences and
/// cross products of coordinates are values of this type. Its key feature is
/// [`QuadInt::sign`], the exact sign of the represented real number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadInt {
    pub p: BigInt,
    pub q: BigInt,
}

impl QuadInt {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        QuadInt {
            p: p.into(),
            q: q.into(),
        }
    }

    pub fn zero() -> Self {
        QuadInt {
            p: BigInt::zero(),
            q: BigInt::zero(),
        }
    }

    pub fn add(&self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }

    pub fn sub(&self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            p: &self.p - &rhs.p,
            q: &self.q - &rhs.q,
        }
    }

    /// `(p + q*sqrt(m)) * (p' + q'*sqrt(m)) = (pp' + m*qq') + (pq' + qp')*sqrt(m)`.
    pub fn mul(&self, rhs: &QuadInt, params: &LatticeParams) -> QuadInt {
        QuadInt {
            p: &self.p * &rhs.p + params.m() * &self.q * &rhs.q,
            q: &self.p * &rhs.q + &self.q * &rhs.p,
        }
    }

    /// The exact sign of the real number `p + q*sqrt(m)`, in `{-1, 0, 1}`.
    ///
    /// When `p` and `q` do not disagree in sign the answer is immediate.
    /// Otherwise `|p|` and `|q|*sqrt(m)` compete, and squaring settles it:
    /// the sign is `sign(p) * sign(p^2 - m*q^2)`. Requires square-free `m`,
    /// so that `p + q*sqrt(m) = 0` forces `p = q = 0` (with the one harmless
    /// exception `m = 1`, where the formula still returns the sign of `p + q`).
    pub fn sign(&self, params: &LatticeParams) -> i32 {
        let sp = sign_to_i32(self.p.sign());
        let sq = sign_to_i32(self.q.sign());
        if sp == 0 && sq == 0 {
            0
        } else if sp >= 0 && sq >= 0 {
            1
        } else if sp <= 0 && sq <= 0 {
            -1
        } else {
            let discriminant = &self.p * &self.p - params.m() * &self.q * &self.q;
            sp * sign_to_i32(discriminant.sign())
        }
    }
}

fn sign_to_i32(sign: Sign) -> i32 {
    match sign {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_negative() {
            write!(f, "{} - {}*sqrt(m)", self.p, self.q.abs())
        } else {
            write!(f, "{} + {}*sqrt(m)", self.p, self.q)
        }
    }
}
