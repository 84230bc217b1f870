//! Constructive procedures for equilateral polygons in the lattice.
//!
//! Even sizes come from thin parallelograms built out of `(1, 1)` and
//! `(1, -1)`. Odd sizes come from a five-direction walk: one horizontal
//! edge `(c, 0)` plus mirror pairs `(a1, +-b1)` and `(a2, +-b2)` whose
//! multiplicities `t1`, `t2` solve the linear equation
//! `a1*t1 + a2*t2 = -c/2`. Two solvers are provided for that equation: a
//! closed form in the residue decomposition of `m`, and an extended-gcd
//! route that minimizes `|t1| + |t2|` over the solution family. Any closed
//! equilateral walk extends by two edges via an inserted `{u, -u}` pair.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{LatticeParams, LatticeVector};
use crate::search::is_square_free;
use crate::walk::{canonical_order, EquilateralWalk};

/// Which solver produces the odd-walk multiplicities `(t1, t2)`.
///
/// The two methods can disagree on `n_base` in general, so the dispatcher
/// never substitutes one for the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    ClosedForm,
    Euclid,
}

impl fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveMethod::ClosedForm => write!(f, "closed-form"),
            SolveMethod::Euclid => write!(f, "euclid"),
        }
    }
}

/// The five base integers of the odd construction, before the
/// multiplicities are solved for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseParams {
    pub c: BigInt,
    pub a1: BigInt,
    pub b1: BigInt,
    pub a2: BigInt,
    pub b2: BigInt,
}

/// Residue decomposition behind the closed-form solver: `m = 4k - 1`,
/// `k = 4*k_prime + i` with `i` in `{-1, 0, 1, 2}`, and
/// `chi = k_prime - i*(k - 1)/2` (the product `i*(k - 1)` is even for
/// every admissible `m`, so `chi` is an integer).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormDecomposition {
    pub k: BigInt,
    pub k_prime: BigInt,
    pub i: i8,
    pub chi: BigInt,
}

/// The full parameter tuple of an odd base walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    pub m: BigInt,
    pub c: BigInt,
    pub a1: BigInt,
    pub b1: BigInt,
    pub a2: BigInt,
    pub b2: BigInt,
    pub t1: BigInt,
    pub t2: BigInt,
}

impl ConstructionParams {
    /// Solves for the parameters of `m` with the given method.
    pub fn for_method(m: &BigInt, method: SolveMethod) -> Result<Self> {
        let base = base_params(m)?;
        let (t1, t2) = match method {
            SolveMethod::ClosedForm => {
                let (t1, t2, _) = solve_t_closed_form(m)?;
                (t1, t2)
            }
            SolveMethod::Euclid => solve_t_euclid(m)?,
        };
        Ok(ConstructionParams {
            m: m.clone(),
            c: base.c,
            a1: base.a1,
            b1: base.b1,
            a2: base.a2,
            b2: base.b2,
            t1,
            t2,
        })
    }

    /// The odd base-walk size `1 + 2*(|t1| + |t2|)`.
    pub fn n_base(&self) -> BigInt {
        BigInt::one() + 2 * (self.t1.abs() + self.t2.abs())
    }

    /// Checks every invariant of the tuple exactly: both norm identities,
    /// the closure relation `-c = 2*(a1*t1 + a2*t2)`, coprimality of
    /// `a1, a2`, and oddness of `n_base >= 3`.
    pub fn validate(&self) -> Result<()> {
        let c_sq = &self.c * &self.c;
        if &c_sq - &self.a1 * &self.a1 != &self.m * &self.b1 * &self.b1 {
            return Err(Error::InvalidParams(format!(
                "norm identity c^2 - a1^2 = m*b1^2 fails for {self:?}"
            )));
        }
        if &c_sq - &self.a2 * &self.a2 != &self.m * &self.b2 * &self.b2 {
            return Err(Error::InvalidParams(format!(
                "norm identity c^2 - a2^2 = m*b2^2 fails for {self:?}"
            )));
        }
        if -&self.c != 2 * (&self.a1 * &self.t1 + &self.a2 * &self.t2) {
            return Err(Error::InvalidParams(format!(
                "closure relation -c = 2*(a1*t1 + a2*t2) fails for {self:?}"
            )));
        }
        if self.a1.gcd(&self.a2) != BigInt::one() {
            return Err(Error::InvalidParams(format!(
                "a1 = {} and a2 = {} are not coprime",
                self.a1, self.a2
            )));
        }
        let n_base = self.n_base();
        if n_base < BigInt::from(3) || n_base.is_even() {
            return Err(Error::InvalidParams(format!(
                "n_base = {n_base} must be odd and at least 3"
            )));
        }
        Ok(())
    }
}

/// Rejects `m` unless it is square-free, at least 3, and `3 (mod 4)`.
fn check_odd_modulus(m: &BigInt) -> Result<()> {
    if m < &BigInt::from(3) {
        return Err(Error::BadModulus {
            m: m.clone(),
            reason: "odd-gon construction needs m >= 3",
        });
    }
    if m.mod_floor(&BigInt::from(4)) != BigInt::from(3) {
        return Err(Error::BadModulus {
            m: m.clone(),
            reason: "odd-gon construction needs m = 3 (mod 4)",
        });
    }
    if !is_square_free(m) {
        return Err(Error::BadModulus {
            m: m.clone(),
            reason: "m must be square-free",
        });
    }
    Ok(())
}

/// The five base integers:
/// `c = (m^2 + 5m + 4)/2`, `b1 = m + 2`, `a1 = (m^2 + 3m + 4)/2`,
/// `b2 = m + 4`, `a2 = (m^2 + 3m - 4)/2`.
///
/// Since `4 | m + 1`, all five are integers, `c` is even, `a1` is odd, and
/// `a1 - a2 = 4`; both norm identities hold exactly.
pub fn base_params(m: &BigInt) -> Result<BaseParams> {
    check_odd_modulus(m)?;
    let m_sq = m * m;
    let c = (&m_sq + 5 * m + 4) / 2;
    let b1 = m + 2;
    let a1 = (&m_sq + 3 * m + 4) / 2;
    let b2 = m + 4;
    let a2 = (&m_sq + 3 * m - 4) / 2;
    debug_assert_eq!(&c * &c - &a1 * &a1, m * &b1 * &b1);
    debug_assert_eq!(&c * &c - &a2 * &a2, m * &b2 * &b2);
    debug_assert!(c.is_even() && a1.is_odd());
    Ok(BaseParams { c, a1, b1, a2, b2 })
}

/// Closed-form multiplicities: with `m = 4k - 1`, `k = 4*k_prime + i`,
/// `chi = k_prime - i*(k - 1)/2`, take
/// `t1 = -chi*(16*k_prime + 4i + 3)` and `t2 = -t1 - i`.
pub fn solve_t_closed_form(m: &BigInt) -> Result<(BigInt, BigInt, ClosedFormDecomposition)> {
    check_odd_modulus(m)?;
    let k: BigInt = (m + 1) / 4;
    let residue = k.mod_floor(&BigInt::from(4));
    let i: i8 = if residue == BigInt::from(3) {
        -1
    } else {
        i8::try_from(&residue).expect("residue is 0, 1, or 2")
    };
    let k_prime: BigInt = (&k - i) / 4;
    // i*(k - 1) is even for every admissible residue of k.
    let chi = &k_prime - i * (&k - 1) / 2;
    let t1 = -&chi * (16 * &k_prime + 4 * i + 3);
    let t2 = -&t1 - i;
    #[cfg(debug_assertions)]
    {
        let base = base_params(m)?;
        debug_assert_eq!(-&base.c, 2 * (&base.a1 * &t1 + &base.a2 * &t2));
    }
    let decomp = ClosedFormDecomposition {
        k,
        k_prime,
        i,
        chi,
    };
    Ok((t1, t2, decomp))
}

/// Extended Euclidean algorithm: returns `(g, x, y)` with
/// `a*x + b*y = g = gcd(a, b) >= 0`.
pub(crate) fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Multiplicities via the extended Euclidean algorithm, minimized over the
/// solution family.
///
/// Since `gcd(a1, a2) = 1`, the solutions of `a1*t1 + a2*t2 = -c/2` form the
/// family `(t1 + a2*s, t2 - a1*s)`. `|t1| + |t2|` is a convex piecewise
/// linear function of `s` with kinks at `s = -t1/a2` and `s = t2/a1`, and no
/// flat piece (the interior slope is `|a1 - a2| = 4`), so the integer
/// minimum lies next to one of the two kinks. Ties go to the smaller `t1`.
pub fn solve_t_euclid(m: &BigInt) -> Result<(BigInt, BigInt)> {
    let base = base_params(m)?;
    let (g, x, y) = ext_gcd(&base.a1, &base.a2);
    debug_assert!(g.is_one());
    let rhs = -&base.c / 2;
    let t1_particular = x * &rhs;
    let t2_particular = y * &rhs;

    let kink_a = (-&t1_particular).div_floor(&base.a2);
    let kink_b = t2_particular.div_floor(&base.a1);
    let lo = (&kink_a).min(&kink_b) - 2;
    let hi = (&kink_a).max(&kink_b) + 2;

    let mut best: Option<(BigInt, BigInt, BigInt)> = None; // (|t1|+|t2|, t1, t2)
    let mut s = lo;
    while s <= hi {
        let t1 = &t1_particular + &base.a2 * &s;
        let t2 = &t2_particular - &base.a1 * &s;
        let size = t1.abs() + t2.abs();
        let better = match &best {
            None => true,
            Some((best_size, best_t1, _)) => {
                size < *best_size || (size == *best_size && t1 < *best_t1)
            }
        };
        if better {
            best = Some((size, t1, t2));
        }
        s += 1;
    }
    let (_, t1, t2) = best.expect("candidate window is nonempty");
    Ok((t1, t2))
}

/// Builds the odd base walk from a validated parameter tuple: one copy of
/// `(c, 0)`, `|t1|` copies each of `sign(t1)*(a1, +-b1)`, and `|t2|` copies
/// each of `sign(t2)*(a2, +-b2)`, in canonical edge order.
///
/// Closure in the second coordinate is forced by the mirror pairing; closure
/// in the first follows from `-c = 2*(a1*t1 + a2*t2)`. Every edge has
/// squared norm `c^2`.
pub fn assemble_odd_walk(params: &ConstructionParams) -> Result<EquilateralWalk> {
    params.validate()?;
    let lattice = LatticeParams::new(params.m.clone())?;

    let mut edges: Vec<LatticeVector> = Vec::new();
    let mut push_pairs = |t: &BigInt, a: &BigInt, b: &BigInt| -> Result<()> {
        let copies = t.abs().to_usize().ok_or_else(|| {
            Error::InvalidParams(format!("|t| = {} is too large to assemble", t.abs()))
        })?;
        let (ea, eb) = if t.is_negative() {
            (-a, -b)
        } else {
            (a.clone(), b.clone())
        };
        for _ in 0..copies {
            edges.push(LatticeVector::new(ea.clone(), eb.clone()));
            edges.push(LatticeVector::new(ea.clone(), -eb.clone()));
        }
        Ok(())
    };
    push_pairs(&params.t1, &params.a1, &params.b1)?;
    push_pairs(&params.t2, &params.a2, &params.b2)?;
    edges.push(LatticeVector::new(params.c.clone(), BigInt::zero()));

    Ok(EquilateralWalk::new(lattice, canonical_order(edges)))
}

/// A thin parallelogram with `n` edges (`n` even, `n >= 4`): `(n/2 - 1)`
/// copies of `(1, 1)`, one `(1, -1)`, `(n/2 - 1)` copies of `(-1, -1)`, one
/// `(-1, 1)`. All edges have squared norm `m + 1`.
pub fn even_ngon(m: &BigInt, n: u64) -> Result<EquilateralWalk> {
    if n % 2 != 0 || n < 4 {
        return Err(Error::BadN {
            n,
            n_base: None,
            reason: "parallelogram construction needs even n >= 4",
        });
    }
    let lattice = LatticeParams::new(m.clone())?;
    let long_side = usize::try_from(n / 2 - 1).expect("n fits in usize");
    let mut edges = Vec::with_capacity(long_side * 2 + 2);
    for _ in 0..long_side {
        edges.push(LatticeVector::new(1, 1));
    }
    edges.push(LatticeVector::new(1, -1));
    for _ in 0..long_side {
        edges.push(LatticeVector::new(-1, -1));
    }
    edges.push(LatticeVector::new(-1, 1));
    Ok(EquilateralWalk::new(lattice, edges))
}

/// Extends a closed equilateral walk by two edges, inserting the pair
/// `{u, -u}` where `u` is the first edge, then restoring canonical order.
/// The squared side length is unchanged.
pub fn extend_by_two(walk: &EquilateralWalk) -> Result<EquilateralWalk> {
    let report = walk
        .verify(false)
        .map_err(|e| Error::InvalidWalk(e.to_string()))?;
    if !report.is_valid_polygon() {
        return Err(Error::InvalidWalk(format!(
            "extension needs a closed equilateral walk (closed: {}, equilateral: {})",
            report.is_closed, report.is_equilateral
        )));
    }
    let u = walk.edges()[0].clone();
    let mut edges = walk.edges().to_vec();
    edges.push(-&u);
    edges.push(u);
    Ok(EquilateralWalk::new(
        walk.params().clone(),
        canonical_order(edges),
    ))
}

/// Constructs an equilateral `n`-gon walk in the lattice of parameter `m`.
///
/// Even `n >= 4` uses the parallelogram and works for every square-free
/// `m >= 1`. Odd `n` needs `m = 3 (mod 4)` and `n >= n_base(m, method)`;
/// such walks are the method's base walk extended by `(n - n_base)/2`
/// inserted pairs. Odd `n` below `n_base` reports `BadN` carrying `n_base`,
/// so callers can fall back to the search oracle.
pub fn ngon(m: &BigInt, n: u64, method: SolveMethod) -> Result<EquilateralWalk> {
    if n % 2 == 0 {
        return even_ngon(m, n);
    }
    let params = ConstructionParams::for_method(m, method)?;
    let n_base = params.n_base();
    if BigInt::from(n) < n_base {
        return Err(Error::BadN {
            n,
            n_base: Some(n_base),
            reason: "odd n is below the smallest size this method constructs",
        });
    }
    let n_base = n_base.to_u64().expect("n_base <= n fits in u64");
    let mut walk = assemble_odd_walk(&params)?;
    for _ in 0..(n - n_base) / 2 {
        walk = extend_by_two(&walk)?;
    }
    Ok(walk)
}
