//! Brute-force oracle machinery, independent of the constructions.
//!
//! This module enumerates all representations of a squared length by the
//! norm form `a^2 + m*b^2`, searches for zero-sum equal-norm edge multisets
//! by exhaustive depth-first search, and packages the two into a minimal
//! odd-gon search. It also carries the elementary number-theoretic
//! utilities (integer square root, square-free test, largest prime factor)
//! the rest of the crate leans on. Everything here is pure integer
//! arithmetic; the square root is an exact Newton iteration, never a float.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{LatticeParams, LatticeVector};
use crate::walk::{canonical_order, EquilateralWalk};

/// Resource limits for the search oracle. All three must be positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest polygon size tried.
    pub n_max: u64,
    /// Largest squared side length tried.
    pub s_max: BigInt,
    /// Node cap for each depth-first search tree, i.e. per `(n, s)` cell.
    pub node_budget: u64,
}

impl SearchBounds {
    pub fn new(n_max: u64, s_max: impl Into<BigInt>, node_budget: u64) -> Self {
        SearchBounds {
            n_max,
            s_max: s_max.into(),
            node_budget,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_max == 0 || self.node_budget == 0 || !self.s_max.is_positive() {
            return Err(Error::BadInput(format!(
                "search bounds must all be positive, got n_max={}, s_max={}, node_budget={}",
                self.n_max, self.s_max, self.node_budget
            )));
        }
        Ok(())
    }
}

/// Tuning knobs for [`min_odd_ngon_with`].
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Skip odd sizes below the largest prime factor of `m`. The bound is
    /// proved for convex polygons; disable it to probe whether it binds for
    /// non-convex ones too.
    pub respect_prime_bound: bool,
    /// Worker threads for evaluating side lengths concurrently. Results are
    /// merged in `(n, s)` priority order, so the outcome matches sequential
    /// execution exactly.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            respect_prime_bound: true,
            threads: 1,
        }
    }
}

/// Result of a [`min_odd_ngon`] run.
///
/// `walk`, `n`, and `side_sq` are present exactly when the status is
/// `Found`, and the walk then passes verification. On `NotFoundWithinBounds`
/// the scanned `(n, s)` rectangle is certified free of solutions except for
/// the cells listed in `truncated_cells`, where the node budget cut the
/// search short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub walk: Option<EquilateralWalk>,
    pub n: Option<u64>,
    pub side_sq: Option<BigInt>,
    pub nodes_explored: u64,
    pub truncated_cells: Vec<(u64, BigInt)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    NotFoundWithinBounds,
}

/// Exact floor square root by pure integer Newton iteration.
///
/// Starts from the power-of-two overestimate `2^ceil(bits/2)` and descends;
/// the first non-decreasing step lands on `floor(sqrt(n))`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt needs a nonnegative argument");
    if n < &BigInt::from(2) {
        return n.clone();
    }
    let mut x: BigInt = BigInt::one() << ((n.bits() + 1) / 2);
    loop {
        let y: BigInt = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

fn isqrt_u64(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let bits = 64 - n.leading_zeros() as u64;
    let mut x = 1u64 << ((bits + 1) / 2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Whether no prime square divides `m`. False for `m < 1`.
pub fn is_square_free(m: &BigInt) -> bool {
    if !m.is_positive() {
        return false;
    }
    if let Some(small) = m.to_u64() {
        return is_square_free_u64(small);
    }
    let mut m = m.clone();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            m /= &d;
            if (&m % &d).is_zero() {
                return false;
            }
        }
        d += 1;
    }
    true
}

fn is_square_free_u64(mut m: u64) -> bool {
    let mut d = 2u64;
    while d <= m / d {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return false;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    true
}

/// The largest prime dividing `m`, by trial division up to `sqrt(m)`.
/// Requires `m >= 2`.
pub fn largest_prime_factor(m: &BigInt) -> Result<BigInt> {
    if m < &BigInt::from(2) {
        return Err(Error::BadInput(format!(
            "largest_prime_factor needs m >= 2, got {m}"
        )));
    }
    if let Some(small) = m.to_u64() {
        return Ok(BigInt::from(largest_prime_factor_u64(small)));
    }
    let mut m = m.clone();
    let mut largest = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            largest = d.clone();
            while (&m % &d).is_zero() {
                m /= &d;
            }
        }
        d += 1;
    }
    if m > BigInt::one() {
        largest = m;
    }
    Ok(largest)
}

fn largest_prime_factor_u64(mut m: u64) -> u64 {
    let mut largest = 1u64;
    let mut d = 2u64;
    while d <= m / d {
        if m % d == 0 {
            largest = d;
            while m % d == 0 {
                m /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        largest = m;
    }
    largest
}

/// The necessary condition for odd sizes: `n` must be at least as large as
/// every prime dividing `m`. Advisory for non-convex polygons.
///
/// Requires square-free `m >= 2` and odd `n >= 3`.
pub fn check_necessary_condition(m: &BigInt, n: u64) -> Result<bool> {
    if m < &BigInt::from(2) || !is_square_free(m) {
        return Err(Error::BadInput(format!(
            "necessary condition needs square-free m >= 2, got {m}"
        )));
    }
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadInput(format!(
            "necessary condition is about odd n >= 3, got {n}"
        )));
    }
    Ok(BigInt::from(n) >= largest_prime_factor(m)?)
}

/// All integer pairs `(a, b)` with `a^2 + m*b^2 = s`, in lexicographic
/// order. Scans `b` over `[-floor(sqrt(s/m)), floor(sqrt(s/m))]` and tests
/// `s - m*b^2` for squareness with the exact integer square root.
pub fn representations(s: &BigInt, m: &BigInt) -> Vec<LatticeVector> {
    assert!(
        !s.is_negative() && m.is_positive(),
        "representations needs s >= 0 and m >= 1"
    );
    let mut out = Vec::new();
    if let (Some(s_small), Some(m_small)) = (s.to_u64(), m.to_u64()) {
        // Everything fits in machine words: b <= sqrt(s/m) <= 2^32, and
        // m*b^2 <= s by choice of the bound, so u64 arithmetic is exact.
        let b_max = isqrt_u64(s_small / m_small) as i64;
        for b in -b_max..=b_max {
            // b_max^2 * m <= s by choice of the bound, so this cannot wrap.
            let bb = (b as i128 * b as i128) as u128;
            let r = (s_small as u128 - m_small as u128 * bb) as u64;
            let a = isqrt_u64(r);
            if a * a == r {
                if a == 0 {
                    out.push(LatticeVector::new(0, b));
                } else {
                    out.push(LatticeVector::new(a as i64, b));
                    out.push(LatticeVector::new(-(a as i64), b));
                }
            }
        }
    } else {
        let b_max = isqrt(&(s / m));
        let mut b = -&b_max;
        while b <= b_max {
            let r = s - m * &b * &b;
            let a = isqrt(&r);
            if &a * &a == r {
                if a.is_zero() {
                    out.push(LatticeVector::new(BigInt::zero(), b.clone()));
                } else {
                    out.push(LatticeVector::new(-&a, b.clone()));
                    out.push(LatticeVector::new(a, b.clone()));
                }
            }
            b += 1;
        }
    }
    out.sort();
    out
}

/// Exhaustive depth-first search for a size-`n` multiset of the given
/// vectors with componentwise sum zero.
///
/// Vectors are processed in lexicographic order with counts tried in
/// increasing order, so the result is deterministic regardless of input
/// permutation. The pruning rule is sound and the enumeration complete: a
/// clean `Ok(None)` proves no solution exists for this vector set and `n`.
/// `BudgetExhausted` marks the one outcome that proves nothing.
///
/// Callers are expected to supply vectors sharing one squared norm; the
/// search itself never needs the norm.
pub fn zero_sum_search(
    vectors: &[LatticeVector],
    n: u64,
    bounds: &SearchBounds,
) -> Result<Option<Vec<(LatticeVector, u64)>>> {
    bounds.validate()?;
    if n < 3 {
        return Err(Error::BadInput(format!(
            "zero-sum search needs n >= 3, got {n}"
        )));
    }
    let (result, _nodes) = zero_sum_search_counted(vectors, n, bounds.node_budget);
    result
}

type Multiset = Vec<(LatticeVector, u64)>;

fn zero_sum_search_counted(
    vectors: &[LatticeVector],
    n: u64,
    node_budget: u64,
) -> (Result<Option<Multiset>>, u64) {
    let mut sorted = vectors.to_vec();
    sorted.sort();
    sorted.dedup();

    let len = sorted.len();
    let mut suffix_min_a = vec![BigInt::zero(); len];
    let mut suffix_max_a = vec![BigInt::zero(); len];
    let mut suffix_min_b = vec![BigInt::zero(); len];
    let mut suffix_max_b = vec![BigInt::zero(); len];
    for i in (0..len).rev() {
        let v = &sorted[i];
        if i == len - 1 {
            suffix_min_a[i] = v.a.clone();
            suffix_max_a[i] = v.a.clone();
            suffix_min_b[i] = v.b.clone();
            suffix_max_b[i] = v.b.clone();
        } else {
            suffix_min_a[i] = v.a.clone().min(suffix_min_a[i + 1].clone());
            suffix_max_a[i] = v.a.clone().max(suffix_max_a[i + 1].clone());
            suffix_min_b[i] = v.b.clone().min(suffix_min_b[i + 1].clone());
            suffix_max_b[i] = v.b.clone().max(suffix_max_b[i + 1].clone());
        }
    }

    let mut dfs = Dfs {
        vectors: &sorted,
        suffix_min_a,
        suffix_max_a,
        suffix_min_b,
        suffix_max_b,
        node_budget,
        nodes: 0,
        counts: vec![0; len],
    };
    let outcome = dfs.search(0, n, BigInt::zero(), BigInt::zero());
    let nodes = dfs.nodes;
    let result = match outcome {
        Ok(Some(counts)) => {
            let multiset: Multiset = dfs
                .vectors
                .iter()
                .zip(counts)
                .filter(|(_, c)| *c > 0)
                .map(|(v, c)| (v.clone(), c))
                .collect();
            Ok(Some(multiset))
        }
        Ok(None) => Ok(None),
        Err(e) => Err(e),
    };
    (result, nodes)
}

struct Dfs<'a> {
    vectors: &'a [LatticeVector],
    suffix_min_a: Vec<BigInt>,
    suffix_max_a: Vec<BigInt>,
    suffix_min_b: Vec<BigInt>,
    suffix_max_b: Vec<BigInt>,
    node_budget: u64,
    nodes: u64,
    counts: Vec<u64>,
}

impl Dfs<'_> {
    fn search(&mut self, index: usize, slots: u64, sx: BigInt, sy: BigInt) -> Result<Option<Vec<u64>>> {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Err(Error::BudgetExhausted { nodes: self.nodes });
        }
        if slots == 0 {
            if sx.is_zero() && sy.is_zero() {
                return Ok(Some(self.counts.clone()));
            }
            return Ok(None);
        }
        if index == self.vectors.len() {
            return Ok(None);
        }
        // With `slots` picks left among vectors[index..], the reachable sums
        // form a box; prune when zero falls outside it.
        let slots_big = BigInt::from(slots);
        if (&sx + &slots_big * &self.suffix_min_a[index]).is_positive()
            || (&sx + &slots_big * &self.suffix_max_a[index]).is_negative()
            || (&sy + &slots_big * &self.suffix_min_b[index]).is_positive()
            || (&sy + &slots_big * &self.suffix_max_b[index]).is_negative()
        {
            return Ok(None);
        }
        let v = &self.vectors[index];
        for count in 0..=slots {
            self.counts[index] = count;
            let count_big = BigInt::from(count);
            let nx = &sx + &count_big * &v.a;
            let ny = &sy + &count_big * &v.b;
            if let Some(found) = self.search(index + 1, slots - count, nx, ny)? {
                return Ok(Some(found));
            }
        }
        self.counts[index] = 0;
        Ok(None)
    }
}

/// Searches for the smallest odd equilateral polygon in the lattice of
/// parameter `m`, with default options (prime bound respected, sequential).
pub fn min_odd_ngon(m: &BigInt, bounds: &SearchBounds) -> Result<SearchOutcome> {
    min_odd_ngon_with(m, bounds, &SearchOptions::default())
}

/// Searches odd sizes in ascending order and, within each size, squared
/// side lengths in ascending order starting at `m + 1`; the first hit is
/// returned with its walk in canonical edge order. "Minimal" therefore
/// means smallest odd `n` first, then smallest side.
///
/// Exhaustion never errors: it yields `NotFoundWithinBounds` along with the
/// list of budget-truncated cells, so a clean scan certifies absence over
/// the whole rectangle.
pub fn min_odd_ngon_with(
    m: &BigInt,
    bounds: &SearchBounds,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    if m < &BigInt::from(3) || m.mod_floor(&BigInt::from(4)) != BigInt::from(3) {
        return Err(Error::BadModulus {
            m: m.clone(),
            reason: "odd-gon search needs m >= 3 with m = 3 (mod 4)",
        });
    }
    if !is_square_free(m) {
        return Err(Error::BadModulus {
            m: m.clone(),
            reason: "m must be square-free",
        });
    }
    bounds.validate()?;
    if options.threads == 0 {
        return Err(Error::BadInput("thread count must be positive".into()));
    }

    let mut start_n = 3u64;
    if options.respect_prime_bound {
        let prime = largest_prime_factor(m)?;
        match prime.to_u64() {
            Some(p) => start_n = start_n.max(p),
            None => {
                // The smallest admissible n already exceeds n_max.
                return Ok(not_found_outcome(0, Vec::new()));
            }
        }
    }

    let pool = if options.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(options.threads)
                .build()
                .map_err(|e| Error::BadInput(format!("cannot build thread pool: {e}")))?,
        )
    } else {
        None
    };

    const CHUNK: usize = 256;
    let params = LatticeParams::new(m.clone())?;
    let mut nodes_explored = 0u64;
    let mut truncated: Vec<(u64, BigInt)> = Vec::new();

    let mut n = start_n;
    while n <= bounds.n_max {
        let mut s = m + 1;
        while s <= bounds.s_max {
            let mut chunk = Vec::with_capacity(CHUNK);
            while chunk.len() < CHUNK && s <= bounds.s_max {
                chunk.push(s.clone());
                s += 1;
            }
            let evaluate = |side: &BigInt| -> (BigInt, u64, Result<Option<Multiset>>) {
                let reps = representations(side, m);
                if reps.is_empty() {
                    return (side.clone(), 0, Ok(None));
                }
                let (result, nodes) = zero_sum_search_counted(&reps, n, bounds.node_budget);
                (side.clone(), nodes, result)
            };
            let cells: Vec<_> = match &pool {
                Some(pool) => pool.install(|| chunk.par_iter().map(evaluate).collect()),
                None => chunk.iter().map(evaluate).collect(),
            };
            // Merge in ascending-s order; cells after the first hit are
            // discarded so the outcome matches sequential execution.
            for (side, nodes, result) in cells {
                nodes_explored += nodes;
                match result {
                    Ok(Some(multiset)) => {
                        let walk = walk_from_multiset(&params, &multiset);
                        debug_assert!(walk
                            .verify(false)
                            .map(|r| r.is_valid_polygon())
                            .unwrap_or(false));
                        return Ok(SearchOutcome {
                            status: SearchStatus::Found,
                            n: Some(n),
                            side_sq: Some(side),
                            walk: Some(walk),
                            nodes_explored,
                            truncated_cells: truncated,
                        });
                    }
                    Ok(None) => {}
                    Err(Error::BudgetExhausted { .. }) => truncated.push((n, side)),
                    Err(other) => return Err(other),
                }
            }
        }
        n += 2;
    }
    Ok(not_found_outcome(nodes_explored, truncated))
}

fn not_found_outcome(nodes_explored: u64, truncated_cells: Vec<(u64, BigInt)>) -> SearchOutcome {
    SearchOutcome {
        status: SearchStatus::NotFoundWithinBounds,
        walk: None,
        n: None,
        side_sq: None,
        nodes_explored,
        truncated_cells,
    }
}

fn walk_from_multiset(params: &LatticeParams, multiset: &Multiset) -> EquilateralWalk {
    let mut edges = Vec::new();
    for (vector, count) in multiset {
        for _ in 0..*count {
            edges.push(vector.clone());
        }
    }
    EquilateralWalk::new(params.clone(), canonical_order(edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn vectors(pairs: &[(i64, i64)]) -> Vec<LatticeVector> {
        pairs.iter().map(|&(a, b)| LatticeVector::new(a, b)).collect()
    }

    #[test]
    fn isqrt_agrees_with_squares() {
        for n in 0u64..2000 {
            let r = isqrt(&big(n as i64));
            let r = r.to_u64().unwrap();
            assert!(r * r <= n && (r + 1) * (r + 1) > n, "isqrt({n}) = {r}");
            assert_eq!(isqrt_u64(n), r);
        }
        // exact squares of large numbers round-trip
        let huge = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        assert_eq!(isqrt(&(&huge * &huge)), huge);
        assert_eq!(isqrt(&(&huge * &huge + 1)), huge);
        assert_eq!(isqrt(&(&huge * &huge - 1)), &huge - 1);
    }

    #[test]
    fn square_free_examples() {
        assert!(is_square_free(&big(15)));
        assert!(!is_square_free(&big(12)));
        assert!(is_square_free(&big(1)));
        assert!(is_square_free(&big(2)));
        assert!(!is_square_free(&big(49)));
        assert!(!is_square_free(&big(0)));
        assert!(!is_square_free(&big(-3)));
    }

    #[test]
    fn largest_prime_factor_examples() {
        assert_eq!(largest_prime_factor(&big(7)).unwrap(), big(7));
        assert_eq!(largest_prime_factor(&big(231)).unwrap(), big(11));
        assert_eq!(largest_prime_factor(&big(4)).unwrap(), big(2));
        assert_eq!(largest_prime_factor(&big(2)).unwrap(), big(2));
        assert!(matches!(
            largest_prime_factor(&big(1)),
            Err(Error::BadInput(_))
        ));
    }

    #[test]
    fn necessary_condition_examples() {
        assert_eq!(check_necessary_condition(&big(231), 7).unwrap(), false);
        assert_eq!(check_necessary_condition(&big(231), 11).unwrap(), true);
        assert_eq!(check_necessary_condition(&big(7), 7).unwrap(), true);
        assert_eq!(check_necessary_condition(&big(7), 5).unwrap(), false);
        assert!(check_necessary_condition(&big(12), 5).is_err());
        assert!(check_necessary_condition(&big(7), 4).is_err());
        assert!(check_necessary_condition(&big(7), 1).is_err());
    }

    #[test]
    fn representations_frozen_small_case() {
        let reps = representations(&big(4), &big(3));
        assert_eq!(
            reps,
            vectors(&[(-2, 0), (-1, -1), (-1, 1), (1, -1), (1, 1), (2, 0)])
        );
        assert!(representations(&big(2), &big(7)).is_empty());
        assert_eq!(representations(&big(0), &big(5)), vectors(&[(0, 0)]));
    }

    #[test]
    fn representations_of_m7_base_side() {
        // Exhaustive scan of a^2 + 7b^2 = 1936 = 44^2: the four mirror
        // classes of the base construction plus (19, 15) and (12, 16).
        let reps = representations(&big(1936), &big(7));
        assert_eq!(reps.len(), 18);
        let expected = vectors(&[
            (-44, 0),
            (-37, -9),
            (-37, 9),
            (-33, -11),
            (-33, 11),
            (-19, -15),
            (-19, 15),
            (-12, -16),
            (-12, 16),
            (12, -16),
            (12, 16),
            (19, -15),
            (19, 15),
            (33, -11),
            (33, 11),
            (37, -9),
            (37, 9),
            (44, 0),
        ]);
        assert_eq!(reps, expected);
    }

    #[test]
    fn representations_are_sign_closed_with_exact_norms() {
        let params = LatticeParams::new(13).unwrap();
        for s in 1i64..400 {
            let reps = representations(&big(s), &big(13));
            for v in &reps {
                assert_eq!(v.norm_sq(&params), big(s));
                for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mapped = LatticeVector::new(sa * &v.a, sb * &v.b);
                    assert!(reps.binary_search(&mapped).is_ok());
                }
            }
            if s > 0 && !reps.is_empty() {
                assert_eq!(reps.len() % 2, 0);
            }
        }
    }

    #[test]
    fn zero_sum_search_finds_triangle() {
        let reps = representations(&big(4), &big(3));
        let bounds = SearchBounds::new(9, 16, 100_000);
        let found = zero_sum_search(&reps, 3, &bounds).unwrap().unwrap();
        assert_eq!(
            found,
            vec![
                (LatticeVector::new(-1, -1), 1),
                (LatticeVector::new(-1, 1), 1),
                (LatticeVector::new(2, 0), 1),
            ]
        );
    }

    #[test]
    fn zero_sum_search_proves_absence_without_positive_y() {
        let reps: Vec<_> = representations(&big(4), &big(3))
            .into_iter()
            .filter(|v| !v.b.is_positive())
            .collect();
        let bounds = SearchBounds::new(9, 16, 100_000);
        assert_eq!(zero_sum_search(&reps, 3, &bounds).unwrap(), None);
    }

    #[test]
    fn zero_sum_search_is_permutation_invariant() {
        let mut reps = representations(&big(4), &big(3));
        let bounds = SearchBounds::new(9, 16, 100_000);
        let reference = zero_sum_search(&reps, 4, &bounds).unwrap();
        reps.reverse();
        assert_eq!(zero_sum_search(&reps, 4, &bounds).unwrap(), reference);
        reps.swap(0, 3);
        assert_eq!(zero_sum_search(&reps, 4, &bounds).unwrap(), reference);
    }

    #[test]
    fn zero_sum_search_respects_budget() {
        let reps = representations(&big(1936), &big(7));
        let bounds = SearchBounds::new(49, 2000, 10);
        assert!(matches!(
            zero_sum_search(&reps, 49, &bounds),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn min_odd_ngon_m3_finds_triangle() {
        let bounds = SearchBounds::new(9, 16, 1_000_000);
        let outcome = min_odd_ngon(&big(3), &bounds).unwrap();
        assert_eq!(outcome.status, SearchStatus::Found);
        assert_eq!(outcome.n, Some(3));
        assert_eq!(outcome.side_sq, Some(big(4)));
        let walk = outcome.walk.unwrap();
        let report = walk.verify(false).unwrap();
        assert!(report.is_valid_polygon());
        assert_eq!(report.side_sq, Some(big(4)));
        assert!(outcome.truncated_cells.is_empty());
        assert!(outcome.nodes_explored > 0);
    }

    #[test]
    fn min_odd_ngon_m7_below_prime_bound_is_empty() {
        let bounds = SearchBounds::new(5, 1_000_000, 1_000_000);
        let outcome = min_odd_ngon(&big(7), &bounds).unwrap();
        assert_eq!(outcome.status, SearchStatus::NotFoundWithinBounds);
        assert_eq!(outcome.walk, None);
        assert!(outcome.truncated_cells.is_empty());
    }

    #[test]
    fn min_odd_ngon_parallel_matches_sequential() {
        let bounds = SearchBounds::new(7, 600, 1_000_000);
        let sequential = min_odd_ngon(&big(3), &bounds).unwrap();
        let parallel = min_odd_ngon_with(
            &big(3),
            &bounds,
            &SearchOptions {
                respect_prime_bound: true,
                threads: 4,
            },
        )
        .unwrap();
        assert_eq!(sequential, parallel);
    }

    #[test]
    fn min_odd_ngon_rejects_bad_moduli() {
        let bounds = SearchBounds::new(9, 16, 1000);
        for m in [1i64, 2, 5, 12, 27] {
            assert!(matches!(
                min_odd_ngon(&big(m), &bounds),
                Err(Error::BadModulus { .. })
            ));
        }
    }
}
