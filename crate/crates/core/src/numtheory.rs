//! Desk-scale number theory: primality, prime decompositions, prime pairs
//! with a fixed gap, and prime arithmetic progressions.
//!
//! Every search here is deterministic and bounded. Running out of room is
//! reported as [`Error::NotFound`] rather than looping forever, since several
//! of the facts these oracles stand in for are conjectures.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sieve limit of the shared [`PrimeSet`]. Larger inputs use Miller-Rabin.
pub const SIEVE_LIMIT: u64 = 10_000_000;

/// Primes in `[0, limit]`, stored as an odd-only bitset.
#[derive(Debug, Clone)]
pub struct PrimeSet {
    limit: u64,
    // bit i set iff 2i+1 is composite (or 1)
    composite: Vec<u64>,
}

impl PrimeSet {
    pub fn new(limit: u64) -> Self {
        let odd_count = (limit / 2 + 1) as usize;
        let mut composite = vec![0u64; odd_count.div_ceil(64)];
        composite[0] |= 1; // 1 is not prime
        let mut i = 1usize;
        loop {
            let p = 2 * i as u64 + 1;
            if p * p > limit {
                break;
            }
            if composite[i / 64] & (1 << (i % 64)) == 0 {
                let mut j = (p * p / 2) as usize;
                while j < odd_count {
                    composite[j / 64] |= 1 << (j % 64);
                    j += p as usize;
                }
            }
            i += 1;
        }
        Self { limit, composite }
    }

    /// The process-wide sieve up to [`SIEVE_LIMIT`], built on first use.
    pub fn global() -> &'static PrimeSet {
        static GLOBAL: OnceLock<PrimeSet> = OnceLock::new();
        GLOBAL.get_or_init(|| PrimeSet::new(SIEVE_LIMIT))
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Membership for `n <= limit`.
    ///
    /// # Panics
    /// If `n` exceeds the sieve limit.
    pub fn contains(&self, n: u64) -> bool {
        assert!(
            n <= self.limit,
            "{n} is beyond the sieve limit {}",
            self.limit
        );
        if n < 2 {
            return false;
        }
        if n.is_multiple_of(2) {
            return n == 2;
        }
        let i = (n / 2) as usize;
        self.composite[i / 64] & (1 << (i % 64)) == 0
    }

    /// Membership for any `u64`, falling back to Miller-Rabin above the limit.
    pub fn is_prime(&self, n: u64) -> bool {
        if n <= self.limit {
            self.contains(n)
        } else {
            miller_rabin(n)
        }
    }

    /// Ascending primes `>= from` up to the sieve limit.
    pub fn primes_from(&self, from: u64) -> impl Iterator<Item = u64> + '_ {
        let start = from.max(2);
        let head = (start <= 2).then_some(2);
        let first_odd = if start <= 3 { 3 } else { start | 1 };
        head.into_iter().chain(
            (first_odd..=self.limit)
                .step_by(2)
                .filter(move |&n| self.contains(n)),
        )
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn miller_rabin(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// True iff `n >= 2` and `n` is prime. Negative inputs are never prime.
pub fn is_prime(n: i64) -> bool {
    n >= 2 && PrimeSet::global().is_prime(n as u64)
}

/// A target written as a sum of primes, parts in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub target: u64,
    pub parts: Vec<u64>,
}

impl Decomposition {
    /// Largest part.
    pub fn largest(&self) -> u64 {
        self.parts[0]
    }

    /// `parts[0] + ... + parts[len - 1]`.
    pub fn prefix_sum(&self, len: usize) -> u64 {
        self.parts[..len].iter().sum()
    }
}

/// `m = p1 + p2` with `p1 >= p2`, choosing the smallest `p2 <= limit`.
pub fn goldbach_pair(m: u64, limit: u64) -> Result<Decomposition> {
    if m < 4 || m % 2 == 1 {
        return Err(Error::InvalidSpec(format!(
            "goldbach_pair needs an even target >= 4, got {m}"
        )));
    }
    let sieve = PrimeSet::global();
    let cap = limit.min(m / 2);
    for p2 in sieve.primes_from(2).take_while(|&p| p <= cap) {
        if sieve.is_prime(m - p2) {
            return Ok(Decomposition {
                target: m,
                parts: vec![m - p2, p2],
            });
        }
    }
    Err(Error::NotFound(format!(
        "no Goldbach pair for {m} with smaller part <= {limit}"
    )))
}

/// `m` as a sum of exactly `terms` primes (2 <= terms <= 6).
///
/// Tie-break: use as few 2s as the parity of `m` allows, then minimize the
/// smallest part, then the next smallest, and so on.
pub fn prime_sum(m: u64, terms: usize) -> Result<Decomposition> {
    if !(2..=6).contains(&terms) {
        return Err(Error::InvalidSpec(format!(
            "prime_sum supports 2..=6 terms, got {terms}"
        )));
    }
    if m < 2 * terms as u64 {
        return Err(Error::InvalidSpec(format!(
            "target {m} is below 2 * {terms}"
        )));
    }
    for twos in 0..=terms {
        let odd_terms = terms - twos;
        let Some(rest) = m.checked_sub(2 * twos as u64) else {
            break;
        };
        if rest % 2 != odd_terms as u64 % 2 {
            continue;
        }
        if let Some(mut odd) = odd_tail(rest, odd_terms, 3) {
            odd.reverse();
            odd.extend(std::iter::repeat_n(2, twos));
            return Ok(Decomposition {
                target: m,
                parts: odd,
            });
        }
    }
    Err(Error::NotFound(format!(
        "{m} is not a sum of {terms} primes"
    )))
}

/// Smallest-first list of `count` odd primes, each `>= min`, summing to `rest`.
fn odd_tail(rest: u64, count: usize, min: u64) -> Option<Vec<u64>> {
    match count {
        0 => (rest == 0).then(Vec::new),
        1 => (rest >= min && is_prime(rest as i64)).then(|| vec![rest]),
        _ => {
            let mut q = min | 1;
            while q * count as u64 <= rest {
                if is_prime(q as i64) {
                    if let Some(mut tail) = odd_tail(rest - q, count - 1, q) {
                        tail.insert(0, q);
                        return Some(tail);
                    }
                }
                q += 2;
            }
            None
        }
    }
}

/// The first `count` pairs `(p, p + gap)` of primes with `p >= min`.
///
/// With `consecutive`, no prime may lie strictly between the two.
pub fn prime_pairs_with_gap(
    gap: u64,
    count: usize,
    min: u64,
    consecutive: bool,
) -> Result<Vec<(u64, u64)>> {
    if gap == 0 || gap % 2 == 1 || count == 0 {
        return Err(Error::InvalidSpec(format!(
            "prime_pairs_with_gap needs an even gap >= 2 and count >= 1, got gap {gap}, count {count}"
        )));
    }
    let sieve = PrimeSet::global();
    let mut out = Vec::with_capacity(count);
    let mut primes = sieve.primes_from(min).peekable();
    while let Some(p) = primes.next() {
        let q = p + gap;
        if q > sieve.limit() {
            break;
        }
        let hit = if consecutive {
            primes.peek() == Some(&q)
        } else {
            sieve.contains(q)
        };
        if hit {
            out.push((p, q));
            if out.len() == count {
                return Ok(out);
            }
        }
    }
    Err(Error::NotFound(format!(
        "only {} of {count} prime pairs with gap {gap} below {}",
        out.len(),
        sieve.limit()
    )))
}

/// Product of the primes `<= n`.
fn primorial(n: u64) -> u64 {
    (2..=n).filter(|&q| is_prime(q as i64)).product()
}

/// A prime arithmetic progression of `length` terms, all `<= search_limit`.
///
/// Returns `(start, difference)` with the smallest start, then the smallest
/// difference. A single prime is canonicalized to difference 0.
pub fn prime_ap(length: usize, search_limit: u64) -> Result<(u64, u64)> {
    prime_ap_from(length, 2, search_limit)
}

/// [`prime_ap`] restricted to starts `>= min_start`.
pub fn prime_ap_from(length: usize, min_start: u64, search_limit: u64) -> Result<(u64, u64)> {
    if length == 0 {
        return Err(Error::InvalidSpec("progression length must be >= 1".into()));
    }
    let sieve = PrimeSet::global();
    let span = length as u64 - 1;
    for start in sieve.primes_from(min_start) {
        if start > search_limit {
            break;
        }
        if span == 0 {
            return Ok((start, 0));
        }
        // Beyond the small starts, every prime q <= length must divide d or
        // some term is a multiple of q larger than q.
        let step = if start > length as u64 {
            primorial(length as u64)
        } else {
            1
        };
        let mut d = step;
        while start + span * d <= search_limit {
            if (1..=span).all(|i| sieve.is_prime(start + i * d)) {
                return Ok((start, d));
            }
            d += step;
        }
    }
    Err(Error::NotFound(format!(
        "no prime progression of length {length} below {search_limit}"
    )))
}
