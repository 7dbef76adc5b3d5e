//! The p-cycle expander family and the index arithmetic for inflating and
//! deflating between consecutive family members.
//!
//! For a prime `p`, the p-cycle `Z(p)` is the 3-regular graph on `{0..p-1}`
//! with cycle edges `x ~ x±1 (mod p)`, chord edges `x ~ x⁻¹ (mod p)` for
//! `x > 0`, and a self-loop at 0 (self-inverse vertices 1 and p−1 also carry
//! their chord as a self-loop). Inflation replaces each vertex of `Z(p)` by a
//! contiguous *cloud* of vertices of `Z(p')` with `p' ∈ (4p, 8p)`; deflation
//! contracts preimage classes of `x ↦ ⌊x·p'/p⌋` with `p' ∈ (p/8, p/4)`.
//! All block arithmetic is exact integer arithmetic; cloud and preimage sizes
//! are bounded by 8 because the prime ratio stays below 8.

use std::cell::OnceCell;

use thiserror::Error;

/// Maximum cloud / preimage-class size over all valid plans (the prime ratio
/// is strictly below 8 in both directions).
pub const ZETA: u64 = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PCycleError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too small (need p >= 3)")]
    TooSmall(u64),
    #[error("no prime in open interval ({0}, {1})")]
    NoPrimeInRange(u64, u64),
    #[error("0 has no modular inverse")]
    DomainError,
    #[error("prime {new} outside required open interval ({lo}, {hi}) for base {old}")]
    BadPlan { old: u64, new: u64, lo: u64, hi: u64 },
}

/// A verified prime modulus, the size parameter of one family member.
///
/// `p = 3` is permitted so that deflation targets of small cycles (e.g.
/// 23 → 3) stay expressible; live networks never shrink below p = 11
/// because the adversary floor keeps at least 4 nodes alive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, PCycleError> {
        if p < 3 {
            return Err(PCycleError::TooSmall(p));
        }
        if !is_prime(p) {
            return Err(PCycleError::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Least prime strictly inside the open interval `(lo, hi)`.
pub fn smallest_prime_in(lo: u64, hi: u64) -> Result<PrimeModulus, PCycleError> {
    let mut candidate = lo + 1;
    while candidate < hi {
        if candidate >= 3 && is_prime(candidate) {
            return Ok(PrimeModulus(candidate));
        }
        candidate += 1;
    }
    Err(PCycleError::NoPrimeInRange(lo, hi))
}

/// The unique `y` in `[1, p-1]` with `x·y ≡ 1 (mod p)`, by extended Euclid.
pub fn mod_inverse(x: u64, p: PrimeModulus) -> Result<u64, PCycleError> {
    if x == 0 {
        return Err(PCycleError::DomainError);
    }
    let p = p.get() as i64;
    let (mut r0, mut r1) = (p, (x as i64) % p);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    Ok(t0.rem_euclid(p) as u64)
}

/// The virtual expander `Z(p)`: pure rule-defined graph, value-semantic and
/// immutable after construction.
#[derive(Debug, Clone)]
pub struct PCycle {
    modulus: PrimeModulus,
    diameter: OnceCell<u32>,
}

impl PCycle {
    pub fn new(modulus: PrimeModulus) -> Self {
        PCycle { modulus, diameter: OnceCell::new() }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn p(&self) -> u64 {
        self.modulus.get()
    }

    /// The neighbor multiset `{x−1, x+1, inv(x)}`; `inv(0)` is the self-loop
    /// at 0, and a self-inverse `x` (x² ≡ 1) contributes its self-loop.
    /// Total degree is exactly 3, so a walk at a self-looped vertex stays put
    /// with probability 1/3.
    pub fn neighbors(&self, x: u64) -> [u64; 3] {
        let p = self.p();
        debug_assert!(x < p);
        let inv = if x == 0 {
            0
        } else {
            mod_inverse(x, self.modulus).expect("x > 0")
        };
        [(x + p - 1) % p, (x + 1) % p, inv]
    }

    /// Distinct neighbors other than `x` itself (2 or 3 vertices).
    pub fn distinct_neighbors(&self, x: u64) -> Vec<u64> {
        let mut out: Vec<u64> = self.neighbors(x).into_iter().filter(|&y| y != x).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Breadth-first distances from `src` to every vertex.
    pub fn bfs_distances(&self, src: u64) -> Vec<u32> {
        let p = self.p() as usize;
        let mut dist = vec![u32::MAX; p];
        dist[src as usize] = 0;
        let mut frontier = vec![src];
        let mut next = Vec::new();
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            for &x in &frontier {
                for y in self.neighbors(x) {
                    if dist[y as usize] == u32::MAX {
                        dist[y as usize] = d;
                        next.push(y);
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
            next.clear();
        }
        dist
    }

    /// Minimum-hop path from `a` to `b`, inclusive. Ties are broken by
    /// preferring the lexicographically smallest next vertex, so every node
    /// computes the identical path.
    pub fn shortest_path(&self, a: u64, b: u64) -> Vec<u64> {
        if a == b {
            return vec![a];
        }
        let dist = self.bfs_distances(b);
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            let next = self
                .distinct_neighbors(cur)
                .into_iter()
                .filter(|&y| dist[y as usize] == dist[cur as usize] - 1)
                .min()
                .expect("connected");
            path.push(next);
            cur = next;
        }
        path
    }

    pub fn distance(&self, a: u64, b: u64) -> u32 {
        self.bfs_distances(a)[b as usize]
    }

    /// Exact diameter via all-pairs BFS, computed once and cached (local
    /// computation is free in the synchronous model).
    pub fn diameter(&self) -> u32 {
        *self.diameter.get_or_init(|| {
            let p = self.p();
            let mut best = 0;
            for src in 0..p {
                let ecc = self.bfs_distances(src).into_iter().max().unwrap();
                best = best.max(ecc);
            }
            best
        })
    }

    /// Undirected edge list with self-loops listed once. Parallel edges are
    /// repeated: when `x+1 ≡ x⁻¹ (mod p)` the pair is joined by both a cycle
    /// edge and an inverse edge, and both count (the quotient degree law
    /// `deg = 3·load` depends on it).
    pub fn undirected_edges(&self) -> Vec<(u64, u64)> {
        let mut edges = Vec::new();
        for x in 0..self.p() {
            for y in self.neighbors(x) {
                if y > x {
                    edges.push((x, y));
                } else if y == x {
                    // self-loop appears exactly once in the multiset
                    edges.push((x, x));
                }
            }
        }
        edges.sort_unstable();
        edges
    }
}

/// Plan for replacing `Z(p_old)` by the larger `Z(p_new)`,
/// `p_new ∈ (4·p_old, 8·p_old)`. The exact rational `α = p_new/p_old` is kept
/// as the integer pair; all floors are evaluated as `⌊p_new·x / p_old⌋`.
#[derive(Debug, Clone, Copy)]
pub struct InflationPlan {
    p_old: PrimeModulus,
    p_new: PrimeModulus,
}

impl InflationPlan {
    pub fn new(p_old: PrimeModulus, p_new: PrimeModulus) -> Result<Self, PCycleError> {
        let (lo, hi) = (4 * p_old.get(), 8 * p_old.get());
        if p_new.get() <= lo || p_new.get() >= hi {
            return Err(PCycleError::BadPlan { old: p_old.get(), new: p_new.get(), lo, hi });
        }
        Ok(InflationPlan { p_old, p_new })
    }

    /// Plan toward the least prime in `(4p, 8p)`; all nodes compute the same
    /// target without communication.
    pub fn next_up(p_old: PrimeModulus) -> Result<Self, PCycleError> {
        let p_new = smallest_prime_in(4 * p_old.get(), 8 * p_old.get())?;
        InflationPlan::new(p_old, p_new)
    }

    pub fn p_old(&self) -> u64 {
        self.p_old.get()
    }

    pub fn p_new(&self) -> u64 {
        self.p_new.get()
    }

    pub fn new_modulus(&self) -> PrimeModulus {
        self.p_new
    }

    fn floor_alpha(&self, x: u64) -> u64 {
        self.p_new() * x / self.p_old()
    }

    /// Cloud size minus one: `c(x) = ⌊α(x+1)⌋ − ⌊αx⌋ − 1`.
    pub fn cloud_gap(&self, x: u64) -> u64 {
        self.floor_alpha(x + 1) - self.floor_alpha(x) - 1
    }

    /// The cloud `[y_0, …, y_{c(x)}]`, `y_k = (⌊αx⌋ + k) mod p_new`.
    pub fn cloud(&self, x: u64) -> Vec<u64> {
        debug_assert!(x < self.p_old());
        let start = self.floor_alpha(x);
        (0..=self.cloud_gap(x)).map(|k| (start + k) % self.p_new()).collect()
    }

    /// The unique old vertex whose cloud contains `y`: the largest `x` with
    /// `⌊αx⌋ ≤ y`.
    pub fn owner_of(&self, y: u64) -> u64 {
        debug_assert!(y < self.p_new());
        ((y + 1) * self.p_old() - 1) / self.p_new()
    }
}

/// Plan for replacing `Z(p_old)` by the smaller `Z(p_new)`,
/// `p_new ∈ (p_old/8, p_old/4)`; `x ↦ ⌊x·p_new/p_old⌋` surjects onto the new
/// vertex set with preimage classes (deflation clouds) of size at most 8.
#[derive(Debug, Clone, Copy)]
pub struct DeflationPlan {
    p_old: PrimeModulus,
    p_new: PrimeModulus,
}

impl DeflationPlan {
    pub fn new(p_old: PrimeModulus, p_new: PrimeModulus) -> Result<Self, PCycleError> {
        // open interval (p_old/8, p_old/4) in exact arithmetic:
        // 8·p_new > p_old and 4·p_new < p_old
        if 8 * p_new.get() <= p_old.get() || 4 * p_new.get() >= p_old.get() {
            return Err(PCycleError::BadPlan {
                old: p_old.get(),
                new: p_new.get(),
                lo: p_old.get() / 8,
                hi: p_old.get() / 4,
            });
        }
        Ok(DeflationPlan { p_old, p_new })
    }

    /// Plan toward the least prime in `(p/8, p/4)`.
    pub fn next_down(p_old: PrimeModulus) -> Result<Self, PCycleError> {
        let p = p_old.get();
        let mut candidate = p / 8 + 1;
        while 4 * candidate < p {
            if candidate >= 3 && is_prime(candidate) && 8 * candidate > p {
                return DeflationPlan::new(p_old, PrimeModulus(candidate));
            }
            candidate += 1;
        }
        Err(PCycleError::NoPrimeInRange(p / 8, p / 4))
    }

    pub fn p_old(&self) -> u64 {
        self.p_old.get()
    }

    pub fn p_new(&self) -> u64 {
        self.p_new.get()
    }

    pub fn new_modulus(&self) -> PrimeModulus {
        self.p_new
    }

    /// `y_x = ⌊x/α⌋ = ⌊x·p_new/p_old⌋`.
    pub fn image(&self, x: u64) -> u64 {
        debug_assert!(x < self.p_old());
        x * self.p_new() / self.p_old()
    }

    /// The dominator of new vertex `y`: the smallest old vertex mapping to
    /// `y`, i.e. `⌈y·p_old/p_new⌉`.
    pub fn dominator_of(&self, y: u64) -> u64 {
        debug_assert!(y < self.p_new());
        (y * self.p_old()).div_ceil(self.p_new())
    }

    /// Whether `x` is the smallest preimage of its image.
    pub fn is_dominator(&self, x: u64) -> bool {
        self.dominator_of(self.image(x)) == x
    }

    /// All dominators, one per new vertex, in increasing order.
    pub fn dominators(&self) -> Vec<u64> {
        (0..self.p_new()).map(|y| self.dominator_of(y)).collect()
    }

    /// The deflation cloud (full preimage class) of new vertex `y`.
    pub fn preimages(&self, y: u64) -> Vec<u64> {
        let lo = self.dominator_of(y);
        let hi = if y + 1 == self.p_new() {
            self.p_old()
        } else {
            self.dominator_of(y + 1)
        };
        (lo..hi).collect()
    }
}
