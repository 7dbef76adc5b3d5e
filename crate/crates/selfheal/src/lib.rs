//! Deterministic simulator and analysis toolkit for a self-healing
//! constant-degree expander overlay.
//!
//! The overlay maintains a virtual 3-regular expander (a *p-cycle*: the cycle
//! on `Z_p` plus modular-inverse chords and a self-loop at 0) mapped onto the
//! live nodes of a churning network. An adaptive adversary inserts and deletes
//! one node (or a bounded batch) per step; the protocol repairs the mapping
//! with `O(log n)` random walks (type-1 recovery) and, when spare capacity
//! runs out, replaces the whole virtual cycle by a larger or smaller one
//! (type-2 recovery), either in one shot or staggered over many steps.
//!
//! The crate is organized around the simulation pipeline:
//!
//! * [`pcycle`] — the virtual expander family and the integer arithmetic for
//!   inflating/deflating between consecutive family members.
//! * [`mapping`] — the surjective vertex-to-node assignment, load statistics,
//!   and the quotient multigraph used for spectral verification.
//! * [`simnet`] — synchronous rounds, per-link capacity, deterministic
//!   counter-based randomness, and metric accounting.
//! * [`protocol`] — node logic: walk-based recovery, simplified and staggered
//!   rebuilds, and the coordinator bookkeeping.
//! * [`adversary`] — pluggable fully-adaptive churn strategies.
//! * [`spectral`] — dense and power-iteration eigensolvers, brute-force edge
//!   expansion, Cheeger and mixing-lemma checks.
//! * [`dht`] — a distributed hash table layered on the overlay.
//! * [`cli`] — experiment driver: config, run orchestration, CSV/JSON output.
//!
//! Runs are bit-deterministic: identical `(seed, config, adversary script)`
//! produce byte-identical metric output. See the `examples/` directory for
//! runnable entry points per capability, and the thin `selfheal` binary for
//! the `run`, `spectra`, `dht-demo` and `audit` subcommands.

pub mod adversary;
pub mod cli;
pub mod dht;
pub mod mapping;
pub mod pcycle;
pub mod protocol;
pub mod simnet;
pub mod spectral;


pub use pcycle::{PCycle, PrimeModulus};


