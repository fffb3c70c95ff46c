//! Probe configuration: finite quantification domains for laws stated over
//! possibly infinite carriers, plus seeded tuple sampling.
//!
//! Each universally quantified law is checked over the *probe set* of the
//! carriers involved. Finite carriers are probed exhaustively. Infinite
//! carriers use declared bounds: integers in `[-int_bound, int_bound]` and
//! freely reduced words of length at most `word_len`. When the cartesian
//! product of probes for a multi-variable law exceeds `max_tuples`, a seeded
//! uniform sample of that size is drawn instead, so every run is
//! reproducible from the seed recorded in its report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::word::{Letter, Word};

/// Default RNG seed used when a caller does not supply one.
pub const DEFAULT_SEED: u64 = 20240817;

/// Finite quantification bounds and sampling policy.
#[derive(Clone, Debug)]
pub struct ProbeConfig {
    /// Integer carriers are probed on `[-int_bound, int_bound]`.
    pub int_bound: i64,
    /// Free carriers are probed on words of length ≤ `word_len`.
    pub word_len: usize,
    /// Cap on generated tuples per law before switching to seeded sampling.
    pub max_tuples: usize,
    /// RNG seed for sampling; echoed into reports.
    pub seed: u64,
}

impl Default for ProbeConfig {
    fn default() -> ProbeConfig {
        ProbeConfig { int_bound: 8, word_len: 4, max_tuples: 20_000, seed: DEFAULT_SEED }
    }
}

impl ProbeConfig {
    /// A copy with a different word-length bound.
    pub fn with_word_len(&self, word_len: usize) -> ProbeConfig {
        ProbeConfig { word_len, ..self.clone() }
    }

    /// A copy with a different tuple cap.
    pub fn with_max_tuples(&self, max_tuples: usize) -> ProbeConfig {
        ProbeConfig { max_tuples, ..self.clone() }
    }

    /// A copy with a different seed.
    pub fn with_seed(&self, seed: u64) -> ProbeConfig {
        ProbeConfig { seed, ..self.clone() }
    }

    /// Human-readable description of the quantification domain, for reports.
    pub fn describe(&self) -> String {
        format!(
            "ints in [-{b},{b}], words of length <= {w}, tuple cap {m}, seed {s}",
            b = self.int_bound,
            w = self.word_len,
            m = self.max_tuples,
            s = self.seed
        )
    }

    /// All pairs from `probe`, or a seeded sample of `max_tuples` pairs when
    /// the full square would exceed the cap.
    pub fn pairs<T: Clone>(&self, probe: &[T]) -> Vec<(T, T)> {
        let n = probe.len();
        if n == 0 {
            return Vec::new();
        }
        if n.saturating_mul(n) <= self.max_tuples {
            let mut out = Vec::with_capacity(n * n);
            for x in probe {
                for y in probe {
                    out.push((x.clone(), y.clone()));
                }
            }
            out
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
            (0..self.max_tuples)
                .map(|_| (probe[rng.gen_range(0..n)].clone(), probe[rng.gen_range(0..n)].clone()))
                .collect()
        }
    }

    /// All triples from `probe`, or a seeded sample of `max_tuples` triples.
    pub fn triples<T: Clone>(&self, probe: &[T]) -> Vec<(T, T, T)> {
        let n = probe.len();
        if n == 0 {
            return Vec::new();
        }
        if n.saturating_mul(n).saturating_mul(n) <= self.max_tuples {
            let mut out = Vec::with_capacity(n * n * n);
            for x in probe {
                for y in probe {
                    for z in probe {
                        out.push((x.clone(), y.clone(), z.clone()));
                    }
                }
            }
            out
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(1));
            (0..self.max_tuples)
                .map(|_| {
                    (
                        probe[rng.gen_range(0..n)].clone(),
                        probe[rng.gen_range(0..n)].clone(),
                        probe[rng.gen_range(0..n)].clone(),
                    )
                })
                .collect()
        }
    }

    /// All mixed pairs from two probes, or a seeded sample.
    pub fn pairs2<A: Clone, B: Clone>(&self, left: &[A], right: &[B]) -> Vec<(A, B)> {
        let (n, m) = (left.len(), right.len());
        if n == 0 || m == 0 {
            return Vec::new();
        }
        if n.saturating_mul(m) <= self.max_tuples {
            let mut out = Vec::with_capacity(n * m);
            for x in left {
                for y in right {
                    out.push((x.clone(), y.clone()));
                }
            }
            out
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(2));
            (0..self.max_tuples)
                .map(|_| (left[rng.gen_range(0..n)].clone(), right[rng.gen_range(0..m)].clone()))
                .collect()
        }
    }

    /// All mixed triples from three probes, or a seeded sample.
    pub fn triples3<A: Clone, B: Clone, C: Clone>(
        &self,
        a: &[A],
        b: &[B],
        c: &[C],
    ) -> Vec<(A, B, C)> {
        let (n, m, k) = (a.len(), b.len(), c.len());
        if n == 0 || m == 0 || k == 0 {
            return Vec::new();
        }
        if n.saturating_mul(m).saturating_mul(k) <= self.max_tuples {
            let mut out = Vec::with_capacity(n * m * k);
            for x in a {
                for y in b {
                    for z in c {
                        out.push((x.clone(), y.clone(), z.clone()));
                    }
                }
            }
            out
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(3));
            (0..self.max_tuples)
                .map(|_| {
                    (
                        a[rng.gen_range(0..n)].clone(),
                        b[rng.gen_range(0..m)].clone(),
                        c[rng.gen_range(0..k)].clone(),
                    )
                })
                .collect()
        }
    }

    /// `count` seeded random freely reduced words of length ≤ `max_len` over
    /// `n_syms` symbols.
    pub fn random_words(&self, n_syms: usize, max_len: usize, count: usize) -> Vec<Word> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(4));
        (0..count)
            .map(|_| {
                let len = rng.gen_range(0..=max_len);
                Word::from_letters((0..len).map(|_| Letter {
                    sym: rng.gen_range(0..n_syms as u32),
                    exp: if rng.gen_bool(0.5) { 1 } else { -1 },
                }))
            })
            .collect()
    }
}
