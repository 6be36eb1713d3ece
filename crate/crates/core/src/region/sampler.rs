//! Seeded hit-or-miss estimation of `v_d^(s)`.
//!
//! Samples are dyadic rationals with 53 random bits per coordinate, drawn uniformly from
//! the box `|a_k| < C(d, k)` that contains every contractive coefficient vector. Each
//! sample is classified exactly.
//!
//! Reproducibility contract: the sample stream is cut into chunks of `chunk_size`; chunk
//! `i` draws from ChaCha8 (`rand_chacha`) seeded with `seed_from_u64(seed)` on stream `i`.
//! Counts are merged in chunk order, so the result does not depend on the thread count.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::classify::RootClassification;
use super::integer::classify_integer;
use super::poly::MonicPolynomial;
use crate::error::{Error, Result};
use crate::exact::combinatorics::choose;
use crate::exact::rational::{from_big, to_f64, ExactRational};
use crate::exact::{fam_volume, ratio_closed_form, v0_exact};

pub const RNG_ALGORITHM: &str = "ChaCha8Rng(seed_from_u64(seed)), stream = chunk index";
pub const DEFAULT_SEED: u64 = 0x5eed_2011;
pub const DEFAULT_CHUNK_SIZE: u64 = 4096;
const RANDOM_BITS: u32 = 53;

/// Per-coordinate envelope `|a_k| < C(d, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientBox {
    pub half_widths: Vec<BigInt>,
}

impl CoefficientBox {
    pub fn volume(&self) -> ExactRational {
        from_big(self.half_widths.iter().fold(BigInt::one(), |acc, h| acc * h * 2))
    }

    pub fn half_widths_exact(&self) -> Vec<ExactRational> {
        self.half_widths.iter().cloned().map(from_big).collect()
    }

    /// Draws one dyadic point strictly inside the box, as the descending integer
    /// coefficients of `2^53 * p`.
    pub fn sample_scaled<R: RngCore>(&self, rng: &mut R) -> Vec<BigInt> {
        let scale = BigInt::one() << RANDOM_BITS;
        let coeffs = self.half_widths.iter().map(|h| {
            let m = rng.next_u64() >> (64 - RANDOM_BITS);
            // midpoint of the m-th cell of [-1, 1): (2m + 1 - 2^53) / 2^53
            (BigInt::from(2 * m + 1) - &scale) * h
        });
        std::iter::once(scale.clone()).chain(coeffs).collect()
    }

    /// Same draw as [`sample_scaled`](Self::sample_scaled), as a monic rational polynomial.
    pub fn sample<R: RngCore>(&self, rng: &mut R) -> MonicPolynomial {
        let c = self.sample_scaled(rng);
        let coeffs = c[1..].iter().map(|n| ExactRational::new(n.clone(), c[0].clone())).collect();
        MonicPolynomial::new(coeffs).expect("d >= 1")
    }
}

pub fn coefficient_box(d: usize) -> Result<CoefficientBox> {
    if d < 1 {
        return Err(Error::domain("coefficient_box", "degree must be at least 1"));
    }
    let half_widths = (1..=d as u64).map(|k| choose(d as u64, k)).collect();
    Ok(CoefficientBox { half_widths })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub d: usize,
    pub samples: u64,
    pub seed: u64,
    pub chunk_size: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl SamplerConfig {
    pub fn new(d: usize, samples: u64) -> Self {
        SamplerConfig { d, samples, seed: DEFAULT_SEED, chunk_size: DEFAULT_CHUNK_SIZE, threads: None }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Tally {
    hits: Vec<u64>,
    degenerate: u64,
    misses: u64,
}

impl Tally {
    fn merge(mut self, other: &Tally) -> Tally {
        for (a, b) in self.hits.iter_mut().zip(&other.hits) {
            *a += b;
        }
        self.degenerate += other.degenerate;
        self.misses += other.misses;
        self
    }
}

fn serialize_rational<S: Serializer>(q: &ExactRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// Outcome of [`estimate_volumes`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VolumeEstimate {
    pub d: usize,
    pub total_samples: u64,
    pub seed: u64,
    pub chunk_size: u64,
    pub rng: &'static str,
    /// `hits[s]` counts samples with exactly `s` complex pairs.
    pub hits: Vec<u64>,
    pub degenerate: u64,
    pub misses: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub box_volume: ExactRational,
    pub estimates: Vec<f64>,
    pub std_errors: Vec<f64>,
}

impl VolumeEstimate {
    /// `box_volume * hits[s] / total_samples` as an exact rational.
    pub fn estimate_exact(&self, s: usize) -> ExactRational {
        &self.box_volume * ExactRational::new(self.hits[s].into(), self.total_samples.into())
    }

    pub fn total_estimate(&self) -> f64 {
        self.estimates.iter().sum()
    }
}

fn run_chunk(cbox: &CoefficientBox, seed: u64, index: u64, count: u64, pairs: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut tally = Tally { hits: vec![0; pairs + 1], ..Tally::default() };
    for _ in 0..count {
        match classify_integer(&cbox.sample_scaled(&mut rng)) {
            RootClassification::Unstable => tally.misses += 1,
            RootClassification::Degenerate(_) => tally.degenerate += 1,
            RootClassification::Classified { s, .. } => tally.hits[s] += 1,
        }
    }
    tally
}

/// Estimates `v_d^(s)` for every `0 <= s <= d/2`.
pub fn estimate_volumes(config: &SamplerConfig) -> Result<VolumeEstimate> {
    let SamplerConfig { d, samples, seed, chunk_size, threads } = *config;
    if samples < 1 {
        return Err(Error::domain("estimate_volumes", "need at least one sample"));
    }
    if chunk_size < 1 {
        return Err(Error::domain("estimate_volumes", "chunk size must be positive"));
    }
    let cbox = coefficient_box(d)?;
    let pairs = d / 2;
    let n_chunks = samples.div_ceil(chunk_size);
    let chunk_len = |i: u64| chunk_size.min(samples - i * chunk_size);
    let work = || -> Vec<Tally> {
        (0..n_chunks).into_par_iter().map(|i| run_chunk(&cbox, seed, i, chunk_len(i), pairs)).collect()
    };
    let tallies = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::domain("estimate_volumes", format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };
    let total = tallies.iter().fold(Tally { hits: vec![0; pairs + 1], ..Tally::default() }, |acc, t| acc.merge(t));

    let box_volume = cbox.volume();
    let box_f = to_f64(&box_volume);
    let n = samples as f64;
    let estimates = total.hits.iter().map(|&h| box_f * h as f64 / n).collect();
    let std_errors = total
        .hits
        .iter()
        .map(|&h| {
            let p = h as f64 / n;
            box_f * (p * (1.0 - p) / n).sqrt()
        })
        .collect();
    Ok(VolumeEstimate {
        d,
        total_samples: samples,
        seed,
        chunk_size,
        rng: RNG_ALGORITHM,
        hits: total.hits,
        degenerate: total.degenerate,
        misses: total.misses,
        box_volume,
        estimates,
        std_errors,
    })
}

/// Exact `v_d^(s)` where the exact pipelines determine it: `s = 0`, `s = 1`, and the
/// remaining pair count by complement when `d / 2 = 2`.
pub fn exact_reference(d: usize, s: usize) -> Option<ExactRational> {
    let d32 = d.to_u32()?;
    let v0 = v0_exact(d32);
    let v1 = || -> Option<ExactRational> {
        if d < 2 {
            Some(ExactRational::zero())
        } else {
            Some(&v0 * from_big(ratio_closed_form(d32).ok()?))
        }
    };
    match s {
        0 => Some(v0.clone()),
        1 if d >= 2 => v1(),
        2 if d / 2 == 2 => Some(fam_volume(d32).ok()? - &v0 - v1()?),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    #[test]
    fn boxes() {
        let b2 = coefficient_box(2).unwrap();
        assert_eq!(b2.half_widths, vec![BigInt::from(2), BigInt::from(1)]);
        assert_eq!(b2.volume(), int(8));
        let b3 = coefficient_box(3).unwrap();
        assert_eq!(b3.half_widths, [3, 3, 1].map(BigInt::from).to_vec());
        assert_eq!(b3.volume(), int(72));
        assert!(coefficient_box(0).is_err());
    }

    #[test]
    fn references() {
        assert_eq!(exact_reference(2, 0), Some(frac(4, 3)));
        assert_eq!(exact_reference(2, 1), Some(frac(8, 3)));
        assert_eq!(exact_reference(4, 2), Some(frac(2048, 525)));
        assert_eq!(exact_reference(6, 2), None);
        assert_eq!(exact_reference(1, 1), None);
    }

    #[test]
    fn counting_identity_and_determinism() {
        let mut cfg = SamplerConfig::new(3, 5000);
        cfg.chunk_size = 300;
        cfg.threads = Some(1);
        let a = estimate_volumes(&cfg).unwrap();
        cfg.threads = Some(4);
        let b = estimate_volumes(&cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.hits.iter().sum::<u64>() + a.degenerate + a.misses, 5000);
        let mass: ExactRational = (0..a.hits.len()).map(|s| a.estimate_exact(s)).sum::<ExactRational>()
            + &a.box_volume * frac(a.degenerate as i64 + a.misses as i64, 5000);
        assert_eq!(mass, a.box_volume);
    }

    #[test]
    fn seed_changes_stream() {
        let mut cfg = SamplerConfig::new(2, 2000);
        let a = estimate_volumes(&cfg).unwrap();
        cfg.seed += 1;
        let b = estimate_volumes(&cfg).unwrap();
        assert_ne!(a.hits, b.hits);
    }

    #[test]
    fn rejects_empty_runs() {
        assert!(estimate_volumes(&SamplerConfig::new(2, 0)).is_err());
    }
}
