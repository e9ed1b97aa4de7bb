//! QUBO problems in Ising form and the random ensembles used for training and
//! testing.
//!
//! The cost of a spin assignment `z` in `{+1, -1}^n` is
//! `C(z) = sum_{i<j} s_ij z_i z_j + sum_i s_ii z_i`. Only the upper triangle
//! (diagonal included) of the coefficient matrix is stored.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::normalization::NormKind;
use crate::rng::{child_seed, Stream};

/// Which generator produced an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnsembleKind {
    /// Every `s_ij`, `i <= j`, drawn from N(0, 1).
    Normal,
    /// Normal plus biased uniform, then sparsified to about half the entries.
    Mixed,
    /// Hand-built or loaded from a file.
    Custom,
}

impl EnsembleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EnsembleKind::Normal => "normal",
            EnsembleKind::Mixed => "mixed",
            EnsembleKind::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "normal" => Some(EnsembleKind::Normal),
            "mixed" => Some(EnsembleKind::Mixed),
            "custom" => Some(EnsembleKind::Custom),
            _ => None,
        }
    }
}

/// Upper-triangular Ising coefficient matrix plus provenance.
///
/// Indices in this API are 0-based. Coefficients are packed row by row:
/// `(0,0), (0,1), .., (0,n-1), (1,1), .., (n-1,n-1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuboInstance {
    n: usize,
    coeffs: Vec<f64>,
    pub ensemble: EnsembleKind,
    pub seed: u64,
    pub norm_applied: NormKind,
}

#[inline]
fn packed_index(n: usize, i: usize, j: usize) -> usize {
    // row i starts after sum_{r<i} (n - r) slots
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

impl QuboInstance {
    /// All-zero instance of size `n`, tagged [`EnsembleKind::Custom`].
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyProblem);
        }
        Ok(Self {
            n,
            coeffs: vec![0.0; n * (n + 1) / 2],
            ensemble: EnsembleKind::Custom,
            seed: 0,
            norm_applied: NormKind::None,
        })
    }

    /// Builds a custom instance from `(i, j, s_ij)` triples with `i <= j < n`.
    /// Repeated pairs overwrite earlier ones.
    pub fn from_entries<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut inst = Self::zeros(n)?;
        for (i, j, v) in entries {
            inst.set(i, j, v)?;
        }
        Ok(inst)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored slots, `n (n + 1) / 2`.
    pub fn slot_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Packed coefficients, row-major upper triangle.
    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    fn index(&self, i: usize, j: usize) -> Result<usize> {
        if i > j || j >= self.n {
            return Err(Error::InvalidIndex { i, j, n: self.n });
        }
        Ok(packed_index(self.n, i, j))
    }

    pub fn get(&self, i: usize, j: usize) -> Result<f64> {
        self.index(i, j).map(|k| self.coeffs[k])
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) -> Result<()> {
        let k = self.index(i, j)?;
        self.coeffs[k] = value;
        Ok(())
    }

    /// All stored pairs `(i, j, s_ij)` with a nonzero coefficient, in packed order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (i..n).map(move |j| (i, j)))
            .zip(self.coeffs.iter().copied())
            .filter(|&(_, v)| v != 0.0)
            .map(|((i, j), v)| (i, j, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&v| v == 0.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Copy with every coefficient multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|v| *v *= factor);
        out
    }

    /// Copy with every coefficient divided by `divisor`.
    pub(crate) fn divided(&self, divisor: f64) -> Self {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|v| *v /= divisor);
        out
    }

    /// `C(z)` for an explicit spin vector.
    pub fn cost_evaluate(&self, z: &[i8]) -> Result<f64> {
        if z.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: z.len(),
            });
        }
        let mut bits = 0u64;
        for (k, &zk) in z.iter().enumerate() {
            match zk {
                1 => {}
                -1 => bits |= 1 << k,
                other => return Err(Error::InvalidSpin(other)),
            }
        }
        Ok(self.cost_of_index(bits))
    }

    /// `C(z)` for the spin assignment encoded by bitstring index `bits`
    /// (bit `k` set means `z_k = -1`).
    ///
    /// Row `i` of the pair terms is summed as `z_i * sum_j s_ij z_j`; rows and
    /// linear terms are accumulated separately in packed order and added at
    /// the end. [`cost_evaluate`](Self::cost_evaluate) and
    /// the spectrum enumeration both go through here, so they agree bitwise.
    #[inline]
    pub fn cost_of_index(&self, bits: u64) -> f64 {
        let n = self.n;
        let mut pair = 0.0;
        let mut linear = 0.0;
        let mut k = 0;
        for i in 0..n {
            let zi = spin_sign(bits >> i);
            linear += zi * self.coeffs[k];
            k += 1;
            let row = &self.coeffs[k..k + (n - i - 1)];
            k += row.len();
            let mut acc = 0.0;
            for (d, &s) in row.iter().enumerate() {
                acc += spin_sign(bits >> (i + 1 + d)) * s;
            }
            pair += zi * acc;
        }
        pair + linear
    }
}

/// `+1.0` when the low bit is clear, `-1.0` when set.
#[inline(always)]
fn spin_sign(bits: u64) -> f64 {
    1.0 - 2.0 * (bits & 1) as f64
}

/// Spin vector for bitstring index `bits` under the crate-wide convention.
pub fn spins_of_index(bits: u64, n: usize) -> Vec<i8> {
    (0..n)
        .map(|k| if (bits >> k) & 1 == 0 { 1 } else { -1 })
        .collect()
}

/// Instance with `s_ij ~ N(0, 1)` for every `i <= j`, drawn in packed order.
pub fn generate_normal(n: usize, seed: u64) -> Result<QuboInstance> {
    let mut inst = QuboInstance::zeros(n)?;
    let mut stream = Stream::new(seed);
    inst.coeffs
        .iter_mut()
        .for_each(|v| *v = stream.standard_normal());
    inst.ensemble = EnsembleKind::Normal;
    inst.seed = seed;
    Ok(inst)
}

/// Mixed-distribution instance.
///
/// Draw order from the seeded stream: the full `n x n` matrix `N ~ N(0, 1)`
/// row-major; the bias `b ~ U[-1/2, 1/2)`; the full matrix
/// `A ~ U[b - 1/2, b + 1/2)` row-major; then one keep/zero coin per entry of
/// `N + A`, row-major, zeroing with probability 1/2. The upper triangle,
/// diagonal included, becomes the instance.
pub fn generate_mixed(n: usize, seed: u64) -> Result<QuboInstance> {
    let mut inst = QuboInstance::zeros(n)?;
    let mut stream = Stream::new(seed);
    let nn = n * n;
    let normal: Vec<f64> = (0..nn).map(|_| stream.standard_normal()).collect();
    let bias = stream.uniform_in(-0.5, 0.5);
    let uniform: Vec<f64> = (0..nn)
        .map(|_| stream.uniform_in(bias - 0.5, bias + 0.5))
        .collect();
    let keep: Vec<bool> = (0..nn).map(|_| !stream.bernoulli(0.5)).collect();

    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            let idx = i * n + j;
            inst.coeffs[k] = if keep[idx] {
                normal[idx] + uniform[idx]
            } else {
                0.0
            };
            k += 1;
        }
    }
    inst.ensemble = EnsembleKind::Mixed;
    inst.seed = seed;
    Ok(inst)
}

/// A reproducible family of random instances of one size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub n: usize,
    pub count: usize,
    pub base_seed: u64,
    pub normalization: NormKind,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptyProblem);
        }
        if self.count == 0 {
            return Err(Error::InvalidConfig("ensemble count must be at least 1"));
        }
        if self.kind == EnsembleKind::Custom {
            return Err(Error::InvalidConfig("custom instances have no generator"));
        }
        Ok(())
    }

    /// Seed of instance `k`: `child_seed(base_seed, k)`.
    pub fn instance_seed(&self, k: usize) -> u64 {
        child_seed(self.base_seed, k as u64)
    }

    /// Raw (unnormalized) instance `k`.
    pub fn instance(&self, k: usize) -> Result<QuboInstance> {
        let seed = self.instance_seed(k);
        match self.kind {
            EnsembleKind::Normal => generate_normal(self.n, seed),
            EnsembleKind::Mixed => generate_mixed(self.n, seed),
            EnsembleKind::Custom => Err(Error::InvalidConfig("custom instances have no generator")),
        }
    }

    pub fn instances(&self) -> Result<Vec<QuboInstance>> {
        self.validate()?;
        (0..self.count).map(|k| self.instance(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_spin() -> QuboInstance {
        QuboInstance::from_entries(2, [(0, 0, 1.0), (1, 1, -1.0), (0, 1, 2.0)]).unwrap()
    }

    #[test]
    fn packed_layout() {
        let n = 4;
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                assert_eq!(packed_index(n, i, j), k);
                k += 1;
            }
        }
    }

    #[test]
    fn zero_matrix_costs_nothing() {
        let inst = QuboInstance::zeros(3).unwrap();
        assert_eq!(inst.cost_evaluate(&[1, -1, 1]).unwrap(), 0.0);
    }

    #[test]
    fn two_spin_hand_values() {
        let inst = two_spin();
        assert_eq!(inst.cost_evaluate(&[1, 1]).unwrap(), 2.0);
        assert_eq!(inst.cost_evaluate(&[1, -1]).unwrap(), 0.0);
    }

    #[test]
    fn cost_rejects_bad_spins() {
        let inst = two_spin();
        assert_eq!(
            inst.cost_evaluate(&[1]),
            Err(Error::DimensionMismatch {
                expected: 2,
                actual: 1
            })
        );
        assert_eq!(inst.cost_evaluate(&[1, 0]), Err(Error::InvalidSpin(0)));
    }

    #[test]
    fn lower_triangle_rejected() {
        let mut inst = QuboInstance::zeros(3).unwrap();
        assert!(inst.set(2, 1, 1.0).is_err());
        assert!(inst.set(0, 3, 1.0).is_err());
        assert_eq!(QuboInstance::zeros(0), Err(Error::EmptyProblem));
    }

    #[test]
    fn normal_is_deterministic_and_dense() {
        let a = generate_normal(6, 42).unwrap();
        let b = generate_normal(6, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.slot_count(), 21);
        assert_eq!(a.entries().count(), 21);
        assert_ne!(a, generate_normal(6, 43).unwrap());
    }

    #[test]
    fn mixed_is_deterministic() {
        assert_eq!(generate_mixed(6, 9).unwrap(), generate_mixed(6, 9).unwrap());
        assert_eq!(generate_mixed(6, 9).unwrap().ensemble, EnsembleKind::Mixed);
    }

    #[test]
    fn ensemble_instances_use_child_seeds() {
        let spec = EnsembleSpec {
            kind: EnsembleKind::Normal,
            n: 4,
            count: 3,
            base_seed: 5,
            normalization: NormKind::None,
        };
        let all = spec.instances().unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(all[2].seed, child_seed(5, 2));
        assert_eq!(all[1], spec.instance(1).unwrap());
    }
}
