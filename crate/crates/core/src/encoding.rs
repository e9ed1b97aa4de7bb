//! Fourier encoding of QAOA angle schedules.
//!
//! For `q` coefficient pairs and depth `p`,
//!
//! ```text
//! gamma_i = sum_k u_k sin((k - 1/2)(i - 1/2) pi / p)
//! beta_i  = sum_k v_k cos((k - 1/2)(i - 1/2) pi / p)      i = 1..p
//! ```
//!
//! `q = 1` with `p = n` is the two-parameter sine-cosine schedule.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct FourierParams {
    u: Vec<f64>,
    v: Vec<f64>,
}

impl FourierParams {
    pub fn new(u: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        if u.is_empty() || u.len() != v.len() {
            return Err(Error::InvalidConfig(
                "u and v must have the same nonzero length",
            ));
        }
        Ok(Self { u, v })
    }

    /// The `q = 1` pair `(u, v)`.
    pub fn sincos(u: f64, v: f64) -> Self {
        Self {
            u: vec![u],
            v: vec![v],
        }
    }

    pub fn zeros(q: usize) -> Self {
        let q = q.max(1);
        Self {
            u: vec![0.0; q],
            v: vec![0.0; q],
        }
    }

    /// Fixed parameters trained for the Normal ensemble (p = n, Frobenius,
    /// alpha = 0.95).
    pub fn normal_ensemble() -> Self {
        Self::sincos(2.09, -0.477)
    }

    /// Fixed parameters trained for the Mixed ensemble.
    pub fn mixed_ensemble() -> Self {
        Self::sincos(1.889, -0.635)
    }

    pub fn q(&self) -> usize {
        self.u.len()
    }

    pub fn u(&self) -> &[f64] {
        &self.u
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }

    /// Flat vector `[u_1..u_q, v_1..v_q]`.
    pub fn to_flat(&self) -> Vec<f64> {
        self.u.iter().chain(&self.v).copied().collect()
    }

    /// Inverse of [`to_flat`](Self::to_flat). Panics on odd or empty input.
    pub fn from_flat(flat: &[f64]) -> Self {
        assert!(!flat.is_empty() && flat.len().is_multiple_of(2));
        let (u, v) = flat.split_at(flat.len() / 2);
        Self {
            u: u.to_vec(),
            v: v.to_vec(),
        }
    }

    pub fn scaled(&self, a: f64) -> Self {
        Self {
            u: self.u.iter().map(|x| a * x).collect(),
            v: self.v.iter().map(|x| a * x).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AngleSchedule {
    gamma: Vec<f64>,
    beta: Vec<f64>,
}

impl AngleSchedule {
    pub fn new(gamma: Vec<f64>, beta: Vec<f64>) -> Result<Self> {
        if gamma.is_empty() || gamma.len() != beta.len() {
            return Err(Error::InvalidConfig(
                "gamma and beta must have the same nonzero length",
            ));
        }
        Ok(Self { gamma, beta })
    }

    pub fn zeros(p: usize) -> Self {
        let p = p.max(1);
        Self {
            gamma: vec![0.0; p],
            beta: vec![0.0; p],
        }
    }

    pub fn p(&self) -> usize {
        self.gamma.len()
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    /// `(gamma_l, beta_l)` for each layer in application order.
    pub fn layers(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.gamma.iter().copied().zip(self.beta.iter().copied())
    }
}

/// How circuit depth is chosen for a problem of size `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DepthRule {
    /// `p = n`.
    #[default]
    EqualN,
    Fixed(usize),
}

impl DepthRule {
    pub fn depth(self, n: usize) -> usize {
        match self {
            DepthRule::EqualN => n,
            DepthRule::Fixed(p) => p,
        }
    }
}

/// Where a benchmark takes its angles from.
#[derive(Debug, Clone, PartialEq)]
pub enum AngleSource {
    /// Decoded per problem size with the depth rule.
    Fourier(FourierParams),
    /// One explicit schedule used for every size; the depth rule is ignored.
    Explicit(AngleSchedule),
}

impl AngleSource {
    pub fn schedule(&self, n: usize, depth: DepthRule) -> AngleSchedule {
        match self {
            AngleSource::Fourier(params) => decode(params, depth.depth(n)),
            AngleSource::Explicit(schedule) => schedule.clone(),
        }
    }
}

/// Angle schedule of depth `p` for the given coefficients. `p = 0` is treated
/// as `p = 1`.
pub fn decode(params: &FourierParams, p: usize) -> AngleSchedule {
    let p = p.max(1);
    let pf = p as f64;
    let mut gamma = Vec::with_capacity(p);
    let mut beta = Vec::with_capacity(p);
    for i in 1..=p {
        let layer = i as f64 - 0.5;
        let (mut g, mut b) = (0.0, 0.0);
        for (k, (&uk, &vk)) in params.u.iter().zip(&params.v).enumerate() {
            let arg = (k as f64 + 0.5) * layer * PI / pf;
            let (s, c) = libm::sincos(arg);
            g += uk * s;
            b += vk * c;
        }
        gamma.push(g);
        beta.push(b);
    }
    AngleSchedule { gamma, beta }
}

/// Two-parameter schedule with `p = n`:
/// `gamma_i = u sin((i - 1/2) pi / 2n)`, `beta_i = v cos((i - 1/2) pi / 2n)`.
pub fn decode_sincos(u: f64, v: f64, n: usize) -> AngleSchedule {
    decode(&FourierParams::sincos(u, v), n)
}
