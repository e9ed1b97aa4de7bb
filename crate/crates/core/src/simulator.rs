//! State-vector simulation of the QAOA circuit.
//!
//! The cost Hamiltonian is diagonal with entries taken from a precomputed
//! [`Spectrum`], so a cost layer is one complex phase per amplitude. The
//! mixer `exp(-i beta sum_k X_k)` factorizes into `n` single-qubit rotations,
//! each applied as a butterfly pass pairing amplitudes `z` and `z ^ (1 << k)`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::encoding::AngleSchedule;
use crate::error::{Error, Result};
use crate::spectrum::{FeasibleSet, Spectrum};
use crate::stats::{pairwise_sum_by, pairwise_sum_indexed};
use crate::ENUMERATION_LIMIT;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Wraps raw amplitudes; the length must be `2^n` with `1 <= n <= limit`.
    /// The state is not renormalized.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidConfig(
                "amplitude count must be 2^n with n >= 1",
            ));
        }
        let n = len.trailing_zeros() as usize;
        if n > ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                n,
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok(Self { n, amplitudes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn probability(&self, z: usize) -> f64 {
        self.amplitudes[z].norm_sqr()
    }

    /// `sum_z |a_z|^2`, pairwise summed.
    pub fn norm_sqr(&self) -> f64 {
        pairwise_sum_by(&self.amplitudes, |a| a.norm_sqr())
    }

    fn check_spectrum(&self, spectrum: &Spectrum) -> Result<()> {
        if self.n != spectrum.n() {
            return Err(Error::SizeMismatch {
                state: self.n,
                spectrum: spectrum.n(),
            });
        }
        Ok(())
    }
}

/// Uniform superposition `|+>^n`.
pub fn prepare_plus(n: usize) -> Result<StateVector> {
    if n == 0 {
        return Err(Error::EmptyProblem);
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let amp = libm::pow(2.0, -(n as f64) / 2.0);
    Ok(StateVector {
        n,
        amplitudes: vec![Complex64::new(amp, 0.0); 1 << n],
    })
}

/// `a_z <- exp(-i gamma C(z)) a_z`.
pub fn apply_cost_phase(state: &mut StateVector, spectrum: &Spectrum, gamma: f64) -> Result<()> {
    state.check_spectrum(spectrum)?;
    if gamma == 0.0 {
        return Ok(());
    }
    for (a, &c) in state.amplitudes.iter_mut().zip(spectrum.costs()) {
        let (s, co) = libm::sincos(gamma * c);
        *a *= Complex64::new(co, -s);
    }
    Ok(())
}

/// `exp(-i beta X)` on every qubit.
pub fn apply_mixer(state: &mut StateVector, beta: f64) {
    if beta == 0.0 {
        return;
    }
    let (s, c) = libm::sincos(beta);
    let amps = &mut state.amplitudes;
    for k in 0..state.n {
        let stride = 1usize << k;
        for block in amps.chunks_exact_mut(stride << 1) {
            let (lo, hi) = block.split_at_mut(stride);
            for (a0, a1) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a0, *a1);
                // [[c, -is], [-is, c]]
                *a0 = Complex64::new(c * x.re + s * y.im, c * x.im - s * y.re);
                *a1 = Complex64::new(c * y.re + s * x.im, c * y.im - s * x.re);
            }
        }
    }
}

/// Runs the circuit; see [`run_qaoa_tracked`].
pub fn run_qaoa(spectrum: &Spectrum, schedule: &AngleSchedule) -> Result<StateVector> {
    run_qaoa_tracked(spectrum, schedule).map(|(state, _)| state)
}

/// `prepare_plus`, then cost phase `gamma_l` followed by mixer `beta_l` for
/// every layer. Also returns the largest `|norm^2 - 1|` seen after any layer.
pub fn run_qaoa_tracked(
    spectrum: &Spectrum,
    schedule: &AngleSchedule,
) -> Result<(StateVector, f64)> {
    let mut state = prepare_plus(spectrum.n())?;
    let mut drift: f64 = (state.norm_sqr() - 1.0).abs();
    for (gamma, beta) in schedule.layers() {
        apply_cost_phase(&mut state, spectrum, gamma)?;
        apply_mixer(&mut state, beta);
        drift = drift.max((state.norm_sqr() - 1.0).abs());
    }
    Ok((state, drift))
}

/// Probability mass on the feasible set. A feasible set covering every
/// bitstring returns exactly 1.
pub fn success_probability(state: &StateVector, fs: &FeasibleSet) -> f64 {
    if fs.len() == state.amplitudes.len() {
        return 1.0;
    }
    pairwise_sum_by(fs.members(), |&z| state.probability(z)).min(1.0)
}

/// `<psi| H_C |psi> = sum_z C(z) |a_z|^2`.
pub fn energy_expectation(state: &StateVector, spectrum: &Spectrum) -> Result<f64> {
    state.check_spectrum(spectrum)?;
    let costs = spectrum.costs();
    let amps = &state.amplitudes;
    Ok(pairwise_sum_indexed(costs.len(), |z| {
        costs[z] * amps[z].norm_sqr()
    }))
}

/// `(c_max - E) / (c_max - c_min)`, or 1 for a degenerate spectrum.
pub fn ar_expectation(state: &StateVector, spectrum: &Spectrum) -> Result<f64> {
    let energy = energy_expectation(state, spectrum)?;
    Ok(ar_from_energy(energy, spectrum))
}

pub(crate) fn ar_from_energy(energy: f64, spectrum: &Spectrum) -> f64 {
    if spectrum.is_degenerate() {
        return 1.0;
    }
    (spectrum.c_max() - energy) / (spectrum.c_max() - spectrum.c_min())
}
