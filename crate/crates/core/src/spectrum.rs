//! Exhaustive cost tables and approximation-ratio feasible sets.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::qubo::QuboInstance;
use crate::ENUMERATION_LIMIT;

/// Cost of every bitstring of an instance, with exact extrema.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    n: usize,
    costs: Vec<f64>,
    c_min: f64,
    c_max: f64,
    argmin: Vec<usize>,
}

impl Spectrum {
    /// Builds a spectrum from a precomputed cost table of length `2^n`.
    pub fn from_costs(costs: Vec<f64>) -> Result<Self> {
        let len = costs.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidConfig(
                "cost table length must be 2^n with n >= 1",
            ));
        }
        let n = len.trailing_zeros() as usize;
        if n > ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                n,
                limit: ENUMERATION_LIMIT,
            });
        }
        let mut c_min = f64::INFINITY;
        let mut c_max = f64::NEG_INFINITY;
        for &c in &costs {
            if c < c_min {
                c_min = c;
            }
            if c > c_max {
                c_max = c;
            }
        }
        let argmin = costs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == c_min)
            .map(|(z, _)| z)
            .collect();
        Ok(Self {
            n,
            costs,
            c_min,
            c_max,
            argmin,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn costs(&self) -> &[f64] {
        &self.costs
    }

    pub fn c_min(&self) -> f64 {
        self.c_min
    }

    pub fn c_max(&self) -> f64 {
        self.c_max
    }

    /// Bitstrings achieving `c_min`, ascending.
    pub fn argmin(&self) -> &[usize] {
        &self.argmin
    }

    /// `c_max == c_min`: every bitstring is optimal.
    pub fn is_degenerate(&self) -> bool {
        self.c_max == self.c_min
    }

    /// Slack on the feasibility threshold, `1e-9 (|c_min| + |c_max| + 1)`.
    pub fn feasibility_tolerance(&self) -> f64 {
        1e-9 * (self.c_min.abs() + self.c_max.abs() + 1.0)
    }

    /// `c_min + (1 - alpha) (c_max - c_min)`.
    pub fn threshold(&self, alpha: f64) -> f64 {
        self.c_min + (1.0 - alpha) * (self.c_max - self.c_min)
    }
}

/// Evaluates `C` on all `2^n` bitstrings.
pub fn compute_spectrum(instance: &QuboInstance) -> Result<Spectrum> {
    compute_spectrum_with_limit(instance, ENUMERATION_LIMIT)
}

pub fn compute_spectrum_with_limit(instance: &QuboInstance, limit: usize) -> Result<Spectrum> {
    let n = instance.n();
    let limit = limit.min(ENUMERATION_LIMIT);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let costs = (0..1u64 << n).map(|b| instance.cost_of_index(b)).collect();
    Spectrum::from_costs(costs)
}

/// Bitstrings whose cost is within a `1 - alpha` fraction of the cost range
/// above the optimum.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibleSet {
    pub alpha: f64,
    pub threshold_cost: f64,
    members: Vec<usize>,
}

impl FeasibleSet {
    /// Members, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, z: usize) -> bool {
        self.members.binary_search(&z).is_ok()
    }
}

/// `F(alpha) = { z : C(z) <= c_min + (1 - alpha)(c_max - c_min) }`, compared
/// with the slack of [`Spectrum::feasibility_tolerance`].
///
/// `alpha = 1` gives exactly the argmin set, `alpha = 0` every bitstring. A
/// degenerate spectrum makes every bitstring feasible for every `alpha`.
pub fn feasible_set(spectrum: &Spectrum, alpha: f64) -> Result<FeasibleSet> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let size = spectrum.costs.len();
    let threshold_cost = spectrum.threshold(alpha);
    let members = if spectrum.is_degenerate() || alpha == 0.0 {
        (0..size).collect()
    } else if alpha == 1.0 {
        spectrum.argmin.clone()
    } else {
        let bound = threshold_cost + spectrum.feasibility_tolerance();
        spectrum
            .costs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c <= bound)
            .map(|(z, _)| z)
            .collect()
    };
    Ok(FeasibleSet {
        alpha,
        threshold_cost,
        members,
    })
}
