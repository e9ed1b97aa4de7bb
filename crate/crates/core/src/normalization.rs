//! Coefficient rescaling.

use crate::error::{Error, Result};
use crate::qubo::{EnsembleKind, QuboInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NormKind {
    #[default]
    None,
    /// `sqrt(sum_{i<=j} s_ij^2)`.
    Frobenius,
    /// `max_{i<=j} |s_ij|`.
    MaxAbs,
    /// `sqrt(sum_{i<j} s_ij^2 / |E2| + sum_i s_ii^2 / |E1|)`, where `|E2|` and
    /// `|E1|` count quadratic and linear terms (see [`term_counts`]).
    WeightedNorm,
}

impl NormKind {
    pub const ALL: [NormKind; 4] = [
        NormKind::None,
        NormKind::Frobenius,
        NormKind::MaxAbs,
        NormKind::WeightedNorm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NormKind::None => "none",
            NormKind::Frobenius => "frobenius",
            NormKind::MaxAbs => "maxabs",
            NormKind::WeightedNorm => "wnorm",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == s)
    }
}

/// `(|E1|, |E2|)`: the number of linear and quadratic terms.
///
/// Dense ensembles (`Normal`) count every slot, `n` and `n (n - 1) / 2`.
/// Sparsified or hand-built instances count only nonzero coefficients.
pub fn term_counts(instance: &QuboInstance) -> (usize, usize) {
    let n = instance.n();
    if instance.ensemble == EnsembleKind::Normal {
        return (n, n * (n - 1) / 2);
    }
    instance.entries().fold((0, 0), |(lin, quad), (i, j, _)| {
        if i == j {
            (lin + 1, quad)
        } else {
            (lin, quad + 1)
        }
    })
}

pub fn norm_value(instance: &QuboInstance, kind: NormKind) -> Result<f64> {
    if kind == NormKind::None {
        return Ok(1.0);
    }
    if instance.is_zero() {
        return Err(Error::ZeroInstance);
    }
    let value = match kind {
        NormKind::None => unreachable!(),
        NormKind::Frobenius => {
            libm::sqrt(instance.coefficients().iter().map(|v| v * v).sum::<f64>())
        }
        NormKind::MaxAbs => instance.max_abs(),
        NormKind::WeightedNorm => {
            let (mut diag, mut off) = (0.0, 0.0);
            for (i, j, v) in instance.entries() {
                if i == j {
                    diag += v * v;
                } else {
                    off += v * v;
                }
            }
            let (e1, e2) = term_counts(instance);
            // an order with no terms contributes nothing
            let quad = if e2 > 0 { off / e2 as f64 } else { 0.0 };
            let lin = if e1 > 0 { diag / e1 as f64 } else { 0.0 };
            libm::sqrt(quad + lin)
        }
    };
    Ok(value)
}

/// Divides every coefficient by `norm_value(instance, kind)`.
pub fn rescale(instance: &QuboInstance, kind: NormKind) -> Result<QuboInstance> {
    let norm = norm_value(instance, kind)?;
    let mut out = if kind == NormKind::None {
        instance.clone()
    } else {
        instance.divided(norm)
    };
    out.norm_applied = kind;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubo::generate_normal;

    #[test]
    fn one_term() {
        let inst = QuboInstance::from_entries(2, [(0, 1, 3.0)]).unwrap();
        assert_eq!(norm_value(&inst, NormKind::Frobenius).unwrap(), 3.0);
    }

    #[test]
    fn three_four_five() {
        let inst = QuboInstance::from_entries(2, [(0, 0, 3.0), (0, 1, -4.0)]).unwrap();
        assert_eq!(norm_value(&inst, NormKind::Frobenius).unwrap(), 5.0);
        assert_eq!(norm_value(&inst, NormKind::MaxAbs).unwrap(), 4.0);
        // custom instance: one linear and one quadratic term
        assert_eq!(norm_value(&inst, NormKind::WeightedNorm).unwrap(), 5.0);
        assert_eq!(norm_value(&inst, NormKind::None).unwrap(), 1.0);
    }

    #[test]
    fn zero_instance_rejected() {
        let inst = QuboInstance::zeros(3).unwrap();
        for kind in [
            NormKind::Frobenius,
            NormKind::MaxAbs,
            NormKind::WeightedNorm,
        ] {
            assert_eq!(norm_value(&inst, kind), Err(Error::ZeroInstance));
            assert_eq!(rescale(&inst, kind), Err(Error::ZeroInstance));
        }
        assert!(rescale(&inst, NormKind::None).is_ok());
    }

    #[test]
    fn rescale_updates_tag_and_keeps_original() {
        let inst = generate_normal(5, 3).unwrap();
        let before = inst.clone();
        let out = rescale(&inst, NormKind::Frobenius).unwrap();
        assert_eq!(inst, before);
        assert_eq!(out.norm_applied, NormKind::Frobenius);
        let f = norm_value(&out, NormKind::Frobenius).unwrap();
        assert!((f - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dense_counts_for_normal() {
        let mut inst = generate_normal(4, 3).unwrap();
        inst.set(0, 1, 0.0).unwrap();
        assert_eq!(term_counts(&inst), (4, 6));
        inst.ensemble = EnsembleKind::Mixed;
        assert_eq!(term_counts(&inst), (4, 5));
    }

    #[test]
    fn names_round_trip() {
        for k in NormKind::ALL {
            assert_eq!(NormKind::parse(k.as_str()), Some(k));
        }
        assert_eq!(NormKind::parse("frob"), None);
    }
}
