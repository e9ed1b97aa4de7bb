//! Slow reference implementations shared by the integration tests.

#![allow(dead_code)]

use fpqaoa_core::{AngleSchedule, QuboInstance};
use num_complex::Complex64;

/// Spin of qubit `k` in bitstring `b`.
pub fn spin(b: usize, k: usize) -> f64 {
    if (b >> k) & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Cost from the coefficient table, one term at a time.
pub fn naive_cost(inst: &QuboInstance, b: usize) -> f64 {
    let n = inst.n();
    let mut c = 0.0;
    for i in 0..n {
        for j in i..n {
            let s = inst.get(i, j).unwrap();
            c += if i == j {
                s * spin(b, i)
            } else {
                s * spin(b, i) * spin(b, j)
            };
        }
    }
    c
}

pub fn naive_costs(inst: &QuboInstance) -> Vec<f64> {
    (0..1usize << inst.n())
        .map(|b| naive_cost(inst, b))
        .collect()
}

fn matvec(m: &[Vec<Complex64>], x: &[Complex64]) -> Vec<Complex64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// Dense `exp(-i beta sum_k X_k)` built entry by entry.
pub fn dense_mixer(n: usize, beta: f64) -> Vec<Vec<Complex64>> {
    let dim = 1usize << n;
    let same = Complex64::new(beta.cos(), 0.0);
    let flip = Complex64::new(0.0, -beta.sin());
    (0..dim)
        .map(|a| {
            (0..dim)
                .map(|b| {
                    (0..n).fold(Complex64::new(1.0, 0.0), |acc, k| {
                        acc * if (a >> k) & 1 == (b >> k) & 1 {
                            same
                        } else {
                            flip
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Dense diagonal `exp(-i gamma C)`.
pub fn dense_phase(costs: &[f64], gamma: f64) -> Vec<Vec<Complex64>> {
    let dim = costs.len();
    (0..dim)
        .map(|a| {
            (0..dim)
                .map(|b| {
                    if a == b {
                        Complex64::new((gamma * costs[a]).cos(), -(gamma * costs[a]).sin())
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                })
                .collect()
        })
        .collect()
}

/// QAOA output state by dense matrix products.
pub fn dense_qaoa(costs: &[f64], n: usize, schedule: &AngleSchedule) -> Vec<Complex64> {
    let dim = 1usize << n;
    let mut x = vec![Complex64::new(1.0 / (dim as f64).sqrt(), 0.0); dim];
    for (g, b) in schedule.layers() {
        x = matvec(&dense_phase(costs, g), &x);
        x = matvec(&dense_mixer(n, b), &x);
    }
    x
}
