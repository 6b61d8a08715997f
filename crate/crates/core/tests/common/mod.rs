//! Shared helpers for integration tests, including an independent
//! brute-force discord oracle.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rindler_sdc::qmat::DensityMatrix;
use rindler_sdc::{BellIndex, Message, ModeSplit, ProtocolPoint};

pub type Mat4 = [[Complex64; 4]; 4];

pub fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![start];
    }
    (0..n)
        .map(|k| if k + 1 == n { stop } else { start + (stop - start) * k as f64 / (n - 1) as f64 })
        .collect()
}

/// The 21x21 (r, q_l) grid on [0, π/4] x [0, 1].
pub fn grid21() -> Vec<ModeSplit> {
    let mut out = Vec::new();
    for r in linspace(0.0, FRAC_PI_4, 21) {
        for q in linspace(0.0, 1.0, 21) {
            out.push(ModeSplit::new(r, q).unwrap());
        }
    }
    out
}

/// All sixteen (α, β, i, j) label combinations.
pub fn labels() -> Vec<(BellIndex, Message)> {
    let mut out = Vec::new();
    for idx in BellIndex::ALL {
        for msg in Message::ALL {
            out.push((idx, msg));
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random point of the protocol family (continuous r, q_l; random labels).
pub fn random_point(rng: &mut impl Rng) -> ProtocolPoint {
    let split = ModeSplit::new(rng.gen_range(0.0..=FRAC_PI_4), rng.gen_range(0.0..=1.0)).unwrap();
    let idx = BellIndex::ALL[rng.gen_range(0..4)];
    let msg = Message::ALL[rng.gen_range(0..4)];
    ProtocolPoint::new(split, idx, msg)
}

pub fn to_mat4(rho: &DensityMatrix) -> Mat4 {
    let m = rho.matrix();
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = m[(i, j)];
        }
    }
    out
}

fn matmul4(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            for j in 0..4 {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// `I ⊗ P` for a 2x2 `P`.
fn identity_kron(p: &[[Complex64; 2]; 2]) -> Mat4 {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for a in 0..2 {
        for c in 0..2 {
            for d in 0..2 {
                out[a * 2 + c][a * 2 + d] = p[c][d];
            }
        }
    }
    out
}

/// Entropy (bits) of a 2x2 density matrix from its Bloch vector length.
fn qubit_entropy(m: &[[Complex64; 2]; 2]) -> f64 {
    let z = m[0][0].re - m[1][1].re;
    let r = (z * z + 4.0 * m[0][1].norm_sqr()).sqrt().min(1.0);
    let h = |x: f64| if x > 1e-15 { -x * x.log2() } else { 0.0 };
    h((1.0 + r) / 2.0) + h((1.0 - r) / 2.0)
}

fn trace_out_second(m: &Mat4) -> [[Complex64; 2]; 2] {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            out[a][b] = m[a * 2][b * 2] + m[a * 2 + 1][b * 2 + 1];
        }
    }
    out
}

/// `S(A|{Π_±})` from explicit `(I ⊗ Π) ρ (I ⊗ Π)` products.
pub fn oracle_conditional_entropy(rho: &Mat4, theta: f64, phi: f64) -> f64 {
    let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
    let i = Complex64::i();
    let mut total = 0.0;
    for sign in [1.0, -1.0] {
        // (I + s n·σ)/2
        let p = [
            [
                Complex64::from(0.5 * (1.0 + sign * n[2])),
                0.5 * sign * (Complex64::from(n[0]) - i * n[1]),
            ],
            [
                0.5 * sign * (Complex64::from(n[0]) + i * n[1]),
                Complex64::from(0.5 * (1.0 - sign * n[2])),
            ],
        ];
        let k = identity_kron(&p);
        let post = matmul4(&matmul4(&k, rho), &k);
        let p_k: f64 = (0..4).map(|d| post[d][d].re).sum();
        if p_k < 1e-14 {
            continue;
        }
        let mut cond = trace_out_second(&post);
        for row in cond.iter_mut() {
            for x in row.iter_mut() {
                *x /= p_k;
            }
        }
        total += p_k * qubit_entropy(&cond);
    }
    total
}

/// Brute-force classical correlation over a uniform angle grid with spacing
/// `step_deg`. Antipodal directions give the same measurement, so θ only
/// needs to cover [0, π/2].
pub fn oracle_classical_correlation(rho: &DensityMatrix, step_deg: f64) -> f64 {
    let m = to_mat4(rho);
    let s_a = qubit_entropy(&trace_out_second(&m));
    let step = step_deg.to_radians();
    let n_theta = (FRAC_PI_2 / step).round() as usize;
    let n_phi = (2.0 * PI / step).round() as usize;
    let mut best_ce = f64::INFINITY;
    for t in 0..=n_theta {
        let theta = t as f64 * step;
        for p in 0..n_phi {
            let ce = oracle_conditional_entropy(&m, theta, p as f64 * step);
            best_ce = best_ce.min(ce);
        }
    }
    s_a - best_ce
}

/// True if `v` never increases by more than `slack` from one entry to the next.
pub fn non_increasing(v: &[f64], slack: f64) -> bool {
    v.windows(2).all(|w| w[1] <= w[0] + slack)
}

pub fn non_decreasing(v: &[f64], slack: f64) -> bool {
    v.windows(2).all(|w| w[1] + slack >= w[0])
}
