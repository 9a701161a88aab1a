//! Deterministic fixtures from a named, portable generator.
//!
//! Everything random in this crate flows through splitmix64 so that a
//! (seed, tag, index) triple reproduces the same bytes in any language: the
//! generator is the standard 64-bit splittable counter design with the
//! golden-gamma increment and two xor-multiply finalization rounds.

use num_complex::Complex64;

use crate::spectral::{vec_inner, vec_norm, ComplexMatrix, HermitianMatrix};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// splitmix64 stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [-1, 1).
    pub fn next_symmetric(&mut self) -> f64 {
        2.0 * self.next_f64() - 1.0
    }

    /// Standard normal via Box–Muller (two uniforms per draw).
    pub fn next_gaussian(&mut self) -> f64 {
        let u1 = 1.0 - self.next_f64(); // (0, 1]
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }
}

/// Derived seed for the witness substream (tag, index); deterministic per
/// index regardless of evaluation order.
pub fn substream(seed: u64, tag: u64, index: u64) -> u64 {
    mix64(mix64(seed ^ mix64(tag)) ^ mix64(index.wrapping_add(GOLDEN_GAMMA)))
}

/// Deterministic real vector with entries uniform in [-1, 1).
pub fn random_vector(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = SplitMix64::new(seed);
    (0..n).map(|_| rng.next_symmetric()).collect()
}

/// Deterministic Hermitian matrix: a row-major uniform complex matrix
/// symmetrized as (m + m*)/2. Same seed, same bits.
pub fn random_hermitian(n: usize, seed: u64) -> HermitianMatrix {
    let mut rng = SplitMix64::new(seed);
    let mut m = ComplexMatrix::zeros(n);
    for j in 0..n {
        for k in 0..n {
            let re = rng.next_symmetric();
            let im = rng.next_symmetric();
            m[(j, k)] = Complex64::new(re, im);
        }
    }
    HermitianMatrix::symmetrize(&m)
}

/// Random Hermitian matrix shifted to the trace-zero representative.
pub fn random_trace_zero_hermitian(n: usize, seed: u64) -> HermitianMatrix {
    let h = random_hermitian(n, seed);
    let shift = h.trace_re() / n as f64;
    let mut m = h.into_matrix();
    for j in 0..n {
        m[(j, j)] -= Complex64::new(shift, 0.0);
    }
    HermitianMatrix::symmetrize(&m)
}

fn raw_complex_gaussian(n: usize, rng: &mut SplitMix64) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.next_gaussian(), rng.next_gaussian()))
        .collect()
}

/// Deterministic unit vector, Gaussian direction.
pub fn random_unit_vector(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = SplitMix64::new(seed);
    loop {
        let v = raw_complex_gaussian(n, &mut rng);
        let len = vec_norm(&v);
        if len > 1e-6 {
            return v.into_iter().map(|c| c / len).collect();
        }
    }
}

/// Deterministic orthonormal pair (η, ξ); requires n ≥ 2.
pub fn random_orthonormal_pair(n: usize, seed: u64) -> (Vec<Complex64>, Vec<Complex64>) {
    assert!(n >= 2, "an orthonormal pair needs dimension at least 2");
    let mut rng = SplitMix64::new(seed);
    loop {
        let eta = {
            let v = raw_complex_gaussian(n, &mut rng);
            let len = vec_norm(&v);
            if len <= 1e-6 {
                continue;
            }
            v.into_iter().map(|c| c / len).collect::<Vec<_>>()
        };
        let w = raw_complex_gaussian(n, &mut rng);
        let overlap = vec_inner(&w, &eta);
        let perp: Vec<Complex64> =
            w.iter().zip(&eta).map(|(a, b)| a - b * overlap).collect();
        let len = vec_norm(&perp);
        if len > 1e-6 {
            let xi = perp.into_iter().map(|c| c / len).collect();
            return (eta, xi);
        }
    }
}

/// Deterministic unitary via modified Gram–Schmidt on a Gaussian matrix.
pub fn random_unitary(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = SplitMix64::new(seed);
    'outer: loop {
        let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
        for _ in 0..n {
            cols.push(raw_complex_gaussian(n, &mut rng));
        }
        for j in 0..n {
            for i in 0..j {
                let prev = cols[i].clone();
                let overlap = vec_inner(&cols[j], &prev);
                for (slot, p) in cols[j].iter_mut().zip(&prev) {
                    *slot -= p * overlap;
                }
            }
            let len = vec_norm(&cols[j]);
            if len < 1e-8 {
                continue 'outer;
            }
            for slot in cols[j].iter_mut() {
                *slot /= len;
            }
        }
        let mut u = ComplexMatrix::zeros(n);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                u[(i, j)] = *v;
            }
        }
        return u;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_bits() {
        let a = random_hermitian(4, 7);
        let b = random_hermitian(4, 7);
        assert_eq!(a, b);
        assert_ne!(random_hermitian(4, 8), a);
        assert_eq!(random_vector(5, 3), random_vector(5, 3));
    }

    #[test]
    fn hermitian_fixture_passes_validation() {
        for n in [1, 2, 5] {
            let h = random_hermitian(n, 42);
            assert!(HermitianMatrix::new(h.matrix().clone()).is_ok());
        }
        // n = 1 is a single real scalar
        let h = random_hermitian(1, 0);
        assert_eq!(h.matrix()[(0, 0)].im, 0.0);
    }

    #[test]
    fn trace_zero_fixture() {
        let h = random_trace_zero_hermitian(5, 11);
        assert!(h.trace_re().abs() < 1e-12);
    }

    #[test]
    fn unit_vectors_and_pairs_are_orthonormal() {
        for seed in 0..10 {
            let v = random_unit_vector(4, seed);
            assert!((vec_norm(&v) - 1.0).abs() < 1e-12);
            let (eta, xi) = random_orthonormal_pair(4, seed);
            assert!((vec_norm(&eta) - 1.0).abs() < 1e-12);
            assert!((vec_norm(&xi) - 1.0).abs() < 1e-12);
            assert!(vec_inner(&eta, &xi).norm() < 1e-12);
        }
    }

    #[test]
    fn unitary_fixture_is_unitary() {
        let u = random_unitary(5, 123);
        let gram = &u.adjoint() * &u;
        assert!((&gram - &ComplexMatrix::identity(5)).frobenius_norm() < 1e-12);
    }

    #[test]
    fn substreams_differ_by_index() {
        let a = substream(1, 2, 3);
        assert_eq!(a, substream(1, 2, 3));
        assert_ne!(a, substream(1, 2, 4));
        assert_ne!(a, substream(1, 3, 3));
        assert_ne!(a, substream(2, 2, 3));
    }
}
