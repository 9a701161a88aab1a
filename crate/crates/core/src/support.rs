//! Support functionals and semi-inner products on the real space of
//! Hermitian matrices, plus the sampled skew-Hermitian test for
//! super-operators.
//!
//! The semi-inner product of a non-smooth norm is not unique; this module
//! fixes the canonical choice: the support functional at `y` is aligned with
//! the eigenbasis of `y` and uses the closed-form dual attainer of the gauge
//! with stable tie-breaking inherited from the eigensolver.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::gauge::{rearrange, SymmetricGauge};
use crate::harness::{random_hermitian, random_orthonormal_pair, random_unit_vector, substream};
use crate::spectral::{eigh, trace_pair_re, ComplexMatrix, HermitianMatrix};
use crate::{Error, Result};

/// Default verdict tolerance for [`is_skew_hermitian`]; looser than the
/// kernel tolerances because dual attainment is iterative for some families.
pub const SKEW_TOL: f64 = 1e-7;

/// Orthonormal Hermitian basis under the trace pairing: the n diagonal
/// units, then (E_jk + E_kj)/√2 for j < k, then i(E_jk − E_kj)/√2 for j < k.
pub fn hermitian_basis(n: usize) -> Vec<HermitianMatrix> {
    let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
    let mut basis = Vec::with_capacity(n * n);
    for j in 0..n {
        let mut m = ComplexMatrix::zeros(n);
        m[(j, j)] = Complex64::new(1.0, 0.0);
        basis.push(HermitianMatrix::new_unchecked(m));
    }
    for j in 0..n {
        for k in (j + 1)..n {
            let mut m = ComplexMatrix::zeros(n);
            m[(j, k)] = Complex64::new(inv_sqrt2, 0.0);
            m[(k, j)] = Complex64::new(inv_sqrt2, 0.0);
            basis.push(HermitianMatrix::new_unchecked(m));
        }
    }
    for j in 0..n {
        for k in (j + 1)..n {
            let mut m = ComplexMatrix::zeros(n);
            m[(j, k)] = Complex64::new(0.0, inv_sqrt2);
            m[(k, j)] = Complex64::new(0.0, -inv_sqrt2);
            basis.push(HermitianMatrix::new_unchecked(m));
        }
    }
    basis
}

/// Real-linear operator on Hermitian matrices, stored as its images on the
/// fixed basis from [`hermitian_basis`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuperOp {
    dim: usize,
    images: Vec<HermitianMatrix>,
}

impl SuperOp {
    pub fn from_images(dim: usize, images: Vec<HermitianMatrix>) -> Result<Self> {
        if images.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, got: images.len() });
        }
        for im in &images {
            if im.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: im.dim() });
            }
        }
        Ok(SuperOp { dim, images })
    }

    /// Build by applying `f` to every basis element.
    pub fn from_fn(dim: usize, mut f: impl FnMut(&HermitianMatrix) -> HermitianMatrix) -> Self {
        let images = hermitian_basis(dim).iter().map(|b| f(b)).collect();
        SuperOp { dim, images }
    }

    pub fn zero(dim: usize) -> Self {
        SuperOp { dim, images: vec![HermitianMatrix::zero(dim); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        SuperOp { dim, images: hermitian_basis(dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Image of the k-th basis element (no decomposition round-trip).
    pub fn image(&self, k: usize) -> &HermitianMatrix {
        &self.images[k]
    }

    /// Apply to an arbitrary Hermitian matrix by decomposing it in the basis.
    pub fn apply(&self, x: &HermitianMatrix) -> HermitianMatrix {
        assert_eq!(x.dim(), self.dim, "operand dimension must match");
        let basis = hermitian_basis(self.dim);
        let terms: Vec<(f64, &HermitianMatrix)> = basis
            .iter()
            .zip(&self.images)
            .map(|(b, im)| (trace_pair_re(x, b), im))
            .collect();
        HermitianMatrix::linear_combination(&terms, self.dim)
    }

    /// Conjugated operator x ↦ u · H(u* x u) · u* for unitary `u`.
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Self {
        let ustar = u.adjoint();
        SuperOp::from_fn(self.dim, |b| {
            let inner = HermitianMatrix::symmetrize(&(&(&ustar * b.matrix()) * u));
            let image = self.apply(&inner);
            HermitianMatrix::symmetrize(&(&(u * image.matrix()) * &ustar))
        })
    }
}

/// A support functional at `base`: φ(z) = Tr(rep · z) with ‖φ‖ equal to the
/// gauge norm of `base` and φ(base) equal to its square.
#[derive(Debug, Clone)]
pub struct SupportFunctional {
    pub base: HermitianMatrix,
    pub rep: HermitianMatrix,
}

impl SupportFunctional {
    pub fn eval(&self, z: &HermitianMatrix) -> f64 {
        trace_pair_re(z, &self.rep)
    }
}

/// Canonical support functional at `x` for the given gauge.
///
/// Diagonalizes x = u · diag(λ) · u*, takes the closed-form dual attainer of
/// the gauge at the rearranged spectrum, and transports it back:
/// rep = ‖x‖ · u · diag(sign(λ_j) d_{rank|λ_j|}) · u*.
pub fn support_functional(g: &SymmetricGauge, x: &HermitianMatrix) -> Result<SupportFunctional> {
    let n = x.dim();
    let eig = eigh(x)?;
    let spectrum = rearrange(&eig.values);
    if spectrum[0] == 0.0 {
        return Err(Error::ZeroElement);
    }
    let nu = g.norm(&spectrum)?;
    let attainer = g.norming_functional(&spectrum)?;

    // rank of each eigenvalue by |λ| descending, stable in the eigen order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        eig.values[j].abs().partial_cmp(&eig.values[i].abs()).expect("finite eigenvalues")
    });
    // eigenvalues at rounding level count as zero so that rank-deficient
    // elements get the same functional as their exact counterparts
    let cutoff = 1e-12 * spectrum[0];
    let mut weight = vec![0.0; n];
    for (rank, &j) in order.iter().enumerate() {
        let sign = if eig.values[j] > cutoff {
            1.0
        } else if eig.values[j] < -cutoff {
            -1.0
        } else {
            0.0
        };
        weight[j] = nu * sign * attainer[rank];
    }

    let u = &eig.vectors;
    let mut diag = ComplexMatrix::zeros(n);
    for j in 0..n {
        diag[(j, j)] = Complex64::new(weight[j], 0.0);
    }
    let rep = HermitianMatrix::symmetrize(&(&(u * &diag) * &u.adjoint()));
    Ok(SupportFunctional { base: x.clone(), rep })
}

/// Semi-inner product [x, y] = φ_y(x) built from the canonical support
/// functional at `y`; returns 0 when y = 0.
pub fn semi_inner(g: &SymmetricGauge, x: &HermitianMatrix, y: &HermitianMatrix) -> Result<f64> {
    if y.frobenius_norm() == 0.0 {
        return Ok(0.0);
    }
    Ok(support_functional(g, y)?.eval(x))
}

/// Outcome of the sampled skew-Hermitian test.
#[derive(Debug, Clone)]
pub struct SkewReport {
    pub verdict: bool,
    pub worst_value: f64,
    pub worst_witness: HermitianMatrix,
}

/// Coefficients (c₁, c₂) > 0 on the gauge's two-dimensional unit sphere with
/// maximal Euclidean length: the dual-attained weights used for the
/// two-projection witnesses. Found by a grid-plus-golden-section minimization
/// of ‖(cos t, sin t)‖ over the quarter circle.
pub fn projection_pair_weights(g: &SymmetricGauge) -> Result<(f64, f64)> {
    let norm_at = |t: f64| -> Result<f64> { g.norm(&[t.cos(), t.sin()]) };
    let quarter = std::f64::consts::FRAC_PI_2;
    let grid = 512;
    let mut best_t = 0.0;
    let mut best = f64::INFINITY;
    for k in 0..=grid {
        let t = quarter * k as f64 / grid as f64;
        let v = norm_at(t)?;
        if v < best {
            best = v;
            best_t = t;
        }
    }
    let mut lo = (best_t - quarter / grid as f64).max(0.0);
    let mut hi = (best_t + quarter / grid as f64).min(quarter);
    let phi = 0.5 * (5.0_f64.sqrt() - 1.0);
    for _ in 0..80 {
        let m1 = hi - phi * (hi - lo);
        let m2 = lo + phi * (hi - lo);
        if norm_at(m1)? <= norm_at(m2)? {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let t = 0.5 * (lo + hi);
    let scale = norm_at(t)?;
    Ok((t.cos() / scale, t.sin() / scale))
}

/// Sampled test of the skew-Hermitian property: evaluates |[H(x), x]| over a
/// witness family (rank-one projections, dual-weighted two-projection
/// combinations, and dense random Hermitian matrices) and reports the worst
/// witness. A false verdict is a result, not an error.
pub fn is_skew_hermitian(
    g: &SymmetricGauge,
    h: &SuperOp,
    trials: usize,
    seed: u64,
) -> Result<SkewReport> {
    let n = h.dim();
    let mut worst_value = -1.0;
    let mut worst_witness = HermitianMatrix::zero(n);
    let consider = |x: HermitianMatrix, worst_value: &mut f64, worst: &mut HermitianMatrix| -> Result<()> {
        let value = semi_inner(g, &h.apply(&x), &x)?.abs();
        if value > *worst_value {
            *worst_value = value;
            *worst = x;
        }
        Ok(())
    };

    for i in 0..trials {
        let eta = random_unit_vector(n, substream(seed, 0x70726f6a, i as u64));
        consider(HermitianMatrix::dyad(&eta), &mut worst_value, &mut worst_witness)?;
    }

    let (c1, c2) = projection_pair_weights(g)?;
    for i in 0..trials {
        let (eta, xi) = random_orthonormal_pair(n, substream(seed, 0x70616972, i as u64));
        let p = HermitianMatrix::dyad(&eta);
        let q = HermitianMatrix::dyad(&xi);
        let x = HermitianMatrix::linear_combination(&[(c1, &p), (c2, &q)], n);
        consider(x, &mut worst_value, &mut worst_witness)?;
    }

    for i in 0..trials {
        let x = random_hermitian(n, substream(seed, 0x6865726d, i as u64));
        consider(x, &mut worst_value, &mut worst_witness)?;
    }

    Ok(SkewReport { verdict: worst_value < SKEW_TOL, worst_value, worst_witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extraction::make_commutator;
    use crate::gauge::PsiFn;
    use crate::spectral::ideal_norm;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn gauges() -> Vec<SymmetricGauge> {
        vec![
            "lp:1".parse().unwrap(),
            "lp:2".parse().unwrap(),
            "lp:4".parse().unwrap(),
            "lp:inf".parse().unwrap(),
            "orlicz:pow:3".parse().unwrap(),
            "orlicz:exppow:2".parse().unwrap(),
            "lorentz:pow:0.5".parse().unwrap(),
            "marcinkiewicz:pow:0.5".parse().unwrap(),
        ]
    }

    #[test]
    fn basis_small_cases() {
        let b1 = hermitian_basis(1);
        assert_eq!(b1.len(), 1);
        assert_eq!(b1[0].matrix()[(0, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(hermitian_basis(2).len(), 4);
    }

    #[test]
    fn basis_gram_matrix_is_identity() {
        for n in [2, 3, 5] {
            let basis = hermitian_basis(n);
            for (j, a) in basis.iter().enumerate() {
                for (k, b) in basis.iter().enumerate() {
                    let want = if j == k { 1.0 } else { 0.0 };
                    close(trace_pair_re(a, b), want, 1e-12);
                }
            }
        }
    }

    #[test]
    fn support_at_projection_is_the_projection() {
        let eta = random_unit_vector(3, 21);
        let p = HermitianMatrix::dyad(&eta);
        for g in gauges() {
            let sf = support_functional(&g, &p).unwrap();
            let nu = ideal_norm(&g, p.matrix()).unwrap();
            // φ(p) = ‖p‖² and rep is the projection scaled by ‖p‖²
            close(sf.eval(&p), nu * nu, 1e-9);
            let expect = p.matrix().scale_re(nu * nu);
            assert!((sf.rep.matrix() - &expect).frobenius_norm() < 1e-8);
        }
    }

    #[test]
    fn support_under_l2_is_the_element_itself() {
        let g: SymmetricGauge = "lp:2".parse().unwrap();
        let x = random_hermitian(4, 33);
        let sf = support_functional(&g, &x).unwrap();
        assert!((sf.rep.matrix() - x.matrix()).frobenius_norm() < 1e-10);
    }

    #[test]
    fn support_under_l1_is_the_sign_matrix() {
        let g: SymmetricGauge = "lp:1".parse().unwrap();
        let x = HermitianMatrix::from_real_diag(&[2.0, -1.0]);
        let sf = support_functional(&g, &x).unwrap();
        let expect = HermitianMatrix::from_real_diag(&[3.0, -3.0]);
        assert!((sf.rep.matrix() - expect.matrix()).frobenius_norm() < 1e-12);
        close(sf.eval(&x), 9.0, 1e-12);
    }

    #[test]
    fn support_invariants_on_random_elements() {
        for (i, g) in gauges().into_iter().enumerate() {
            for seed in 0..6 {
                let x = random_hermitian(3, 500 + 10 * i as u64 + seed);
                let nu = ideal_norm(&g, x.matrix()).unwrap();
                let sf = support_functional(&g, &x).unwrap();
                close(sf.eval(&x), nu * nu, 1e-8);
                // |φ(z)| ≤ ‖x‖ ‖z‖ and the dual norm of rep equals ‖x‖
                for zs in 0..6 {
                    let z = random_hermitian(3, 900 + 10 * i as u64 + zs);
                    let bound = nu * ideal_norm(&g, z.matrix()).unwrap();
                    assert!(sf.eval(&z).abs() <= bound + 1e-8);
                }
                let rep_spectrum = crate::spectral::singular_values(sf.rep.matrix()).unwrap();
                close(g.dual_norm(&rep_spectrum).unwrap(), nu, 1e-6 * nu.max(1.0));
            }
        }
    }

    #[test]
    fn semi_inner_examples() {
        for g in gauges() {
            let y = random_hermitian(3, 77);
            let nu = ideal_norm(&g, y.matrix()).unwrap();
            close(semi_inner(&g, &y, &y).unwrap(), nu * nu, 1e-8);
            let zero = HermitianMatrix::zero(3);
            close(semi_inner(&g, &zero, &y).unwrap(), 0.0, 1e-14);
            close(semi_inner(&g, &y, &zero).unwrap(), 0.0, 1e-14);
        }
        // Hilbert–Schmidt case: the semi-inner product is the trace pairing
        let g2: SymmetricGauge = "lp:2".parse().unwrap();
        let x = random_hermitian(3, 78);
        let y = random_hermitian(3, 79);
        close(semi_inner(&g2, &x, &y).unwrap(), trace_pair_re(&x, &y), 1e-9);
        close(
            semi_inner(&g2, &x, &y).unwrap(),
            semi_inner(&g2, &y, &x).unwrap(),
            1e-9,
        );
    }

    #[test]
    fn support_rejects_zero() {
        let g: SymmetricGauge = "lp:4".parse().unwrap();
        assert!(matches!(
            support_functional(&g, &HermitianMatrix::zero(2)),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn commutators_pass_the_skew_test() {
        let g: SymmetricGauge = "lp:4".parse().unwrap();
        let b = random_hermitian(3, 3);
        let h = make_commutator(&b);
        let report = is_skew_hermitian(&g, &h, 40, 1234).unwrap();
        assert!(report.verdict, "worst value {}", report.worst_value);
    }

    #[test]
    fn identity_operator_fails_the_skew_test() {
        for g in gauges() {
            let h = SuperOp::identity(2);
            let report = is_skew_hermitian(&g, &h, 10, 99).unwrap();
            assert!(!report.verdict);
            assert!(report.worst_value >= 0.5);
            // the recorded witness reproduces the worst value
            let x = &report.worst_witness;
            let again = semi_inner(&g, &h.apply(x), x).unwrap().abs();
            close(again, report.worst_value, 1e-12);
        }
    }

    #[test]
    fn frobenius_rotation_passes_under_l2() {
        let g: SymmetricGauge = "lp:2".parse().unwrap();
        let h = crate::extraction::rotation_witness(2);
        let report = is_skew_hermitian(&g, &h, 50, 7).unwrap();
        assert!(report.verdict, "worst value {}", report.worst_value);
        assert!(report.worst_value < 1e-9);
    }

    #[test]
    fn rank_one_orthogonality_for_commutators() {
        // ⟨H(η⊗η), ξ⊗ξ⟩ = 0 for orthonormal η ⊥ ξ
        let b = random_hermitian(4, 5);
        let h = make_commutator(&b);
        for seed in 0..50 {
            let (eta, xi) = random_orthonormal_pair(4, 1000 + seed);
            let image = h.apply(&HermitianMatrix::dyad(&eta));
            let q = HermitianMatrix::dyad(&xi);
            assert!(trace_pair_re(&image, &q).abs() < 1e-7);
        }
    }

    #[test]
    fn conjugation_preserves_the_skew_property() {
        let g: SymmetricGauge = "lorentz:pow:0.5".parse().unwrap();
        let b = random_hermitian(3, 17);
        let h = make_commutator(&b);
        for seed in 0..5 {
            let u = crate::harness::random_unitary(3, 2000 + seed);
            let conj = h.conjugate_by(&u);
            let report = is_skew_hermitian(&g, &conj, 20, seed).unwrap();
            assert!(report.verdict, "worst value {}", report.worst_value);
        }
    }

    #[test]
    fn semi_inner_axioms_randomized() {
        let dims = 3;
        for (gi, g) in gauges().into_iter().enumerate() {
            for t in 0..30 {
                let base = 3_000 + 100 * gi as u64 + t;
                let x = random_hermitian(dims, base);
                let y = random_hermitian(dims, base + 40);
                let z = random_hermitian(dims, base + 80);
                let alpha = 2.0 * crate::harness::SplitMix64::new(base).next_f64() - 1.0;

                // (i) additivity and homogeneity in the first slot
                let ax_y = HermitianMatrix::linear_combination(&[(alpha, &x), (1.0, &y)], dims);
                let lhs = semi_inner(&g, &ax_y, &z).unwrap();
                let rhs = alpha * semi_inner(&g, &x, &z).unwrap() + semi_inner(&g, &y, &z).unwrap();
                close(lhs, rhs, 1e-8);

                // (ii) homogeneity in the second slot, both signs
                for a in [1.75, -1.75] {
                    let ay = HermitianMatrix::linear_combination(&[(a, &y)], dims);
                    close(
                        semi_inner(&g, &x, &ay).unwrap(),
                        a * semi_inner(&g, &x, &y).unwrap(),
                        1e-8,
                    );
                }

                // (iii) positivity
                let xx = semi_inner(&g, &x, &x).unwrap();
                assert!(xx > 0.0);

                // (iv) Cauchy–Schwarz bound
                let xy = semi_inner(&g, &x, &y).unwrap();
                let yy = semi_inner(&g, &y, &y).unwrap();
                assert!(xy * xy <= xx * yy + 1e-8);
            }
        }
    }
}
