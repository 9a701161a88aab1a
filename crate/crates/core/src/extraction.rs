//! Recovery of the Hermitian generator behind a skew-Hermitian
//! super-operator.
//!
//! A commutator operator x ↦ i(xb − bx) leaves a rank-one fingerprint:
//! applied to a projection η⊗η its image is η⊗f + f⊗η with f orthogonal to
//! η. Probing the images at the standard basis vectors recovers the
//! off-diagonal part of b; probes at the mixed vectors (e_i + e_{i+1})/√2
//! recover the consecutive diagonal differences, and the trace-zero gauge
//! fixes the rest. The residual reports how far the operator is from any
//! commutator, which is what the Frobenius-norm rotation witness trips on.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::gauge::SymmetricGauge;
use crate::harness::{random_trace_zero_hermitian, substream};
use crate::spectral::{ideal_norm, vec_inner, ComplexMatrix, HermitianMatrix, RankOneOp};
use crate::support::{hermitian_basis, is_skew_hermitian, semi_inner, SuperOp};
use crate::Result;

/// Commutator super-operator x ↦ i(xb − bx).
pub fn make_commutator(b: &HermitianMatrix) -> SuperOp {
    SuperOp::from_fn(b.dim(), |x| commutator_image(x, b))
}

fn commutator_image(x: &HermitianMatrix, b: &HermitianMatrix) -> HermitianMatrix {
    let xb = x.matrix() * b.matrix();
    let bx = b.matrix() * x.matrix();
    HermitianMatrix::symmetrize(&(&xb - &bx).scale(Complex64::new(0.0, 1.0)))
}

/// Rank-one probe of a super-operator at a unit vector η.
#[derive(Debug, Clone)]
pub struct RankOneStructure {
    /// The vector f with H(η⊗η) ≈ η⊗f + f⊗η and (η, f) = 0.
    pub f: Vec<Complex64>,
    /// Frobenius distance between H(η⊗η) and η⊗f + f⊗η; large values
    /// signal that H is not skew-Hermitian.
    pub residual: f64,
}

/// Extract the dyad component of H(η⊗η): f = H(η⊗η)(η) minus its
/// η-component, so that (η, f) = 0.
pub fn rank_one_image_structure(h: &SuperOp, eta: &[Complex64]) -> RankOneStructure {
    debug_assert!((crate::spectral::vec_norm(eta) - 1.0).abs() < 1e-9, "probe must be a unit vector");
    let image = h.apply(&HermitianMatrix::dyad(eta));
    let image_eta = image.apply_vec(eta);
    let diag = vec_inner(&image_eta, eta);
    let f: Vec<Complex64> =
        image_eta.iter().zip(eta).map(|(v, e)| v - e * diag).collect();
    let dyads = &RankOneOp::new(eta.to_vec(), f.clone()).to_matrix()
        + &RankOneOp::new(f.clone(), eta.to_vec()).to_matrix();
    let residual = (image.matrix() - &dyads).frobenius_norm();
    RankOneStructure { f, residual }
}

/// Recovered commutator generator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Generator {
    /// Trace-zero Hermitian representative with H(x) ≈ i(xb − bx).
    pub b: HermitianMatrix,
    /// max over the Hermitian basis of the operator-norm mismatch
    /// ‖H(B_k) − i(B_k b − b B_k)‖, combined with the Hermitian-part defect
    /// of the probe matrix. Near zero exactly when H is a commutator.
    pub residual: f64,
}

/// Rebuild the generator from rank-one probes. The extraction never
/// consults a gauge; the caller is responsible for H being skew-Hermitian
/// (otherwise the residual simply comes back large).
pub fn extract_generator(h: &SuperOp) -> Result<Generator> {
    let n = h.dim();
    let mut probe_matrix = ComplexMatrix::zeros(n);
    for i in 0..n {
        let mut eta = vec![Complex64::new(0.0, 0.0); n];
        eta[i] = Complex64::new(1.0, 0.0);
        let probe = rank_one_image_structure(h, &eta);
        for j in 0..n {
            probe_matrix[(j, i)] = probe.f[j];
        }
    }
    let adj = probe_matrix.adjoint();
    // probe_matrix = a₁ + i·a₂ with a₁, a₂ Hermitian; a₁ vanishes for
    // every commutator and its size is folded into the residual.
    let a1 = (&probe_matrix + &adj).scale_re(0.5);
    let a2 = (&probe_matrix - &adj).scale(Complex64::new(0.0, -0.5));
    let hermitian_defect = a1.frobenius_norm();
    let mut b = HermitianMatrix::symmetrize(&a2.scale_re(-1.0)).into_matrix();

    // consecutive diagonal differences from mixed probes
    let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
    let mut deltas = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        let mut eta = vec![Complex64::new(0.0, 0.0); n];
        eta[i] = Complex64::new(inv_sqrt2, 0.0);
        eta[i + 1] = Complex64::new(inv_sqrt2, 0.0);
        let probe = rank_one_image_structure(h, &eta);
        let spread = (probe.f[i] - probe.f[i + 1]) * Complex64::new(0.0, 2.0_f64.sqrt());
        deltas.push(spread.re);
    }
    // diagonal with the prescribed differences and zero trace
    let mut prefix = Vec::with_capacity(n);
    prefix.push(0.0);
    for d in &deltas {
        prefix.push(prefix.last().unwrap() + d);
    }
    let head = prefix.iter().sum::<f64>() / n as f64;
    for (j, p) in prefix.iter().enumerate() {
        b[(j, j)] = Complex64::new(head - p, 0.0);
    }
    let trace_shift = b.trace().re / n as f64;
    for j in 0..n {
        b[(j, j)] -= Complex64::new(trace_shift, 0.0);
    }
    let b = HermitianMatrix::symmetrize(&b);

    let sup = SymmetricGauge::lp(f64::INFINITY)?;
    let residual = verify_commutator(h, &b, &sup)?.max(hermitian_defect);
    Ok(Generator { b, residual })
}

/// max over the Hermitian basis of ‖H(B_k) − i(B_k b − b B_k)‖ in the ideal
/// norm of `g`.
pub fn verify_commutator(h: &SuperOp, b: &HermitianMatrix, g: &SymmetricGauge) -> Result<f64> {
    let n = h.dim();
    let basis = hermitian_basis(n);
    let mut worst = 0.0f64;
    for (k, basis_el) in basis.iter().enumerate() {
        let expected = commutator_image(basis_el, b);
        let diff = h.image(k).matrix() - expected.matrix();
        worst = worst.max(ideal_norm(g, &diff)?);
    }
    Ok(worst)
}

/// The basis rotation E₁₁ ↦ E₂₂, E₂₂ ↦ −E₁₁ (zero on the rest of the
/// basis): skew-Hermitian for the Frobenius norm only, and not a
/// commutator for any norm.
pub fn rotation_witness(n: usize) -> SuperOp {
    assert!(n >= 2, "rotation witness needs dimension at least 2");
    let basis = hermitian_basis(n);
    let mut images = vec![HermitianMatrix::zero(n); n * n];
    images[0] = basis[1].clone();
    images[1] = HermitianMatrix::linear_combination(&[(-1.0, &basis[0])], n);
    SuperOp::from_images(n, images).expect("consistent by construction")
}

/// Grid search for an explicit witness violating [H(x), x] = 0 over the
/// diagonal family x = E₁₁ + δ·E₂₂. Returns the best witness and its value.
pub fn diagonal_grid_witness(
    g: &SymmetricGauge,
    h: &SuperOp,
    points: usize,
) -> Result<(HermitianMatrix, f64)> {
    let n = h.dim();
    let mut best_value = -1.0;
    let mut best = HermitianMatrix::zero(n);
    for k in 0..points {
        let delta = -2.0 + 4.0 * k as f64 / (points - 1) as f64;
        let mut diag = vec![0.0; n];
        diag[0] = 1.0;
        diag[1] = delta;
        let x = HermitianMatrix::from_real_diag(&diag);
        let value = semi_inner(g, &h.apply(&x), &x)?.abs();
        if value > best_value {
            best_value = value;
            best = x;
        }
    }
    Ok((best, best_value))
}

/// One named pass/fail line in a dichotomy cell.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckVerdict {
    pub name: String,
    pub pass: bool,
}

/// Per-gauge results of the dichotomy experiment.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GaugeDichotomy {
    pub dim: usize,
    pub gauge: String,
    pub verdicts: Vec<CheckVerdict>,
    pub residuals: Vec<f64>,
    pub witnesses: Vec<HermitianMatrix>,
}

impl GaugeDichotomy {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

/// The gauges the dichotomy experiment exercises besides the Frobenius norm.
pub fn dichotomy_gauges() -> Vec<SymmetricGauge> {
    [
        "lp:1",
        "lp:1.5",
        "lp:4",
        "lp:inf",
        "lorentz:pow:0.5",
        "marcinkiewicz:pow:0.5",
        "orlicz:exppow:2",
    ]
    .iter()
    .map(|t| t.parse().expect("well-formed gauge literals"))
    .collect()
}

/// Demonstrates the dichotomy: the rotation witness passes the skew test
/// under the Frobenius norm and is flagged as a non-commutator, while every
/// other gauge rejects it with an explicit witness; random commutators pass
/// everywhere and round-trip through extraction.
pub fn dichotomy_report(n: usize, trials: usize, seed: u64) -> Result<Vec<GaugeDichotomy>> {
    let rotation = rotation_witness(n);
    let rotation_gen = extract_generator(&rotation)?;
    let mut cells = Vec::new();

    let commutator_checks = |g: &SymmetricGauge,
                             cell: &mut GaugeDichotomy,
                             gauge_index: u64|
     -> Result<()> {
        for rep in 0..2u64 {
            let b = random_trace_zero_hermitian(n, substream(seed, 0xc0 + gauge_index, rep));
            let h = make_commutator(&b);
            let skew = is_skew_hermitian(g, &h, trials, substream(seed, 0xd0 + gauge_index, rep))?;
            cell.verdicts.push(CheckVerdict {
                name: format!("commutator_{rep}_skew_hermitian"),
                pass: skew.verdict,
            });
            let recovered = extract_generator(&h)?;
            let entry_err = (recovered.b.matrix() - b.matrix()).frobenius_norm();
            let gauge_err = verify_commutator(&h, &recovered.b, g)?;
            cell.verdicts.push(CheckVerdict {
                name: format!("commutator_{rep}_round_trip"),
                pass: entry_err < 1e-8 && recovered.residual < 1e-8 && gauge_err < 1e-8,
            });
            cell.residuals.push(recovered.residual);
        }
        Ok(())
    };

    // Frobenius cell: the rotation is skew-Hermitian yet not a commutator.
    let frob: SymmetricGauge = "lp:2".parse()?;
    let mut cell = GaugeDichotomy {
        dim: n,
        gauge: frob.to_string(),
        verdicts: Vec::new(),
        residuals: Vec::new(),
        witnesses: Vec::new(),
    };
    let skew = is_skew_hermitian(&frob, &rotation, trials, substream(seed, 0xa0, 0))?;
    cell.verdicts.push(CheckVerdict {
        name: "rotation_skew_hermitian".into(),
        pass: skew.verdict && skew.worst_value < 1e-9,
    });
    cell.verdicts.push(CheckVerdict {
        name: "rotation_not_commutator".into(),
        pass: rotation_gen.residual >= 0.4,
    });
    cell.residuals.push(rotation_gen.residual);
    cell.witnesses.push(skew.worst_witness);
    commutator_checks(&frob, &mut cell, 0)?;
    cells.push(cell);

    for (gi, g) in dichotomy_gauges().into_iter().enumerate() {
        let mut cell = GaugeDichotomy {
            dim: n,
            gauge: g.to_string(),
            verdicts: Vec::new(),
            residuals: Vec::new(),
            witnesses: Vec::new(),
        };
        let skew = is_skew_hermitian(&g, &rotation, trials, substream(seed, 0xb0, gi as u64))?;
        let (witness, value) = diagonal_grid_witness(&g, &rotation, 1000)?;
        cell.verdicts.push(CheckVerdict {
            name: "rotation_rejected".into(),
            pass: !skew.verdict,
        });
        cell.verdicts.push(CheckVerdict {
            name: "rotation_grid_witness".into(),
            pass: value >= 1e-3,
        });
        cell.residuals.push(rotation_gen.residual);
        cell.witnesses.push(witness);
        commutator_checks(&g, &mut cell, 1 + gi as u64)?;
        cells.push(cell);
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{random_hermitian, random_unitary, random_unit_vector};
    use crate::spectral::operator_norm;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn identity_generator_commutes_away() {
        let h = make_commutator(&HermitianMatrix::identity(3));
        for k in 0..9 {
            assert_eq!(h.image(k).frobenius_norm(), 0.0);
        }
    }

    #[test]
    fn commutator_of_pauli_z_on_the_symmetric_unit() {
        // b = diag(1, −1), x = (E₁₂ + E₂₁)/√2 → i(xb − bx) = √2·[[0, −i], [i, 0]]
        let b = HermitianMatrix::from_real_diag(&[1.0, -1.0]);
        let h = make_commutator(&b);
        let image = h.image(2); // first symmetric pair in basis order
        let s = 2.0_f64.sqrt();
        assert!((image.matrix()[(0, 1)] - Complex64::new(0.0, -s)).norm() < 1e-12);
        assert!((image.matrix()[(1, 0)] - Complex64::new(0.0, s)).norm() < 1e-12);
        assert!(image.matrix()[(0, 0)].norm() < 1e-12);
        assert!(image.matrix()[(1, 1)].norm() < 1e-12);
    }

    #[test]
    fn commutator_images_are_traceless() {
        let b = random_hermitian(4, 9);
        let h = make_commutator(&b);
        for k in 0..16 {
            assert!(h.image(k).trace_re().abs() < 1e-12);
        }
    }

    #[test]
    fn rank_one_probe_matches_the_symbolic_form() {
        // for H = i[·, b] at unit η: f = −i(bη − (bη, η)η)
        let b = random_hermitian(4, 31);
        let h = make_commutator(&b);
        for seed in 0..6 {
            let eta = random_unit_vector(4, 600 + seed);
            let probe = rank_one_image_structure(&h, &eta);
            assert!(probe.residual < 1e-10, "residual {}", probe.residual);
            let beta = vec_inner(&b.apply_vec(&eta), &eta);
            for (j, fj) in probe.f.iter().enumerate() {
                let expect =
                    (b.apply_vec(&eta)[j] - eta[j] * beta) * Complex64::new(0.0, -1.0);
                assert!((fj - expect).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn rank_one_probe_on_degenerate_operators() {
        let zero = SuperOp::zero(3);
        let mut eta = vec![Complex64::new(0.0, 0.0); 3];
        eta[0] = Complex64::new(1.0, 0.0);
        let probe = rank_one_image_structure(&zero, &eta);
        assert_eq!(probe.residual, 0.0);
        assert!(probe.f.iter().all(|v| v.norm() == 0.0));

        // the identity operator has no rank-one dyad structure
        let ident = SuperOp::identity(3);
        let probe = rank_one_image_structure(&ident, &eta);
        assert!(probe.residual > 0.5);
    }

    #[test]
    fn probe_vectors_stay_within_operator_norm() {
        let b = random_hermitian(3, 55);
        let h = make_commutator(&b);
        let bound = (0..9)
            .map(|k| h.image(k).frobenius_norm())
            .fold(0.0f64, f64::max);
        for seed in 0..10 {
            let eta = random_unit_vector(3, 700 + seed);
            let probe = rank_one_image_structure(&h, &eta);
            let len = crate::spectral::vec_norm(&probe.f);
            assert!(len <= bound + 1e-7, "{len} > {bound}");
        }
    }

    #[test]
    fn round_trip_recovers_the_generator() {
        for n in 2..=8 {
            for rep in 0..3u64 {
                let b = random_trace_zero_hermitian(n, 40 * n as u64 + rep);
                let h = make_commutator(&b);
                let gen = extract_generator(&h).unwrap();
                assert!(gen.residual < 1e-9, "n={n} residual {}", gen.residual);
                let err = (gen.b.matrix() - b.matrix()).frobenius_norm();
                assert!(err < 1e-9, "n={n} err {err}");
                assert!(gen.b.trace_re().abs() < 1e-10);
            }
        }
    }

    #[test]
    fn identity_shift_is_invisible() {
        let b = random_trace_zero_hermitian(3, 77);
        let shifted = HermitianMatrix::linear_combination(
            &[(1.0, &b), (3.0, &HermitianMatrix::identity(3))],
            3,
        );
        let gen = extract_generator(&make_commutator(&shifted)).unwrap();
        assert!((gen.b.matrix() - b.matrix()).frobenius_norm() < 1e-9);
    }

    #[test]
    fn rotation_witness_is_not_a_commutator() {
        let gen = extract_generator(&rotation_witness(2)).unwrap();
        assert!(gen.residual >= 0.5, "residual {}", gen.residual);
    }

    #[test]
    fn verify_commutator_grows_linearly_in_perturbation() {
        let b = random_trace_zero_hermitian(2, 5);
        let h = make_commutator(&b);
        let g: SymmetricGauge = "lp:2".parse().unwrap();
        assert!(verify_commutator(&h, &b, &g).unwrap() < 1e-9);
        let value_at = |eps: f64| {
            let perturbed = HermitianMatrix::linear_combination(
                &[(1.0, &b), (eps, &HermitianMatrix::from_real_diag(&[1.0, -1.0]))],
                2,
            );
            verify_commutator(&h, &perturbed, &g).unwrap()
        };
        let v3 = value_at(1e-3);
        let v4 = value_at(1e-4);
        let ratio = v3 / v4;
        assert!((ratio - 10.0).abs() < 1.0, "ratio {ratio}");
    }

    #[test]
    fn trace_defect_bounds_the_rotation_residual() {
        // Tr H(E₁₁) = 1 while commutator images are traceless, so the
        // operator-norm mismatch is at least 1/n for any candidate b.
        let h = rotation_witness(2);
        for seed in 0..5 {
            let b = random_hermitian(2, 800 + seed);
            let g: SymmetricGauge = "lp:inf".parse().unwrap();
            let value = verify_commutator(&h, &b, &g).unwrap();
            assert!(value >= 0.5 - 1e-12, "value {value}");
        }
    }

    #[test]
    fn extraction_is_gauge_free_and_covariant() {
        let b = random_trace_zero_hermitian(3, 13);
        let h = make_commutator(&b);
        let gen = extract_generator(&h).unwrap();
        for text in ["lp:1", "lp:4", "orlicz:pow:3", "lorentz:pow:0.5"] {
            let g: SymmetricGauge = text.parse().unwrap();
            assert!(verify_commutator(&h, &gen.b, &g).unwrap() < 1e-8);
        }
        // conjugation covariance: extract(V H V⁻¹) = u b u*
        for seed in 0..4 {
            let u = random_unitary(3, 900 + seed);
            let conj = h.conjugate_by(&u);
            let gen_c = extract_generator(&conj).unwrap();
            let expect =
                HermitianMatrix::symmetrize(&(&(&u * b.matrix()) * &u.adjoint()));
            let err = (gen_c.b.matrix() - expect.matrix()).frobenius_norm();
            assert!(err < 1e-7, "covariance error {err}");
        }
    }

    #[test]
    fn hermitian_probe_defect_is_tiny_for_commutators() {
        // the Hermitian part of the probe matrix vanishes for commutators,
        // and the residual dominates it
        let b = random_trace_zero_hermitian(4, 21);
        let gen = extract_generator(&make_commutator(&b)).unwrap();
        assert!(gen.residual < 1e-9);
    }

    #[test]
    fn grid_witness_flags_the_rotation() {
        let h = rotation_witness(2);
        for text in ["lp:4", "lorentz:pow:0.5"] {
            let g: SymmetricGauge = text.parse().unwrap();
            let (witness, value) = diagonal_grid_witness(&g, &h, 1000).unwrap();
            assert!(value >= 1e-3, "{text} best witness only {value}");
            let again = semi_inner(&g, &h.apply(&witness), &witness).unwrap().abs();
            close(again, value, 1e-12);
        }
    }

    #[test]
    fn dichotomy_report_passes_at_dim_two() {
        let cells = dichotomy_report(2, 30, 123).unwrap();
        assert_eq!(cells.len(), 8);
        for cell in &cells {
            assert!(
                cell.all_pass(),
                "cell {} failed: {:?}",
                cell.gauge,
                cell.verdicts
            );
        }
    }

    #[test]
    fn operator_norm_is_the_top_singular_value() {
        let b = random_hermitian(3, 1);
        let sv = crate::spectral::singular_values(b.matrix()).unwrap();
        close(operator_norm(b.matrix()).unwrap(), sv[0], 1e-12);
    }
}
