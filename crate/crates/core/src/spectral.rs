//! Dense Hermitian linear algebra kernel.
//!
//! Matrices are stored row-major over `Complex64`. The eigensolver is a
//! cyclic Jacobi iteration on the Hermitian matrix itself: deterministic,
//! accurate to near machine precision at the small dimensions this crate
//! targets (n ≤ 64).

use std::fmt;
use std::ops::{Add, Deref, Mul, Sub};

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::gauge::SymmetricGauge;
use crate::{Error, Result};

const JACOBI_MAX_SWEEPS: usize = 64;
const HERMITIAN_TOL: f64 = 1e-12;

/// Inner product Σ x_k conj(y_k), linear in the first argument.
pub fn vec_inner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

/// Euclidean length of a complex vector.
pub fn vec_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for j in 0..dim {
            m[(j, j)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (j, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            for (k, v) in row.iter().enumerate() {
                m[(j, k)] = *v;
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for j in 0..n {
            for k in 0..n {
                out[(j, k)] = self[(k, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix { dim: self.dim, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|j| self[(j, j)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Matrix-vector product.
    pub fn apply_vec(&self, h: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim;
        assert_eq!(h.len(), n, "vector length must match matrix dimension");
        (0..n)
            .map(|j| (0..n).map(|k| self[(j, k)] * h[k]).sum())
            .collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (j, k): (usize, usize)) -> &Complex64 {
        &self.data[j * self.dim + k]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (j, k): (usize, usize)) -> &mut Complex64 {
        &mut self.data[j * self.dim + k]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for j in 0..n {
            for l in 0..n {
                let a = self[(j, l)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..n {
                    let v = a * rhs[(l, k)];
                    out[(j, k)] += v;
                }
            }
        }
        out
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.dim {
            for k in 0..self.dim {
                let v = self[(j, k)];
                write!(out, "{:+.4}{:+.4}i ", v.re, v.im)?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

// JSON form: { "dim": n, "entries": [[re, im], ...] } row-major.
#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

impl From<&ComplexMatrix> for MatrixJson {
    fn from(m: &ComplexMatrix) -> Self {
        MatrixJson { dim: m.dim, entries: m.data.iter().map(|v| [v.re, v.im]).collect() }
    }
}

impl TryFrom<MatrixJson> for ComplexMatrix {
    type Error = Error;
    fn try_from(j: MatrixJson) -> Result<Self> {
        if j.entries.len() != j.dim * j.dim {
            return Err(Error::DimensionMismatch { expected: j.dim * j.dim, got: j.entries.len() });
        }
        Ok(ComplexMatrix {
            dim: j.dim,
            data: j.entries.iter().map(|[re, im]| Complex64::new(*re, *im)).collect(),
        })
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        ComplexMatrix::try_from(j).map_err(D::Error::custom)
    }
}

/// A validated Hermitian matrix. Construction checks conjugate symmetry to
/// 1e-12 elementwise and then stores the exact symmetrization (m + m*)/2 so
/// that downstream algebra stays Hermitian to the last bit.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct HermitianMatrix(ComplexMatrix);

impl HermitianMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let n = m.dim();
        let mut defect = 0.0f64;
        for j in 0..n {
            for k in j..n {
                let d = (m[(j, k)] - m[(k, j)].conj()).norm();
                defect = defect.max(d);
            }
        }
        if defect > HERMITIAN_TOL {
            return Err(Error::NotHermitian(defect));
        }
        Ok(Self::symmetrize(&m))
    }

    /// Exact (m + m*)/2 without the validation gate.
    pub fn symmetrize(m: &ComplexMatrix) -> Self {
        let n = m.dim();
        let mut out = ComplexMatrix::zeros(n);
        for j in 0..n {
            out[(j, j)] = Complex64::new(m[(j, j)].re, 0.0);
            for k in (j + 1)..n {
                let v = (m[(j, k)] + m[(k, j)].conj()).scale(0.5);
                out[(j, k)] = v;
                out[(k, j)] = v.conj();
            }
        }
        HermitianMatrix(out)
    }

    pub(crate) fn new_unchecked(m: ComplexMatrix) -> Self {
        HermitianMatrix(m)
    }

    pub fn zero(dim: usize) -> Self {
        HermitianMatrix(ComplexMatrix::zeros(dim))
    }

    pub fn identity(dim: usize) -> Self {
        HermitianMatrix(ComplexMatrix::identity(dim))
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let mut m = ComplexMatrix::zeros(diag.len());
        for (j, v) in diag.iter().enumerate() {
            m[(j, j)] = Complex64::new(*v, 0.0);
        }
        HermitianMatrix(m)
    }

    /// Rank-one projection-style dyad η⊗η (a projection when ‖η‖ = 1).
    pub fn dyad(eta: &[Complex64]) -> Self {
        HermitianMatrix(RankOneOp::new(eta.to_vec(), eta.to_vec()).to_matrix())
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    /// Real trace.
    pub fn trace_re(&self) -> f64 {
        self.0.trace().re
    }

    /// Real linear combination of Hermitian matrices.
    pub fn linear_combination(terms: &[(f64, &HermitianMatrix)], dim: usize) -> Self {
        let mut out = ComplexMatrix::zeros(dim);
        for (c, h) in terms {
            for (slot, v) in out.data.iter_mut().zip(&h.0.data) {
                *slot += v.scale(*c);
            }
        }
        HermitianMatrix(out)
    }
}

impl Deref for HermitianMatrix {
    type Target = ComplexMatrix;
    fn deref(&self) -> &ComplexMatrix {
        &self.0
    }
}

impl<'de> Deserialize<'de> for HermitianMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = ComplexMatrix::deserialize(d)?;
        HermitianMatrix::new(m).map_err(D::Error::custom)
    }
}

/// Dyad ξ⊗η acting as (ξ⊗η)(h) = (h, η)ξ.
#[derive(Debug, Clone)]
pub struct RankOneOp {
    pub left: Vec<Complex64>,
    pub right: Vec<Complex64>,
}

impl RankOneOp {
    pub fn new(left: Vec<Complex64>, right: Vec<Complex64>) -> Self {
        assert_eq!(left.len(), right.len(), "dyad factors must have equal length");
        RankOneOp { left, right }
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let n = self.left.len();
        let mut m = ComplexMatrix::zeros(n);
        for j in 0..n {
            for k in 0..n {
                m[(j, k)] = self.left[j] * self.right[k].conj();
            }
        }
        m
    }

    pub fn apply(&self, h: &[Complex64]) -> Vec<Complex64> {
        let c = vec_inner(h, &self.right);
        self.left.iter().map(|v| v * c).collect()
    }
}

/// Eigendecomposition of a Hermitian matrix: x = u · diag(values) · u*.
pub struct Eigh {
    /// Real eigenvalues, sorted non-increasing; ties keep the order the
    /// Jacobi iteration produced (stable sort).
    pub values: Vec<f64>,
    /// Unitary matrix whose columns are the corresponding eigenvectors.
    pub vectors: ComplexMatrix,
}

/// Cyclic Jacobi eigensolver for Hermitian matrices.
pub fn eigh(x: &HermitianMatrix) -> Result<Eigh> {
    let n = x.dim();
    let mut a = x.matrix().clone();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();
    let tol = 1e-13 * scale.max(f64::MIN_POSITIVE);

    let off = |a: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for j in 0..n {
            for k in (j + 1)..n {
                s += 2.0 * a[(j, k)].norm_sqr();
            }
        }
        s.sqrt()
    };

    let mut converged = off(&a) <= tol;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
        converged = off(&a) <= tol;
    }
    if !converged {
        return Err(Error::NonConvergence("Jacobi sweeps exhausted"));
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|j| a[(j, j)].re).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).expect("finite eigenvalues"));

    let values: Vec<f64> = order.iter().map(|&j| diag[j]).collect();
    let mut vectors = ComplexMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, col)] = v[(row, src)];
        }
    }
    Ok(Eigh { values, vectors })
}

/// One Jacobi rotation zeroing the (p, q) entry: a phase turn making the
/// pivot real followed by the classical real rotation.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim();
    let apq = a[(p, q)];
    let m = apq.norm();
    if m == 0.0 {
        return;
    }
    let phase_conj = (apq / m).conj(); // e^{-iφ}
    let alpha = a[(p, p)].re;
    let gamma = a[(q, q)].re;
    let tau = (gamma - alpha) / (2.0 * m);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        let new_kp = akp.scale(c) - akq * phase_conj.scale(s);
        let new_kq = akp.scale(s) + akq * phase_conj.scale(c);
        a[(k, p)] = new_kp;
        a[(k, q)] = new_kq;
        a[(p, k)] = new_kp.conj();
        a[(q, k)] = new_kq.conj();
    }
    a[(p, p)] = Complex64::new(alpha - t * m, 0.0);
    a[(q, q)] = Complex64::new(gamma + t * m, 0.0);
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp.scale(c) - vkq * phase_conj.scale(s);
        v[(k, q)] = vkp.scale(s) + vkq * phase_conj.scale(c);
    }
}

/// Singular values: eigenvalues of (x*x)^{1/2}, non-increasing.
///
/// Matrices that are Hermitian to the bit (the storage form of
/// [`HermitianMatrix`]) take the direct spectral route |eigh(x)|, which
/// avoids the precision loss of squaring near-degenerate spectra.
pub fn singular_values(x: &ComplexMatrix) -> Result<Vec<f64>> {
    if x.adjoint() == *x {
        let eig = eigh(&HermitianMatrix::new_unchecked(x.clone()))?;
        return Ok(crate::gauge::rearrange(&eig.values));
    }
    let h = &x.adjoint() * x;
    // x*x is Hermitian by construction, bit-exactly.
    let eig = eigh(&HermitianMatrix::new_unchecked(h))?;
    Ok(eig.values.iter().map(|v| v.max(0.0).sqrt()).collect())
}

/// Ideal norm: the gauge norm of the singular value vector.
pub fn ideal_norm(g: &SymmetricGauge, x: &ComplexMatrix) -> Result<f64> {
    g.norm(&singular_values(x)?)
}

/// Largest singular value.
pub fn operator_norm(x: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values(x)?[0])
}

/// Trace pairing Tr(y* x); real when both arguments are Hermitian.
pub fn trace_pair(x: &ComplexMatrix, y: &ComplexMatrix) -> Complex64 {
    assert_eq!(x.dim(), y.dim(), "trace pairing needs equal dimensions");
    x.entries().iter().zip(y.entries()).map(|(a, b)| a * b.conj()).sum()
}

/// Trace pairing restricted to the Hermitian case.
pub fn trace_pair_re(x: &HermitianMatrix, y: &HermitianMatrix) -> f64 {
    trace_pair(x.matrix(), y.matrix()).re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauge::{rearrange, PsiFn};
    use crate::harness::{random_hermitian, random_unitary};

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn eigh_diagonal() {
        let x = HermitianMatrix::from_real_diag(&[1.0, 5.0, 3.0]);
        let eig = eigh(&x).unwrap();
        assert_eq!(eig.values, vec![5.0, 3.0, 1.0]);
    }

    #[test]
    fn eigh_pauli_x() {
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 1)] = Complex64::new(1.0, 0.0);
        m[(1, 0)] = Complex64::new(1.0, 0.0);
        let eig = eigh(&HermitianMatrix::new(m).unwrap()).unwrap();
        close(eig.values[0], 1.0, 1e-14);
        close(eig.values[1], -1.0, 1e-14);
    }

    #[test]
    fn eigh_reconstructs_random_matrices() {
        for seed in 0..8 {
            for n in [2, 3, 5, 8] {
                let x = random_hermitian(n, seed);
                let eig = eigh(&x).unwrap();
                let u = &eig.vectors;
                // u · diag(λ) · u*
                let mut lam = ComplexMatrix::zeros(n);
                for j in 0..n {
                    lam[(j, j)] = Complex64::new(eig.values[j], 0.0);
                }
                let rebuilt = &(u * &lam) * &u.adjoint();
                assert!((&rebuilt - x.matrix()).frobenius_norm() < 1e-10);
                // unitarity
                let gram = &u.adjoint() * u;
                assert!((&gram - &ComplexMatrix::identity(n)).frobenius_norm() < 1e-10);
            }
        }
    }

    #[test]
    fn singular_values_of_diagonals_and_nilpotents() {
        let d = HermitianMatrix::from_real_diag(&[3.0, -1.0]);
        assert_eq!(singular_values(d.matrix()).unwrap(), vec![3.0, 1.0]);

        let mut m = ComplexMatrix::zeros(2);
        m[(0, 1)] = Complex64::new(2.0, 0.0);
        let sv = singular_values(&m).unwrap();
        close(sv[0], 2.0, 1e-14);
        close(sv[1], 0.0, 1e-14);
    }

    #[test]
    fn hermitian_singular_values_are_rearranged_eigenvalues() {
        for seed in 0..5 {
            let x = random_hermitian(4, 100 + seed);
            let sv = singular_values(x.matrix()).unwrap();
            let expect = rearrange(&eigh(&x).unwrap().values);
            for (a, b) in sv.iter().zip(&expect) {
                close(*a, *b, 1e-10);
            }
        }
    }

    #[test]
    fn ideal_norm_examples() {
        let g1 = SymmetricGauge::lp(1.0).unwrap();
        let x = HermitianMatrix::from_real_diag(&[1.0, 2.0, 3.0]);
        close(ideal_norm(&g1, x.matrix()).unwrap(), 6.0, 1e-12);

        let gl = SymmetricGauge::lorentz(PsiFn::Power(0.5)).unwrap();
        let id2 = HermitianMatrix::identity(2);
        close(ideal_norm(&gl, id2.matrix()).unwrap(), 2.0_f64.sqrt(), 1e-12);
    }

    #[test]
    fn unitary_invariance_of_ideal_norm() {
        let g = SymmetricGauge::lp(f64::INFINITY).unwrap();
        for seed in 0..5 {
            let x = random_hermitian(4, 200 + seed);
            let u = random_unitary(4, 300 + seed);
            let ux = &u * x.matrix();
            close(ideal_norm(&g, &ux).unwrap(), ideal_norm(&g, x.matrix()).unwrap(), 1e-9);
        }
    }

    #[test]
    fn norm_of_modulus_and_adjoint_agree() {
        let g = SymmetricGauge::lp(1.5).unwrap();
        for seed in 0..5 {
            let x = random_hermitian(5, 400 + seed);
            let base = ideal_norm(&g, x.matrix()).unwrap();
            close(ideal_norm(&g, &x.adjoint()).unwrap(), base, 1e-10);
            // |x| through the spectral calculus
            let eig = eigh(&x).unwrap();
            let mut lam = ComplexMatrix::zeros(5);
            for j in 0..5 {
                lam[(j, j)] = Complex64::new(eig.values[j].abs(), 0.0);
            }
            let modulus = &(&eig.vectors * &lam) * &eig.vectors.adjoint();
            close(ideal_norm(&g, &modulus).unwrap(), base, 1e-10);
        }
    }

    #[test]
    fn trace_pair_examples() {
        let id = ComplexMatrix::identity(3);
        let t = trace_pair(&id, &id);
        close(t.re, 3.0, 1e-14);
        close(t.im, 0.0, 1e-14);

        // projection pairing picks out the quadratic form
        let x = random_hermitian(3, 7);
        let eta = crate::harness::random_unit_vector(3, 8);
        let q = HermitianMatrix::dyad(&eta);
        let lhs = trace_pair_re(&x, &q);
        let rhs = vec_inner(&x.apply_vec(&eta), &eta).re;
        close(lhs, rhs, 1e-12);
    }

    #[test]
    fn commutators_are_traceless() {
        let x = random_hermitian(4, 11);
        let b = random_hermitian(4, 12);
        let comm = (&(x.matrix() * b.matrix()) - &(b.matrix() * x.matrix()))
            .scale(Complex64::new(0.0, 1.0));
        let t = trace_pair(&comm, &ComplexMatrix::identity(4));
        assert!(t.norm() < 1e-13);
    }

    #[test]
    fn dyad_singular_values() {
        let xi = vec![Complex64::new(1.0, 2.0), Complex64::new(0.0, -1.0), Complex64::new(0.5, 0.0)];
        let eta = vec![Complex64::new(0.0, 1.0), Complex64::new(2.0, 0.0), Complex64::new(1.0, 1.0)];
        let dyad = RankOneOp::new(xi.clone(), eta.clone()).to_matrix();
        let sv = singular_values(&dyad).unwrap();
        close(sv[0], vec_norm(&xi) * vec_norm(&eta), 1e-12);
        for v in &sv[1..] {
            close(*v, 0.0, 1e-12);
        }
        // dyad action matches (h, η)ξ
        let h = crate::harness::random_unit_vector(3, 5);
        let lhs = dyad.apply_vec(&h);
        let c = vec_inner(&h, &eta);
        for (a, b) in lhs.iter().zip(xi.iter().map(|v| v * c)) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn hermitian_validation() {
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 1)] = Complex64::new(1.0, 0.0);
        m[(1, 0)] = Complex64::new(0.5, 0.0);
        assert!(matches!(HermitianMatrix::new(m), Err(Error::NotHermitian(_))));

        let mut ok = ComplexMatrix::zeros(2);
        ok[(0, 1)] = Complex64::new(0.0, 1.0);
        ok[(1, 0)] = Complex64::new(0.0, -1.0);
        assert!(HermitianMatrix::new(ok).is_ok());
    }

    #[test]
    fn matrix_json_round_trip() {
        let x = random_hermitian(3, 42);
        let text = serde_json::to_string(&x).unwrap();
        let back: HermitianMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, &x);
        // asymmetric payloads are rejected at the type boundary
        let bad = r#"{"dim":2,"entries":[[0,0],[1,0],[0.5,0],[0,0]]}"#;
        assert!(serde_json::from_str::<HermitianMatrix>(bad).is_err());
        assert!(serde_json::from_str::<ComplexMatrix>(bad).is_ok());
    }
}
