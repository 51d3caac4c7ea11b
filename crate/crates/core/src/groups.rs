//! Concrete locally compact groups: finite products of cyclic groups, the
//! circle group 𝕋, ℝⁿ, and SU(n).
//!
//! Elements carry canonical representatives (indices reduced mod order,
//! angles reduced mod 2π), so equality on the exact kinds is meaningful.
//! All supported groups are unimodular; the modular function is exposed
//! anyway so that formulas carrying a Δ(g)^{1/2} factor evaluate it instead
//! of silently dropping it.

use std::f64::consts::TAU;

use nalgebra::Matrix2;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

/// Unitarity / determinant tolerance for matrix-group membership.
pub const MATRIX_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub enum GroupKind {
    /// Product of cyclic groups Z_{n_1} × … × Z_{n_m}.
    FiniteProduct(Vec<u32>),
    /// The circle group 𝕋, elements are angles in [0, 2π).
    Circle,
    /// ℝⁿ under addition.
    Euclidean(usize),
    /// SU(n), n ≥ 2.
    SpecialUnitary(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    kind: GroupKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GroupElement {
    /// Index tuple for a finite product, each coordinate in [0, order).
    Indices(Vec<u32>),
    /// Angle in [0, 2π).
    Angle(f64),
    /// Real vector.
    Vector(Vec<f64>),
    /// Unitary matrix with determinant 1.
    Matrix(CMatrix),
}

impl Group {
    pub fn finite_product(orders: &[u32]) -> Result<Self> {
        if orders.is_empty() || orders.iter().any(|&n| n == 0) {
            return Err(Error::InvalidParameter(
                "finite product needs at least one factor, all orders ≥ 1".into(),
            ));
        }
        Ok(Self {
            kind: GroupKind::FiniteProduct(orders.to_vec()),
        })
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::finite_product(&[n])
    }

    pub fn circle() -> Self {
        Self { kind: GroupKind::Circle }
    }

    pub fn euclidean(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("euclidean dimension must be ≥ 1".into()));
        }
        Ok(Self { kind: GroupKind::Euclidean(n) })
    }

    pub fn special_unitary(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("SU(n) requires n ≥ 2".into()));
        }
        Ok(Self { kind: GroupKind::SpecialUnitary(n) })
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            GroupKind::FiniteProduct(orders) => orders
                .iter()
                .map(|n| format!("Z{n}"))
                .collect::<Vec<_>>()
                .join("x"),
            GroupKind::Circle => "T".into(),
            GroupKind::Euclidean(n) => format!("R^{n}"),
            GroupKind::SpecialUnitary(n) => format!("SU({n})"),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, GroupKind::FiniteProduct(_))
    }

    pub fn is_compact(&self) -> bool {
        !matches!(self.kind, GroupKind::Euclidean(_))
    }

    pub fn is_abelian(&self) -> bool {
        !matches!(self.kind, GroupKind::SpecialUnitary(_))
    }

    /// All supported groups are unimodular.
    pub fn is_unimodular(&self) -> bool {
        true
    }

    /// Modular function Δ(g); identically 1 on every supported kind.
    pub fn modular_function(&self, g: &GroupElement) -> Result<f64> {
        self.validate(g)?;
        Ok(1.0)
    }

    /// Number of elements for finite products.
    pub fn order(&self) -> Option<u64> {
        match &self.kind {
            GroupKind::FiniteProduct(orders) => {
                Some(orders.iter().map(|&n| u64::from(n)).product())
            }
            _ => None,
        }
    }

    /// Dimension of the Lie algebra for the connected kinds.
    pub fn lie_dim(&self) -> Option<usize> {
        match &self.kind {
            GroupKind::FiniteProduct(_) => None,
            GroupKind::Circle => Some(1),
            GroupKind::Euclidean(n) => Some(*n),
            GroupKind::SpecialUnitary(n) => Some(n * n - 1),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match &self.kind {
            GroupKind::FiniteProduct(orders) => GroupElement::Indices(vec![0; orders.len()]),
            GroupKind::Circle => GroupElement::Angle(0.0),
            GroupKind::Euclidean(n) => GroupElement::Vector(vec![0.0; *n]),
            GroupKind::SpecialUnitary(n) => GroupElement::Matrix(linalg::identity(*n)),
        }
    }

    /// Canonical element of a finite product from (possibly unreduced) indices.
    pub fn element_from_indices(&self, idx: &[i64]) -> Result<GroupElement> {
        let GroupKind::FiniteProduct(orders) = &self.kind else {
            return Err(Error::Unsupported(format!(
                "index elements only exist on finite products, not {}",
                self.describe()
            )));
        };
        if idx.len() != orders.len() {
            return Err(Error::DimensionMismatch {
                expected: orders.len(),
                found: idx.len(),
            });
        }
        Ok(GroupElement::Indices(
            idx.iter()
                .zip(orders)
                .map(|(&x, &n)| (x.rem_euclid(i64::from(n))) as u32)
                .collect(),
        ))
    }

    /// Canonical angle element with the angle reduced to [0, 2π).
    pub fn element_from_angle(&self, theta: f64) -> Result<GroupElement> {
        if self.kind != GroupKind::Circle {
            return Err(Error::Unsupported(format!(
                "angle elements only exist on the circle, not {}",
                self.describe()
            )));
        }
        Ok(GroupElement::Angle(reduce_angle(theta)))
    }

    /// Checks that `g` has the variant of this group and satisfies the
    /// membership invariants (index ranges; angle range; unitarity and
    /// unit determinant within `MATRIX_TOL`).
    pub fn validate(&self, g: &GroupElement) -> Result<()> {
        let mismatch = |reason: &str| Error::ElementMismatch {
            group: self.describe(),
            reason: reason.into(),
        };
        match (&self.kind, g) {
            (GroupKind::FiniteProduct(orders), GroupElement::Indices(idx)) => {
                if idx.len() != orders.len() {
                    return Err(mismatch("index tuple length differs from factor count"));
                }
                if idx.iter().zip(orders).any(|(&x, &n)| x >= n) {
                    return Err(mismatch("index out of range"));
                }
                Ok(())
            }
            (GroupKind::Circle, GroupElement::Angle(a)) => {
                if !a.is_finite() || *a < 0.0 || *a >= TAU {
                    return Err(mismatch("angle outside [0, 2π)"));
                }
                Ok(())
            }
            (GroupKind::Euclidean(n), GroupElement::Vector(v)) => {
                if v.len() != *n {
                    return Err(mismatch("vector length differs from dimension"));
                }
                if v.iter().any(|x| !x.is_finite()) {
                    return Err(mismatch("non-finite coordinate"));
                }
                Ok(())
            }
            (GroupKind::SpecialUnitary(n), GroupElement::Matrix(m)) => {
                if m.nrows() != *n || m.ncols() != *n {
                    return Err(mismatch("matrix dimension differs from n"));
                }
                if linalg::unitary_deviation(m) > MATRIX_TOL {
                    return Err(mismatch("matrix is not unitary within tolerance"));
                }
                if (m.determinant() - Complex64::new(1.0, 0.0)).norm() > MATRIX_TOL {
                    return Err(mismatch("determinant differs from 1"));
                }
                Ok(())
            }
            _ => Err(mismatch("element variant does not match group kind")),
        }
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.validate(g)?;
        self.validate(h)?;
        Ok(match (g, h) {
            (GroupElement::Indices(a), GroupElement::Indices(b)) => {
                let GroupKind::FiniteProduct(orders) = &self.kind else { unreachable!() };
                GroupElement::Indices(
                    a.iter()
                        .zip(b)
                        .zip(orders)
                        .map(|((&x, &y), &n)| (x + y) % n)
                        .collect(),
                )
            }
            (GroupElement::Angle(a), GroupElement::Angle(b)) => {
                GroupElement::Angle(reduce_angle(a + b))
            }
            (GroupElement::Vector(a), GroupElement::Vector(b)) => {
                GroupElement::Vector(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => GroupElement::Matrix(a * b),
            _ => unreachable!("validate rules out mixed variants"),
        })
    }

    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        self.validate(g)?;
        Ok(match g {
            GroupElement::Indices(a) => {
                let GroupKind::FiniteProduct(orders) = &self.kind else { unreachable!() };
                GroupElement::Indices(a.iter().zip(orders).map(|(&x, &n)| (n - x) % n).collect())
            }
            GroupElement::Angle(a) => GroupElement::Angle(reduce_angle(-a)),
            GroupElement::Vector(a) => GroupElement::Vector(a.iter().map(|x| -x).collect()),
            GroupElement::Matrix(a) => GroupElement::Matrix(a.adjoint()),
        })
    }

    /// A sample from the normalized Haar measure. Errors on ℝⁿ, which carries
    /// no Haar probability measure.
    pub fn haar_sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<GroupElement> {
        match &self.kind {
            GroupKind::FiniteProduct(orders) => Ok(GroupElement::Indices(
                orders.iter().map(|&n| rng.random_range(0..n)).collect(),
            )),
            GroupKind::Circle => Ok(GroupElement::Angle(rng.random_range(0.0..TAU))),
            GroupKind::Euclidean(_) => Err(Error::NoHaarMeasure(self.describe())),
            GroupKind::SpecialUnitary(2) => Ok(GroupElement::Matrix(su2_to_dmatrix(
                &haar_su2(rng),
            ))),
            GroupKind::SpecialUnitary(n) => Ok(GroupElement::Matrix(haar_sun(*n, rng))),
        }
    }

    /// Lie exponential. The tangent vector is expressed in coordinates:
    /// a single speed on 𝕋, plain coordinates on ℝⁿ, and coefficients of
    /// `i·λ_k/2` on SU(n), where λ_k are the generalized Gell-Mann matrices
    /// (for SU(2): the Pauli matrices).
    pub fn exp_map(&self, tangent: &[f64]) -> Result<GroupElement> {
        let dim = self.lie_dim().ok_or_else(|| {
            Error::Unsupported(format!("no exponential map on {}", self.describe()))
        })?;
        if tangent.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: tangent.len(),
            });
        }
        match &self.kind {
            GroupKind::Circle => Ok(GroupElement::Angle(reduce_angle(tangent[0]))),
            GroupKind::Euclidean(_) => Ok(GroupElement::Vector(tangent.to_vec())),
            GroupKind::SpecialUnitary(2) => Ok(GroupElement::Matrix(su2_to_dmatrix(&su2_exp(
                [tangent[0], tangent[1], tangent[2]],
            )))),
            GroupKind::SpecialUnitary(n) => {
                let mut h = CMatrix::zeros(*n, *n);
                for (k, &c) in tangent.iter().enumerate() {
                    if c != 0.0 {
                        h += gell_mann(*n, k).scale(c);
                    }
                }
                // exp(i H / 2), H Hermitian
                Ok(GroupElement::Matrix(linalg::expm(
                    &(h * Complex64::new(0.0, 0.5)),
                )))
            }
            GroupKind::FiniteProduct(_) => unreachable!("lie_dim is None"),
        }
    }

    /// Elements of a finite product in mixed-radix order (last coordinate
    /// fastest), so that `(p, q)` on Z_d×Z_d sits at index `p·d + q`.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        let GroupKind::FiniteProduct(orders) = &self.kind else {
            return Err(Error::Unsupported(format!(
                "cannot enumerate elements of {}",
                self.describe()
            )));
        };
        let total = self.order().unwrap() as usize;
        let mut out = Vec::with_capacity(total);
        let mut idx = vec![0u32; orders.len()];
        loop {
            out.push(GroupElement::Indices(idx.clone()));
            let mut pos = orders.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < orders[pos] {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// Position of a finite-product element in the [`elements`](Self::elements) order.
    pub fn element_index(&self, g: &GroupElement) -> Result<usize> {
        self.validate(g)?;
        let (GroupKind::FiniteProduct(orders), GroupElement::Indices(idx)) = (&self.kind, g) else {
            return Err(Error::Unsupported(format!(
                "element indexing requires a finite product, not {}",
                self.describe()
            )));
        };
        let mut acc = 0usize;
        for (&x, &n) in idx.iter().zip(orders) {
            acc = acc * n as usize + x as usize;
        }
        Ok(acc)
    }

    /// A kind-appropriate distance, used by approximate atom matching and
    /// by tests: discrete metric contribution per differing index, circular
    /// distance on 𝕋, Euclidean distance on ℝⁿ, Frobenius distance on SU(n).
    pub fn distance(&self, g: &GroupElement, h: &GroupElement) -> Result<f64> {
        self.validate(g)?;
        self.validate(h)?;
        Ok(match (g, h) {
            (GroupElement::Indices(a), GroupElement::Indices(b)) => {
                if a == b {
                    0.0
                } else {
                    1.0
                }
            }
            (GroupElement::Angle(a), GroupElement::Angle(b)) => {
                let d = (a - b).abs();
                d.min(TAU - d)
            }
            (GroupElement::Vector(a), GroupElement::Vector(b)) => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt(),
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => (a - b).norm(),
            _ => unreachable!("validate rules out mixed variants"),
        })
    }
}

fn reduce_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    // rem_euclid can return TAU when a is a tiny negative number
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// SU(2) element as a unit quaternion (a, b, c, d) ↦ a·I + i(b σ₁ + c σ₂ + d σ₃).
#[derive(Debug, Clone, Copy)]
pub(crate) struct Su2(pub [f64; 4]);

pub(crate) fn su2_to_dmatrix(q: &Su2) -> CMatrix {
    let [a, b, c, d] = q.0;
    CMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::new(a, d),
            Complex64::new(c, b),
            Complex64::new(-c, b),
            Complex64::new(a, -d),
        ],
    )
}

pub(crate) fn su2_to_matrix2(q: &Su2) -> Matrix2<Complex64> {
    let [a, b, c, d] = q.0;
    Matrix2::new(
        Complex64::new(a, d),
        Complex64::new(c, b),
        Complex64::new(-c, b),
        Complex64::new(a, -d),
    )
}

/// Haar sample on SU(2): normalized 4-dimensional standard Gaussian.
pub(crate) fn haar_su2<R: Rng + ?Sized>(rng: &mut R) -> Su2 {
    loop {
        let q: [f64; 4] = [
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
        ];
        let norm = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt();
        if norm > 1e-100 {
            return Su2([q[0] / norm, q[1] / norm, q[2] / norm, q[3] / norm]);
        }
    }
}

/// Closed-form exponential exp(i(x σ₁ + y σ₂ + z σ₃)/2) as a quaternion.
pub(crate) fn su2_exp(coeffs: [f64; 3]) -> Su2 {
    let [x, y, z] = coeffs;
    let theta = (x * x + y * y + z * z).sqrt();
    if theta < 1e-300 {
        return Su2([1.0, 0.0, 0.0, 0.0]);
    }
    let (s, c) = (theta / 2.0).sin_cos();
    let f = s / theta;
    Su2([c, f * x, f * y, f * z])
}

/// Haar sample on SU(n) via QR of a complex Ginibre matrix with phase
/// correction, then determinant normalization into SU(n).
fn haar_sun<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    let g = linalg::random_matrix(n, rng);
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    // make diag(R) real positive so Q is Haar on U(n)
    for j in 0..n {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 {
            rjj / rjj.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    // divide by an n-th root of the determinant to land in SU(n)
    let det = q.determinant();
    let correction = Complex64::from_polar(1.0, -det.arg() / n as f64);
    q * correction
}

/// Generalized Gell-Mann basis of Hermitian traceless n×n matrices,
/// normalized so that tr(λ_j λ_k) = 2 δ_jk. Ordering: symmetric pairs, then
/// antisymmetric pairs, then diagonal. For n = 2 this is σ₁, σ₂, σ₃.
pub fn gell_mann(n: usize, k: usize) -> CMatrix {
    let n_sym = n * (n - 1) / 2;
    let mut m = CMatrix::zeros(n, n);
    if k < n_sym {
        let (j, l) = pair_from_index(n, k);
        m[(j, l)] = Complex64::new(1.0, 0.0);
        m[(l, j)] = Complex64::new(1.0, 0.0);
    } else if k < 2 * n_sym {
        let (j, l) = pair_from_index(n, k - n_sym);
        m[(j, l)] = Complex64::new(0.0, -1.0);
        m[(l, j)] = Complex64::new(0.0, 1.0);
    } else {
        let l = k - 2 * n_sym + 1; // 1..=n-1
        assert!(l < n, "generator index out of range");
        let scale = (2.0 / (l as f64 * (l + 1) as f64)).sqrt();
        for j in 0..l {
            m[(j, j)] = Complex64::new(scale, 0.0);
        }
        m[(l, l)] = Complex64::new(-(l as f64) * scale, 0.0);
    }
    m
}

/// Enumerates ordered pairs (j, l) with j < l in lexicographic order.
fn pair_from_index(n: usize, mut k: usize) -> (usize, usize) {
    for j in 0..n {
        let row = n - 1 - j;
        if k < row {
            return (j, j + 1 + k);
        }
        k -= row;
    }
    unreachable!("pair index out of range")
}
