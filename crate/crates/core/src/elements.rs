//! Reference-triangle finite element bases.
//!
//! Three families over the reference triangle `{(0,0),(1,0),(0,1)}`:
//! - `CG_N`: continuous Lagrange, nodes on the equispaced lattice,
//! - `DG_{N-1}`: discontinuous Lagrange of internal degree `N-1`,
//! - `RT_N`: Raviart-Thomas, with edge normal-flux moments against Legendre
//!   polynomials plus interior vector moments.
//!
//! The degree parameter `N` is always the pairing degree of the compatible
//! triple: a `Dg` element of degree `N` holds polynomials of degree `N-1`.
//!
//! Edge flux moments absorb the edge length: for local edge `e` from `A` to
//! `B`, the moment of order `m` is `∫ v(x(s)) · rot((B-A)/2) P_m(s) ds` over
//! `s in [-1,1]` with `rot(t) = (t_y, -t_x)`. Under the contravariant Piola
//! map this functional takes the same value on the reference and the physical
//! element, which makes inter-element normal continuity a pure sign
//! bookkeeping problem handled by the mesh edge orientations.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::mesh::AffineMap;
use crate::poly::{monomial_exponents, Poly2};
use crate::quadrature::{gauss_legendre, legendre, triangle_quadrature, QuadratureRule};

pub const MAX_ELEMENT_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cg,
    Dg,
    Rt,
}

/// What a local degree of freedom is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DofKind {
    Vertex(usize),
    /// For `Cg`: node slot along the local edge direction. For `Rt`: Legendre
    /// moment order of the normal flux.
    Edge { edge: usize, order: usize },
    Interior(usize),
}

/// Local vertices of the reference triangle; local edge `k` runs from vertex
/// `k` to vertex `(k+1) % 3`, counter-clockwise.
pub const REF_VERTICES: [[f64; 2]; 3] = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];

#[derive(Debug, Clone)]
pub struct ReferenceElement {
    family: Family,
    degree: usize,
    dim: usize,
    dof_kinds: Vec<DofKind>,
    scalar_basis: Vec<Poly2>,
    scalar_grads: Vec<[Poly2; 2]>,
    vector_basis: Vec<[Poly2; 2]>,
    divergence: Vec<Poly2>,
    edge_rule: (Vec<f64>, Vec<f64>),
    interior_rule: QuadratureRule,
}

/// Basis values and first derivatives at a set of reference points,
/// `values[dof][point]`.
#[derive(Debug, Clone)]
pub struct ScalarTable {
    pub values: Vec<Vec<f64>>,
    pub gradients: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone)]
pub struct VectorTable {
    pub values: Vec<Vec<[f64; 2]>>,
    pub divergences: Vec<Vec<f64>>,
}

impl ReferenceElement {
    pub fn new(family: Family, degree: usize) -> Result<Self> {
        if degree < 1 || degree > MAX_ELEMENT_DEGREE {
            return Err(Error::Capability(format!(
                "element degree {degree} outside supported range 1..={MAX_ELEMENT_DEGREE}"
            )));
        }
        match family {
            Family::Cg => Self::lagrange(family, degree, degree),
            Family::Dg => Self::lagrange(family, degree, degree - 1),
            Family::Rt => Self::raviart_thomas(degree),
        }
    }

    /// Lagrange basis on the equispaced lattice of polynomial degree `pdeg`.
    fn lagrange(family: Family, degree: usize, pdeg: usize) -> Result<Self> {
        let mut nodes: Vec<[f64; 2]> = Vec::new();
        let mut kinds: Vec<DofKind> = Vec::new();
        if pdeg == 0 {
            nodes.push([1.0 / 3.0, 1.0 / 3.0]);
            kinds.push(DofKind::Interior(0));
        } else {
            let n = pdeg as f64;
            for (v, &p) in REF_VERTICES.iter().enumerate() {
                nodes.push(p);
                kinds.push(DofKind::Vertex(v));
            }
            for edge in 0..3 {
                let a = REF_VERTICES[edge];
                let b = REF_VERTICES[(edge + 1) % 3];
                for i in 1..pdeg {
                    let s = i as f64 / n;
                    nodes.push([a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])]);
                    kinds.push(DofKind::Edge { edge, order: i - 1 });
                }
            }
            let mut interior = 0;
            for i in 1..pdeg {
                for j in 1..pdeg {
                    if i + j <= pdeg - 1 {
                        nodes.push([i as f64 / n, j as f64 / n]);
                        kinds.push(DofKind::Interior(interior));
                        interior += 1;
                    }
                }
            }
        }
        // For DG the lattice nodes carry no inter-element coupling.
        if family == Family::Dg {
            for (k, kind) in kinds.iter_mut().enumerate() {
                *kind = DofKind::Interior(k);
            }
        }

        let dim = nodes.len();
        let exps = monomial_exponents(pdeg);
        assert_eq!(exps.len(), dim);
        let vand = DMatrix::from_fn(dim, dim, |i, j| {
            let (a, b) = exps[j];
            nodes[i][0].powi(a as i32) * nodes[i][1].powi(b as i32)
        });
        let coeffs = vand.lu().try_inverse().ok_or_else(|| {
            Error::Capability(format!("Lagrange nodes of degree {pdeg} are not unisolvent"))
        })?;

        let mut scalar_basis = Vec::with_capacity(dim);
        let mut scalar_grads = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut p = Poly2::zero(pdeg);
            for (k, &(a, b)) in exps.iter().enumerate() {
                p.add_scaled(&Poly2::monomial(pdeg, a, b), coeffs[(k, j)]);
            }
            scalar_grads.push([p.dx(), p.dy()]);
            scalar_basis.push(p);
        }

        Ok(ReferenceElement {
            family,
            degree,
            dim,
            dof_kinds: kinds,
            scalar_basis,
            scalar_grads,
            vector_basis: Vec::new(),
            divergence: Vec::new(),
            edge_rule: gauss_legendre(degree + 2),
            interior_rule: triangle_quadrature(2 * degree)?,
        })
    }

    fn raviart_thomas(n: usize) -> Result<Self> {
        // Span: P_{N-1}^2 plus the homogeneous bubbles (x, y) * homogeneous
        // monomials of degree N-1.
        let dim = n * (n + 2);
        let low = monomial_exponents(n - 1);
        let mut span: Vec<[Poly2; 2]> = Vec::with_capacity(dim);
        let mut span_div: Vec<Poly2> = Vec::with_capacity(dim);
        for &(a, b) in &low {
            let m = Poly2::monomial(n, a, b);
            span.push([m.clone(), Poly2::zero(n)]);
            span_div.push(promote(&m.dx(), n - 1));
        }
        for &(a, b) in &low {
            let m = Poly2::monomial(n, a, b);
            span_div.push(promote(&m.dy(), n - 1));
            span.push([Poly2::zero(n), m]);
        }
        for k in 0..n {
            let m = Poly2::monomial(n - 1, n - 1 - k, k);
            span.push([m.mul_monomial(1, 0), m.mul_monomial(0, 1)]);
            // div((x, y) q) = 2 q + x q_x + y q_y = (deg q + 2) q for
            // homogeneous q.
            span_div.push(promote(&m.scaled(n as f64 + 1.0), n - 1));
        }
        assert_eq!(span.len(), dim);

        let mut kinds: Vec<DofKind> = Vec::new();
        for edge in 0..3 {
            for order in 0..n {
                kinds.push(DofKind::Edge { edge, order });
            }
        }
        let interior_monomials = if n >= 2 {
            monomial_exponents(n - 2)
        } else {
            Vec::new()
        };
        for k in 0..2 * interior_monomials.len() {
            kinds.push(DofKind::Interior(k));
        }
        assert_eq!(kinds.len(), dim);

        let edge_rule = gauss_legendre(n + 2);
        let interior_rule = triangle_quadrature(2 * n)?;
        let apply = |kind: &DofKind, v: &[Poly2; 2]| -> f64 {
            apply_rt_dof(
                kind,
                &edge_rule,
                &interior_rule,
                &interior_monomials,
                &mut |p| [v[0].eval(p[0], p[1]), v[1].eval(p[0], p[1])],
            )
        };

        let vand = DMatrix::from_fn(dim, dim, |i, j| apply(&kinds[i], &span[j]));
        let coeffs = vand.lu().try_inverse().ok_or_else(|| {
            Error::Capability(format!("RT_{n} moment functionals are not unisolvent"))
        })?;

        let mut vector_basis = Vec::with_capacity(dim);
        let mut divergence = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut vx = Poly2::zero(n);
            let mut vy = Poly2::zero(n);
            let mut dv = Poly2::zero(n - 1);
            for k in 0..dim {
                let c = coeffs[(k, j)];
                vx.add_scaled(&span[k][0], c);
                vy.add_scaled(&span[k][1], c);
                dv.add_scaled(&span_div[k], c);
            }
            vector_basis.push([vx, vy]);
            divergence.push(dv);
        }

        Ok(ReferenceElement {
            family: Family::Rt,
            degree: n,
            dim,
            dof_kinds: kinds,
            scalar_basis: Vec::new(),
            scalar_grads: Vec::new(),
            vector_basis,
            divergence,
            edge_rule,
            interior_rule,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dof_kinds(&self) -> &[DofKind] {
        &self.dof_kinds
    }

    /// Basis values and gradients at arbitrary reference points, with a
    /// barycentric domain check.
    pub fn eval_scalar(&self, points: &[[f64; 2]]) -> Result<ScalarTable> {
        check_in_reference(points)?;
        Ok(self.tabulate_scalar(points))
    }

    pub fn eval_vector(&self, points: &[[f64; 2]]) -> Result<VectorTable> {
        check_in_reference(points)?;
        Ok(self.tabulate_vector(points))
    }

    /// Unchecked evaluation, for interior quadrature points.
    pub fn tabulate_scalar(&self, points: &[[f64; 2]]) -> ScalarTable {
        assert!(
            matches!(self.family, Family::Cg | Family::Dg),
            "scalar evaluation on a vector element"
        );
        let values = self
            .scalar_basis
            .iter()
            .map(|p| points.iter().map(|q| p.eval(q[0], q[1])).collect())
            .collect();
        let gradients = self
            .scalar_grads
            .iter()
            .map(|[px, py]| {
                points
                    .iter()
                    .map(|q| [px.eval(q[0], q[1]), py.eval(q[0], q[1])])
                    .collect()
            })
            .collect();
        ScalarTable { values, gradients }
    }

    pub fn tabulate_vector(&self, points: &[[f64; 2]]) -> VectorTable {
        assert!(
            self.family == Family::Rt,
            "vector evaluation on a scalar element"
        );
        let values = self
            .vector_basis
            .iter()
            .map(|[vx, vy]| {
                points
                    .iter()
                    .map(|q| [vx.eval(q[0], q[1]), vy.eval(q[0], q[1])])
                    .collect()
            })
            .collect();
        let divergences = self
            .divergence
            .iter()
            .map(|d| points.iter().map(|q| d.eval(q[0], q[1])).collect())
            .collect();
        VectorTable {
            values,
            divergences,
        }
    }

    /// Apply every RT degree-of-freedom functional to a reference vector
    /// field. `rules` overrides the construction quadratures, for
    /// interpolation of non-polynomial data.
    pub fn rt_dofs_of(
        &self,
        mut f: impl FnMut([f64; 2]) -> [f64; 2],
        rules: Option<(&(Vec<f64>, Vec<f64>), &QuadratureRule)>,
    ) -> Vec<f64> {
        assert!(self.family == Family::Rt);
        let (edge_rule, interior_rule) = match rules {
            Some((e, i)) => (e, i),
            None => (&self.edge_rule, &self.interior_rule),
        };
        let interior_monomials = if self.degree >= 2 {
            monomial_exponents(self.degree - 2)
        } else {
            Vec::new()
        };
        self.dof_kinds
            .iter()
            .map(|kind| apply_rt_dof(kind, edge_rule, interior_rule, &interior_monomials, &mut f))
            .collect()
    }
}

/// One RT degree-of-freedom functional applied to an arbitrary reference
/// vector field.
fn apply_rt_dof(
    kind: &DofKind,
    edge_rule: &(Vec<f64>, Vec<f64>),
    interior_rule: &QuadratureRule,
    interior_monomials: &[(usize, usize)],
    f: &mut impl FnMut([f64; 2]) -> [f64; 2],
) -> f64 {
    match *kind {
        DofKind::Edge { edge, order } => {
            let a = REF_VERTICES[edge];
            let b = REF_VERTICES[(edge + 1) % 3];
            let mid = [0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])];
            let half = [0.5 * (b[0] - a[0]), 0.5 * (b[1] - a[1])];
            let normal = [half[1], -half[0]];
            let (nodes, weights) = edge_rule;
            nodes
                .iter()
                .zip(weights)
                .map(|(&s, &w)| {
                    let p = [mid[0] + s * half[0], mid[1] + s * half[1]];
                    let v = f(p);
                    w * (v[0] * normal[0] + v[1] * normal[1]) * legendre(order, s)
                })
                .sum()
        }
        DofKind::Interior(k) => {
            let (a, b) = interior_monomials[k / 2];
            let component = k % 2;
            interior_rule
                .points
                .iter()
                .zip(&interior_rule.weights)
                .map(|(p, &w)| {
                    let v = f(*p);
                    w * v[component] * p[0].powi(a as i32) * p[1].powi(b as i32)
                })
                .sum()
        }
        DofKind::Vertex(_) => unreachable!("RT has no vertex degrees of freedom"),
    }
}

/// Contravariant Piola transform of a reference vector value.
pub fn piola_vector(map: &AffineMap, v: [f64; 2]) -> [f64; 2] {
    let jv = map.apply_jacobian(v);
    [jv[0] / map.det, jv[1] / map.det]
}

/// Divergence transform matching [`piola_vector`].
pub fn piola_divergence(map: &AffineMap, d: f64) -> f64 {
    d / map.det
}

/// Coefficients of the RT interpolant of the reference curl of every CG basis
/// function: column `c` holds the RT degrees of freedom of
/// `(d ξ_c / dy, -d ξ_c / dx)`. Geometry-independent because the physical
/// curl of a mapped CG function is the Piola image of its reference curl.
pub fn reference_curl_matrix(rt: &ReferenceElement, cg: &ReferenceElement) -> Vec<Vec<f64>> {
    assert!(rt.family == Family::Rt && cg.family == Family::Cg);
    assert_eq!(rt.degree, cg.degree);
    (0..cg.dim)
        .map(|c| {
            let [gx, gy] = &cg.scalar_grads[c];
            rt.rt_dofs_of(|p| [gy.eval(p[0], p[1]), -gx.eval(p[0], p[1])], None)
        })
        .collect()
}

/// Embed a polynomial into (at least) the given total degree.
fn promote(p: &Poly2, degree: usize) -> Poly2 {
    let deg = degree.max(p.degree());
    let mut out = Poly2::zero(deg);
    out.add_scaled(p, 1.0);
    out
}

fn check_in_reference(points: &[[f64; 2]]) -> Result<()> {
    for p in points {
        let bary = [1.0 - p[0] - p[1], p[0], p[1]];
        if bary.iter().any(|&l| l < -1e-12) {
            return Err(Error::Domain(format!(
                "({}, {}) lies outside the reference triangle",
                p[0], p[1]
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rand_points(n: usize, seed: u64) -> Vec<[f64; 2]> {
        let mut pts = Vec::with_capacity(n);
        let mut s = seed;
        let mut rnd = || {
            s = s
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (s >> 11) as f64 / (1u64 << 53) as f64
        };
        while pts.len() < n {
            let (x, y) = (rnd(), rnd());
            if x + y <= 1.0 {
                pts.push([x, y]);
            }
        }
        pts
    }

    #[test]
    fn dimensions() {
        for n in 1..=4 {
            let cg = ReferenceElement::new(Family::Cg, n).unwrap();
            assert_eq!(cg.dim(), (n + 1) * (n + 2) / 2);
            let dg = ReferenceElement::new(Family::Dg, n).unwrap();
            assert_eq!(dg.dim(), n * (n + 1) / 2);
            let rt = ReferenceElement::new(Family::Rt, n).unwrap();
            assert_eq!(rt.dim(), n * (n + 2));
        }
        assert!(ReferenceElement::new(Family::Cg, 0).is_err());
        assert!(ReferenceElement::new(Family::Rt, 5).is_err());
    }

    #[test]
    fn rt1_has_one_dof_per_edge() {
        let rt = ReferenceElement::new(Family::Rt, 1).unwrap();
        assert_eq!(rt.dim(), 3);
        for (k, kind) in rt.dof_kinds().iter().enumerate() {
            assert_eq!(*kind, DofKind::Edge { edge: k, order: 0 });
        }
    }

    #[test]
    fn cg1_is_nodal() {
        let cg = ReferenceElement::new(Family::Cg, 1).unwrap();
        let table = cg.eval_scalar(&REF_VERTICES.to_vec()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((table.values[i][j] - expect).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn dg2_is_linear() {
        let dg = ReferenceElement::new(Family::Dg, 2).unwrap();
        assert_eq!(dg.dim(), 3);
        assert!(dg
            .dof_kinds()
            .iter()
            .all(|k| matches!(k, DofKind::Interior(_))));
    }

    #[test]
    fn cg_partition_of_unity() {
        let pts = rand_points(20, 7);
        for n in 1..=4 {
            let cg = ReferenceElement::new(Family::Cg, n).unwrap();
            let table = cg.eval_scalar(&pts).unwrap();
            for q in 0..pts.len() {
                let sum: f64 = (0..cg.dim()).map(|i| table.values[i][q]).sum();
                let gsum: [f64; 2] = (0..cg.dim()).fold([0.0, 0.0], |acc, i| {
                    [
                        acc[0] + table.gradients[i][q][0],
                        acc[1] + table.gradients[i][q][1],
                    ]
                });
                assert!((sum - 1.0).abs() < 1e-12);
                assert!(gsum[0].abs() < 1e-11 && gsum[1].abs() < 1e-11);
            }
        }
    }

    #[test]
    fn cg1_barycenter_values() {
        let cg = ReferenceElement::new(Family::Cg, 1).unwrap();
        let table = cg.eval_scalar(&[[1.0 / 3.0, 1.0 / 3.0]]).unwrap();
        for i in 0..3 {
            assert!((table.values[i][0] - 1.0 / 3.0).abs() < 1e-14);
        }
    }

    #[test]
    fn outside_point_rejected() {
        let cg = ReferenceElement::new(Family::Cg, 2).unwrap();
        assert!(cg.eval_scalar(&[[0.7, 0.7]]).is_err());
        assert!(cg.eval_scalar(&[[0.5, 0.5]]).is_ok());
    }

    #[test]
    fn rt_unisolvency() {
        for n in 1..=4 {
            let rt = ReferenceElement::new(Family::Rt, n).unwrap();
            for j in 0..rt.dim() {
                let [vx, vy] = rt.vector_basis[j].clone();
                let dofs = rt.rt_dofs_of(|p| [vx.eval(p[0], p[1]), vy.eval(p[0], p[1])], None);
                for (i, d) in dofs.iter().enumerate() {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (d - expect).abs() < 1e-12,
                        "RT_{n}: dof {i} of basis {j} = {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn rt_divergence_matches_finite_differences() {
        let pts = rand_points(8, 13);
        for n in 1..=4 {
            let rt = ReferenceElement::new(Family::Rt, n).unwrap();
            let table = rt.tabulate_vector(&pts);
            let h = 1e-6;
            for i in 0..rt.dim() {
                let [vx, vy] = &rt.vector_basis[i];
                for (q, p) in pts.iter().enumerate() {
                    let fd = (vx.eval(p[0] + h, p[1]) - vx.eval(p[0] - h, p[1])) / (2.0 * h)
                        + (vy.eval(p[0], p[1] + h) - vy.eval(p[0], p[1] - h)) / (2.0 * h);
                    assert!(
                        (table.divergences[i][q] - fd).abs() < 1e-6,
                        "RT_{n} basis {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn rt_divergence_degree_bound() {
        // Divergence of every RT_N basis function lies in P_{N-1}.
        for n in 1..=4 {
            let rt = ReferenceElement::new(Family::Rt, n).unwrap();
            for d in &rt.divergence {
                for &(a, b) in &monomial_exponents(d.degree()) {
                    if a + b > n - 1 {
                        assert!(d.coeff(a, b).abs() < 1e-11);
                    }
                }
            }
        }
    }

    #[test]
    fn piola_identity_and_scaling() {
        let identity = AffineMap {
            origin: [0.0, 0.0],
            jacobian: [[1.0, 0.0], [0.0, 1.0]],
            det: 1.0,
            inv_transpose: [[1.0, 0.0], [0.0, 1.0]],
        };
        assert_eq!(piola_vector(&identity, [0.3, -0.4]), [0.3, -0.4]);
        let scaling = AffineMap {
            origin: [0.0, 0.0],
            jacobian: [[2.0, 0.0], [0.0, 2.0]],
            det: 4.0,
            inv_transpose: [[0.5, 0.0], [0.0, 0.5]],
        };
        let v = piola_vector(&scaling, [1.0, 2.0]);
        assert!((v[0] - 0.5).abs() < 1e-15 && (v[1] - 1.0).abs() < 1e-15);
        assert!((piola_divergence(&scaling, 2.0) - 0.5).abs() < 1e-15);
    }

    /// Least-squares residual of fitting `target` (sampled at quadrature
    /// points) in the span of `basis` values.
    fn span_residual(weights: &[f64], basis: &[Vec<f64>], target: &[f64]) -> f64 {
        let n = basis.len();
        let gram = DMatrix::from_fn(n, n, |i, j| {
            weights
                .iter()
                .enumerate()
                .map(|(q, w)| w * basis[i][q] * basis[j][q])
                .sum()
        });
        let rhs = nalgebra::DVector::from_fn(n, |i, _| {
            weights
                .iter()
                .enumerate()
                .map(|(q, w)| w * basis[i][q] * target[q])
                .sum::<f64>()
        });
        let target_norm2: f64 = weights
            .iter()
            .enumerate()
            .map(|(q, w)| w * target[q] * target[q])
            .sum();
        let coef = gram.lu().solve(&rhs).unwrap();
        (target_norm2 - coef.dot(&rhs)).max(0.0).sqrt()
    }

    #[test]
    fn reference_subcomplex_exactness() {
        for n in 1..=4usize {
            let cg = ReferenceElement::new(Family::Cg, n).unwrap();
            let rt = ReferenceElement::new(Family::Rt, n).unwrap();
            let dg = ReferenceElement::new(Family::Dg, n).unwrap();
            let rule = triangle_quadrature(2 * n + 2).unwrap();
            let rt_table = rt.tabulate_vector(&rule.points);
            let dg_table = dg.tabulate_scalar(&rule.points);
            let cg_table = cg.tabulate_scalar(&rule.points);

            // curl(CG) in span(RT): fit both components jointly.
            let rt_flat: Vec<Vec<f64>> = (0..rt.dim())
                .map(|i| {
                    rt_table.values[i]
                        .iter()
                        .flat_map(|v| [v[0], v[1]])
                        .collect()
                })
                .collect();
            let wide_weights: Vec<f64> = rule.weights.iter().flat_map(|&w| [w, w]).collect();
            for c in 0..cg.dim() {
                let target: Vec<f64> = cg_table.gradients[c]
                    .iter()
                    .flat_map(|g| [g[1], -g[0]])
                    .collect();
                assert!(
                    span_residual(&wide_weights, &rt_flat, &target) < 1e-12,
                    "curl CG_{n} basis {c} escapes RT_{n}"
                );
            }
            // div(RT) in span(DG).
            for i in 0..rt.dim() {
                assert!(
                    span_residual(&rule.weights, &dg_table.values, &rt_table.divergences[i])
                        < 1e-12,
                    "div RT_{n} basis {i} escapes DG_{}",
                    n - 1
                );
            }
        }
    }
}
