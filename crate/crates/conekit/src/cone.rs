//! The cone abstraction: membership tiers (C, C̄, C₊, C°, C*), duality,
//! faces, the dagger operation F ↦ F†, and the flag V_F ⊂ V^F with its
//! projections.
//!
//! Two computable families: pointed full-dimensional rational polyhedral
//! cones, and quadratic cones cut out by a symmetric form of signature
//! (1, n−1) together with a selector picking the component. For the
//! quadratic family every proper nonzero face of the rational hull C₊ is a
//! rational isotropic ray, which keeps all face data rational.

use crate::exact::{
    hermite_normal_form, saturate_span, Lattice, QMatrix, QVector, Rational,
};
use crate::polyhedral::{HRep, PolyError, Polyhedron, VRep};
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConeError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("point is not in the closure of the cone")]
    NotInClosure,
    #[error("descriptor is not a face of this cone")]
    NotAFace,
    #[error("quotient by the full face is trivial")]
    FullFace,
    #[error("polyhedral cone must be pointed and full-dimensional")]
    DegenerateCone,
    #[error("quadratic form must be symmetric of signature (1, n-1)")]
    BadSignature,
    #[error("selector must have positive form value")]
    BadSelector,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Which set membership is tested against.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MembershipTier {
    /// The open cone C.
    Interior,
    /// The closed cone C̄.
    Closure,
    /// C₊, the convex hull of the rational points of C̄. For rational
    /// input vectors this coincides with the closure test.
    RationalHull,
    /// The open dual C°: functionals strictly positive on C̄ − {0}.
    OpenDual,
    /// The closed dual C*.
    ClosedDual,
}

/// A computable open nondegenerate convex cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeSpec {
    Polyhedral(PolyhedralCone),
    Quadratic(QuadraticCone),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralCone {
    poly: Polyhedron,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticCone {
    /// Symmetric integral primitive matrix of signature (1, n−1).
    form: QMatrix,
    /// Its inverse, for dual-side tests.
    form_inv: QMatrix,
    /// Primitive vector with positive form value selecting the component.
    selector: QVector,
}

/// Signature (positives, negatives, zeros) of a symmetric rational matrix,
/// by exact congruence diagonalization.
pub fn signature(m: &QMatrix) -> (usize, usize, usize) {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    for i in 0..n {
        if a.get(i, i).is_zero() {
            // try to bring a nonzero onto the diagonal
            if let Some(j) = ((i + 1)..n).find(|&j| !a.get(j, j).is_zero()) {
                for k in 0..n {
                    let x = a.get(i, k).clone();
                    let y = a.get(j, k).clone();
                    a.set(i, k, y);
                    a.set(j, k, x);
                }
                for k in 0..n {
                    let x = a.get(k, i).clone();
                    let y = a.get(k, j).clone();
                    a.set(k, i, y);
                    a.set(k, j, x);
                }
            } else if let Some(j) = ((i + 1)..n).find(|&j| !a.get(i, j).is_zero()) {
                // add row/col j into i: diagonal becomes 2*a[i][j]
                for k in 0..n {
                    let v = a.get(i, k) + a.get(j, k);
                    a.set(i, k, v);
                }
                for k in 0..n {
                    let v = a.get(k, i) + a.get(k, j);
                    a.set(k, i, v);
                }
            } else {
                zero += 1;
                continue;
            }
        }
        let d = a.get(i, i).clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for j in (i + 1)..n {
            if a.get(j, i).is_zero() {
                continue;
            }
            let f = a.get(j, i) / &d;
            for k in 0..n {
                let v = a.get(j, k) - &f * a.get(i, k);
                a.set(j, k, v);
            }
            for k in 0..n {
                let v = a.get(k, j) - &f * a.get(k, i);
                a.set(k, j, v);
            }
        }
    }
    (pos, neg, zero)
}

/// Scales a nonzero rational matrix to primitive integral form by a
/// positive factor.
fn primitive_matrix(m: &QMatrix) -> QMatrix {
    let flat = QVector::new(
        (0..m.rows())
            .flat_map(|i| (0..m.cols()).map(move |j| m.get(i, j).clone()))
            .collect(),
    );
    let p = flat.primitive();
    QMatrix::new(m.rows(), m.cols(), p.coords().to_vec())
}

impl PolyhedralCone {
    pub fn from_rays(dim: usize, rays: Vec<QVector>) -> Result<Self, ConeError> {
        let poly = Polyhedron::from_vrep(VRep::from_rays(dim, rays))?;
        Self::from_poly(poly)
    }

    pub fn from_poly(poly: Polyhedron) -> Result<Self, ConeError> {
        let homogeneous = poly.vrep().points == vec![QVector::zero(poly.ambient_dim())];
        let pointed = poly.vrep().lines.is_empty();
        let full_dim = poly.dim() == poly.ambient_dim() as isize;
        if !homogeneous || !pointed || !full_dim {
            return Err(ConeError::DegenerateCone);
        }
        Ok(PolyhedralCone { poly })
    }

    pub fn poly(&self) -> &Polyhedron {
        &self.poly
    }

    pub fn rays(&self) -> &[QVector] {
        &self.poly.vrep().rays
    }
}

impl QuadraticCone {
    pub fn new(form: QMatrix, selector: QVector) -> Result<Self, ConeError> {
        if !form.is_square() || form != form.transpose() {
            return Err(ConeError::BadSignature);
        }
        let n = form.rows();
        if signature(&form) != (1, n - 1, 0) {
            return Err(ConeError::BadSignature);
        }
        if selector.dim() != n {
            return Err(ConeError::DimensionMismatch(
                "selector dimension does not match form".into(),
            ));
        }
        let form = primitive_matrix(&form);
        let form_inv = form.inverse().expect("nondegenerate form");
        let selector = selector.primitive();
        if !quad(&form, &selector).is_positive() {
            return Err(ConeError::BadSelector);
        }
        Ok(QuadraticCone {
            form,
            form_inv,
            selector,
        })
    }

    pub fn form(&self) -> &QMatrix {
        &self.form
    }

    pub fn form_inv(&self) -> &QMatrix {
        &self.form_inv
    }

    pub fn selector(&self) -> &QVector {
        &self.selector
    }
}

pub fn bilinear(q: &QMatrix, x: &QVector, y: &QVector) -> Rational {
    q.mul_vec(y).dot(x)
}

pub fn quad(q: &QMatrix, x: &QVector) -> Rational {
    bilinear(q, x, x)
}

impl ConeSpec {
    pub fn ambient_dim(&self) -> usize {
        match self {
            ConeSpec::Polyhedral(p) => p.poly.ambient_dim(),
            ConeSpec::Quadratic(q) => q.form.rows(),
        }
    }

    /// A canonical rational point of the open cone.
    pub fn interior_point(&self) -> QVector {
        match self {
            ConeSpec::Polyhedral(p) => {
                let mut acc = QVector::zero(p.poly.ambient_dim());
                for r in p.rays() {
                    acc = acc.add(r);
                }
                acc
            }
            ConeSpec::Quadratic(q) => q.selector.clone(),
        }
    }

    /// A canonical functional in the open dual C°: the sum of facet
    /// normals for the polyhedral family, Q·selector for the quadratic one.
    pub fn interior_dual_functional(&self) -> QVector {
        match self {
            ConeSpec::Polyhedral(p) => {
                let mut acc = QVector::zero(p.poly.ambient_dim());
                for (a, _) in &p.poly.hrep().inequalities {
                    acc = acc.add(a);
                }
                acc.primitive()
            }
            ConeSpec::Quadratic(q) => q.form.mul_vec(&q.selector).primitive(),
        }
    }

    pub fn membership(&self, x: &QVector, tier: MembershipTier) -> Result<bool, ConeError> {
        if x.dim() != self.ambient_dim() {
            return Err(ConeError::DimensionMismatch(format!(
                "point of dim {} in R^{}",
                x.dim(),
                self.ambient_dim()
            )));
        }
        Ok(match self {
            ConeSpec::Polyhedral(p) => match tier {
                MembershipTier::Interior => p.poly.contains_strict(x),
                MembershipTier::Closure | MembershipTier::RationalHull => p.poly.contains(x),
                MembershipTier::OpenDual => p.rays().iter().all(|r| x.dot(r).is_positive()),
                MembershipTier::ClosedDual => p.rays().iter().all(|r| !x.dot(r).is_negative()),
            },
            ConeSpec::Quadratic(q) => {
                let (f, fi, s) = (&q.form, &q.form_inv, &q.selector);
                match tier {
                    MembershipTier::Interior => {
                        quad(f, x).is_positive() && bilinear(f, x, s).is_positive()
                    }
                    MembershipTier::Closure | MembershipTier::RationalHull => {
                        !quad(f, x).is_negative() && !bilinear(f, x, s).is_negative()
                    }
                    MembershipTier::OpenDual => {
                        quad(fi, x).is_positive() && x.dot(s).is_positive()
                    }
                    MembershipTier::ClosedDual => {
                        !quad(fi, x).is_negative() && !x.dot(s).is_negative()
                    }
                }
            }
        })
    }

    /// The dual cone as a ConeSpec; an involution on canonical specs.
    pub fn dual_cone(&self) -> ConeSpec {
        match self {
            ConeSpec::Polyhedral(p) => {
                let ineqs: Vec<(QVector, Rational)> =
                    p.rays().iter().map(|r| (r.clone(), Rational::zero())).collect();
                let poly = Polyhedron::from_hrep(HRep::with_inequalities(
                    p.poly.ambient_dim(),
                    ineqs,
                ))
                .expect("dual of valid cone");
                ConeSpec::Polyhedral(PolyhedralCone::from_poly(poly).expect("dual cone pointed"))
            }
            ConeSpec::Quadratic(q) => {
                let form = primitive_matrix(&q.form_inv);
                let selector = q.form.mul_vec(&q.selector).primitive();
                ConeSpec::Quadratic(QuadraticCone::new(form, selector).expect("dual quadratic"))
            }
        }
    }
}

/// A face of C₊, in rational terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FaceDescriptor {
    /// Active-constraint indices into the canonical H-representation of a
    /// polyhedral cone. The full face has an empty active set.
    Active(Vec<usize>),
    /// The origin face of a quadratic cone.
    QZero,
    /// A rational isotropic boundary ray, primitive.
    QRay(QVector),
    /// The full quadratic cone C₊.
    QFull,
}

/// Which hull the face is taken in. For rational input data the two
/// coincide on both cone families; the tag records intent.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FaceOf {
    ClosureCone,
    RationalHull,
}

/// The unique face of C₊ whose relative interior contains x.
pub fn smallest_face(
    cone: &ConeSpec,
    x: &QVector,
    _of: FaceOf,
) -> Result<FaceDescriptor, ConeError> {
    if !cone.membership(x, MembershipTier::Closure)? {
        return Err(ConeError::NotInClosure);
    }
    Ok(match cone {
        ConeSpec::Polyhedral(p) => {
            let h = p.poly.hrep();
            let active: Vec<usize> = (0..h.inequalities.len())
                .filter(|&i| {
                    let (a, b) = &h.inequalities[i];
                    &a.dot(x) == b
                })
                .collect();
            FaceDescriptor::Active(active)
        }
        ConeSpec::Quadratic(q) => {
            if x.is_zero() {
                FaceDescriptor::QZero
            } else if quad(&q.form, x).is_zero() {
                FaceDescriptor::QRay(x.primitive())
            } else {
                FaceDescriptor::QFull
            }
        }
    })
}

/// The face as a polyhedron, where that is possible. The full face of a
/// quadratic cone is not polyhedral and yields None.
pub fn face_polyhedron(
    cone: &ConeSpec,
    f: &FaceDescriptor,
) -> Result<Option<Polyhedron>, ConeError> {
    let dim = cone.ambient_dim();
    match (cone, f) {
        (ConeSpec::Polyhedral(p), FaceDescriptor::Active(active)) => {
            if active
                .iter()
                .any(|&i| i >= p.poly.hrep().inequalities.len())
            {
                return Err(ConeError::NotAFace);
            }
            let mut h = p.poly.hrep().clone();
            for &i in active {
                let (a, b) = h.inequalities[i].clone();
                h.equations.push((a, b));
            }
            Ok(Some(Polyhedron::from_hrep(h)?))
        }
        (ConeSpec::Quadratic(_), FaceDescriptor::QZero) => Ok(Some(Polyhedron::from_vrep(
            VRep::from_points(dim, vec![QVector::zero(dim)]),
        )?)),
        (ConeSpec::Quadratic(q), FaceDescriptor::QRay(w)) => {
            if !quad(&q.form, w).is_zero() || !cone.membership(w, MembershipTier::Closure)? {
                return Err(ConeError::NotAFace);
            }
            Ok(Some(Polyhedron::from_vrep(VRep::from_rays(
                dim,
                vec![w.clone()],
            ))?))
        }
        (ConeSpec::Quadratic(_), FaceDescriptor::QFull) => Ok(None),
        _ => Err(ConeError::NotAFace),
    }
}

/// Generators spanning the face (rational rays).
pub fn face_span(cone: &ConeSpec, f: &FaceDescriptor) -> Result<Vec<QVector>, ConeError> {
    match (cone, f) {
        (ConeSpec::Polyhedral(_), _) => {
            let p = face_polyhedron(cone, f)?.expect("polyhedral face");
            Ok(p.vrep().rays.to_vec())
        }
        (ConeSpec::Quadratic(_), FaceDescriptor::QZero) => Ok(vec![]),
        (ConeSpec::Quadratic(q), FaceDescriptor::QRay(w)) => {
            if !quad(&q.form, w).is_zero() || !cone.membership(w, MembershipTier::Closure)? {
                return Err(ConeError::NotAFace);
            }
            Ok(vec![w.clone()])
        }
        (ConeSpec::Quadratic(_), FaceDescriptor::QFull) => {
            let n = cone.ambient_dim();
            Ok((0..n).map(|i| QVector::unit(n, i)).collect())
        }
        _ => Err(ConeError::NotAFace),
    }
}

/// F† = {ξ ∈ C°₊ : ξ vanishes on F}, as a face descriptor of the dual's
/// rational hull. Applying dagger twice returns the original face.
pub fn dagger_face(cone: &ConeSpec, f: &FaceDescriptor) -> Result<FaceDescriptor, ConeError> {
    match cone {
        ConeSpec::Polyhedral(_) => {
            let gens = face_span(cone, f)?;
            let dual = cone.dual_cone();
            let ConeSpec::Polyhedral(dp) = &dual else {
                unreachable!()
            };
            let mut h = dp.poly().hrep().clone();
            for g in &gens {
                h.equations.push((g.clone(), Rational::zero()));
            }
            let dagger = Polyhedron::from_hrep(h)?;
            let xi = dagger
                .relative_interior_point()
                .ok_or(ConeError::NotAFace)?;
            smallest_face(&dual, &xi, FaceOf::RationalHull)
        }
        ConeSpec::Quadratic(q) => Ok(match f {
            FaceDescriptor::QZero => FaceDescriptor::QFull,
            FaceDescriptor::QFull => FaceDescriptor::QZero,
            FaceDescriptor::QRay(w) => {
                if !quad(&q.form, w).is_zero() || !cone.membership(w, MembershipTier::Closure)? {
                    return Err(ConeError::NotAFace);
                }
                FaceDescriptor::QRay(q.form.mul_vec(w).primitive())
            }
            FaceDescriptor::Active(_) => return Err(ConeError::NotAFace),
        }),
    }
}

/// The flag 0 ⊂ V_F ⊂ V^F ⊂ V with lattice-saturated bases, the quotient
/// T_F = V^F / V_F, and the projections π_F, π^F, q_F with π^F = q_F ∘ π_F.
#[derive(Clone, Debug)]
pub struct FaceSpaces {
    /// Saturated basis of V_F = span F.
    pub vf_basis: Vec<QVector>,
    /// Saturated basis of V^F (annihilator of F†).
    pub vupperf_basis: Vec<QVector>,
    /// Lifts of a lattice basis of T_F = V^F / V_F.
    pub tf_lifts: Vec<QVector>,
    /// Lifts of a lattice basis of V / V_F (T_F lifts first).
    pub mod_vf_lifts: Vec<QVector>,
    /// Lifts of a lattice basis of V / V^F.
    pub mod_vupperf_lifts: Vec<QVector>,
    /// π_F : V → V/V_F in the mod_vf basis coordinates.
    pub pi_f: QMatrix,
    /// π^F : V → V/V^F in the mod_vupperf basis coordinates.
    pub pi_upper_f: QMatrix,
    /// q_F : V/V_F → V/V^F with π^F = q_F · π_F.
    pub q_f: QMatrix,
}

/// Lifts of a ℤ-basis of L/(L ∩ span(sub)) where `sub` is a saturated
/// lattice basis, via the annihilator pairing and a Hermite normal form.
fn quotient_lift_basis(lattice: &Lattice, sub: &[QVector]) -> Vec<QVector> {
    let n = lattice.dim();
    let sub_z: Vec<QVector> = sub.iter().map(|v| lattice.coords(v)).collect();
    if sub_z.is_empty() {
        return (0..n)
            .map(|i| lattice.from_coords(&QVector::unit(n, i)))
            .collect();
    }
    if sub_z.len() == n {
        return Vec::new();
    }
    // integral annihilator of span(sub); pairing with it embeds the
    // quotient lattice into ℤ^t, and the HNF lifts a basis back
    let m = QMatrix::from_rows(sub_z);
    let k = crate::exact::integral_kernel(&m);
    let kt = QMatrix::from_rows(k);
    let (h, u) = hermite_normal_form(&kt.transpose()).expect("integral");
    let mut lifts = Vec::new();
    for j in 0..h.cols() {
        if (0..h.rows()).any(|i| !h.get(i, j).is_zero()) {
            lifts.push(lattice.from_coords(&u.col(j)));
        }
    }
    lifts
}

/// Saturated lattice basis of the span of the given rational vectors.
fn saturated_basis(lattice: &Lattice, span: &[QVector]) -> Vec<QVector> {
    let in_z: Vec<QVector> = span.iter().map(|v| lattice.coords(v)).collect();
    saturate_span(lattice.dim(), &in_z)
        .into_iter()
        .map(|v| lattice.from_coords(&v))
        .collect()
}

pub fn face_spaces(
    cone: &ConeSpec,
    f: &FaceDescriptor,
    lattice: &Lattice,
) -> Result<FaceSpaces, ConeError> {
    let n = cone.ambient_dim();
    if lattice.dim() != n {
        return Err(ConeError::DimensionMismatch(
            "lattice dimension does not match cone".into(),
        ));
    }
    let vf_basis = saturated_basis(lattice, &face_span(cone, f)?);

    // V^F = annihilator of F†
    let dagger = dagger_face(cone, f)?;
    let dual = cone.dual_cone();
    let dagger_gens = face_span(&dual, &dagger)?;
    let vupperf_basis = if dagger_gens.is_empty() {
        (0..n)
            .map(|i| lattice.from_coords(&QVector::unit(n, i)))
            .collect()
    } else {
        let ann = QMatrix::from_rows(dagger_gens);
        let kernel_basis = ann.kernel();
        saturated_basis(lattice, &kernel_basis)
    };

    // T_F lifts: quotient of the V^F lattice by the V_F lattice, computed
    // in V^F-basis coordinates
    let tf_lifts = if vupperf_basis.is_empty() {
        Vec::new()
    } else {
        let bf = QMatrix::from_cols(vupperf_basis.clone());
        let coords: Vec<QVector> = vf_basis
            .iter()
            .map(|v| solve_exact(&bf, v))
            .collect::<Option<Vec<_>>>()
            .ok_or(ConeError::NotAFace)?;
        let inner = Lattice::standard(vupperf_basis.len());
        let lifts_z = quotient_lift_basis(&inner, &coords);
        lifts_z.into_iter().map(|z| bf.mul_vec(&z)).collect()
    };

    let mod_vupperf_lifts = quotient_lift_basis(lattice, &vupperf_basis);
    let mut mod_vf_lifts = tf_lifts.clone();
    mod_vf_lifts.extend(mod_vupperf_lifts.iter().cloned());

    let pi_f = projection_matrix(n, &vf_basis, &mod_vf_lifts);
    let pi_upper_f = projection_matrix(n, &vupperf_basis, &mod_vupperf_lifts);

    // q_F lifts from V/V_F and projects to V/V^F
    let q_f = if mod_vf_lifts.is_empty() {
        QMatrix::zero(mod_vupperf_lifts.len(), 0)
    } else {
        pi_upper_f.mul(&QMatrix::from_cols(mod_vf_lifts.clone()))
    };

    debug_assert!(
        mod_vf_lifts.is_empty() || q_f.mul(&pi_f) == pi_upper_f,
        "pi^F must equal q_F . pi_F"
    );

    Ok(FaceSpaces {
        vf_basis,
        vupperf_basis,
        tf_lifts,
        mod_vf_lifts,
        mod_vupperf_lifts,
        pi_f,
        pi_upper_f,
        q_f,
    })
}

fn solve_exact(basis_cols: &QMatrix, v: &QVector) -> Option<QVector> {
    if basis_cols.cols() == 0 {
        return if v.is_zero() {
            Some(QVector::zero(0))
        } else {
            None
        };
    }
    basis_cols
        .solve(v)
        .filter(|x| &basis_cols.mul_vec(x) == v)
}

/// Matrix of the projection V → V/W in quotient-lift coordinates: the
/// rows of [W-basis | lifts]^{-1} belonging to the lifts.
fn projection_matrix(n: usize, w_basis: &[QVector], lifts: &[QVector]) -> QMatrix {
    let k = w_basis.len();
    let m = lifts.len();
    assert_eq!(k + m, n, "basis plus lifts must span");
    if m == 0 {
        return QMatrix::zero(0, n);
    }
    let mut cols: Vec<QVector> = w_basis.to_vec();
    cols.extend(lifts.iter().cloned());
    let full = QMatrix::from_cols(cols);
    let inv = full.inverse().expect("flag basis invertible");
    let mut p = QMatrix::zero(m, n);
    for i in 0..m {
        for j in 0..n {
            p.set(i, j, inv.get(k + i, j).clone());
        }
    }
    p
}

/// Which quotient to project the cone into.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ProjectionKind {
    ModVF,
    ModVupperF,
}

/// Image of the cone in a flag quotient. π^F(C) is again a nondegenerate
/// cone (the open dual of F†); π_F(C) may be invariant under T_F
/// translations and is returned as a closed convex body.
#[derive(Clone, Debug)]
pub enum ProjectedCone {
    Cone(ConeSpec),
    Body(Polyhedron),
}

pub fn project_cone(
    cone: &ConeSpec,
    f: &FaceDescriptor,
    lattice: &Lattice,
    which: ProjectionKind,
) -> Result<ProjectedCone, ConeError> {
    let is_full = match f {
        FaceDescriptor::QFull => true,
        FaceDescriptor::Active(a) => a.is_empty(),
        _ => false,
    };
    if is_full {
        return Err(ConeError::FullFace);
    }
    let spaces = face_spaces(cone, f, lattice)?;
    match which {
        ProjectionKind::ModVupperF => match cone {
            ConeSpec::Polyhedral(p) => {
                let qdim = spaces.mod_vupperf_lifts.len();
                let rays: Vec<QVector> = p
                    .rays()
                    .iter()
                    .map(|r| spaces.pi_upper_f.mul_vec(r))
                    .collect();
                let poly = Polyhedron::from_vrep(VRep::from_rays(qdim, rays))?;
                Ok(ProjectedCone::Cone(ConeSpec::Polyhedral(
                    PolyhedralCone::from_poly(poly)?,
                )))
            }
            ConeSpec::Quadratic(_) => {
                // the quotient by the hyperplane V^F is one-dimensional;
                // the selector's image spans the positive ray
                let qdim = spaces.mod_vupperf_lifts.len();
                let dir = spaces
                    .pi_upper_f
                    .mul_vec(&cone.interior_point())
                    .primitive();
                let poly = Polyhedron::from_vrep(VRep::from_rays(qdim, vec![dir]))?;
                Ok(ProjectedCone::Cone(ConeSpec::Polyhedral(
                    PolyhedralCone::from_poly(poly)?,
                )))
            }
        },
        ProjectionKind::ModVF => match cone {
            ConeSpec::Polyhedral(p) => {
                let qdim = spaces.mod_vf_lifts.len();
                let rays: Vec<QVector> = p.rays().iter().map(|r| spaces.pi_f.mul_vec(r)).collect();
                Ok(ProjectedCone::Body(Polyhedron::from_vrep(VRep {
                    points: vec![QVector::zero(qdim)],
                    rays,
                    lines: vec![],
                    dim: qdim,
                })?))
            }
            ConeSpec::Quadratic(_) => {
                // closure of π_F(C) is the q_F-preimage of the closure of
                // π^F(C), by T_F-invariance of the image
                let qdim = spaces.mod_vf_lifts.len();
                let ray_dir = spaces
                    .pi_upper_f
                    .mul_vec(&cone.interior_point())
                    .primitive();
                let normal = QVector::new(
                    (0..qdim)
                        .map(|j| {
                            (0..spaces.q_f.rows())
                                .map(|i| spaces.q_f.get(i, j) * ray_dir.get(i))
                                .sum::<Rational>()
                        })
                        .collect(),
                );
                Ok(ProjectedCone::Body(Polyhedron::from_hrep(
                    HRep::with_inequalities(qdim, vec![(normal, Rational::zero())]),
                )?))
            }
        },
    }
}

#[cfg(test)]
pub mod testcones {
    use super::*;

    pub fn quadrant(dim: usize) -> ConeSpec {
        let rays = (0..dim).map(|i| QVector::unit(dim, i)).collect();
        ConeSpec::Polyhedral(PolyhedralCone::from_rays(dim, rays).unwrap())
    }

    pub fn lorentz2() -> ConeSpec {
        ConeSpec::Quadratic(
            QuadraticCone::new(
                QMatrix::from_ints(&[&[1, 0], &[0, -1]]),
                QVector::from_ints(&[1, 0]),
            )
            .unwrap(),
        )
    }

    pub fn lorentz3() -> ConeSpec {
        ConeSpec::Quadratic(
            QuadraticCone::new(
                QMatrix::from_ints(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]),
                QVector::from_ints(&[1, 0, 0]),
            )
            .unwrap(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::testcones::*;
    use super::*;
    use crate::exact::rat;

    #[test]
    fn membership_quadrant_interior() {
        let c = quadrant(2);
        assert!(c
            .membership(&QVector::from_ints(&[1, 1]), MembershipTier::Interior)
            .unwrap());
        assert!(!c
            .membership(&QVector::from_ints(&[1, 0]), MembershipTier::Interior)
            .unwrap());
        assert!(c
            .membership(&QVector::from_ints(&[1, 0]), MembershipTier::Closure)
            .unwrap());
    }

    #[test]
    fn membership_quadratic_boundary() {
        let c = lorentz2();
        let x = QVector::from_ints(&[1, 1]);
        assert!(!c.membership(&x, MembershipTier::Interior).unwrap());
        assert!(c.membership(&x, MembershipTier::Closure).unwrap());
        assert!(c.membership(&x, MembershipTier::RationalHull).unwrap());
    }

    #[test]
    fn membership_open_dual_boundary_vanishing() {
        let c = lorentz3();
        // (1,1,0) pairs to zero with the boundary point (1,1,0) of C̄
        let x = QVector::from_ints(&[1, 1, 0]);
        assert!(!c.membership(&x, MembershipTier::OpenDual).unwrap());
        assert!(c.membership(&x, MembershipTier::ClosedDual).unwrap());
    }

    #[test]
    fn dual_quadrant_self_dual() {
        let c = quadrant(2);
        assert_eq!(c.dual_cone(), c);
    }

    #[test]
    fn dual_simplicial_cone_pairings() {
        let c = ConeSpec::Polyhedral(
            PolyhedralCone::from_rays(
                2,
                vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[1, 2])],
            )
            .unwrap(),
        );
        let d = c.dual_cone();
        let ConeSpec::Polyhedral(dp) = &d else { panic!() };
        let mut rays = dp.rays().to_vec();
        rays.sort();
        assert_eq!(
            rays,
            vec![QVector::from_ints(&[0, 1]), QVector::from_ints(&[2, -1])]
        );
        let ConeSpec::Polyhedral(cp) = &c else { panic!() };
        for r in cp.rays() {
            for s in dp.rays() {
                assert!(!r.dot(s).is_negative());
            }
        }
        assert_eq!(d.dual_cone(), c);
    }

    #[test]
    fn dual_quadratic_self_dual_diag() {
        let c = lorentz2();
        assert_eq!(c.dual_cone(), c);
        assert_eq!(c.dual_cone().dual_cone(), c);
    }

    #[test]
    fn smallest_face_cases() {
        let c = quadrant(2);
        let f = smallest_face(&c, &QVector::from_ints(&[1, 0]), FaceOf::ClosureCone).unwrap();
        let FaceDescriptor::Active(a) = &f else { panic!() };
        assert_eq!(a.len(), 1);
        let full = smallest_face(&c, &QVector::from_ints(&[1, 1]), FaceOf::ClosureCone).unwrap();
        assert_eq!(full, FaceDescriptor::Active(vec![]));
        let q = lorentz3();
        let bdry =
            smallest_face(&q, &QVector::from_ints(&[5, 3, 4]), FaceOf::ClosureCone).unwrap();
        assert_eq!(bdry, FaceDescriptor::QRay(QVector::from_ints(&[5, 3, 4])));
        assert!(matches!(
            smallest_face(&q, &QVector::from_ints(&[0, 1, 0]), FaceOf::ClosureCone),
            Err(ConeError::NotInClosure)
        ));
    }

    #[test]
    fn dagger_quadrant_ray() {
        let c = quadrant(2);
        let f = smallest_face(&c, &QVector::from_ints(&[1, 0]), FaceOf::ClosureCone).unwrap();
        let d = dagger_face(&c, &f).unwrap();
        let dual = c.dual_cone();
        let span = face_span(&dual, &d).unwrap();
        assert_eq!(span.len(), 1);
        assert!(span[0].dot(&QVector::from_ints(&[1, 0])).is_zero());
        assert_eq!(dagger_face(&dual, &d).unwrap(), f);
    }

    #[test]
    fn dagger_degenerate_ends() {
        let c = quadrant(2);
        let zero = smallest_face(&c, &QVector::zero(2), FaceOf::ClosureCone).unwrap();
        let d = dagger_face(&c, &zero).unwrap();
        assert_eq!(d, FaceDescriptor::Active(vec![])); // full dual cone
        let full = FaceDescriptor::Active(vec![]);
        let dz = dagger_face(&c, &full).unwrap();
        let dual = c.dual_cone();
        assert!(face_span(&dual, &dz).unwrap().is_empty());
    }

    #[test]
    fn dagger_quadratic_involution() {
        let c = lorentz2();
        let f = FaceDescriptor::QRay(QVector::from_ints(&[1, 1]));
        let d = dagger_face(&c, &f).unwrap();
        let FaceDescriptor::QRay(w) = &d else { panic!() };
        assert!(w.dot(&QVector::from_ints(&[1, 1])).is_zero());
        let dd = dagger_face(&c.dual_cone(), &d).unwrap();
        assert_eq!(dd, f);
    }

    #[test]
    fn face_spaces_simplicial_ray() {
        // quadrant in R^3, F = ray e1: V_F = V^F = span e1, T_F = 0
        let c = quadrant(3);
        let l = Lattice::standard(3);
        let f =
            smallest_face(&c, &QVector::from_ints(&[1, 0, 0]), FaceOf::ClosureCone).unwrap();
        let s = face_spaces(&c, &f, &l).unwrap();
        assert_eq!(s.vf_basis.len(), 1);
        assert_eq!(s.vupperf_basis.len(), 1);
        assert!(s.tf_lifts.is_empty());
        assert_eq!(s.mod_vupperf_lifts.len(), 2);
        assert_eq!(s.pi_upper_f.rows(), 2);
        assert!(s.pi_upper_f.mul_vec(&s.vupperf_basis[0]).is_zero());
    }

    #[test]
    fn face_spaces_quadratic_isotropic() {
        let c = lorentz3();
        let l = Lattice::standard(3);
        let f = FaceDescriptor::QRay(QVector::from_ints(&[1, 1, 0]));
        let s = face_spaces(&c, &f, &l).unwrap();
        assert_eq!(s.vf_basis.len(), 1);
        assert_eq!(s.vupperf_basis.len(), 2);
        assert_eq!(s.tf_lifts.len(), 1);
        // V^F is the b-orthogonal complement of (1,1,0): z1 = z2
        for v in &s.vupperf_basis {
            assert_eq!(v.get(0), v.get(1));
        }
    }

    #[test]
    fn project_quadrant_mod_ray() {
        let c = quadrant(3);
        let l = Lattice::standard(3);
        let f =
            smallest_face(&c, &QVector::from_ints(&[1, 0, 0]), FaceOf::ClosureCone).unwrap();
        let pc = project_cone(&c, &f, &l, ProjectionKind::ModVupperF).unwrap();
        let ProjectedCone::Cone(ConeSpec::Polyhedral(p)) = pc else {
            panic!()
        };
        assert_eq!(p.poly().ambient_dim(), 2);
        assert_eq!(p.rays().len(), 2);
    }

    #[test]
    fn project_quadratic_mod_isotropic() {
        let c = lorentz3();
        let l = Lattice::standard(3);
        let f = FaceDescriptor::QRay(QVector::from_ints(&[1, 1, 0]));
        let pc = project_cone(&c, &f, &l, ProjectionKind::ModVupperF).unwrap();
        let ProjectedCone::Cone(ConeSpec::Polyhedral(p)) = pc else {
            panic!()
        };
        assert_eq!(p.poly().ambient_dim(), 1);
        assert_eq!(p.rays().len(), 1);
        assert!(matches!(
            project_cone(&c, &FaceDescriptor::QFull, &l, ProjectionKind::ModVupperF),
            Err(ConeError::FullFace)
        ));
    }

    #[test]
    fn signature_examples() {
        assert_eq!(
            signature(&QMatrix::from_ints(&[&[1, 0], &[0, -1]])),
            (1, 1, 0)
        );
        assert_eq!(signature(&QMatrix::from_ints(&[&[0, 1], &[1, 0]])), (1, 1, 0));
        assert_eq!(
            signature(&QMatrix::from_ints(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 0]])),
            (2, 0, 1)
        );
        // discriminant form of binary quadratic forms has signature (1,2)
        let disc = QMatrix::from_ints(&[&[0, 0, 1], &[0, -2, 0], &[1, 0, 0]]);
        assert_eq!(signature(&disc), (1, 2, 0));
    }

    #[test]
    fn rejects_bad_quadratic() {
        assert!(QuadraticCone::new(
            QMatrix::from_ints(&[&[1, 0], &[0, 1]]),
            QVector::from_ints(&[1, 0])
        )
        .is_err());
        assert!(QuadraticCone::new(
            QMatrix::from_ints(&[&[1, 0], &[0, -1]]),
            QVector::from_ints(&[0, 1])
        )
        .is_err());
    }

    #[test]
    fn closure_membership_rational_hull() {
        let cones = [quadrant(2), lorentz2()];
        let pts = [
            QVector::from_ints(&[1, 0]),
            QVector::from_ints(&[1, 1]),
            QVector::from_ints(&[3, 2]),
        ];
        for c in &cones {
            for x in &pts {
                if c.membership(x, MembershipTier::Closure).unwrap() {
                    assert!(c.membership(x, MembershipTier::RationalHull).unwrap());
                }
            }
        }
    }

    #[test]
    fn interior_dual_functional_strictly_positive() {
        for c in [quadrant(2), quadrant(3), lorentz2(), lorentz3()] {
            let xi = c.interior_dual_functional();
            assert!(c.membership(&xi, MembershipTier::OpenDual).unwrap());
        }
    }

    #[test]
    fn dagger_closure_matches_vanishing_locus() {
        let c = ConeSpec::Polyhedral(
            PolyhedralCone::from_rays(
                3,
                vec![
                    QVector::from_ints(&[1, 0, 0]),
                    QVector::from_ints(&[0, 1, 0]),
                    QVector::from_ints(&[0, 0, 1]),
                    QVector::from_ints(&[1, 1, -1]),
                ],
            )
            .unwrap(),
        );
        let x = QVector::from_ints(&[1, 1, 0]);
        assert!(c.membership(&x, MembershipTier::Closure).unwrap());
        let f = smallest_face(&c, &x, FaceOf::ClosureCone).unwrap();
        let d = dagger_face(&c, &f).unwrap();
        let dual = c.dual_cone();
        let dagger_poly = face_polyhedron(&dual, &d).unwrap().unwrap();
        let span = face_span(&c, &f).unwrap();
        for xi in &dagger_poly.vrep().rays {
            for g in &span {
                assert_eq!(xi.dot(g), rat(0));
            }
        }
        assert_eq!(dagger_face(&dual, &d).unwrap(), f);
    }
}
