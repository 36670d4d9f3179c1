//! Truncated lattice hulls [C ∩ L], the decomposition Σ(C, L), kernels,
//! cores and cocores with truncated duality, admissible functions, and
//! arrangement decompositions.
//!
//! The hull of the lattice points of an open cone is only boundedly
//! polyhedral, so every reported face carries a certificate: a supporting
//! functional together with an exact enumeration argument showing that its
//! minimum over C ∩ L equals the reported value. Interior functionals are
//! certified by compact-slab enumeration; boundary functionals of the
//! quadratic family by the content of their value group on L, and of the
//! polyhedral family by residue classes modulo the face they annihilate.

mod arrangement;
mod kernel;
mod sail;
mod sigma;

pub use arrangement::{arrangement_decomposition, AdmissibleFunction, ArrangementResult};
pub use kernel::{
    admissible_eval, comparibility_constant, kernel_dual_truncate, kernel_from_orbits,
    Comparibility, KernelRep,
};
pub use sail::{sail_2d, SailWalker};
pub use sigma::{cocore_truncate, sigma_decomposition, DecompositionPatch, PatchMember};

use crate::cone::{quad, ConeError, ConeSpec, MembershipTier};
use crate::exact::{Lattice, QMatrix, QVector, Rational};
use crate::polyhedral::{face_lattice, HRep, PolyError, Polyhedron, VRep};
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HullError {
    #[error("enumeration budget exceeded ({0} cells examined); partial result discarded")]
    BudgetExceeded(usize),
    #[error("cone is degenerate")]
    DegenerateCone,
    #[error("window must be a bounded rational polyhedron")]
    UnboundedWindow,
    #[error("window is not contained in the rational hull")]
    WindowNotInRationalHull,
    #[error("kernel generator is zero")]
    ZeroGenerator,
    #[error("input data is not invariant under the group")]
    NotInvariant,
    #[error("functional is not in the open dual")]
    FunctionalNotInOpenDual,
    #[error("hyperplane does not meet the cone")]
    HyperplaneMissesCone,
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Explicit enumeration budget: the maximum number of lattice cells any
/// single exhaustive scan may visit.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Budget(pub usize);

impl Default for Budget {
    fn default() -> Self {
        Budget(2_000_000)
    }
}

/// How a facet of the truncated hull was certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FacetCertKind {
    /// ξ lies in the open dual; the compact slab {x ∈ C̄ : ξ(x) ≤ offset}
    /// was enumerated exactly and contained `points` lattice points of C,
    /// all on the facet.
    InteriorSlab { points: usize },
    /// ξ lies on the boundary of the dual; its positive value group on L
    /// is content·ℤ and the minimum over C ∩ L equals the content.
    BoundaryContent { content: Rational },
    /// The facet comes from the enumeration boundary; it was verified not
    /// to cut the window.
    WindowClear,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetCertificate {
    pub normal: QVector,
    pub offset: Rational,
    pub kind: FacetCertKind,
}

#[derive(Clone, Debug)]
pub struct HullCertificate {
    /// The interior dual functional used for slab levels.
    pub level_functional: QVector,
    /// Final enumeration slab level.
    pub level: Rational,
    /// Vertex-inclusion level for reported faces (window-derived).
    pub report_level: Rational,
    /// Total lattice points of C enumerated at the final level.
    pub enumerated: usize,
    pub facets: Vec<FacetCertificate>,
}

/// The faces of [C ∩ L] meeting a bounded window, each reported as the
/// polyhedron spanned by the face's hull vertices up to the certified
/// report level together with the face's recession rays. Faces that are
/// globally polyhedral are reported in full.
#[derive(Clone, Debug)]
pub struct TruncatedHull {
    pub faces: Vec<Polyhedron>,
    pub certificate: HullCertificate,
}

pub(crate) fn int_floor(r: &Rational) -> BigInt {
    r.floor().numer().clone()
}

pub(crate) fn int_ceil(r: &Rational) -> BigInt {
    r.ceil().numer().clone()
}

/// Integer upper bound for the square root of a nonnegative rational.
pub(crate) fn sqrt_upper(r: &Rational) -> BigInt {
    let c = int_ceil(r);
    if c.is_negative() {
        return BigInt::zero();
    }
    c.sqrt() + 1
}

/// Cone data transported into lattice coordinates, where L = ℤ^n.
pub(crate) struct LatticeView {
    pub cone_z: ConeSpec,
    pub lattice: Lattice,
}

impl LatticeView {
    pub fn new(cone: &ConeSpec, lattice: &Lattice) -> Result<Self, HullError> {
        let cone_z = match cone {
            ConeSpec::Polyhedral(p) => {
                let poly = p.poly().affine_image(lattice.basis_inv(), None)?;
                ConeSpec::Polyhedral(crate::cone::PolyhedralCone::from_poly(poly)?)
            }
            ConeSpec::Quadratic(q) => {
                let b = lattice.basis();
                let form = b.transpose().mul(q.form()).mul(b);
                let sel = lattice.coords(q.selector());
                ConeSpec::Quadratic(crate::cone::QuadraticCone::new(form, sel)?)
            }
        };
        Ok(LatticeView {
            cone_z,
            lattice: lattice.clone(),
        })
    }

    pub fn to_ambient(&self, z: &QVector) -> QVector {
        self.lattice.from_coords(z)
    }

    pub fn functional_to_z(&self, xi: &QVector) -> QVector {
        // ξ(Bz) = (Bᵀξ)(z)
        self.lattice.basis().transpose().mul_vec(xi)
    }
}

/// Exact integer bounding box for the slab {x ∈ C̄ : ξ(x) ≤ level} in
/// lattice coordinates, for ξ in the open dual. Returns None when the
/// slab is empty.
fn slab_box(
    view: &LatticeView,
    xi_z: &QVector,
    level: &Rational,
) -> Result<Option<(Vec<BigInt>, Vec<BigInt>)>, HullError> {
    let n = xi_z.dim();
    match &view.cone_z {
        ConeSpec::Polyhedral(p) => {
            let mut h = p.poly().hrep().clone();
            h.inequalities.push((xi_z.neg(), -level.clone()));
            let slab = Polyhedron::from_hrep(h)?;
            if slab.is_empty() {
                return Ok(None);
            }
            let mut lo = Vec::with_capacity(n);
            let mut hi = Vec::with_capacity(n);
            for i in 0..n {
                let e = QVector::unit(n, i);
                let up = slab.support(&e).ok_or(HullError::DegenerateCone)?;
                let dn = slab.minimize(&e).ok_or(HullError::DegenerateCone)?;
                lo.push(int_floor(&dn));
                hi.push(int_ceil(&up));
            }
            Ok(Some((lo, hi)))
        }
        ConeSpec::Quadratic(q) => {
            // write x = β·y + w with y = Q⁻¹ξ ∈ C and b(y, w) = 0;
            // then ξ(x) = β·q(y) and 0 ≤ β ≤ level/q(y), while the
            // negative-definite part obeys -q(w) ≤ β²·q(y)
            let form = q.form();
            let y = q.form_inv().mul_vec(xi_z);
            let qy = quad(form, &y);
            if !qy.is_positive() {
                return Err(HullError::FunctionalNotInOpenDual);
            }
            if level.is_negative() {
                return Ok(None);
            }
            let beta_max = level / &qy;
            let r_bound = &beta_max * &beta_max * &qy; // bound on -q(w)

            // rational basis of the b-orthogonal complement of y
            let pairing = QMatrix::from_rows(vec![form.mul_vec(&y)]);
            let comp = pairing.kernel();
            let k = comp.len();
            let mut gram = QMatrix::zero(k, k);
            for i in 0..k {
                for j in 0..k {
                    gram.set(i, j, -crate::cone::bilinear(form, &comp[i], &comp[j]));
                }
            }
            let gram_inv = gram.inverse().map_err(|_| HullError::DegenerateCone)?;
            let mut lo = Vec::with_capacity(n);
            let mut hi = Vec::with_capacity(n);
            for i in 0..n {
                // e_i*(x) = β·y_i + e_i*(w); |e_i*(w)|² ≤ N*(e_i*|_perp)·R
                let vals = QVector::new(comp.iter().map(|u| u.get(i).clone()).collect());
                let dual_norm = gram_inv.mul_vec(&vals).dot(&vals);
                let w_bound = sqrt_upper(&(dual_norm * &r_bound));
                let beta_part = &beta_max * y.get(i);
                let center_lo = int_floor(&beta_part.clone().min(Rational::zero()));
                let center_hi = int_ceil(&beta_part.max(Rational::zero()));
                lo.push(center_lo - &w_bound);
                hi.push(center_hi + &w_bound);
            }
            Ok(Some((lo, hi)))
        }
    }
}

/// All lattice points of the open cone C with ξ(x) ≤ level, in ambient
/// coordinates, sorted. ξ must lie in the open dual.
pub(crate) fn enumerate_slab(
    view: &LatticeView,
    xi: &QVector,
    level: &Rational,
    budget: Budget,
) -> Result<Vec<QVector>, HullError> {
    let xi_z = view.functional_to_z(xi);
    if !view
        .cone_z
        .membership(&xi_z, MembershipTier::OpenDual)
        .unwrap_or(false)
    {
        return Err(HullError::FunctionalNotInOpenDual);
    }
    let Some((lo, hi)) = slab_box(view, &xi_z, level)? else {
        return Ok(Vec::new());
    };
    let mut cells: u64 = 1;
    for (l, h) in lo.iter().zip(&hi) {
        let width = (h - l + 1u32).to_u64().ok_or(HullError::BudgetExceeded(usize::MAX))?;
        cells = cells
            .checked_mul(width)
            .ok_or(HullError::BudgetExceeded(usize::MAX))?;
    }
    if cells > budget.0 as u64 {
        return Err(HullError::BudgetExceeded(cells as usize));
    }

    let n = lo.len();
    let mut out = Vec::new();
    let mut cursor = lo.clone();
    'outer: loop {
        let z = QVector::new(
            cursor
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        if view
            .cone_z
            .membership(&z, MembershipTier::Interior)
            .unwrap_or(false)
            && &xi_z.dot(&z) <= level
        {
            out.push(view.to_ambient(&z));
        }
        for j in 0..n {
            cursor[j] += 1;
            if cursor[j] <= hi[j] {
                continue 'outer;
            }
            cursor[j] = lo[j].clone();
        }
        break;
    }
    out.sort();
    Ok(out)
}

/// A canonical lattice point of the open cone: a positive integer multiple
/// of the interior point.
pub(crate) fn lattice_witness(view: &LatticeView, cone: &ConeSpec) -> QVector {
    let p = cone.interior_point();
    let z = view.lattice.coords(&p).primitive();
    // primitive() keeps the direction; it still lies in the open cone
    view.to_ambient(&z)
}

/// Positive content of ξ on L: the generator of the value group ξ(L).
pub(crate) fn functional_content(view: &LatticeView, xi: &QVector) -> Rational {
    let xi_z = view.functional_to_z(xi);
    let mut lcm = BigInt::one();
    for c in xi_z.coords() {
        lcm = lcm.lcm(c.denom());
    }
    let mut g = BigInt::zero();
    for c in xi_z.coords() {
        g = g.gcd(&(c.numer() * (&lcm / c.denom())));
    }
    Rational::new(g, lcm)
}

/// Certified minimum of a boundary dual functional η over C ∩ L.
///
/// Quadratic family: the minimum is the content of η(L) (every positive
/// level of η carries cone points arbitrarily far along the annihilated
/// isotropic ray). Polyhedral family: the slab is compact modulo the face
/// η annihilates; residue classes meeting C are enumerated exactly.
pub(crate) fn boundary_min(
    view: &LatticeView,
    cone: &ConeSpec,
    eta: &QVector,
    budget: Budget,
) -> Result<Rational, HullError> {
    match cone {
        ConeSpec::Quadratic(_) => Ok(functional_content(view, eta)),
        ConeSpec::Polyhedral(_) => {
            let eta_z = view.functional_to_z(eta);
            let ConeSpec::Polyhedral(pz) = &view.cone_z else {
                unreachable!()
            };
            // witness level
            let wit = view.lattice.coords(&lattice_witness(view, cone));
            let t = eta_z.dot(&wit);
            // face annihilated by eta and its saturated span
            let face_rays: Vec<QVector> = pz
                .rays()
                .iter()
                .filter(|r| eta_z.dot(r).is_zero())
                .cloned()
                .collect();
            if face_rays.is_empty() {
                return Err(HullError::FunctionalNotInOpenDual);
            }
            let w_basis = crate::exact::saturate_span(eta_z.dim(), &face_rays);
            let n = eta_z.dim();
            let k = w_basis.len();
            // projection to the quotient of V by span(W), in lift coords
            let inner = Lattice::standard(n);
            let lifts = quotient_lifts_z(&inner, &w_basis);
            let proj = projection_rows(n, &w_basis, &lifts);

            // image of the slab is a compact polytope in the quotient
            let mut h = pz.poly().hrep().clone();
            h.inequalities.push((eta_z.neg(), -t.clone()));
            let slab = Polyhedron::from_hrep(h)?;
            if slab.is_empty() {
                return Ok(t);
            }
            let image = slab.affine_image(&proj, None)?;
            let m = n - k;
            let mut lo = Vec::with_capacity(m);
            let mut hi = Vec::with_capacity(m);
            for i in 0..m {
                let e = QVector::unit(m, i);
                let up = image.support(&e).ok_or(HullError::DegenerateCone)?;
                let dn = image.minimize(&e).ok_or(HullError::DegenerateCone)?;
                lo.push(int_floor(&dn));
                hi.push(int_ceil(&up));
            }
            let mut cells: u64 = 1;
            for (l, hh) in lo.iter().zip(&hi) {
                cells = cells
                    .checked_mul((hh - l + 1u32).to_u64().unwrap_or(u64::MAX))
                    .unwrap_or(u64::MAX);
            }
            if cells > budget.0 as u64 {
                return Err(HullError::BudgetExceeded(cells as usize));
            }
            // enumerate residue classes; for each, the fiber meets C ∩ L
            // iff it meets C, decided on the relative interior point
            let mut best = t.clone();
            let mut cursor = lo.clone();
            'outer: loop {
                let zeta = QVector::new(
                    cursor
                        .iter()
                        .map(|c| Rational::from_integer(c.clone()))
                        .collect(),
                );
                // fiber: {x in C̄_z : proj x = zeta}
                let mut hf = pz.poly().hrep().clone();
                for i in 0..m {
                    hf.equations.push((proj.row(i), zeta.get(i).clone()));
                }
                let fiber = Polyhedron::from_hrep(hf)?;
                if !fiber.is_empty() {
                    if let Some(ri) = fiber.relative_interior_point() {
                        if view
                            .cone_z
                            .membership(&ri, MembershipTier::Interior)
                            .unwrap_or(false)
                        {
                            // eta is constant on the fiber
                            let val = eta_z.dot(&ri);
                            if val < best {
                                best = val;
                            }
                        }
                    }
                }
                for j in 0..m {
                    cursor[j] += 1;
                    if cursor[j] <= hi[j] {
                        continue 'outer;
                    }
                    cursor[j] = lo[j].clone();
                }
                break;
            }
            Ok(best)
        }
    }
}

/// Lifts of a basis of ℤ^n modulo the saturated sublattice spanned by sub.
fn quotient_lifts_z(lattice: &Lattice, sub: &[QVector]) -> Vec<QVector> {
    use crate::exact::{hermite_normal_form, integral_kernel};
    let n = lattice.dim();
    if sub.is_empty() {
        return (0..n).map(|i| QVector::unit(n, i)).collect();
    }
    if sub.len() == n {
        return Vec::new();
    }
    let m = QMatrix::from_rows(sub.to_vec());
    let kernel = integral_kernel(&m);
    let kt = QMatrix::from_rows(kernel);
    let (h, u) = hermite_normal_form(&kt.transpose()).expect("integral");
    let mut lifts = Vec::new();
    for j in 0..h.cols() {
        if (0..h.rows()).any(|i| !h.get(i, j).is_zero()) {
            lifts.push(u.col(j));
        }
    }
    lifts
}

fn projection_rows(n: usize, w_basis: &[QVector], lifts: &[QVector]) -> QMatrix {
    let k = w_basis.len();
    let m = lifts.len();
    assert_eq!(k + m, n);
    let mut cols: Vec<QVector> = w_basis.to_vec();
    cols.extend(lifts.iter().cloned());
    let full = QMatrix::from_cols(cols);
    let inv = full.inverse().expect("independent basis");
    let mut p = QMatrix::zero(m, n);
    for i in 0..m {
        for j in 0..n {
            p.set(i, j, inv.get(k + i, j).clone());
        }
    }
    p
}

/// Classification of a model facet normal against the dual cone.
enum FacetClass {
    Interior,
    Boundary,
    Artificial,
}

fn classify_normal(cone: &ConeSpec, a: &QVector) -> FacetClass {
    let open = cone.membership(a, MembershipTier::OpenDual).unwrap_or(false);
    if open {
        return FacetClass::Interior;
    }
    let closed = cone
        .membership(a, MembershipTier::ClosedDual)
        .unwrap_or(false);
    if closed && !a.is_zero() {
        FacetClass::Boundary
    } else {
        FacetClass::Artificial
    }
}

/// Recession rays of the true hull face supported by a boundary
/// functional η: the rational rays of C̄ annihilated by η.
fn boundary_face_rays(cone: &ConeSpec, eta: &QVector) -> Vec<QVector> {
    match cone {
        ConeSpec::Polyhedral(p) => p
            .rays()
            .iter()
            .filter(|r| eta.dot(r).is_zero())
            .cloned()
            .collect(),
        ConeSpec::Quadratic(q) => {
            let w = q.form_inv().mul_vec(eta).primitive();
            if quad(q.form(), &w).is_zero() && !w.is_zero() {
                vec![w]
            } else {
                Vec::new()
            }
        }
    }
}

/// Computes the faces of [C ∩ L] meeting a bounded rational window, with
/// per-facet certificates. Growing the budget never changes a certified
/// result, only whether certification completes.
pub fn truncated_hull(
    cone: &ConeSpec,
    lattice: &Lattice,
    window: &Polyhedron,
    budget: Budget,
) -> Result<TruncatedHull, HullError> {
    if window.ambient_dim() != cone.ambient_dim() {
        return Err(HullError::Cone(ConeError::DimensionMismatch(
            "window dimension".into(),
        )));
    }
    if !window.vrep().rays.is_empty() || !window.vrep().lines.is_empty() {
        return Err(HullError::UnboundedWindow);
    }
    let view = LatticeView::new(cone, lattice)?;
    let xi0 = cone.interior_dual_functional();
    let witness = lattice_witness(&view, cone);
    let wit_level = xi0.dot(&witness);

    // window-derived slab level for reported faces
    let mut report_level = window
        .vrep()
        .points
        .iter()
        .map(|v| xi0.dot(v))
        .max()
        .unwrap_or_else(Rational::zero)
        .max(wit_level.clone());

    let mut level = report_level.clone() * crate::exact::rat(2);
    let mut extra_rays: Vec<QVector> = match cone {
        ConeSpec::Polyhedral(p) => p.rays().to_vec(),
        ConeSpec::Quadratic(_) => Vec::new(),
    };

    let mut rounds = 0usize;
    loop {
        rounds += 1;
        if rounds > 24 {
            return Err(HullError::BudgetExceeded(0));
        }
        let points = enumerate_slab(&view, &xi0, &level, budget)?;
        if points.is_empty() {
            level = level * crate::exact::rat(2);
            continue;
        }
        let model = Polyhedron::from_vrep(VRep {
            points: points.clone(),
            rays: extra_rays.clone(),
            lines: vec![],
            dim: cone.ambient_dim(),
        })?;

        // classify and certify every facet
        let mut facet_certs: Vec<FacetCertificate> = Vec::new();
        let mut artificial: Vec<usize> = Vec::new();
        let mut refine = false;
        for (idx, (a, b)) in model.hrep().inequalities.iter().enumerate() {
            match classify_normal(cone, a) {
                FacetClass::Interior => {
                    let below = enumerate_slab(&view, a, b, budget)?;
                    let stray: Vec<&QVector> = below.iter().filter(|x| &a.dot(x) < b).collect();
                    if !stray.is_empty() {
                        // model missed hull points; enlarge the level so
                        // they enter the enumeration
                        for s in &stray {
                            let lv = xi0.dot(s);
                            if lv > level {
                                level = lv;
                            }
                        }
                        level = level * crate::exact::rat(2);
                        refine = true;
                        break;
                    }
                    facet_certs.push(FacetCertificate {
                        normal: a.clone(),
                        offset: b.clone(),
                        kind: FacetCertKind::InteriorSlab {
                            points: below.len(),
                        },
                    });
                }
                FacetClass::Boundary => {
                    let true_min = boundary_min(&view, cone, a, budget)?;
                    if &true_min < b {
                        // hull extends below this facet: attach the
                        // annihilated rays and retry
                        let mut added = false;
                        for r in boundary_face_rays(cone, a) {
                            if !extra_rays.contains(&r) {
                                extra_rays.push(r);
                                added = true;
                            }
                        }
                        if !added {
                            level = level * crate::exact::rat(2);
                        }
                        refine = true;
                        break;
                    }
                    // ensure the facet's recession is part of the model
                    let mut added = false;
                    for r in boundary_face_rays(cone, a) {
                        if !extra_rays.contains(&r) {
                            extra_rays.push(r);
                            added = true;
                        }
                    }
                    if added {
                        refine = true;
                        break;
                    }
                    facet_certs.push(FacetCertificate {
                        normal: a.clone(),
                        offset: b.clone(),
                        kind: FacetCertKind::BoundaryContent {
                            content: true_min.clone(),
                        },
                    });
                }
                FacetClass::Artificial => {
                    // harmless only if the window lies on the valid side
                    let min_on_window = window
                        .vrep()
                        .points
                        .iter()
                        .map(|v| a.dot(v))
                        .min()
                        .unwrap_or_else(Rational::zero);
                    if &min_on_window < b {
                        level = level * crate::exact::rat(2);
                        refine = true;
                        break;
                    }
                    artificial.push(idx);
                    facet_certs.push(FacetCertificate {
                        normal: a.clone(),
                        offset: b.clone(),
                        kind: FacetCertKind::WindowClear,
                    });
                }
            }
        }
        if refine {
            continue;
        }

        // extract proper faces meeting the window, skipping faces that lie
        // in an artificial facet
        let nodes = face_lattice(&model)?;
        let top_dim = nodes[0].dim;
        let mut reported: Vec<Polyhedron> = Vec::new();
        let mut need_higher_report = false;
        for node in &nodes {
            if node.dim >= top_dim {
                continue;
            }
            if node.active.iter().any(|i| artificial.contains(i)) {
                continue;
            }
            let face = Polyhedron::from_vrep(node.generators.clone())?;
            let meet = face.intersect(window)?;
            if meet.is_empty() {
                continue;
            }
            // report the face from its vertices at the report level plus
            // its recession rays; verify the window part is covered
            let mut rep_level = report_level.clone();
            let rep = loop {
                let verts: Vec<QVector> = face
                    .vrep()
                    .points
                    .iter()
                    .filter(|p| xi0.dot(p) <= rep_level)
                    .cloned()
                    .collect();
                if verts.is_empty() {
                    rep_level = rep_level * crate::exact::rat(2);
                    if rep_level > level {
                        break None;
                    }
                    continue;
                }
                let candidate = Polyhedron::from_vrep(VRep {
                    points: verts,
                    rays: face.vrep().rays.clone(),
                    lines: face.vrep().lines.clone(),
                    dim: face.ambient_dim(),
                })?;
                let covered = meet
                    .vrep()
                    .points
                    .iter()
                    .all(|p| candidate.contains(p));
                if covered {
                    break Some(candidate);
                }
                rep_level = rep_level * crate::exact::rat(2);
                if rep_level > level {
                    break None;
                }
            };
            match rep {
                Some(r) => {
                    if rep_level > report_level {
                        report_level = rep_level;
                    }
                    if !reported.contains(&r) {
                        reported.push(r);
                    }
                }
                None => {
                    need_higher_report = true;
                    break;
                }
            }
        }
        if need_higher_report {
            level = level * crate::exact::rat(2);
            continue;
        }

        reported.sort_by(poly_sort_key);
        return Ok(TruncatedHull {
            faces: reported,
            certificate: HullCertificate {
                level_functional: xi0,
                level,
                report_level,
                enumerated: points.len(),
                facets: facet_certs,
            },
        });
    }
}

pub(crate) fn poly_sort_key(a: &Polyhedron, b: &Polyhedron) -> std::cmp::Ordering {
    a.dim()
        .cmp(&b.dim())
        .then_with(|| a.vrep().points.cmp(&b.vrep().points))
        .then_with(|| a.vrep().rays.cmp(&b.vrep().rays))
        .then_with(|| a.vrep().lines.cmp(&b.vrep().lines))
}

/// Bounded window helper: the box [lo, hi]^dim as a polyhedron.
pub fn box_window(dim: usize, lo: i64, hi: i64) -> Polyhedron {
    let mut h = HRep::new(dim);
    for i in 0..dim {
        let e = QVector::unit(dim, i);
        h.inequalities.push((e.clone(), crate::exact::rat(lo)));
        h.inequalities.push((e.neg(), crate::exact::rat(-hi)));
    }
    Polyhedron::from_hrep(h).expect("box is valid")
}
