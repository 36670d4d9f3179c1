//! Dual-description polyhedral computation: H/V conversion, face lattices,
//! recession and asymptotic data, Minkowski sums, Hilbert bases, and
//! minimum-envelope domination.
//!
//! Polyhedra are handled through their homogenization: a polyhedron
//! P ⊆ ℝ^n becomes the cone over {1} × P in ℝ^{n+1}, with the extra
//! coordinate first. Canonical forms make equality of polyhedra structural:
//! primitive integral ray representatives, lexicographic sorting, and
//! irredundant constraint rows.

pub mod dd;
mod dominate;
mod faces;
mod hilbert;

pub use dominate::{dominating_subset, AffineForm, Domination};
pub use faces::{face_lattice, FaceLatticeNode};
pub use hilbert::hilbert_basis;

use crate::exact::{QMatrix, QVector, Rational};
use dd::ConeGenerators;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polyhedron is empty")]
    EmptyPolyhedron,
    #[error("cone is not pointed")]
    NotPointed,
    #[error("function is negative on the polyhedron")]
    NegativeOnP,
    #[error("inconsistent dual representations")]
    Inconsistent,
}

/// Inequalities ⟨normal, x⟩ ≥ offset and equations ⟨normal, x⟩ = offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub inequalities: Vec<(QVector, Rational)>,
    pub equations: Vec<(QVector, Rational)>,
    pub dim: usize,
}

/// Minkowski generators: conv(points) + cone(rays) + span(lines).
/// A representation without points denotes the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub points: Vec<QVector>,
    pub rays: Vec<QVector>,
    pub lines: Vec<QVector>,
    pub dim: usize,
}

impl HRep {
    pub fn new(dim: usize) -> Self {
        HRep {
            inequalities: Vec::new(),
            equations: Vec::new(),
            dim,
        }
    }

    pub fn with_inequalities(dim: usize, ineqs: Vec<(QVector, Rational)>) -> Self {
        HRep {
            inequalities: ineqs,
            equations: Vec::new(),
            dim,
        }
    }
}

impl VRep {
    pub fn empty(dim: usize) -> Self {
        VRep {
            points: Vec::new(),
            rays: Vec::new(),
            lines: Vec::new(),
            dim,
        }
    }

    pub fn from_points(dim: usize, points: Vec<QVector>) -> Self {
        VRep {
            points,
            rays: Vec::new(),
            lines: Vec::new(),
            dim,
        }
    }

    /// Generators of a cone from its extremal ray directions.
    pub fn from_rays(dim: usize, rays: Vec<QVector>) -> Self {
        VRep {
            points: vec![QVector::zero(dim)],
            rays,
            lines: Vec::new(),
            dim,
        }
    }
}

/// A rational polyhedron carrying both canonical representations.
#[derive(Clone, PartialEq, Eq)]
pub struct Polyhedron {
    hrep: HRep,
    vrep: VRep,
    dim: usize,
}

impl std::fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Polyhedron(dim {} in R^{}, pts {:?}, rays {:?}, lines {:?})",
            self.dim(),
            self.dim,
            self.vrep.points,
            self.vrep.rays,
            self.vrep.lines
        )
    }
}

fn hom_of_h(h: &HRep) -> (Vec<QVector>, Vec<QVector>) {
    // row (-b, a) for ⟨a,x⟩ ≥ b, plus the homogenizing row x0 ≥ 0
    let lift = |(a, b): &(QVector, Rational)| -> QVector {
        let mut c = Vec::with_capacity(h.dim + 1);
        c.push(-b.clone());
        c.extend(a.coords().iter().cloned());
        QVector::new(c)
    };
    let eqs: Vec<QVector> = h.equations.iter().map(lift).collect();
    let mut ineqs: Vec<QVector> = vec![QVector::unit(h.dim + 1, 0)];
    ineqs.extend(h.inequalities.iter().map(lift));
    (eqs, ineqs)
}

fn hom_of_v(v: &VRep) -> ConeGenerators {
    let lift = |x0: Rational, x: &QVector| -> QVector {
        let mut c = Vec::with_capacity(v.dim + 1);
        c.push(x0);
        c.extend(x.coords().iter().cloned());
        QVector::new(c)
    };
    let mut rays: Vec<QVector> = v
        .points
        .iter()
        .map(|p| lift(Rational::one(), p).primitive())
        .collect();
    rays.extend(v.rays.iter().map(|r| lift(Rational::zero(), r).primitive()));
    let lineality: Vec<QVector> = v
        .lines
        .iter()
        .map(|l| lift(Rational::zero(), l).primitive_signless())
        .collect();
    ConeGenerators { lineality, rays }
}

fn unhom_generators(dim: usize, gens: &ConeGenerators) -> VRep {
    let mut points = Vec::new();
    let mut rays = Vec::new();
    let mut lines = Vec::new();
    for l in &gens.lineality {
        debug_assert!(l.get(0).is_zero(), "lineality escaped x0 >= 0");
        lines.push(drop_first(l).primitive_signless());
    }
    for r in &gens.rays {
        let x0 = r.get(0);
        if x0.is_zero() {
            let d = drop_first(r).primitive();
            if !d.is_zero() {
                rays.push(d);
            }
        } else {
            let inv = x0.recip();
            points.push(drop_first(r).scale(&inv));
        }
    }
    points.sort();
    points.dedup();
    rays.sort();
    rays.dedup();
    lines.sort();
    lines.dedup();
    VRep {
        points,
        rays,
        lines,
        dim,
    }
}

fn drop_first(v: &QVector) -> QVector {
    QVector::new(v.coords()[1..].to_vec())
}

fn unhom_constraints(dim: usize, polar: &ConeGenerators) -> HRep {
    let mut inequalities = Vec::new();
    let mut equations = Vec::new();
    for r in &polar.rays {
        let a = drop_first(r);
        if a.is_zero() {
            continue; // the x0 >= 0 facet of the homogenization
        }
        let (a, b) = normalize_row(&a, &-r.get(0).clone());
        inequalities.push((a, b));
    }
    for l in &polar.lineality {
        let a = drop_first(l);
        if a.is_zero() {
            continue;
        }
        let (a, b) = normalize_row_signless(&a, &-l.get(0).clone());
        equations.push((a, b));
    }
    inequalities.sort();
    inequalities.dedup();
    equations.sort();
    equations.dedup();
    HRep {
        inequalities,
        equations,
        dim,
    }
}

/// Scales (a, b) so that the joint vector is primitive integral,
/// preserving the inequality direction.
fn normalize_row(a: &QVector, b: &Rational) -> (QVector, Rational) {
    let mut joint = vec![b.clone()];
    joint.extend(a.coords().iter().cloned());
    let p = QVector::new(joint).primitive();
    (drop_first(&p), p.get(0).clone())
}

fn normalize_row_signless(a: &QVector, b: &Rational) -> (QVector, Rational) {
    let mut joint = vec![b.clone()];
    joint.extend(a.coords().iter().cloned());
    // canonical sign on the normal part, not the offset
    let p = QVector::new(joint).primitive();
    let flip = match a.coords().iter().find(|c| !c.is_zero()) {
        Some(c) => c < &Rational::zero(),
        None => false,
    };
    let p = if flip { p.neg() } else { p };
    (drop_first(&p), p.get(0).clone())
}

/// Input to dual description: either representation.
#[derive(Clone, Debug)]
pub enum Description {
    H(HRep),
    V(VRep),
}

/// Computes both canonical representations from either one.
pub fn dual_description(input: Description) -> Result<Polyhedron, PolyError> {
    let (dim, hom) = match &input {
        Description::H(h) => {
            for (a, _) in h.inequalities.iter().chain(&h.equations) {
                if a.dim() != h.dim {
                    return Err(PolyError::DimensionMismatch(format!(
                        "constraint normal of dim {} in R^{}",
                        a.dim(),
                        h.dim
                    )));
                }
            }
            let (eqs, ineqs) = hom_of_h(h);
            (h.dim, dd::double_description(h.dim + 1, &eqs, &ineqs))
        }
        Description::V(v) => {
            for g in v.points.iter().chain(&v.rays).chain(&v.lines) {
                if g.dim() != v.dim {
                    return Err(PolyError::DimensionMismatch(format!(
                        "generator of dim {} in R^{}",
                        g.dim(),
                        v.dim
                    )));
                }
            }
            (v.dim, hom_of_v(v))
        }
    };
    let hom = dd::canonicalize(&hom);
    // Polar pass yields the irredundant constraint system; from an H input
    // this simultaneously prunes non-extreme generators on the way in.
    let polar = dd::canonicalize(&dd::polar(dim + 1, &hom));
    let hom = match &input {
        Description::H(_) => hom,
        // V input may list redundant generators: a second DD pass over the
        // facet system restores minimality.
        Description::V(_) => {
            let mut ineqs = vec![QVector::unit(dim + 1, 0)];
            ineqs.extend(polar.rays.iter().cloned());
            let eqs = polar.lineality.clone();
            dd::canonicalize(&dd::double_description(dim + 1, &eqs, &ineqs))
        }
    };
    let vrep = unhom_generators(dim, &hom);
    if vrep.points.is_empty() {
        return Ok(Polyhedron::empty(dim));
    }
    let hrep = unhom_constraints(dim, &polar);
    let p = Polyhedron { hrep, vrep, dim };
    debug_assert!(p.verify_consistent());
    Ok(p)
}

impl Polyhedron {
    /// The canonical empty polyhedron.
    pub fn empty(dim: usize) -> Self {
        Polyhedron {
            hrep: HRep {
                inequalities: vec![(QVector::zero(dim), Rational::one())],
                equations: Vec::new(),
                dim,
            },
            vrep: VRep::empty(dim),
            dim,
        }
    }

    pub fn from_hrep(h: HRep) -> Result<Self, PolyError> {
        dual_description(Description::H(h))
    }

    pub fn from_vrep(v: VRep) -> Result<Self, PolyError> {
        dual_description(Description::V(v))
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn hrep(&self) -> &HRep {
        &self.hrep
    }

    pub fn vrep(&self) -> &VRep {
        &self.vrep
    }

    pub fn is_empty(&self) -> bool {
        self.vrep.points.is_empty()
    }

    /// Dimension of the polyhedron itself (-1 for empty).
    pub fn dim(&self) -> isize {
        if self.is_empty() {
            return -1;
        }
        let p0 = &self.vrep.points[0];
        let mut dirs: Vec<QVector> = self.vrep.points[1..].iter().map(|p| p.sub(p0)).collect();
        dirs.extend(self.vrep.rays.iter().cloned());
        dirs.extend(self.vrep.lines.iter().cloned());
        if dirs.is_empty() {
            return 0;
        }
        QMatrix::from_rows(dirs).rank() as isize
    }

    pub fn contains(&self, x: &QVector) -> bool {
        if self.is_empty() {
            return false;
        }
        self.hrep.inequalities.iter().all(|(a, b)| &a.dot(x) >= b)
            && self.hrep.equations.iter().all(|(a, b)| &a.dot(x) == b)
    }

    /// Strict containment: all inequality constraints strict. For a
    /// full-dimensional polyhedron this is interior membership.
    pub fn contains_strict(&self, x: &QVector) -> bool {
        if self.is_empty() {
            return false;
        }
        self.hrep.inequalities.iter().all(|(a, b)| &a.dot(x) > b)
            && self.hrep.equations.iter().all(|(a, b)| &a.dot(x) == b)
    }

    /// A point in the relative interior, if nonempty: the average of all
    /// points plus the sum of ray directions.
    pub fn relative_interior_point(&self) -> Option<QVector> {
        if self.is_empty() {
            return None;
        }
        let n = rat_len(self.vrep.points.len());
        let mut acc = QVector::zero(self.dim);
        for p in &self.vrep.points {
            acc = acc.add(p);
        }
        acc = acc.scale(&n.recip());
        for r in &self.vrep.rays {
            acc = acc.add(r);
        }
        Some(acc)
    }

    /// Exact membership of x in the relative interior.
    pub fn contains_relative_interior(&self, x: &QVector) -> bool {
        if !self.contains(x) {
            return false;
        }
        // x is in the relative interior iff no inequality that is
        // non-constant on the polyhedron is tight at x
        for (a, b) in &self.hrep.inequalities {
            if &a.dot(x) == b {
                let constant = self
                    .vrep
                    .points
                    .iter()
                    .all(|p| &a.dot(p) == b)
                    && self.vrep.rays.iter().all(|r| a.dot(r).is_zero());
                if !constant {
                    return false;
                }
            }
        }
        true
    }

    /// Checks that every V-generator satisfies every H-constraint.
    pub fn verify_consistent(&self) -> bool {
        for p in &self.vrep.points {
            if !self.contains(p) {
                return false;
            }
        }
        for r in &self.vrep.rays {
            let ok = self.hrep.inequalities.iter().all(|(a, _)| !a.dot(r).is_negative())
                && self.hrep.equations.iter().all(|(a, _)| a.dot(r).is_zero());
            if !ok {
                return false;
            }
        }
        for l in &self.vrep.lines {
            let ok = self.hrep.inequalities.iter().all(|(a, _)| a.dot(l).is_zero())
                && self.hrep.equations.iter().all(|(a, _)| a.dot(l).is_zero());
            if !ok {
                return false;
            }
        }
        true
    }

    /// Support value sup ⟨xi, x⟩ over the polyhedron; None when unbounded
    /// in that direction, Some(max) otherwise.
    pub fn support(&self, xi: &QVector) -> Option<Rational> {
        if self.is_empty() {
            return None;
        }
        for r in &self.vrep.rays {
            if xi.dot(r).is_positive() {
                return None;
            }
        }
        for l in &self.vrep.lines {
            if !xi.dot(l).is_zero() {
                return None;
            }
        }
        self.vrep.points.iter().map(|p| xi.dot(p)).max()
    }

    /// Minimum of ⟨xi, x⟩ over the polyhedron, None when unbounded below.
    pub fn minimize(&self, xi: &QVector) -> Option<Rational> {
        self.support(&xi.neg()).map(|v| -v)
    }

    /// Intersection, via merged constraint systems.
    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron, PolyError> {
        if self.dim != other.dim {
            return Err(PolyError::DimensionMismatch(
                "intersection of different ambient spaces".into(),
            ));
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Polyhedron::empty(self.dim));
        }
        let mut h = self.hrep.clone();
        h.inequalities.extend(other.hrep.inequalities.iter().cloned());
        h.equations.extend(other.hrep.equations.iter().cloned());
        Polyhedron::from_hrep(h)
    }

    /// Affine image under x ↦ m·x (+ t).
    pub fn affine_image(&self, m: &QMatrix, t: Option<&QVector>) -> Result<Polyhedron, PolyError> {
        if self.is_empty() {
            return Ok(Polyhedron::empty(m.rows()));
        }
        let shift = |v: QVector| match t {
            Some(t) => v.add(t),
            None => v,
        };
        let v = VRep {
            points: self.vrep.points.iter().map(|p| shift(m.mul_vec(p))).collect(),
            rays: self.vrep.rays.iter().map(|r| m.mul_vec(r)).collect(),
            lines: self.vrep.lines.iter().map(|l| m.mul_vec(l)).collect(),
            dim: m.rows(),
        };
        Polyhedron::from_vrep(v)
    }
}

fn rat_len(n: usize) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(n as u64))
}

use num_traits::Signed;

/// Recession cone and asymptotic space of a nonempty polyhedron. For
/// polyhedra the asymptotic space is the linear span of the recession cone.
pub fn recession_and_asymptotic(p: &Polyhedron) -> Result<(Polyhedron, Vec<QVector>), PolyError> {
    if p.is_empty() {
        return Err(PolyError::EmptyPolyhedron);
    }
    let rec = Polyhedron::from_vrep(VRep {
        points: vec![QVector::zero(p.dim)],
        rays: p.vrep.rays.clone(),
        lines: p.vrep.lines.clone(),
        dim: p.dim,
    })?;
    let mut span_gens = p.vrep.rays.clone();
    span_gens.extend(p.vrep.lines.iter().cloned());
    let asy = dd::canonical_basis(&span_gens);
    Ok((rec, asy))
}

/// Minkowski sum as a polyhedron: pairwise point sums, ray/line unions.
pub fn minkowski_sum(a: &Polyhedron, b: &Polyhedron) -> Result<Polyhedron, PolyError> {
    if a.dim != b.dim {
        return Err(PolyError::DimensionMismatch(
            "minkowski sum of different ambient spaces".into(),
        ));
    }
    if a.is_empty() || b.is_empty() {
        return Ok(Polyhedron::empty(a.dim));
    }
    let mut points = Vec::new();
    for p in &a.vrep.points {
        for q in &b.vrep.points {
            points.push(p.add(q));
        }
    }
    let mut rays = a.vrep.rays.clone();
    rays.extend(b.vrep.rays.iter().cloned());
    let mut lines = a.vrep.lines.clone();
    lines.extend(b.vrep.lines.iter().cloned());
    Polyhedron::from_vrep(VRep {
        points,
        rays,
        lines,
        dim: a.dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn quadrant() -> Polyhedron {
        Polyhedron::from_hrep(HRep::with_inequalities(
            2,
            vec![
                (QVector::from_ints(&[1, 0]), rat(0)),
                (QVector::from_ints(&[0, 1]), rat(0)),
            ],
        ))
        .unwrap()
    }

    fn unit_square() -> Polyhedron {
        Polyhedron::from_vrep(VRep::from_points(
            2,
            vec![
                QVector::from_ints(&[0, 0]),
                QVector::from_ints(&[1, 0]),
                QVector::from_ints(&[0, 1]),
                QVector::from_ints(&[1, 1]),
            ],
        ))
        .unwrap()
    }

    #[test]
    fn quadrant_generators() {
        let p = quadrant();
        assert_eq!(p.vrep().points, vec![QVector::from_ints(&[0, 0])]);
        assert_eq!(
            p.vrep().rays,
            vec![QVector::from_ints(&[0, 1]), QVector::from_ints(&[1, 0])]
        );
        assert!(p.vrep().lines.is_empty());
    }

    #[test]
    fn shifted_cone_hrep() {
        // point (1,1) + quadrant rays: constraints x >= 1, y >= 1
        let p = Polyhedron::from_vrep(VRep {
            points: vec![QVector::from_ints(&[1, 1])],
            rays: vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])],
            lines: vec![],
            dim: 2,
        })
        .unwrap();
        let h = p.hrep();
        assert_eq!(h.equations.len(), 0);
        let mut rows = h.inequalities.clone();
        rows.sort();
        assert_eq!(
            rows,
            vec![
                (QVector::from_ints(&[0, 1]), rat(1)),
                (QVector::from_ints(&[1, 0]), rat(1)),
            ]
        );
    }

    #[test]
    fn empty_from_infeasible() {
        let p = Polyhedron::from_hrep(HRep::with_inequalities(
            1,
            vec![
                (QVector::from_ints(&[1]), rat(1)),
                (QVector::from_ints(&[-1]), rat(0)),
            ],
        ))
        .unwrap();
        assert!(p.is_empty());
        assert_eq!(p, Polyhedron::empty(1));
    }

    #[test]
    fn roundtrip_canonical() {
        let p = unit_square();
        let q = Polyhedron::from_hrep(p.hrep().clone()).unwrap();
        assert_eq!(p, q);
        let r = Polyhedron::from_vrep(p.vrep().clone()).unwrap();
        assert_eq!(p, r);
    }

    #[test]
    fn redundant_generator_pruned() {
        let p = Polyhedron::from_vrep(VRep::from_points(
            2,
            vec![
                QVector::from_ints(&[0, 0]),
                QVector::from_ints(&[2, 0]),
                QVector::from_ints(&[1, 0]), // interior of an edge
                QVector::from_ints(&[0, 2]),
            ],
        ))
        .unwrap();
        assert_eq!(p.vrep().points.len(), 3);
    }

    #[test]
    fn truncated_hull_example() {
        // {x - y >= 1, x + y >= 1}: one vertex, two edge rays
        let p = Polyhedron::from_hrep(HRep::with_inequalities(
            2,
            vec![
                (QVector::from_ints(&[1, -1]), rat(1)),
                (QVector::from_ints(&[1, 1]), rat(1)),
            ],
        ))
        .unwrap();
        assert_eq!(p.vrep().points, vec![QVector::new(vec![rat(1), rat(0)])]);
        assert_eq!(
            p.vrep().rays,
            vec![QVector::from_ints(&[1, -1]), QVector::from_ints(&[1, 1])]
        );
    }

    #[test]
    fn recession_of_bounded_is_origin() {
        let (rec, asy) = recession_and_asymptotic(&unit_square()).unwrap();
        assert_eq!(rec.dim(), 0);
        assert!(asy.is_empty());
    }

    #[test]
    fn recession_of_halfspace() {
        let p = Polyhedron::from_hrep(HRep::with_inequalities(
            2,
            vec![(QVector::from_ints(&[1, 0]), rat(1))],
        ))
        .unwrap();
        let (rec, asy) = recession_and_asymptotic(&p).unwrap();
        assert_eq!(rec.dim(), 2);
        assert_eq!(asy.len(), 2);
    }

    #[test]
    fn recession_of_quadrant() {
        let (rec, asy) = recession_and_asymptotic(&quadrant()).unwrap();
        assert_eq!(rec, quadrant());
        assert_eq!(asy.len(), 2);
    }

    #[test]
    fn minkowski_point_plus_cone() {
        let pt = Polyhedron::from_vrep(VRep::from_points(2, vec![QVector::from_ints(&[1, 1])]))
            .unwrap();
        let s = minkowski_sum(&pt, &quadrant()).unwrap();
        assert_eq!(s.vrep().points, vec![QVector::from_ints(&[1, 1])]);
        assert_eq!(s.vrep().rays.len(), 2);
    }

    #[test]
    fn minkowski_segments_make_square() {
        let seg = |v: &[i64]| {
            Polyhedron::from_vrep(VRep::from_points(
                2,
                vec![QVector::from_ints(&[0, 0]), QVector::from_ints(v)],
            ))
            .unwrap()
        };
        let sq = minkowski_sum(&seg(&[1, 0]), &seg(&[0, 1])).unwrap();
        assert_eq!(sq, unit_square());
    }

    #[test]
    fn support_function_additive() {
        let a = unit_square();
        let b = Polyhedron::from_vrep(VRep::from_points(
            2,
            vec![
                QVector::from_ints(&[0, 0]),
                QVector::from_ints(&[2, 1]),
                QVector::from_ints(&[-1, 1]),
            ],
        ))
        .unwrap();
        let s = minkowski_sum(&a, &b).unwrap();
        for dir in [[1, 0], [0, 1], [1, 1], [-1, 2], [3, -1], [-2, -5]] {
            let xi = QVector::from_ints(&dir);
            let lhs = s.support(&xi).unwrap();
            let rhs = a.support(&xi).unwrap() + b.support(&xi).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn contains_and_interior() {
        let p = quadrant();
        assert!(p.contains(&QVector::from_ints(&[0, 5])));
        assert!(!p.contains_strict(&QVector::from_ints(&[0, 5])));
        assert!(p.contains_strict(&QVector::new(vec![ratio(1, 7), ratio(2, 3)])));
        assert!(!p.contains(&QVector::from_ints(&[-1, 0])));
    }

    #[test]
    fn line_containing_polyhedron() {
        // {x = y} in R^2 is a line
        let p = Polyhedron::from_hrep(HRep {
            inequalities: vec![],
            equations: vec![(QVector::from_ints(&[1, -1]), rat(0))],
            dim: 2,
        })
        .unwrap();
        assert_eq!(p.vrep().lines, vec![QVector::from_ints(&[1, 1])]);
        assert_eq!(p.dim(), 1);
    }
}
