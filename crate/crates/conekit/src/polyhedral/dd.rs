//! Double-description method on homogeneous cones.
//!
//! A cone {y : e·y = 0 ∀e ∈ eqs, a·y ≥ 0 ∀a ∈ ineqs} is converted to a
//! generator pair (lineality basis, extreme rays). Constraints are inserted
//! incrementally in input order, so the output is deterministic.

use crate::exact::{QMatrix, QVector, Rational};
use num_traits::Zero;

/// Generators of a homogeneous cone: span(lineality) + cone(rays).
#[derive(Clone, Debug)]
pub struct ConeGenerators {
    pub lineality: Vec<QVector>,
    pub rays: Vec<QVector>,
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r > &Rational::zero() {
        1
    } else {
        -1
    }
}

/// Runs double description: `eqs` are hyperplanes, `ineqs` halfspaces,
/// inserted in the given order after the equations.
pub fn double_description(dim: usize, eqs: &[QVector], ineqs: &[QVector]) -> ConeGenerators {
    let mut lineality: Vec<QVector> = (0..dim).map(|i| QVector::unit(dim, i)).collect();
    let mut rays: Vec<QVector> = Vec::new();
    // inequalities inserted so far, for active-set recomputation
    let mut inserted: Vec<QVector> = Vec::new();

    for e in eqs {
        insert_constraint(&mut lineality, &mut rays, &inserted, e, true);
    }
    for a in ineqs {
        insert_constraint(&mut lineality, &mut rays, &inserted, a, false);
        inserted.push(a.clone());
    }
    ConeGenerators { lineality, rays }
}

fn insert_constraint(
    lineality: &mut Vec<QVector>,
    rays: &mut Vec<QVector>,
    inserted: &[QVector],
    a: &QVector,
    is_equation: bool,
) {
    // If the constraint is nonzero on the lineality space, split off a
    // pivot direction and neutralize everything else against it.
    if let Some(idx) = lineality.iter().position(|v| !a.dot(v).is_zero()) {
        let mut v0 = lineality.remove(idx);
        if sign(&a.dot(&v0)) < 0 {
            v0 = v0.neg();
        }
        let av0 = a.dot(&v0);
        for w in lineality.iter_mut() {
            let c = a.dot(w) / &av0;
            *w = w.sub(&v0.scale(&c)).primitive_signless();
        }
        for r in rays.iter_mut() {
            let c = a.dot(r) / &av0;
            *r = r.sub(&v0.scale(&c)).primitive();
        }
        if !is_equation {
            rays.push(v0.primitive());
        }
        return;
    }

    // Constraint vanishes on lineality: partition rays by sign.
    let evals: Vec<i8> = rays.iter().map(|r| sign(&a.dot(r))).collect();
    let pos: Vec<usize> = (0..rays.len()).filter(|&i| evals[i] > 0).collect();
    let neg: Vec<usize> = (0..rays.len()).filter(|&i| evals[i] < 0).collect();
    if neg.is_empty() && !is_equation {
        return; // constraint already valid
    }

    // active sets over previously inserted inequalities
    let active = |r: &QVector| -> Vec<bool> { inserted.iter().map(|c| c.dot(r).is_zero()).collect() };
    let actives: Vec<Vec<bool>> = rays.iter().map(active).collect();
    let adjacent = |i: usize, j: usize| -> bool {
        let common: Vec<usize> = (0..inserted.len())
            .filter(|&k| actives[i][k] && actives[j][k])
            .collect();
        for (t, _) in rays.iter().enumerate() {
            if t == i || t == j {
                continue;
            }
            if common.iter().all(|&k| actives[t][k]) {
                return false;
            }
        }
        true
    };

    let mut new_rays: Vec<QVector> = Vec::new();
    for (i, r) in rays.iter().enumerate() {
        if evals[i] == 0 || (evals[i] > 0 && !is_equation) {
            new_rays.push(r.clone());
        }
    }
    for &i in &pos {
        for &j in &neg {
            if !adjacent(i, j) {
                continue;
            }
            let ai = a.dot(&rays[i]);
            let aj = a.dot(&rays[j]);
            // positive combination lying on the hyperplane a = 0
            let w = rays[j].scale(&ai).sub(&rays[i].scale(&aj)).primitive();
            if !w.is_zero() {
                new_rays.push(w);
            }
        }
    }
    // dedupe (combinations can coincide)
    new_rays.sort();
    new_rays.dedup();
    *rays = new_rays;
}

/// Extreme rays of the polar cone {a : a·g ≥ 0 for all generators}, which
/// are the facet normals of the input cone, plus the polar's lineality,
/// which is the annihilator of the input's span.
pub fn polar(dim: usize, gens: &ConeGenerators) -> ConeGenerators {
    let eqs: Vec<QVector> = gens.lineality.clone();
    let ineqs: Vec<QVector> = gens.rays.clone();
    double_description(dim, &eqs, &ineqs)
}

/// Canonicalizes generators: rays primitive, reduced against the lineality
/// span, sorted, deduped; lineality as a canonical reduced basis.
pub fn canonicalize(gens: &ConeGenerators) -> ConeGenerators {
    let lineality = canonical_basis(&gens.lineality);
    let mut rays: Vec<QVector> = gens
        .rays
        .iter()
        .map(|r| reduce_mod_span(r, &lineality).primitive())
        .filter(|r| !r.is_zero())
        .collect();
    rays.sort();
    rays.dedup();
    ConeGenerators { lineality, rays }
}

/// Canonical basis of a span: primitive signless rows of the reduced row
/// echelon form.
pub fn canonical_basis(vectors: &[QVector]) -> Vec<QVector> {
    let nonzero: Vec<QVector> = vectors.iter().filter(|v| !v.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    let m = QMatrix::from_rows(nonzero);
    let (r, pivots) = m.rref();
    (0..pivots.len())
        .map(|i| r.row(i).primitive_signless())
        .collect()
}

/// Reduces v modulo the span of an rref-canonical basis by eliminating the
/// pivot coordinates.
pub fn reduce_mod_span(v: &QVector, basis: &[QVector]) -> QVector {
    let mut out = v.clone();
    for b in basis {
        let pivot = (0..b.dim()).find(|&i| !b.get(i).is_zero());
        if let Some(p) = pivot {
            let c = out.get(p) / b.get(p);
            out = out.sub(&b.scale(&c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QVector;

    #[test]
    fn quadrant_h_to_v() {
        // {x >= 0, y >= 0} in R^2
        let gens = double_description(
            2,
            &[],
            &[QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])],
        );
        let c = canonicalize(&gens);
        assert!(c.lineality.is_empty());
        assert_eq!(
            c.rays,
            vec![QVector::from_ints(&[0, 1]), QVector::from_ints(&[1, 0])]
        );
    }

    #[test]
    fn halfplane_has_lineality() {
        let gens = double_description(2, &[], &[QVector::from_ints(&[1, 0])]);
        let c = canonicalize(&gens);
        assert_eq!(c.lineality.len(), 1);
        assert_eq!(c.lineality[0], QVector::from_ints(&[0, 1]));
        assert_eq!(c.rays, vec![QVector::from_ints(&[1, 0])]);
    }

    #[test]
    fn polar_of_simplicial_cone() {
        // cone spanned by (1,0) and (1,2): polar has rays (0,1) and (2,-1)
        let gens = ConeGenerators {
            lineality: vec![],
            rays: vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[1, 2])],
        };
        let p = canonicalize(&polar(2, &gens));
        assert!(p.lineality.is_empty());
        assert_eq!(
            p.rays,
            vec![QVector::from_ints(&[0, 1]), QVector::from_ints(&[2, -1])]
        );
    }

    #[test]
    fn three_dim_octant_facets() {
        let rays: Vec<QVector> = (0..3).map(|i| QVector::unit(3, i)).collect();
        let gens = ConeGenerators {
            lineality: vec![],
            rays,
        };
        let p = canonicalize(&polar(3, &gens));
        assert_eq!(p.rays.len(), 3);
        assert!(p.lineality.is_empty());
    }

    #[test]
    fn equation_cuts_to_plane_cone() {
        // {x + y + z = 0, x >= 0, y >= 0} is a 2-dim pointed cone
        let gens = double_description(
            3,
            &[QVector::from_ints(&[1, 1, 1])],
            &[QVector::from_ints(&[1, 0, 0]), QVector::from_ints(&[0, 1, 0])],
        );
        let c = canonicalize(&gens);
        assert!(c.lineality.is_empty());
        assert_eq!(c.rays.len(), 2);
        for r in &c.rays {
            assert!(r.dot(&QVector::from_ints(&[1, 1, 1])).is_zero());
        }
    }

    #[test]
    fn infeasible_strictness_is_origin_only() {
        // {x >= 0, -x >= 0, y >= 0, -y >= 0} = {0}
        let gens = double_description(
            2,
            &[],
            &[
                QVector::from_ints(&[1, 0]),
                QVector::from_ints(&[-1, 0]),
                QVector::from_ints(&[0, 1]),
                QVector::from_ints(&[0, -1]),
            ],
        );
        let c = canonicalize(&gens);
        assert!(c.lineality.is_empty());
        assert!(c.rays.is_empty());
    }
}
