//! Finite domination of a family of affine functions that are nonnegative
//! on a polyhedron: a finite subfamily minorizes the whole family, the
//! pointwise-minimum envelope induces a finite polyhedral decomposition,
//! and the common level set {φ ≥ 1 for all φ} only depends on the
//! subfamily.

use super::{face_lattice, PolyError, Polyhedron};
use crate::exact::{QVector, Rational};
use num_traits::{Signed, Zero};

/// φ(x) = ⟨linear, x⟩ + constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineForm {
    pub linear: QVector,
    pub constant: Rational,
}

impl AffineForm {
    pub fn new(linear: QVector, constant: Rational) -> Self {
        AffineForm { linear, constant }
    }

    pub fn eval(&self, x: &QVector) -> Rational {
        self.linear.dot(x) + &self.constant
    }
}

/// Result of the domination analysis.
#[derive(Clone, Debug)]
pub struct Domination {
    /// Indices into the input family forming the dominating subfamily.
    pub phi0: Vec<usize>,
    /// Cells of the minimum envelope: (cell, argmin subset of phi0 on it).
    /// Relative interiors of the cells partition the polyhedron.
    pub patches: Vec<(Polyhedron, Vec<usize>)>,
    /// {x in p : φ(x) ≥ 1 for every φ}, computed from phi0 only.
    pub level_set: Polyhedron,
}

/// The evaluation vector of φ on the generators of p; φ ≥ ψ on p iff the
/// vectors compare coordinatewise.
fn eval_vector(p: &Polyhedron, phi: &AffineForm) -> Vec<Rational> {
    let v = p.vrep();
    let mut out: Vec<Rational> = v.points.iter().map(|x| phi.eval(x)).collect();
    out.extend(v.rays.iter().map(|r| phi.linear.dot(r)));
    out
}

pub fn dominating_subset(p: &Polyhedron, phi: &[AffineForm]) -> Result<Domination, PolyError> {
    if p.is_empty() {
        return Err(PolyError::EmptyPolyhedron);
    }
    let vecs: Vec<Vec<Rational>> = phi.iter().map(|f| eval_vector(p, f)).collect();
    for (f, v) in phi.iter().zip(&vecs) {
        if v.iter().any(|c| c.is_negative()) || p.vrep().lines.iter().any(|l| !f.linear.dot(l).is_zero())
        {
            return Err(PolyError::NegativeOnP);
        }
    }

    // Pareto-minimal subfamily, first occurrence on equal vectors.
    let dominated_by = |i: usize, j: usize| vecs[j].iter().zip(&vecs[i]).all(|(a, b)| a <= b);
    let mut phi0: Vec<usize> = Vec::new();
    'cand: for i in 0..phi.len() {
        for j in 0..phi.len() {
            if i == j || !dominated_by(i, j) {
                continue;
            }
            if vecs[i] != vecs[j] || j < i {
                continue 'cand;
            }
        }
        phi0.push(i);
    }

    // Envelope cells: for each φ in phi0 the region where it attains the
    // minimum, then all faces of those cells.
    let mut patches: Vec<(Polyhedron, Vec<usize>)> = Vec::new();
    for &i in &phi0 {
        let mut h = p.hrep().clone();
        for &j in &phi0 {
            if i == j {
                continue;
            }
            // φ_j - φ_i ≥ 0
            h.inequalities.push((
                phi[j].linear.sub(&phi[i].linear),
                phi[i].constant.clone() - &phi[j].constant,
            ));
        }
        let cell = Polyhedron::from_hrep(h)?;
        if cell.is_empty() {
            continue;
        }
        for node in face_lattice(&cell)? {
            let face = Polyhedron::from_vrep(node.generators)?;
            if patches.iter().any(|(q, _)| q == &face) {
                continue;
            }
            let argmin: Vec<usize> = phi0
                .iter()
                .copied()
                .filter(|&j| {
                    let d = AffineForm::new(
                        phi[j].linear.sub(&phi[i].linear),
                        phi[j].constant.clone() - &phi[i].constant,
                    );
                    face.vrep().points.iter().all(|x| d.eval(x).is_zero())
                        && face.vrep().rays.iter().all(|r| d.linear.dot(r).is_zero())
                        && face.vrep().lines.iter().all(|l| d.linear.dot(l).is_zero())
                })
                .collect();
            patches.push((face, argmin));
        }
    }
    patches.sort_by(|a, b| b.0.dim().cmp(&a.0.dim()));

    // level set {φ ≥ 1 for all φ} from phi0 alone
    let mut h = p.hrep().clone();
    for &i in &phi0 {
        h.inequalities
            .push((phi[i].linear.clone(), Rational::one() - &phi[i].constant));
    }
    let level_set = Polyhedron::from_hrep(h)?;

    Ok(Domination {
        phi0,
        patches,
        level_set,
    })
}

use num_traits::One;
