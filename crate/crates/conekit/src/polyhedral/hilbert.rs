//! Hilbert basis of a pointed rational cone by bounded zonotope
//! enumeration. The lattice points of the generator zonotope generate the
//! semigroup; the irreducible ones among them form the Hilbert basis.

use super::{PolyError, Polyhedron};
use crate::exact::{Lattice, QVector, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Minimal generating set of the semigroup cone ∩ L, in ambient
/// coordinates, lexicographically sorted.
pub fn hilbert_basis(cone: &Polyhedron, lattice: &Lattice) -> Result<Vec<QVector>, PolyError> {
    if !cone.vrep().lines.is_empty() {
        return Err(PolyError::NotPointed);
    }
    if cone.is_empty() || cone.vrep().rays.is_empty() {
        return Ok(Vec::new());
    }
    // work in lattice coordinates, where L = ℤ^n
    let to_z = lattice.basis_inv();
    let rays: Vec<QVector> = cone
        .vrep()
        .rays
        .iter()
        .map(|r| to_z.mul_vec(r).primitive())
        .collect();
    let n = lattice.dim();
    let cone_z = cone.affine_image(to_z, None)?;

    // coordinate bounds of the zonotope spanned by the primitive rays
    let mut lo = vec![BigInt::zero(); n];
    let mut hi = vec![BigInt::zero(); n];
    for r in &rays {
        for j in 0..n {
            let c = r.get(j).numer().clone();
            if c.is_negative() {
                lo[j] += c;
            } else {
                hi[j] += c;
            }
        }
    }

    // enumerate candidates: lattice points of the bounding box inside the cone
    let mut candidates: Vec<QVector> = Vec::new();
    let mut cursor: Vec<BigInt> = lo.clone();
    'outer: loop {
        let v = QVector::new(
            cursor
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        if !v.is_zero() && cone_z.contains(&v) {
            candidates.push(v);
        }
        // odometer increment
        for j in 0..n {
            cursor[j] += 1;
            if cursor[j] <= hi[j] {
                continue 'outer;
            }
            cursor[j] = lo[j].clone();
        }
        break;
    }

    // h is reducible iff h = g + (h - g) with both parts in the semigroup
    let reducible = |h: &QVector| {
        candidates.iter().any(|g| {
            if g == h {
                return false;
            }
            let d = h.sub(g);
            !d.is_zero() && d.is_integral() && cone_z.contains(&d)
        })
    };
    let mut basis: Vec<QVector> = candidates
        .iter()
        .filter(|h| !reducible(h))
        .map(|h| lattice.from_coords(h))
        .collect();
    basis.sort();
    Ok(basis)
}

#[allow(dead_code)]
fn approx_cells(lo: &[BigInt], hi: &[BigInt]) -> Option<u64> {
    let mut total = 1u64;
    for (l, h) in lo.iter().zip(hi) {
        let width = (h - l + 1u32).to_u64()?;
        total = total.checked_mul(width)?;
    }
    Some(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::polyhedral::VRep;

    fn cone_from_rays(rays: Vec<QVector>) -> Polyhedron {
        Polyhedron::from_vrep(VRep::from_rays(2, rays)).unwrap()
    }

    #[test]
    fn quadrant_smooth() {
        let c = cone_from_rays(vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])]);
        let hb = hilbert_basis(&c, &Lattice::standard(2)).unwrap();
        assert_eq!(
            hb,
            vec![QVector::from_ints(&[0, 1]), QVector::from_ints(&[1, 0])]
        );
    }

    #[test]
    fn cone_1_0_1_2() {
        let c = cone_from_rays(vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[1, 2])]);
        let hb = hilbert_basis(&c, &Lattice::standard(2)).unwrap();
        assert_eq!(
            hb,
            vec![
                QVector::from_ints(&[1, 0]),
                QVector::from_ints(&[1, 1]),
                QVector::from_ints(&[1, 2]),
            ]
        );
    }

    #[test]
    fn cone_1_0_1_3() {
        let c = cone_from_rays(vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[1, 3])]);
        let hb = hilbert_basis(&c, &Lattice::standard(2)).unwrap();
        assert_eq!(
            hb,
            vec![
                QVector::from_ints(&[1, 0]),
                QVector::from_ints(&[1, 1]),
                QVector::from_ints(&[1, 2]),
                QVector::from_ints(&[1, 3]),
            ]
        );
    }

    #[test]
    fn rejects_unpointed() {
        let c = Polyhedron::from_vrep(VRep {
            points: vec![QVector::zero(2)],
            rays: vec![],
            lines: vec![QVector::from_ints(&[1, 0])],
            dim: 2,
        })
        .unwrap();
        assert_eq!(
            hilbert_basis(&c, &Lattice::standard(2)).unwrap_err(),
            PolyError::NotPointed
        );
    }

    /// Brute-force oracle: every semigroup element of coordinate size ≤ 6
    /// must be an ℕ-combination of the basis, and dropping any basis
    /// element must break generation.
    #[test]
    fn generation_and_minimality_oracle() {
        for rays in [
            vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[1, 2])],
            vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[2, 3])],
            vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[3, 5])],
        ] {
            let c = cone_from_rays(rays);
            let l = Lattice::standard(2);
            let hb = hilbert_basis(&c, &l).unwrap();

            let gen_by = |set: &[QVector], target: &QVector| -> bool {
                // bounded search over ℕ-combinations
                fn rec(set: &[QVector], t: &QVector) -> bool {
                    if t.is_zero() {
                        return true;
                    }
                    for g in set {
                        let d = t.sub(g);
                        if d.coords().iter().all(|c| !c.is_negative()) && rec(set, &d) {
                            return true;
                        }
                    }
                    false
                }
                rec(set, target)
            };

            for x in 0..=6i64 {
                for y in 0..=6i64 {
                    let v = QVector::from_ints(&[x, y]);
                    if v.is_zero() || !c.contains(&v) {
                        continue;
                    }
                    assert!(gen_by(&hb, &v), "{v:?} not generated");
                }
            }
            for skip in 0..hb.len() {
                let reduced: Vec<QVector> = hb
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, g)| g.clone())
                    .collect();
                assert!(
                    !gen_by(&reduced, &hb[skip]),
                    "basis element {skip} is redundant"
                );
            }
        }
    }

    #[test]
    fn scaled_lattice() {
        // with L = 2ℤ×2ℤ the quadrant basis is (2,0),(0,2)
        let c = cone_from_rays(vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])]);
        let l = Lattice::new(crate::exact::QMatrix::from_ints(&[&[2, 0], &[0, 2]])).unwrap();
        let hb = hilbert_basis(&c, &l).unwrap();
        assert_eq!(
            hb,
            vec![QVector::from_ints(&[0, 2]), QVector::from_ints(&[2, 0])]
        );
        assert!(hb.iter().all(|v| !v.is_zero() && v.get(0) >= &rat(0)));
    }
}
