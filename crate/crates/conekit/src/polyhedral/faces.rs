//! Enumeration of the nonempty faces of a polyhedron.
//!
//! Faces are identified by the closure of their active-constraint sets and
//! explored breadth-first from the whole polyhedron downward. For polyhedra
//! every face is exposed, so adding one constraint at a time reaches all of
//! them.

use super::{PolyError, Polyhedron, VRep};
use crate::exact::{QMatrix, QVector};
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct FaceLatticeNode {
    /// Indices into the canonical inequality list that are tight on the face.
    pub active: Vec<usize>,
    /// Dimension of the face.
    pub dim: isize,
    /// Generators of the face (a sub-V-representation).
    pub generators: VRep,
    /// Indices of covering faces (one dimension class up, by inclusion).
    pub parents: Vec<usize>,
    /// Indices of covered faces.
    pub children: Vec<usize>,
}

fn face_generators(p: &Polyhedron, active: &[usize]) -> VRep {
    let h = p.hrep();
    let v = p.vrep();
    let tight_pt = |x: &QVector| active.iter().all(|&i| {
        let (a, b) = &h.inequalities[i];
        &a.dot(x) == b
    });
    let tight_dir = |x: &QVector| active.iter().all(|&i| {
        let (a, _) = &h.inequalities[i];
        a.dot(x).is_zero()
    });
    VRep {
        points: v.points.iter().filter(|x| tight_pt(x)).cloned().collect(),
        rays: v.rays.iter().filter(|x| tight_dir(x)).cloned().collect(),
        lines: v.lines.clone(),
        dim: v.dim,
    }
}

/// All inequalities tight on every generator of the given sub-VRep.
fn active_closure(p: &Polyhedron, gens: &VRep) -> Vec<usize> {
    let h = p.hrep();
    (0..h.inequalities.len())
        .filter(|&i| {
            let (a, b) = &h.inequalities[i];
            gens.points.iter().all(|x| &a.dot(x) == b)
                && gens.rays.iter().all(|r| a.dot(r).is_zero())
                && gens.lines.iter().all(|l| a.dot(l).is_zero())
        })
        .collect()
}

fn vrep_dim(v: &VRep) -> isize {
    if v.points.is_empty() {
        return -1;
    }
    let p0 = &v.points[0];
    let mut dirs: Vec<QVector> = v.points[1..].iter().map(|p| p.sub(p0)).collect();
    dirs.extend(v.rays.iter().cloned());
    dirs.extend(v.lines.iter().cloned());
    if dirs.is_empty() {
        0
    } else {
        QMatrix::from_rows(dirs).rank() as isize
    }
}

/// Enumerates all nonempty faces, the polyhedron itself included (it is the
/// node with empty active closure). Nodes are sorted by descending
/// dimension, then by active set; node 0 is the top face.
pub fn face_lattice(p: &Polyhedron) -> Result<Vec<FaceLatticeNode>, PolyError> {
    if p.is_empty() {
        return Err(PolyError::EmptyPolyhedron);
    }
    let nineq = p.hrep().inequalities.len();
    let mut seen: BTreeMap<Vec<usize>, (isize, VRep)> = BTreeMap::new();
    let top_gens = face_generators(p, &[]);
    let top_active = active_closure(p, &top_gens);
    let mut queue = vec![top_active.clone()];
    seen.insert(top_active, (vrep_dim(&top_gens), top_gens));
    while let Some(active) = queue.pop() {
        for i in 0..nineq {
            if active.contains(&i) {
                continue;
            }
            let mut trial = active.clone();
            trial.push(i);
            trial.sort_unstable();
            let gens = face_generators(p, &trial);
            if gens.points.is_empty() {
                continue;
            }
            let closure = active_closure(p, &gens);
            if !seen.contains_key(&closure) {
                seen.insert(closure.clone(), (vrep_dim(&gens), gens));
                queue.push(closure);
            }
        }
    }

    let mut entries: Vec<(Vec<usize>, isize, VRep)> = seen
        .into_iter()
        .map(|(a, (d, g))| (a, d, g))
        .collect();
    entries.sort_by(|x, y| y.1.cmp(&x.1).then_with(|| x.0.cmp(&y.0)));

    let mut nodes: Vec<FaceLatticeNode> = entries
        .into_iter()
        .map(|(active, dim, generators)| FaceLatticeNode {
            active,
            dim,
            generators,
            parents: Vec::new(),
            children: Vec::new(),
        })
        .collect();

    // Cover relations: j covers k when active_j ⊂ active_k and no face
    // lies strictly between.
    let n = nodes.len();
    let contains = |sup: &[usize], sub: &[usize]| sub.iter().all(|x| sup.contains(x));
    for j in 0..n {
        for k in 0..n {
            if j == k || nodes[k].dim >= nodes[j].dim {
                continue;
            }
            if !contains(&nodes[k].active, &nodes[j].active) {
                continue;
            }
            let between = (0..n).any(|m| {
                m != j
                    && m != k
                    && nodes[m].dim < nodes[j].dim
                    && nodes[m].dim > nodes[k].dim
                    && contains(&nodes[m].active, &nodes[j].active)
                    && contains(&nodes[k].active, &nodes[m].active)
            });
            if !between {
                nodes[j].children.push(k);
                nodes[k].parents.push(j);
            }
        }
    }
    Ok(nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::polyhedral::{HRep, VRep};

    #[test]
    fn unit_square_has_nine_faces() {
        let p = Polyhedron::from_vrep(VRep::from_points(
            2,
            vec![
                QVector::from_ints(&[0, 0]),
                QVector::from_ints(&[1, 0]),
                QVector::from_ints(&[0, 1]),
                QVector::from_ints(&[1, 1]),
            ],
        ))
        .unwrap();
        let faces = face_lattice(&p).unwrap();
        assert_eq!(faces.len(), 9);
        assert_eq!(faces.iter().filter(|f| f.dim == 0).count(), 4);
        assert_eq!(faces.iter().filter(|f| f.dim == 1).count(), 4);
        assert_eq!(faces.iter().filter(|f| f.dim == 2).count(), 1);
        // the euler relation for the boundary complex
        assert_eq!(4 - 4 + 1, 1);
    }

    #[test]
    fn quadrant_has_four_faces() {
        let p = Polyhedron::from_hrep(HRep::with_inequalities(
            2,
            vec![
                (QVector::from_ints(&[1, 0]), rat(0)),
                (QVector::from_ints(&[0, 1]), rat(0)),
            ],
        ))
        .unwrap();
        let faces = face_lattice(&p).unwrap();
        assert_eq!(faces.len(), 4);
        let top = &faces[0];
        assert_eq!(top.dim, 2);
        assert_eq!(top.children.len(), 2);
        let origin = faces.iter().find(|f| f.dim == 0).unwrap();
        assert_eq!(origin.parents.len(), 2);
    }

    #[test]
    fn truncated_cone_faces() {
        let p = Polyhedron::from_hrep(HRep::with_inequalities(
            2,
            vec![
                (QVector::from_ints(&[1, -1]), rat(1)),
                (QVector::from_ints(&[1, 1]), rat(1)),
            ],
        ))
        .unwrap();
        let faces = face_lattice(&p).unwrap();
        // vertex, two edge rays, full face
        assert_eq!(faces.len(), 4);
        assert_eq!(faces.iter().filter(|f| f.dim == 0).count(), 1);
        assert_eq!(faces.iter().filter(|f| f.dim == 1).count(), 2);
    }

    #[test]
    fn empty_rejected() {
        let p = Polyhedron::empty(2);
        assert_eq!(face_lattice(&p).unwrap_err(), PolyError::EmptyPolyhedron);
    }

    #[test]
    fn cube_euler_relation() {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(QVector::from_ints(&[x, y, z]));
                }
            }
        }
        let p = Polyhedron::from_vrep(VRep::from_points(3, pts)).unwrap();
        let faces = face_lattice(&p).unwrap();
        let v = faces.iter().filter(|f| f.dim == 0).count() as i64;
        let e = faces.iter().filter(|f| f.dim == 1).count() as i64;
        let f2 = faces.iter().filter(|f| f.dim == 2).count() as i64;
        assert_eq!((v, e, f2), (8, 12, 6));
        assert_eq!(v - e + f2, 2);
    }
}
