//! Exact rational scalars, vectors, matrices, lattices, and integer normal
//! forms. No floating point anywhere; every operation is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exact rational scalar. Always stored reduced with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix has non-integral entries")]
    NonIntegralInput,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p`. Rejects anything else (in particular float literals).
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let make = |t: &str| BigInt::from_str(t).map_err(|_| ExactError::Parse(s.to_string()));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(make(s)?)),
        Some((p, q)) => {
            let d = make(q)?;
            if d.is_zero() {
                return Err(ExactError::Parse(s.to_string()));
            }
            Ok(Rational::new(make(p)?, d))
        }
    }
}

/// Vector with exact rational coordinates and fixed dimension.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVector {
    coords: Vec<Rational>,
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl QVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        QVector { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVector::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        QVector::new(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = QVector::zero(dim);
        v.coords[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &QVector) -> QVector {
        assert_eq!(self.dim(), other.dim());
        QVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        assert_eq!(self.dim(), other.dim());
        QVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> QVector {
        QVector::new(self.coords.iter().map(|c| c * s).collect())
    }

    pub fn neg(&self) -> QVector {
        QVector::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.denom().is_one())
    }

    /// Scales to the primitive integral vector on the same ray
    /// (positive multiple). Zero stays zero.
    pub fn primitive(&self) -> QVector {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in &self.coords {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for i in &ints {
            g = g.gcd(i);
        }
        QVector::new(
            ints.into_iter()
                .map(|i| Rational::from_integer(i / &g))
                .collect(),
        )
    }

    /// Primitive integral representative with the first nonzero coordinate
    /// positive. Canonical form for line directions and unsigned normals.
    pub fn primitive_signless(&self) -> QVector {
        let p = self.primitive();
        match p.coords.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => p.neg(),
            _ => p,
        }
    }
}

/// Dense rational matrix with immutable shape.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let parts: Vec<String> = (0..self.cols)
                .map(|j| format_rational(self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", parts.join(", "))?;
        }
        write!(f, "]")
    }
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must match shape");
        QMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<QVector>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map(|r| r.dim()).unwrap_or(0);
        let mut entries = Vec::with_capacity(nr * nc);
        for r in &rows {
            assert_eq!(r.dim(), nc, "ragged rows");
            entries.extend(r.coords().iter().cloned());
        }
        QMatrix::new(nr, nc, entries)
    }

    pub fn from_cols(cols: Vec<QVector>) -> Self {
        QMatrix::from_rows(cols).transpose()
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        QMatrix::from_rows(rows.iter().map(|r| QVector::from_ints(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> QVector {
        QVector::new((0..self.cols).map(|j| self.get(i, j).clone()).collect())
    }

    pub fn col(&self, j: usize) -> QVector {
        QVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &QVector) -> QVector {
        assert_eq!(self.cols, v.dim(), "shape mismatch in matrix-vector product");
        QVector::new(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| self.get(i, j) * v.get(j))
                        .sum::<Rational>()
                })
                .collect(),
        )
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMatrix::new(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMatrix::new(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> QMatrix {
        QMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e * s).collect(),
        )
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.denom().is_one())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Gaussian elimination to reduced row echelon form.
    /// Returns (rref, pivot columns). Deterministic: first nonzero pivot.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r >= m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &f * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                det = -det;
                for j in 0..n {
                    let a = m.get(c, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(c, j, b);
                    m.set(p, j, a);
                }
            }
            det *= m.get(c, c);
            let inv = m.get(c, c).recip();
            for i in (c + 1)..n {
                if !m.get(i, c).is_zero() {
                    let f = m.get(i, c) * &inv;
                    for j in c..n {
                        let v = m.get(i, j) - &f * m.get(c, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<QMatrix, ExactError> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = QMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(ExactError::NotInvertible);
        }
        let mut inv = QMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// One solution x of self * x = b, if any.
    pub fn solve(&self, b: &QVector) -> Option<QVector> {
        assert_eq!(self.rows, b.dim());
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b.get(i).clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = QVector::zero(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x.coords[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Rational basis of the right kernel {x : self * x = 0}.
    pub fn kernel(&self) -> Vec<QVector> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for j in 0..self.cols {
            if pivots.contains(&j) {
                continue;
            }
            let mut v = QVector::zero(self.cols);
            v.coords[j] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v.coords[p] = -r.get(i, j).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Column Hermite normal form of an integral matrix.
///
/// Returns (h, u) with h = m * u, u unimodular, pivots positive, entries
/// left of each pivot reduced into [0, pivot). Rows are processed top to
/// bottom, so pivot ties resolve at the lowest row index.
pub fn hermite_normal_form(m: &QMatrix) -> Result<(QMatrix, QMatrix), ExactError> {
    if !m.is_integral() {
        return Err(ExactError::NonIntegralInput);
    }
    let (nr, nc) = (m.rows(), m.cols());
    let mut h: Vec<Vec<BigInt>> = (0..nr)
        .map(|i| (0..nc).map(|j| m.get(i, j).numer().clone()).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..nc)
        .map(|i| {
            (0..nc)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();

    // Column operation helpers act on h and u simultaneously.
    let combine = |h: &mut Vec<Vec<BigInt>>,
                   u: &mut Vec<Vec<BigInt>>,
                   j1: usize,
                   j2: usize,
                   a: &BigInt,
                   b: &BigInt,
                   c: &BigInt,
                   d: &BigInt| {
        // (col_j1, col_j2) <- (a*col_j1 + b*col_j2, c*col_j1 + d*col_j2)
        for row in h.iter_mut().chain(u.iter_mut()) {
            let x = row[j1].clone();
            let y = row[j2].clone();
            row[j1] = a * &x + b * &y;
            row[j2] = c * &x + d * &y;
        }
    };

    let mut pivot_col = 0;
    for row in 0..nr {
        if pivot_col >= nc {
            break;
        }
        // gcd-fold all nonzero entries of this row (columns >= pivot_col)
        // into the leftmost such column
        loop {
            let nz: Vec<usize> = (pivot_col..nc).filter(|&j| !h[row][j].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            let (j1, j2) = (nz[0], nz[1]);
            let (x, y) = (h[row][j1].clone(), h[row][j2].clone());
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            // [s, -y/g; t, x/g] has determinant s*x/g + t*y/g = 1
            let q1 = -&y / &g;
            let q2 = &x / &g;
            combine(&mut h, &mut u, j1, j2, &s, &q1, &t, &q2);
        }
        let Some(jstar) = (pivot_col..nc).find(|&j| !h[row][j].is_zero()) else {
            continue;
        };
        if jstar != pivot_col {
            for r in h.iter_mut().chain(u.iter_mut()) {
                r.swap(pivot_col, jstar);
            }
        }
        if h[row][pivot_col].is_negative() {
            for r in h.iter_mut().chain(u.iter_mut()) {
                r[pivot_col] = -r[pivot_col].clone();
            }
        }
        // reduce entries left of the pivot into [0, pivot)
        let p = h[row][pivot_col].clone();
        for j in 0..pivot_col {
            let q = h[row][j].div_floor(&p);
            if !q.is_zero() {
                for r in h.iter_mut().chain(u.iter_mut()) {
                    let sub = &q * &r[pivot_col];
                    r[j] = &r[j] - sub;
                }
            }
        }
        pivot_col += 1;
    }

    let to_qm = |v: &Vec<Vec<BigInt>>, rows: usize, cols: usize| {
        QMatrix::new(
            rows,
            cols,
            v.iter()
                .flat_map(|r| r.iter().map(|e| Rational::from_integer(e.clone())))
                .collect(),
        )
    };
    Ok((to_qm(&h, nr, nc), to_qm(&u, nc, nc)))
}

/// A full-rank lattice in an ambient rational vector space, given by an
/// invertible basis matrix whose columns generate it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    basis: QMatrix,
    inv: QMatrix,
}

impl Lattice {
    pub fn new(basis: QMatrix) -> Result<Self, ExactError> {
        let inv = basis.inverse()?;
        Ok(Lattice { basis, inv })
    }

    pub fn standard(dim: usize) -> Self {
        Lattice {
            basis: QMatrix::identity(dim),
            inv: QMatrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_inv(&self) -> &QMatrix {
        &self.inv
    }

    /// Exact membership: x in L iff basis^{-1} x is integral.
    pub fn contains(&self, x: &QVector) -> bool {
        self.inv.mul_vec(x).is_integral()
    }

    /// Coordinates of x in the lattice basis.
    pub fn coords(&self, x: &QVector) -> QVector {
        self.inv.mul_vec(x)
    }

    pub fn from_coords(&self, z: &QVector) -> QVector {
        self.basis.mul_vec(z)
    }

    /// The dual lattice L* with basis (B^T)^{-1}; pairings of basis vectors
    /// of L with those of L* are integral and (L*)* = L.
    pub fn dual(&self) -> Lattice {
        let b = self.basis.transpose().inverse().expect("basis invertible");
        Lattice::new(b).expect("dual basis invertible")
    }
}

/// Saturated integral basis of span(vectors) ∩ ℤ^n, for rational input
/// vectors. The result generates a primitive (direct-summand) sublattice.
pub fn saturate_span(dim: usize, vectors: &[QVector]) -> Vec<QVector> {
    let nonzero: Vec<&QVector> = vectors.iter().filter(|v| !v.is_zero()).collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    // Annihilator of the span, as an integral matrix.
    let m = QMatrix::from_rows(nonzero.iter().map(|v| (*v).clone()).collect());
    let ann: Vec<QVector> = m.kernel().iter().map(|v| v.primitive()).collect();
    if ann.is_empty() {
        // full span: the standard basis works
        return (0..dim).map(|i| QVector::unit(dim, i)).collect();
    }
    let a = QMatrix::from_rows(ann);
    integral_kernel(&a)
}

/// Integral basis of {x ∈ ℤ^cols : m x = 0} for a rational matrix m.
/// The kernel of an integer matrix is saturated, so this basis generates
/// span ∩ ℤ^cols exactly.
pub fn integral_kernel(m: &QMatrix) -> Vec<QVector> {
    // scale each row integral
    let rows: Vec<QVector> = (0..m.rows())
        .map(|i| {
            let r = m.row(i);
            if r.is_zero() {
                r
            } else {
                r.primitive()
            }
        })
        .collect();
    let mi = QMatrix::from_rows(rows);
    let (h, u) = hermite_normal_form(&mi).expect("integral by construction");
    let mut basis = Vec::new();
    for j in 0..h.cols() {
        if (0..h.rows()).all(|i| h.get(i, j).is_zero()) {
            basis.push(u.col(j));
        }
    }
    basis
}

/// Integer polynomials, dense ascending-degree coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        v
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly(Self::trim(out))
    }

    /// Exact division; None if `other` does not divide `self` over ℤ.
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        let mut rem = self.0.clone();
        let d = other.0.len() - 1;
        let lead = other.0.last().unwrap();
        if rem.len() < other.0.len() {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].clone();
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            quot[k] = q.clone();
            for (i, b) in other.0.iter().enumerate() {
                rem[k + i] -= &q * b;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly(Self::trim(quot)))
    }
}

/// x^n - 1.
fn x_pow_minus_one(n: usize) -> IntPoly {
    let mut v = vec![BigInt::zero(); n + 1];
    v[0] = -BigInt::one();
    v[n] = BigInt::one();
    IntPoly(v)
}

fn euler_phi(k: usize) -> usize {
    let mut n = k;
    let mut result = k;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The cyclotomic polynomials Φ_k with φ(k) ≤ max_deg, keyed by k.
/// Computed by the recursion Φ_k = (x^k - 1) / ∏_{d | k, d < k} Φ_d.
pub fn cyclotomic_polynomials(max_deg: usize) -> Vec<(usize, IntPoly)> {
    // φ(k) ≥ sqrt(k/2), so k ≤ 2·max_deg² + 1 suffices.
    let bound = 2 * max_deg * max_deg + 1;
    let mut all: Vec<IntPoly> = Vec::with_capacity(bound + 1);
    all.push(IntPoly::one()); // unused index 0
    let mut out = Vec::new();
    for k in 1..=bound {
        let mut p = x_pow_minus_one(k);
        for d in 1..k {
            if k % d == 0 {
                p = p
                    .div_exact(&all[d])
                    .expect("cyclotomic recursion divides exactly");
            }
        }
        all.push(p.clone());
        if euler_phi(k) <= max_deg {
            out.push((k, p));
        }
    }
    out
}

/// Characteristic polynomial det(xI - m) of a square rational matrix with
/// integral entries, via Faddeev–LeVerrier. Coefficients ascending.
pub fn char_poly(m: &QMatrix) -> IntPoly {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut aux = QMatrix::identity(n);
    for k in 1..=n {
        let prod = m.mul(&aux);
        let trace: Rational = (0..n).map(|i| prod.get(i, i).clone()).sum();
        let c = -trace / rat(k as i64);
        coeffs[n - k] = c.clone();
        aux = prod;
        for i in 0..n {
            let v = aux.get(i, i) + &c;
            aux.set(i, i, v);
        }
    }
    IntPoly(
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.denom().is_one(), "integral matrix has integral char poly");
                c.numer().clone()
            })
            .collect(),
    )
}

/// Classification of an integral invertible matrix by its spectrum.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum UnipotenceClass {
    /// (m - I)^n = 0.
    Unipotent,
    /// Characteristic polynomial is a product of cyclotomic polynomials
    /// but m is not unipotent; all eigenvalues are roots of unity.
    FiniteOrderCandidate,
    /// Some irreducible factor is non-cyclotomic: an eigenvalue off the
    /// unit circle exists.
    Expanding,
}

/// Spectral classification used for stabilizer kernels: unipotent iff
/// (m−I) is nilpotent, finite-order candidate iff the characteristic
/// polynomial factors into cyclotomics, expanding otherwise.
pub fn cyclotomic_unipotence_test(m: &QMatrix) -> Result<UnipotenceClass, ExactError> {
    if !m.is_integral() {
        return Err(ExactError::NonIntegralInput);
    }
    if m.det().is_zero() {
        return Err(ExactError::NotInvertible);
    }
    let n = m.rows();
    let nil = m.sub(&QMatrix::identity(n));
    let mut pow = nil.clone();
    for _ in 1..n {
        pow = pow.mul(&nil);
    }
    let is_zero = (0..n).all(|i| (0..n).all(|j| pow.get(i, j).is_zero()));
    if is_zero {
        return Ok(UnipotenceClass::Unipotent);
    }
    let mut p = char_poly(m);
    let cyclos = cyclotomic_polynomials(n);
    let mut progress = true;
    while progress && !p.is_one() {
        progress = false;
        for (_, c) in &cyclos {
            if c.degree() > p.degree() && !p.is_one() {
                continue;
            }
            if let Some(q) = p.div_exact(c) {
                p = q;
                progress = true;
                break;
            }
        }
    }
    if p.is_one() {
        Ok(UnipotenceClass::FiniteOrderCandidate)
    } else {
        Ok(UnipotenceClass::Expanding)
    }
}
