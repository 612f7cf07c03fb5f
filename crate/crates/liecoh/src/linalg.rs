//! Dense exact linear algebra over the Gaussian rationals.
//!
//! Everything is computed by fraction-free-in-spirit Gaussian elimination with
//! deterministic first-nonzero pivoting, so any two runs (and any two equal
//! subspaces) produce byte-identical bases. Row-reduced echelon form is the
//! canonical form throughout: a `Subspace` stores the RREF of its spanning
//! set, which makes subspace equality literal equality of stored data.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::Scalar;

/// A dense matrix with exact scalar entries, row-major storage.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    /// Zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for k in 0..n {
            m[(k, k)] = Scalar::one();
        }
        m
    }

    /// Builds from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds from column vectors; all columns must have equal length.
    pub fn from_cols(cols: Vec<Vec<Scalar>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = Matrix::zero(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// Convenience constructor from integer entries.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| Scalar::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut m = self.clone();
        for v in &mut m.data {
            *v *= s;
        }
        m
    }

    /// Kronecker product; block `(i1,j1)` is `self[i1,j1] * other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zero(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = &self[(i1, j1)];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = &other[(i2, j2)];
                        if !b.is_zero() {
                            m[(i1 * other.rows + i2, j1 * other.cols + j2)] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    /// Stacks `other` below `self` (equal column counts).
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self` (equal row counts).
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Matrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "apply length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += &(a * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Row-reduced echelon form together with the pivot column indices.
    ///
    /// Pivoting is "first nonzero from the top", scanning columns left to
    /// right, so the result is unique and runs are deterministic.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize; // next pivot row
        for pc in 0..m.cols {
            let Some(hit) = (pr..m.rows).find(|&r| !m[(r, pc)].is_zero()) else {
                continue;
            };
            if hit != pr {
                for j in 0..m.cols {
                    m.data.swap(hit * m.cols + j, pr * m.cols + j);
                }
            }
            let inv = m[(pr, pc)].inv();
            for j in pc..m.cols {
                if !m[(pr, j)].is_zero() {
                    m[(pr, j)] = &m[(pr, j)] * &inv;
                }
            }
            for r in 0..m.rows {
                if r == pr || m[(r, pc)].is_zero() {
                    continue;
                }
                let factor = m[(r, pc)].clone();
                for j in pc..m.cols {
                    if !m[(pr, j)].is_zero() {
                        let delta = &factor * &m[(pr, j)];
                        m[(r, j)] -= &delta;
                    }
                }
            }
            pivots.push(pc);
            pr += 1;
            if pr == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Inverse of a square invertible matrix (augmented elimination).
    /// Returns `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (red, pivots) = self.hstack(&Matrix::identity(n)).rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Basis of the right nullspace `{x : self · x = 0}`, one vector per free
    /// column, in ascending free-column order (the canonical RREF basis).
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots) = self.rref_with_pivots();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut x = vec![Scalar::zero(); self.cols];
            x[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -&red[(r, free)];
            }
            basis.push(x);
        }
        basis
    }

    /// One particular solution of `self · x = b`, or `None` if inconsistent.
    /// The returned solution is re-substituted as a defensive check.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "solve length mismatch");
        let rhs = Matrix::from_cols(vec![b.to_vec()]);
        let (red, pivots) = self.hstack(&rhs).rref_with_pivots();
        if pivots.last().is_some_and(|&p| p == self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = red[(r, self.cols)].clone();
        }
        assert_eq!(self.apply(&x), b.to_vec(), "substitution check failed");
        Some(x)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "add shape mismatch");
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        m
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "sub shape mismatch");
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        m
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        let mut m = self.clone();
        for a in &mut m.data {
            *a = -&*a;
        }
        m
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch");
        let mut m = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let delta = a * b;
                        m[(i, j)] += &delta;
                    }
                }
            }
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(Scalar::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<&Scalar>> = (0..self.rows).map(|i| self.row(i).iter().collect()).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<Scalar>> = Vec::deserialize(deserializer)?;
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(Matrix::from_rows(rows))
    }
}

/// A linear subspace of `k^ambient` stored by its canonical RREF basis.
///
/// Two `Subspace` values represent the same subspace exactly when their
/// stored bases are identical, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows; unique for the subspace.
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    /// Canonicalizes arbitrary spanning vectors.
    pub fn from_vectors(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: Vec::new(),
            };
        }
        let (red, pivots) = Matrix::from_rows(vectors.to_vec()).rref_with_pivots();
        let basis = (0..pivots.len()).map(|i| red.row(i).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn zero_space(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full_space(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![Scalar::zero(); ambient];
                v[i] = Scalar::one();
                v
            })
            .collect();
        Subspace {
            ambient,
            basis: rows,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    fn pivot_of(row: &[Scalar]) -> usize {
        row.iter().position(|v| !v.is_zero()).expect("zero basis row")
    }

    /// Remainder of `v` after subtracting its projection onto the echelon
    /// basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "reduce length mismatch");
        let mut r = v.to_vec();
        for row in &self.basis {
            let p = Self::pivot_of(row);
            if r[p].is_zero() {
                continue;
            }
            let factor = r[p].clone();
            for (ri, bi) in r.iter_mut().zip(row) {
                if !bi.is_zero() {
                    *ri -= &(&factor * bi);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient, &vectors)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero_space(self.ambient);
        }
        // x = U a = W b  ⟺  [Uᵀ | −Wᵀ]·(a,b) = 0, columns are basis vectors.
        let u = Matrix::from_cols(self.basis.clone());
        let w = Matrix::from_cols(other.basis.clone());
        let stacked = u.hstack(&-&w);
        let vectors: Vec<Vec<Scalar>> = stacked
            .nullspace()
            .into_iter()
            .map(|ab| u.apply(&ab[..self.dim()]))
            .collect();
        Subspace::from_vectors(self.ambient, &vectors)
    }

    /// Canonical representatives of a complement of `sub` inside `self`.
    /// Requires `sub ⊆ self`; the result has `dim self − dim sub` vectors,
    /// each lying in `self`, spanning `self` together with `sub`.
    pub fn quotient_basis(&self, sub: &Subspace) -> Vec<Vec<Scalar>> {
        assert!(
            self.contains_subspace(sub),
            "quotient_basis: not a subspace of self"
        );
        let reduced: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|v| sub.reduce(v))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let reps = Subspace::from_vectors(self.ambient, &reduced);
        assert_eq!(reps.dim(), self.dim() - sub.dim(), "complement dimension");
        reps.basis
    }

    /// Functionals vanishing on this subspace, as vectors of coefficients in
    /// the dual coordinates: the nullspace of the basis-rows matrix.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full_space(self.ambient);
        }
        let m = Matrix::from_rows(self.basis.clone());
        Subspace::from_vectors(self.ambient, &m.nullspace())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rref_of_diagonal_i_is_identity() {
        let m = Matrix::from_rows(vec![
            vec![Scalar::i(), sc(0)],
            vec![sc(0), sc(1)],
        ]);
        let (red, pivots) = m.rref_with_pivots();
        assert_eq!(red, Matrix::identity(2));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_is_idempotent_and_unique() {
        let m = Matrix::from_int_rows(&[&[2, 4, -2], &[1, 2, 0], &[3, 6, -2]]);
        let (r1, p1) = m.rref_with_pivots();
        let (r2, p2) = r1.rref_with_pivots();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
        assert_eq!(p1, vec![0, 2]);
    }

    #[test]
    fn nullspace_satisfies_rank_nullity() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(m.rank() + ns.len(), m.cols());
        for v in &ns {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn nullspace_of_empty_system_is_full() {
        let m = Matrix::zero(0, 3);
        assert_eq!(m.nullspace().len(), 3);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn solve_finds_and_checks_solutions() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[1, -1]]);
        let x = m.solve(&[sc(3), sc(1)]).unwrap();
        assert_eq!(x, vec![sc(2), sc(1)]);
        let singular = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(singular.solve(&[sc(0), sc(1)]).is_none());
        assert!(singular.solve(&[sc(1), sc(1)]).is_some());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![Scalar::i(), sc(1)],
            vec![sc(0), sc(2)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(&inv * &m, Matrix::identity(2));
        assert!(Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kron_shape_and_entries() {
        let a = Matrix::from_int_rows(&[&[1, 2]]);
        let b = Matrix::from_int_rows(&[&[0, 3], &[4, 0]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 4));
        assert_eq!(k[(0, 1)], sc(3));
        assert_eq!(k[(1, 2)], sc(8));
    }

    #[test]
    fn subspace_canonical_equality() {
        let a = Subspace::from_vectors(3, &[vec![sc(1), sc(1), sc(0)], vec![sc(0), sc(2), sc(0)]]);
        let b = Subspace::from_vectors(3, &[vec![sc(3), sc(5), sc(0)], vec![sc(1), sc(-1), sc(0)]]);
        assert_eq!(a, b, "same span, same canonical basis");
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&[sc(7), sc(-4), sc(0)]));
        assert!(!a.contains(&[sc(0), sc(0), sc(1)]));
    }

    #[test]
    fn subspace_lattice_operations() {
        let e = |i: usize| {
            let mut v = vec![sc(0); 3];
            v[i] = sc(1);
            v
        };
        let xy = Subspace::from_vectors(3, &[e(0), e(1)]);
        let yz = Subspace::from_vectors(3, &[e(1), e(2)]);
        assert_eq!(xy.sum(&yz), Subspace::full_space(3));
        assert_eq!(xy.intersect(&yz), Subspace::from_vectors(3, &[e(1)]));
        let q = xy.quotient_basis(&Subspace::from_vectors(3, &[e(1)]));
        assert_eq!(q, vec![e(0)]);
        let ann = xy.annihilator();
        assert_eq!(ann, Subspace::from_vectors(3, &[e(2)]));
    }

    #[test]
    fn quotient_basis_lies_in_ambient_space() {
        let big = Subspace::from_vectors(
            3,
            &[vec![sc(1), sc(1), sc(0)], vec![sc(1), sc(-1), sc(0)]],
        );
        let small = Subspace::from_vectors(3, &[vec![sc(1), sc(1), sc(0)]]);
        let q = big.quotient_basis(&small);
        assert_eq!(q.len(), 1);
        assert!(big.contains(&q[0]));
        assert!(!small.contains(&q[0]));
    }
}
