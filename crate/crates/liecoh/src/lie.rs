//! Finite-dimensional Lie algebras presented by structure constants.
//!
//! An algebra is the tensor `c[i][j][k]` with `[x_i, x_j] = Σ_k c[i][j][k]·x_k`
//! on a chosen ordered basis. All axioms are verified exactly on every basis
//! tuple — no sampling. Derived constructions (quotients, direct sums, fixed
//! subalgebras) re-emerge as plain structure-constant algebras, so one type
//! covers every algebra in the toolkit.

use std::collections::HashSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// A Lie algebra given by structure constants on an ordered basis.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    /// `sc[i][j][k]` is the coefficient of `x_k` in `[x_i, x_j]`.
    sc: Vec<Vec<Vec<Scalar>>>,
    labels: Vec<String>,
}

/// Mathematical equality: same dimension and identical structure constants
/// (labels are cosmetic).
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.sc == other.sc
    }
}
impl Eq for LieAlgebra {}

fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("x{i}")).collect()
}

impl LieAlgebra {
    /// Builds from a full structure-constant tensor. Shape is validated;
    /// the Lie axioms are *not* (see [`LieAlgebra::check_lie`]).
    pub fn new(dim: usize, sc: Vec<Vec<Vec<Scalar>>>, labels: Option<Vec<String>>) -> Result<Self> {
        if sc.len() != dim
            || sc.iter().any(|p| p.len() != dim)
            || sc.iter().flatten().any(|c| c.len() != dim)
        {
            return Err(Error::Shape(format!(
                "structure constants must form a {dim}x{dim}x{dim} tensor"
            )));
        }
        let labels = match labels {
            Some(l) if l.len() == dim => l,
            Some(l) => {
                return Err(Error::Shape(format!(
                    "{} labels for dimension {dim}",
                    l.len()
                )))
            }
            None => default_labels(dim),
        };
        Ok(LieAlgebra { dim, sc, labels })
    }

    /// Builds from the brackets of basis pairs `i < j` (all others implied by
    /// antisymmetry, diagonal zero). `entries` holds `(i, j, [x_i, x_j])`.
    pub fn from_brackets(
        dim: usize,
        entries: &[(usize, usize, Vec<Scalar>)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut sc = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        let mut seen = HashSet::new();
        for (i, j, coeffs) in entries {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim || coeffs.len() != dim {
                return Err(Error::Shape(format!("bracket entry ({i},{j}) out of range")));
            }
            if i == j {
                if coeffs.iter().any(|c| !c.is_zero()) {
                    return Err(Error::Invariant(format!("[x{i}, x{i}] must be zero")));
                }
                continue;
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::Shape(format!("duplicate bracket entry for pair ({i},{j})")));
            }
            sc[i][j] = coeffs.clone();
            sc[j][i] = coeffs.iter().map(|c| -c).collect();
        }
        LieAlgebra::new(dim, sc, labels)
    }

    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new(dim, vec![vec![vec![Scalar::zero(); dim]; dim]; dim], None)
            .expect("abelian construction")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::Shape("label count mismatch".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// `[x_i, x_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.sc[i][j].clone()
    }

    /// Bracket of arbitrary coordinate vectors (bilinear extension).
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert!(x.len() == self.dim && y.len() == self.dim, "bracket length mismatch");
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let factor = &x[i] * &y[j];
                for k in 0..self.dim {
                    let c = &self.sc[i][j][k];
                    if !c.is_zero() {
                        out[k] += &(&factor * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(x_i) = [x_i, ·]` (column `j` is `[x_i, x_j]`).
    pub fn ad(&self, i: usize) -> Matrix {
        Matrix::from_cols((0..self.dim).map(|j| self.sc[i][j].clone()).collect())
    }

    /// Verifies antisymmetry (including zero diagonal) and the Jacobi
    /// identity on **all** basis triples. Exact; no sampling.
    pub fn check_lie(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for k in 0..n {
                if !self.sc[i][i][k].is_zero() {
                    return Err(Error::Invariant(format!(
                        "[{0}, {0}] has nonzero component {1}",
                        self.labels[i], self.labels[k]
                    )));
                }
            }
            for j in 0..n {
                for k in 0..n {
                    if &self.sc[i][j][k] + &self.sc[j][i][k] != Scalar::zero() {
                        return Err(Error::Invariant(format!(
                            "antisymmetry fails at ([{}, {}], component {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = self.bracket(&unit(n, i), &self.sc[j][k]);
                    let t2 = self.bracket(&unit(n, j), &self.sc[k][i]);
                    let t3 = self.bracket(&unit(n, k), &self.sc[i][j]);
                    for m in 0..n {
                        acc[m] += &t2[m];
                        acc[m] += &t3[m];
                    }
                    if acc.iter().any(|v| !v.is_zero()) {
                        return Err(Error::Invariant(format!(
                            "Jacobi identity fails on triple ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The derived subalgebra `[L, L]` as a canonical subspace.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut vectors = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                vectors.push(self.sc[i][j].clone());
            }
        }
        Subspace::from_vectors(self.dim, &vectors)
    }

    /// The center `{x : [x, L] = 0}`.
    pub fn center(&self) -> Subspace {
        if self.dim == 0 {
            return Subspace::zero_space(0);
        }
        let mut stacked = Matrix::zero(0, self.dim);
        for j in 0..self.dim {
            stacked = stacked.vstack(&self.ad(j));
        }
        Subspace::from_vectors(self.dim, &stacked.nullspace())
    }

    /// True if `[L, sub] ⊆ sub`.
    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        sub.ambient() == self.dim
            && (0..self.dim).all(|i| {
                sub.basis()
                    .iter()
                    .all(|v| sub.contains(&self.bracket(&unit(self.dim, i), v)))
            })
    }

    /// Derived subalgebra of a bracket-closed subspace, as a subspace of the
    /// same ambient algebra.
    pub fn derived_of_subspace(&self, sub: &Subspace) -> Subspace {
        let basis = sub.basis();
        let mut vectors = Vec::new();
        for (i, u) in basis.iter().enumerate() {
            for w in &basis[i + 1..] {
                vectors.push(self.bracket(u, w));
            }
        }
        Subspace::from_vectors(self.dim, &vectors)
    }

    /// Quotient by an ideal, with the canonical echelon complement as the
    /// quotient basis. Returns the quotient algebra and the projection map.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, LieHom)> {
        let (q, hom, _) = self.quotient_with_complement(ideal)?;
        Ok((q, hom))
    }

    /// Like [`LieAlgebra::quotient`], additionally returning the canonical
    /// complement representatives (one vector of `self` per quotient basis
    /// element, with `proj(rep_s) = e_s`).
    pub fn quotient_with_complement(
        &self,
        ideal: &Subspace,
    ) -> Result<(LieAlgebra, LieHom, Vec<Vec<Scalar>>)> {
        if !self.is_ideal(ideal) {
            return Err(Error::Invariant("quotient by a non-ideal".into()));
        }
        let comp = Subspace::full_space(self.dim).quotient_basis(ideal);
        let q = comp.len();
        // Coordinates: invert [complement | ideal] and keep the first q rows.
        let mut cols = comp.clone();
        cols.extend(ideal.basis().iter().cloned());
        let basis_matrix = Matrix::from_cols(cols);
        let inv = basis_matrix
            .inverse()
            .expect("complement plus ideal spans the algebra");
        let mut proj = Matrix::zero(q, self.dim);
        for r in 0..q {
            for c in 0..self.dim {
                proj[(r, c)] = inv[(r, c)].clone();
            }
        }
        let mut sc = vec![vec![vec![Scalar::zero(); q]; q]; q];
        for s in 0..q {
            for t in 0..q {
                let br = proj.apply(&self.bracket(&comp[s], &comp[t]));
                sc[s][t] = br;
            }
        }
        let quotient = LieAlgebra::new(q, sc, None)?;
        quotient.check_lie().map_err(|e| {
            Error::Inconsistent(format!("quotient algebra fails the Lie axioms: {e}"))
        })?;
        let hom = LieHom::new(self.clone(), quotient.clone(), proj)?;
        Ok((quotient, hom, comp))
    }

    /// Blockwise direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut sc = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    sc[i][j][k] = self.sc[i][j][k].clone();
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    sc[self.dim + i][self.dim + j][self.dim + k] = other.sc[i][j][k].clone();
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        LieAlgebra::new(n, sc, Some(labels)).expect("direct sum construction")
    }

    /// Common fixed subalgebra of a list of automorphisms (the intersection
    /// of their eigenvalue-1 spaces), with its embedding.
    ///
    /// Each matrix is verified to be an invertible bracket automorphism; the
    /// fixed subspace is verified bracket-closed; the resulting algebra is
    /// verified against the Lie axioms. Whether the automorphisms generate a
    /// finite group is the caller's concern (see [`closure_size`]).
    pub fn fixed_subalgebra(&self, autos: &[Matrix]) -> Result<(LieAlgebra, LieHom)> {
        let n = self.dim;
        let mut stacked = Matrix::zero(0, n);
        for (idx, a) in autos.iter().enumerate() {
            if a.rows() != n || a.cols() != n {
                return Err(Error::Shape(format!("automorphism {idx} has wrong shape")));
            }
            if !a.is_invertible() {
                return Err(Error::Invariant(format!("matrix {idx} is not invertible")));
            }
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.bracket(&a.col(i), &a.col(j));
                    let rhs = a.apply(&self.bracket_basis(i, j));
                    if lhs != rhs {
                        return Err(Error::Invariant(format!(
                            "matrix {idx} is not a bracket automorphism (fails on pair ({i},{j}))"
                        )));
                    }
                }
            }
            stacked = stacked.vstack(&(a - &Matrix::identity(n)));
        }
        let fix = Subspace::from_vectors(n, &stacked.nullspace());
        for u in fix.basis() {
            for w in fix.basis() {
                if !fix.contains(&self.bracket(u, w)) {
                    return Err(Error::Invariant(
                        "fixed subspace is not bracket-closed".into(),
                    ));
                }
            }
        }
        let q = fix.dim();
        let embed = Matrix::from_cols(fix.basis().to_vec());
        let mut sc = vec![vec![vec![Scalar::zero(); q]; q]; q];
        for s in 0..q {
            for t in 0..q {
                let br = self.bracket(&fix.basis()[s], &fix.basis()[t]);
                // Express in the fixed basis (solvable by closure).
                let coords = embed.solve(&br).expect("closure guarantees solvability");
                sc[s][t] = coords;
            }
        }
        let sub = LieAlgebra::new(q, sc, None)?;
        sub.check_lie().map_err(|e| {
            Error::Inconsistent(format!("fixed subalgebra fails the Lie axioms: {e}"))
        })?;
        let hom = LieHom::new(sub.clone(), self.clone(), embed)?;
        Ok((sub, hom))
    }
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Size of the multiplicative closure of `autos` (with identity), or an error
/// if it exceeds `bound` elements. A cheap finiteness check for automorphism
/// sets used with [`LieAlgebra::fixed_subalgebra`].
pub fn closure_size(autos: &[Matrix], bound: usize) -> Result<usize> {
    let n = match autos.first() {
        Some(a) => a.rows(),
        None => return Ok(1),
    };
    let mut seen: Vec<Matrix> = vec![Matrix::identity(n)];
    let mut frontier = seen.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for a in autos {
                let p = f * a;
                if !seen.contains(&p) {
                    if seen.len() >= bound {
                        return Err(Error::Invariant(format!(
                            "closure exceeds bound of {bound} elements"
                        )));
                    }
                    seen.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len())
}

/// A Lie algebra homomorphism, stored as a `target_dim × source_dim` matrix
/// over the chosen bases. Construction verifies `φ[x,y] = [φx, φy]` on all
/// basis pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct LieHom {
    source: LieAlgebra,
    target: LieAlgebra,
    matrix: Matrix,
}

impl LieHom {
    pub fn new(source: LieAlgebra, target: LieAlgebra, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Shape(format!(
                "homomorphism matrix must be {}x{}, got {}x{}",
                target.dim(),
                source.dim(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let lhs = matrix.apply(&source.bracket_basis(i, j));
                let rhs = target.bracket(&matrix.col(i), &matrix.col(j));
                if lhs != rhs {
                    return Err(Error::Invariant(format!(
                        "not a homomorphism: fails on basis pair ({i},{j})"
                    )));
                }
            }
        }
        Ok(LieHom {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(x)
    }

    /// Composition `self ∘ inner` (checked at construction of the result).
    pub fn compose(&self, inner: &LieHom) -> Result<LieHom> {
        if inner.target != self.source {
            return Err(Error::Shape("composition target/source mismatch".into()));
        }
        LieHom::new(
            inner.source.clone(),
            self.target.clone(),
            &self.matrix * &inner.matrix,
        )
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_vectors(self.source.dim(), &self.matrix.nullspace())
    }
}

#[derive(Serialize, Deserialize)]
struct LieAlgebraJson {
    dim: usize,
    sc: Vec<(usize, usize, Vec<Scalar>)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Serialize for LieAlgebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut sc = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self.sc[i][j].iter().any(|c| !c.is_zero()) {
                    sc.push((i, j, self.sc[i][j].clone()));
                }
            }
        }
        LieAlgebraJson {
            dim: self.dim,
            sc,
            labels: Some(self.labels.clone()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LieAlgebra {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = LieAlgebraJson::deserialize(deserializer)?;
        LieAlgebra::from_brackets(raw.dim, &raw.sc, raw.labels)
            .map_err(|e| serde::de::Error::custom(format!("{e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2;

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    /// Heisenberg algebra: [x, y] = z, z central.
    fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            &[(0, 1, vec![sc(0), sc(0), sc(1)])],
            Some(vec!["x".into(), "y".into(), "z".into()]),
        )
        .unwrap()
    }

    #[test]
    fn sl2_and_abelian_pass_axioms() {
        sl2::algebra().check_lie().unwrap();
        LieAlgebra::abelian(3).check_lie().unwrap();
        heisenberg().check_lie().unwrap();
    }

    #[test]
    fn jacobi_failure_is_detected() {
        // [x,y] = z, [x,z] = z, [y,z] = x violates Jacobi.
        let bad = LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![sc(0), sc(0), sc(1)]),
                (0, 2, vec![sc(0), sc(0), sc(1)]),
                (1, 2, vec![sc(1), sc(0), sc(0)]),
            ],
            None,
        )
        .unwrap();
        let err = bad.check_lie().unwrap_err();
        assert!(format!("{err}").contains("Jacobi"), "got {err}");
    }

    #[test]
    fn antisymmetry_failure_is_detected() {
        let mut tensor = vec![vec![vec![Scalar::zero(); 2]; 2]; 2];
        tensor[0][1][0] = sc(1);
        tensor[1][0][0] = sc(1); // should be −1
        let bad = LieAlgebra::new(2, tensor, None).unwrap();
        let err = bad.check_lie().unwrap_err();
        assert!(format!("{err}").contains("antisymmetry"), "got {err}");
    }

    #[test]
    fn derived_and_center_of_heisenberg() {
        let h = heisenberg();
        let z = Subspace::from_vectors(3, &[vec![sc(0), sc(0), sc(1)]]);
        assert_eq!(h.derived_subalgebra(), z);
        assert_eq!(h.center(), z);
        assert!(h.is_ideal(&z));
    }

    #[test]
    fn sl2_is_perfect_and_centerless() {
        let l = sl2::algebra();
        assert_eq!(l.derived_subalgebra().dim(), 3);
        assert_eq!(l.center().dim(), 0);
    }

    #[test]
    fn quotient_of_heisenberg_by_center_is_abelian() {
        let h = heisenberg();
        let (q, proj) = h.quotient(&h.center()).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q, LieAlgebra::abelian(2));
        // Projection kills the center and is surjective.
        assert_eq!(proj.kernel().dim(), 1);
        assert_eq!(proj.matrix().rank(), 2);
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let l = sl2::algebra();
        let h_line = Subspace::from_vectors(3, &[vec![sc(1), sc(0), sc(0)]]);
        assert!(l.quotient(&h_line).is_err());
    }

    #[test]
    fn direct_sum_blocks() {
        let s = sl2::algebra().direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(s.dim(), 4);
        s.check_lie().unwrap();
        assert_eq!(s.derived_subalgebra().dim(), 3);
        assert_eq!(s.center().dim(), 1);
    }

    #[test]
    fn fixed_subalgebra_of_sign_automorphism() {
        // h ↦ h, e ↦ −e, f ↦ −f is conjugation by diag(1,−1).
        let l = sl2::algebra();
        let a = Matrix::from_int_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
        let (fix, embed) = l.fixed_subalgebra(&[a.clone()]).unwrap();
        assert_eq!(fix.dim(), 1);
        assert_eq!(fix, LieAlgebra::abelian(1));
        assert_eq!(embed.apply(&[sc(1)]), vec![sc(1), sc(0), sc(0)]);
        assert_eq!(closure_size(&[a], 16).unwrap(), 2);
    }

    #[test]
    fn fixed_subalgebra_rejects_non_automorphism() {
        let l = sl2::algebra();
        let bad = Matrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 1, 1]]);
        assert!(l.fixed_subalgebra(&[bad]).is_err());
    }

    #[test]
    fn hom_construction_checks_bracket_property() {
        let l = sl2::algebra();
        // The identity is a homomorphism; a random shear is not.
        LieHom::new(l.clone(), l.clone(), Matrix::identity(3)).unwrap();
        let shear = Matrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(LieHom::new(l.clone(), l, shear).is_err());
    }

    #[test]
    fn json_round_trip() {
        let h = heisenberg();
        let text = serde_json::to_string(&h).unwrap();
        assert!(text.contains("\"dim\":3"));
        let back: LieAlgebra = serde_json::from_str(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(back.labels(), h.labels());
        // Omitted entries are zero; duplicates rejected.
        let dup = r#"{"dim":2,"sc":[[0,1,["1","0"]],[1,0,["-1","0"]]]}"#;
        assert!(serde_json::from_str::<LieAlgebra>(dup).is_err());
    }
}
