//! Finite-dimensional representations and module constructions.
//!
//! A representation stores one action matrix per basis element of its
//! algebra. Duals, tensor products, direct sums, and internal hom modules
//! are built matrix-by-matrix; `hom_module(V, W)` *is* `tensor(dual(V), W)`
//! with the coordinate convention that index `q·dim W + p` of the tensor
//! corresponds to the entry `F[p][q]` of a `dim W × dim V` matrix `F`
//! (column-major vectorisation). Intertwiner spaces are solved from the
//! literal equations `T·ρ_V(x) = ρ_W(x)·T`, which independently cross-checks
//! that convention.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieHom};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// A linear functional on an algebra, by coordinates in its chosen basis.
pub type Weight = Vec<Scalar>;

/// A representation of a [`LieAlgebra`] by square matrices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Representation {
    algebra: LieAlgebra,
    dim: usize,
    /// `action[i]` is the matrix of the `i`-th basis element.
    action: Vec<Matrix>,
}

impl Representation {
    /// Shape-checked constructor; the homomorphism property is verified by
    /// [`Representation::check_rep`], not here. The module dimension is read
    /// off the first action matrix (see [`Representation::new_with_dim`] for
    /// zero-dimensional algebras).
    pub fn new(algebra: LieAlgebra, action: Vec<Matrix>) -> Result<Self> {
        let dim = action.first().map_or(0, Matrix::rows);
        Representation::new_with_dim(algebra, dim, action)
    }

    /// Constructor with an explicit module dimension, needed when the algebra
    /// is zero-dimensional and there are no action matrices to read it from.
    pub fn new_with_dim(algebra: LieAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "need {} action matrices, got {}",
                algebra.dim(),
                action.len()
            )));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Shape("action matrices must be square of the module dimension".into()));
        }
        Ok(Representation {
            algebra,
            dim,
            action,
        })
    }

    /// The trivial action on a space of the given dimension.
    pub fn trivial(algebra: LieAlgebra, dim: usize) -> Self {
        let action = vec![Matrix::zero(dim, dim); algebra.dim()];
        Representation {
            algebra,
            dim,
            action,
        }
    }

    /// One-dimensional module `k_λ`. Fails unless `λ` kills the derived
    /// subalgebra (the necessary and sufficient condition).
    pub fn one_dim(algebra: LieAlgebra, weight: &Weight) -> Result<Self> {
        if weight.len() != algebra.dim() {
            return Err(Error::Shape("weight length mismatch".into()));
        }
        for i in 0..algebra.dim() {
            for j in 0..algebra.dim() {
                let mut pairing = Scalar::zero();
                for (k, w) in weight.iter().enumerate() {
                    let c = &algebra.bracket_basis(i, j)[k];
                    if !c.is_zero() && !w.is_zero() {
                        pairing += &(c * w);
                    }
                }
                if !pairing.is_zero() {
                    return Err(Error::Invariant(format!(
                        "weight does not vanish on [L, L] (pair ({i},{j}))"
                    )));
                }
            }
        }
        let action = weight
            .iter()
            .map(|w| {
                let mut m = Matrix::zero(1, 1);
                m[(0, 0)] = w.clone();
                m
            })
            .collect();
        Ok(Representation {
            algebra,
            dim: 1,
            action,
        })
    }

    /// The adjoint representation `x ↦ ad(x)`.
    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.ad(i)).collect();
        Representation {
            algebra: algebra.clone(),
            dim: algebra.dim(),
            action,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Action of an arbitrary algebra element given by coordinates.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.algebra.dim(), "coordinate length mismatch");
        let mut m = Matrix::zero(self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = &m + &self.action[i].scale(c);
            }
        }
        m
    }

    /// Verifies `ρ([x_i, x_j]) = ρ(x_i)ρ(x_j) − ρ(x_j)ρ(x_i)` on all pairs.
    pub fn check_rep(&self) -> Result<()> {
        for i in 0..self.algebra.dim() {
            for j in 0..self.algebra.dim() {
                let lhs = self.act(&self.algebra.bracket_basis(i, j));
                let rhs = &(&self.action[i] * &self.action[j]) - &(&self.action[j] * &self.action[i]);
                if lhs != rhs {
                    return Err(Error::Invariant(format!(
                        "representation law fails on basis pair ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Dual module: `x` acts by `−ρ(x)ᵀ`.
    pub fn dual(&self) -> Representation {
        let action = self.action.iter().map(|m| -&m.transpose()).collect();
        Representation {
            algebra: self.algebra.clone(),
            dim: self.dim,
            action,
        }
    }

    /// Tensor product over the same algebra: `ρ_V(x)⊗I + I⊗ρ_W(x)`.
    pub fn tensor(&self, other: &Representation) -> Representation {
        assert_eq!(self.algebra, other.algebra, "tensor over different algebras");
        let iv = Matrix::identity(self.dim);
        let iw = Matrix::identity(other.dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| &a.kron(&iw) + &iv.kron(b))
            .collect();
        Representation {
            algebra: self.algebra.clone(),
            dim: self.dim * other.dim,
            action,
        }
    }

    /// Direct sum over the same algebra (block diagonal).
    pub fn dsum(&self, other: &Representation) -> Representation {
        assert_eq!(self.algebra, other.algebra, "dsum over different algebras");
        let n = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zero(n, n);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m[(i, j)] = a[(i, j)].clone();
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m[(self.dim + i, self.dim + j)] = b[(i, j)].clone();
                    }
                }
                m
            })
            .collect();
        Representation {
            algebra: self.algebra.clone(),
            dim: n,
            action,
        }
    }

    /// Internal hom `Hom(V, W)` with action `(x·f)(v) = x.f(v) − f(x.v)`,
    /// realised as `tensor(dual(V), W)`. Coordinates: index `q·dim W + p`
    /// holds the matrix entry `F[p][q]` of `F : V → W`.
    pub fn hom_module(v: &Representation, w: &Representation) -> Representation {
        v.dual().tensor(w)
    }

    /// Flattens `F : V → W` (a `dim W × dim V` matrix) into hom-module
    /// coordinates.
    pub fn flatten_hom(f: &Matrix) -> Vec<Scalar> {
        let (wd, vd) = (f.rows(), f.cols());
        let mut out = Vec::with_capacity(wd * vd);
        for q in 0..vd {
            for p in 0..wd {
                out.push(f[(p, q)].clone());
            }
        }
        out
    }

    /// Inverse of [`Representation::flatten_hom`].
    pub fn unflatten_hom(coords: &[Scalar], w_dim: usize, v_dim: usize) -> Matrix {
        assert_eq!(coords.len(), w_dim * v_dim, "hom coordinate length");
        let mut f = Matrix::zero(w_dim, v_dim);
        for q in 0..v_dim {
            for p in 0..w_dim {
                f[(p, q)] = coords[q * w_dim + p].clone();
            }
        }
        f
    }

    /// The invariant subspace `V^L = {v : x.v = 0 ∀x}`.
    pub fn invariants(&self) -> Subspace {
        if self.algebra.dim() == 0 {
            return Subspace::full_space(self.dim);
        }
        let mut stacked = Matrix::zero(0, self.dim);
        for m in &self.action {
            stacked = stacked.vstack(m);
        }
        Subspace::from_vectors(self.dim, &stacked.nullspace())
    }
}

/// Basis of the intertwiner space `{T : T·ρ_V(x) = ρ_W(x)·T ∀x}`, solved
/// from the literal matrix equations (not via the hom module, so the two
/// routes cross-validate each other).
pub fn hom_space(v: &Representation, w: &Representation) -> Vec<Matrix> {
    assert_eq!(v.algebra(), w.algebra(), "hom_space over different algebras");
    let (vd, wd) = (v.dim(), w.dim());
    let n = v.algebra().dim();
    let unknowns = wd * vd;
    let mut rows = Vec::with_capacity(n * unknowns);
    for x in 0..n {
        let rv = v.action(x);
        let rw = w.action(x);
        for c in 0..vd {
            for r in 0..wd {
                // Entry (r,c) of T·ρ_V(x) − ρ_W(x)·T as a functional of T.
                let mut row = vec![Scalar::zero(); unknowns];
                for q in 0..vd {
                    let a = &rv[(q, c)];
                    if !a.is_zero() {
                        row[q * wd + r] += a;
                    }
                }
                for p in 0..wd {
                    let b = &rw[(r, p)];
                    if !b.is_zero() {
                        row[c * wd + p] -= b;
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zero(0, unknowns)
    } else {
        Matrix::from_rows(rows)
    };
    system
        .nullspace()
        .into_iter()
        .map(|coords| Representation::unflatten_hom(&coords, wd, vd))
        .collect()
}

/// An invertible intertwiner `V → W` if one is evident, else `None`.
///
/// Decisive for absolutely simple modules (where Schur forces the hom space
/// to be a line): equal dimensions, one-dimensional hom spaces both ways,
/// and an invertible basis intertwiner. Structurally identical inputs short
/// circuit to the identity.
pub fn isomorphism(v: &Representation, w: &Representation) -> Option<Matrix> {
    if v.algebra() != w.algebra() || v.dim() != w.dim() {
        return None;
    }
    if v == w {
        return Some(Matrix::identity(v.dim()));
    }
    let forward = hom_space(v, w);
    if forward.len() != 1 || !forward[0].is_invertible() {
        return None;
    }
    if hom_space(w, v).len() != 1 {
        return None;
    }
    Some(forward[0].clone())
}

/// Burnside test for absolute simplicity: the unital algebra generated by
/// the action matrices is all of `End(V)` iff `V` is absolutely simple.
pub fn is_absolutely_simple(v: &Representation) -> bool {
    let d = v.dim();
    if d == 0 {
        return false;
    }
    let ambient = d * d;
    let mut span = Subspace::zero_space(ambient);
    let mut frontier: Vec<Matrix> = Vec::new();
    let push = |span: &mut Subspace, frontier: &mut Vec<Matrix>, m: Matrix| {
        let coords = Representation::flatten_hom(&m);
        if !span.contains(&coords) {
            *span = span.sum(&Subspace::from_vectors(ambient, &[coords]));
            frontier.push(m);
        }
    };
    push(&mut span, &mut frontier, Matrix::identity(d));
    while let Some(f) = frontier.pop() {
        if span.dim() == ambient {
            return true;
        }
        for i in 0..v.algebra().dim() {
            let p = &f * v.action(i);
            push(&mut span, &mut frontier, p);
        }
    }
    span.dim() == ambient
}

/// `dim Hom_L(A, V)`; for simple `A` this is the multiplicity of `A` in a
/// semisimple `V`.
pub fn multiplicity(a: &Representation, v: &Representation) -> usize {
    hom_space(a, v).len()
}

/// Outcome of matching a module against a caller-supplied list of simples.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    /// `(label, multiplicity)`, in input order.
    pub summands: Vec<(String, usize)>,
    /// `Σ multiplicity · dim` over the candidates.
    pub accounted: usize,
    /// Dimension of the module being decomposed.
    pub total: usize,
    /// True iff the candidates fully account for the dimension.
    pub exhausted: bool,
}

/// Multiplicity of each candidate in `v`, with an explicit "not exhausted"
/// report when the candidates do not account for all of `dim v` (so callers
/// can never silently treat a non-semisimple or under-supplied case as
/// resolved).
pub fn semisimple_decompose(
    v: &Representation,
    candidates: &[(String, Representation)],
) -> DecompositionReport {
    let mut summands = Vec::with_capacity(candidates.len());
    let mut accounted = 0usize;
    for (label, a) in candidates {
        assert_eq!(a.algebra(), v.algebra(), "candidate over a different algebra");
        let m = multiplicity(a, v);
        accounted += m * a.dim();
        summands.push((label.clone(), m));
    }
    DecompositionReport {
        summands,
        accounted,
        total: v.dim(),
        exhausted: accounted == v.dim(),
    }
}

/// Pullback of a representation along a homomorphism `φ : L → H`:
/// `x` acts by `ρ_H(φ(x))`.
pub fn pullback(rep: &Representation, hom: &LieHom) -> Representation {
    assert_eq!(rep.algebra(), hom.target(), "pullback target mismatch");
    let action = (0..hom.source().dim())
        .map(|i| rep.act(&hom.matrix().col(i)))
        .collect();
    Representation::new(hom.source().clone(), action).expect("pullback shapes agree")
}

/// Builds the module `A/B` over the quotient algebra `L/K` from subspaces
/// `B ⊆ A` of `L`, acting by `(x + K)·(a + B) = [x, a] + B`.
///
/// Verifies that `K` is an ideal, that `A` and `B` are `L`-stable, and that
/// `[K, A] ⊆ B` (which makes the action well defined over the quotient).
/// Returns the quotient algebra, the projection, and the module on the
/// canonical echelon bases.
pub fn subquotient_rep(
    l: &LieAlgebra,
    k: &Subspace,
    a: &Subspace,
    b: &Subspace,
) -> Result<(LieAlgebra, LieHom, Representation)> {
    if !a.contains_subspace(b) {
        return Err(Error::Shape("subquotient needs B ⊆ A".into()));
    }
    let n = l.dim();
    let stable = |s: &Subspace| {
        (0..n).all(|i| {
            s.basis().iter().all(|v| {
                let mut x = vec![Scalar::zero(); n];
                x[i] = Scalar::one();
                s.contains(&l.bracket(&x, v))
            })
        })
    };
    if !stable(a) || !stable(b) {
        return Err(Error::Invariant("A and B must be L-stable".into()));
    }
    for u in k.basis() {
        for v in a.basis() {
            if !b.contains(&l.bracket(u, v)) {
                return Err(Error::Invariant(
                    "[K, A] ⊄ B: the action does not descend to L/K".into(),
                ));
            }
        }
    }
    let (q, proj, comp) = l.quotient_with_complement(k)?;
    let m_basis = a.quotient_basis(b);
    let m_dim = m_basis.len();
    // Coordinates of `w mod B` in the quotient basis: solve against
    // [module-basis | B-basis], whose columns are independent.
    let mut cols = m_basis.clone();
    cols.extend(b.basis().iter().cloned());
    let coord_matrix = Matrix::from_cols(cols);
    let coords_mod_b = |w: &[Scalar]| -> Vec<Scalar> {
        let full = coord_matrix
            .solve(w)
            .expect("A ⊆ span(module basis) + B");
        full[..m_dim].to_vec()
    };
    let action = comp
        .iter()
        .map(|rep_s| {
            Matrix::from_cols(m_basis.iter().map(|m| coords_mod_b(&l.bracket(rep_s, m))).collect())
        })
        .collect();
    let rep = Representation::new_with_dim(q.clone(), m_dim, action)?;
    rep.check_rep().map_err(|e| {
        Error::Inconsistent(format!("subquotient action violates the representation law: {e}"))
    })?;
    Ok((q, proj, rep))
}

/// External tensor product `V₁ ⊠ ··· ⊠ V_r` over the direct sum of the
/// factors' algebras: the `t`-th summand acts on the `t`-th tensor slot.
pub fn external_tensor(factors: &[&Representation]) -> (LieAlgebra, Representation) {
    assert!(!factors.is_empty(), "external tensor of no factors");
    let algebra = factors
        .iter()
        .skip(1)
        .fold(factors[0].algebra().clone(), |acc, f| {
            acc.direct_sum(f.algebra())
        });
    let total_dim: usize = factors.iter().map(|f| f.dim()).product();
    let mut action = Vec::with_capacity(algebra.dim());
    for (t, f) in factors.iter().enumerate() {
        for i in 0..f.algebra().dim() {
            // I ⊗ ... ⊗ ρ_t(x_i) ⊗ ... ⊗ I
            let mut m = Matrix::identity(1);
            for (s, g) in factors.iter().enumerate() {
                let block = if s == t {
                    f.action(i).clone()
                } else {
                    Matrix::identity(g.dim())
                };
                m = m.kron(&block);
            }
            action.push(m);
        }
    }
    let rep = Representation::new(algebra.clone(), action).expect("external tensor shapes agree");
    assert_eq!(rep.dim(), total_dim);
    (algebra, rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2;

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn simple_modules_satisfy_the_representation_law() {
        for d in 1..=6 {
            sl2::simple(d).check_rep().unwrap();
        }
        Representation::adjoint(&sl2::algebra()).check_rep().unwrap();
    }

    #[test]
    fn check_rep_detects_a_broken_action() {
        let l = sl2::algebra();
        let mut action = vec![Matrix::zero(2, 2); 3];
        action[0] = Matrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        // e and f act by zero: [e,f] = h is violated.
        let bad = Representation::new(l, action).unwrap();
        assert!(bad.check_rep().is_err());
    }

    #[test]
    fn one_dim_requires_vanishing_on_derived() {
        let l = sl2::algebra();
        assert!(Representation::one_dim(l.clone(), &vec![sc(1), sc(0), sc(0)]).is_err());
        let triv = Representation::one_dim(l, &vec![sc(0), sc(0), sc(0)]).unwrap();
        triv.check_rep().unwrap();
        let ab = LieAlgebra::abelian(2);
        let k_mu = Representation::one_dim(ab, &vec![sc(2), sc(-1)]).unwrap();
        k_mu.check_rep().unwrap();
    }

    #[test]
    fn dual_tensor_dsum_obey_the_law() {
        let v = sl2::simple(2);
        let w = sl2::simple(3);
        v.dual().check_rep().unwrap();
        v.tensor(&w).check_rep().unwrap();
        v.dsum(&w).check_rep().unwrap();
        Representation::hom_module(&v, &w).check_rep().unwrap();
        assert_eq!(v.tensor(&w).dim(), 6);
        assert_eq!(v.dsum(&w).dim(), 5);
    }

    #[test]
    fn hom_module_action_matches_defining_formula() {
        let v = sl2::simple(2);
        let w = sl2::simple(3);
        let hom = Representation::hom_module(&v, &w);
        // f: V → W a sample map; x·f = ρ_W(x)f − fρ_V(x).
        let f = Matrix::from_int_rows(&[&[1, 2], &[0, -1], &[3, 0]]);
        for x in 0..3 {
            let expect = &(w.action(x) * &f) - &(&f * v.action(x));
            let got = hom.act(&unit3(x)).apply(&Representation::flatten_hom(&f));
            assert_eq!(got, Representation::flatten_hom(&expect), "basis element {x}");
        }
    }

    fn unit3(i: usize) -> Vec<Scalar> {
        let mut v = vec![sc(0); 3];
        v[i] = sc(1);
        v
    }

    #[test]
    fn invariants_of_simples() {
        assert_eq!(sl2::simple(1).invariants().dim(), 1);
        for d in 2..=5 {
            assert_eq!(sl2::simple(d).invariants().dim(), 0, "V({d})");
        }
        // Hom(V,V) always has the identity as an invariant.
        let v = sl2::simple(3);
        let hom = Representation::hom_module(&v, &v);
        assert_eq!(hom.invariants().dim(), 1);
        assert!(hom
            .invariants()
            .contains(&Representation::flatten_hom(&Matrix::identity(3))));
    }

    #[test]
    fn hom_space_matches_invariants_of_hom_module() {
        let pairs = [(2usize, 2usize), (2, 3), (3, 3), (2, 4)];
        for (d, e) in pairs {
            let v = sl2::simple(d);
            let w = sl2::simple(e);
            let direct = hom_space(&v, &w).len();
            let via_hom = Representation::hom_module(&v, &w).invariants().dim();
            assert_eq!(direct, via_hom, "({d},{e})");
            assert_eq!(direct, usize::from(d == e), "Schur for ({d},{e})");
        }
    }

    #[test]
    fn isomorphism_detects_equivalent_presentations() {
        let v = sl2::simple(3);
        assert!(isomorphism(&v, &v).is_some());
        assert!(isomorphism(&v, &sl2::simple(2)).is_none());
        // Conjugated copy of V(3).
        let p = Matrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 2, 1]]);
        let pinv = p.inverse().unwrap();
        let action = (0..3).map(|i| &(&p * v.action(i)) * &pinv).collect();
        let w = Representation::new(sl2::algebra(), action).unwrap();
        w.check_rep().unwrap();
        let t = isomorphism(&v, &w).expect("conjugate modules are isomorphic");
        for i in 0..3 {
            assert_eq!(&t * v.action(i), w.action(i) * &t);
        }
    }

    #[test]
    fn burnside_simplicity() {
        for d in 1..=4 {
            assert!(is_absolutely_simple(&sl2::simple(d)), "V({d})");
        }
        let v = sl2::simple(2);
        assert!(!is_absolutely_simple(&v.dsum(&v)));
        assert!(!is_absolutely_simple(&v.tensor(&v)));
        // Two commuting one-dimensional actions are simple; their sum is not.
        let ab = LieAlgebra::abelian(1);
        let k0 = Representation::one_dim(ab.clone(), &vec![sc(0)]).unwrap();
        let k1 = Representation::one_dim(ab, &vec![sc(1)]).unwrap();
        assert!(is_absolutely_simple(&k0));
        assert!(!is_absolutely_simple(&k0.dsum(&k1)));
    }

    #[test]
    fn decompose_tensor_square() {
        let v2 = sl2::simple(2);
        let t = v2.tensor(&v2);
        let candidates = vec![
            ("V(1)".to_string(), sl2::simple(1)),
            ("V(3)".to_string(), sl2::simple(3)),
        ];
        let report = semisimple_decompose(&t, &candidates);
        assert!(report.exhausted);
        assert_eq!(report.summands, vec![("V(1)".to_string(), 1), ("V(3)".to_string(), 1)]);
        // Withholding V(3) leaves the report honestly incomplete.
        let partial = semisimple_decompose(&t, &candidates[..1]);
        assert!(!partial.exhausted);
        assert_eq!(partial.accounted, 1);
    }

    #[test]
    fn pullback_along_projection() {
        let l = sl2::algebra().direct_sum(&LieAlgebra::abelian(1));
        let center = l.center();
        let (q, proj) = l.quotient(&center).unwrap();
        assert_eq!(q, sl2::algebra());
        let v = pullback(&sl2::simple(3), &proj);
        v.check_rep().unwrap();
        assert_eq!(v.dim(), 3);
        // The central element acts by zero.
        assert!(v.act(&[sc(0), sc(0), sc(0), sc(1)]).is_zero());
    }

    #[test]
    fn external_tensor_over_direct_sum() {
        let v = sl2::simple(2);
        let w = sl2::simple(3);
        let (algebra, vw) = external_tensor(&[&v, &w]);
        assert_eq!(algebra.dim(), 6);
        vw.check_rep().unwrap();
        assert_eq!(vw.dim(), 6);
        assert!(is_absolutely_simple(&vw));
    }
}
