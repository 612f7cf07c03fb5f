//! Current algebras `g ⊗ S`, evaluation modules, and Ext-block machinery.
//!
//! `S` is a finite-dimensional commutative unital algebra (typically a
//! polynomial quotient `k[t]/(f)`), points of `S` are algebra characters,
//! and evaluation modules arise by pulling back outer tensor products of
//! `g`-modules along the stacked evaluation map `g⊗S → g^{⊕r}`. The kernel
//! `K` of that map carries the ideal chain `K' = [K,K] ⊆ N ⊆ K` whose
//! subquotients control extensions between evaluation modules; `blocks`
//! closes the nonzero-Ext relation into a partition of a list of simples.
//!
//! Basis convention for `g ⊗ S`: index `a·dim g + i` is `x_i ⊗ s_a`, so the
//! leading block is `g ⊗ s_0` (for polynomial quotients, `g ⊗ 1`).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::ext1;
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieHom};
use crate::linalg::{Matrix, Subspace};
use crate::rep::{
    self, hom_space, is_absolutely_simple, isomorphism, subquotient_rep, Representation,
};
use crate::scalar::Scalar;

/// A finite-dimensional commutative associative unital algebra, given by
/// structure constants on an ordered basis.
#[derive(Clone, Debug)]
pub struct CommAlgebra {
    dim: usize,
    /// `sc[a][b][c]` is the coefficient of `s_c` in `s_a · s_b`.
    sc: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    labels: Vec<String>,
}

/// Mathematical equality: same structure constants and unit (labels are
/// cosmetic).
impl PartialEq for CommAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.sc == other.sc && self.unit == other.unit
    }
}
impl Eq for CommAlgebra {}

impl CommAlgebra {
    /// Builds and fully checks the algebra: commutativity and associativity
    /// on all basis triples, and the two-sided unit law, all exact.
    pub fn new(
        dim: usize,
        sc: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if sc.len() != dim
            || sc.iter().any(|r| r.len() != dim || r.iter().any(|c| c.len() != dim))
        {
            return Err(Error::Shape("structure constants must be dim³".into()));
        }
        if unit.len() != dim {
            return Err(Error::Shape("unit coordinate length mismatch".into()));
        }
        let labels = match labels {
            Some(l) if l.len() == dim => l,
            Some(_) => return Err(Error::Shape("label count mismatch".into())),
            None => (0..dim).map(|a| format!("s{a}")).collect(),
        };
        let alg = CommAlgebra { dim, sc, unit, labels };
        alg.check_axioms()?;
        Ok(alg)
    }

    fn check_axioms(&self) -> Result<()> {
        for a in 0..self.dim {
            for b in 0..self.dim {
                if self.sc[a][b] != self.sc[b][a] {
                    return Err(Error::Invariant(format!(
                        "multiplication is not commutative on ({}, {})",
                        self.labels[a], self.labels[b]
                    )));
                }
            }
        }
        for a in 0..self.dim {
            let ua = self.multiply(&self.unit, &basis_vec(self.dim, a));
            if ua != basis_vec(self.dim, a) {
                return Err(Error::Invariant(format!(
                    "unit law fails on {}",
                    self.labels[a]
                )));
            }
        }
        for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    let ab_c = self.multiply(&self.sc[a][b], &basis_vec(self.dim, c));
                    let a_bc = self.multiply(&basis_vec(self.dim, a), &self.sc[b][c]);
                    if ab_c != a_bc {
                        return Err(Error::Invariant(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Product of two elements given in coordinates.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "left factor length");
        assert_eq!(y.len(), self.dim, "right factor length");
        let mut out = vec![Scalar::zero(); self.dim];
        for a in 0..self.dim {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..self.dim {
                if y[b].is_zero() {
                    continue;
                }
                let coef = &x[a] * &y[b];
                for c in 0..self.dim {
                    if !self.sc[a][b][c].is_zero() {
                        out[c] += &(&coef * &self.sc[a][b][c]);
                    }
                }
            }
        }
        out
    }

    /// The matrix of multiplication by `u` (column `a` is `u · s_a`).
    pub fn mult_matrix(&self, u: &[Scalar]) -> Matrix {
        Matrix::from_cols(
            (0..self.dim)
                .map(|a| self.multiply(u, &basis_vec(self.dim, a)))
                .collect(),
        )
    }

    /// Checks that `m` is a unital algebra automorphism (bijective, fixes
    /// the unit, multiplicative on all basis pairs).
    pub fn check_automorphism(&self, m: &Matrix) -> Result<()> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::Shape("automorphism matrix has wrong shape".into()));
        }
        if m.inverse().is_none() {
            return Err(Error::Invariant("automorphism matrix is singular".into()));
        }
        if m.apply(&self.unit) != self.unit {
            return Err(Error::Invariant("automorphism does not fix the unit".into()));
        }
        for a in 0..self.dim {
            for b in 0..self.dim {
                let lhs = m.apply(&self.sc[a][b]);
                let rhs = self.multiply(&m.col(a), &m.col(b));
                if lhs != rhs {
                    return Err(Error::Invariant(format!(
                        "matrix is not multiplicative on ({}, {})",
                        self.labels[a], self.labels[b]
                    )));
                }
            }
        }
        Ok(())
    }
}

fn basis_vec(dim: usize, idx: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[idx] = Scalar::one();
    v
}

/// `k[t]/(f)` for a monic `f`, given by its full coefficient list
/// (constant term first, leading coefficient last). Basis `1, t, …, t^{deg−1}`.
pub fn poly_quotient(coeffs: &[Scalar]) -> Result<CommAlgebra> {
    if coeffs.len() < 2 {
        return Err(Error::Shape("polynomial must have degree at least 1".into()));
    }
    if coeffs[coeffs.len() - 1] != Scalar::one() {
        return Err(Error::Invariant("polynomial must be monic".into()));
    }
    let d = coeffs.len() - 1;
    // t^d ≡ −(c_0 + c_1 t + … + c_{d−1} t^{d−1}).
    let top: Vec<Scalar> = coeffs[..d].iter().map(|c| -c).collect();
    // Powers t^m mod f for m ≤ 2(d−1).
    let mut powers: Vec<Vec<Scalar>> = vec![basis_vec(d, 0)];
    for _ in 1..=2 * d.saturating_sub(1) {
        let prev = powers.last().unwrap();
        let mut next = vec![Scalar::zero(); d];
        for (a, c) in prev.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if a + 1 < d {
                next[a + 1] += c;
            } else {
                for (b, t) in top.iter().enumerate() {
                    next[b] += &(c * t);
                }
            }
        }
        powers.push(next);
    }
    let sc = (0..d)
        .map(|a| (0..d).map(|b| powers[a + b].clone()).collect())
        .collect();
    let labels = (0..d)
        .map(|a| match a {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{a}"),
        })
        .collect();
    CommAlgebra::new(d, sc, basis_vec(d, 0), Some(labels))
}

/// An algebra character `χ : S → k` (a point), stored by its values on the
/// basis. Construction verifies `χ(1) = 1` and `χ(s_a s_b) = χ(s_a)χ(s_b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointChar {
    values: Vec<Scalar>,
}

impl PointChar {
    pub fn new(s: &CommAlgebra, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != s.dim() {
            return Err(Error::Shape("character value count mismatch".into()));
        }
        let chi = PointChar { values };
        if chi.apply(s.unit()) != Scalar::one() {
            return Err(Error::Invariant("character does not send the unit to 1".into()));
        }
        for a in 0..s.dim() {
            for b in 0..s.dim() {
                let lhs = chi.apply(&s.sc[a][b]);
                let rhs = &chi.values[a] * &chi.values[b];
                if lhs != rhs {
                    return Err(Error::Invariant(format!(
                        "character is not multiplicative on ({}, {})",
                        s.labels[a], s.labels[b]
                    )));
                }
            }
        }
        Ok(chi)
    }

    /// The character of a polynomial quotient determined by `t ↦ v`
    /// (for dimension 1 there is no `t` and the unique character is returned).
    pub fn eval_point(s: &CommAlgebra, v: &Scalar) -> Result<Self> {
        let mut values = vec![Scalar::one()];
        let mut pow = Scalar::one();
        for _ in 1..s.dim() {
            pow = &pow * v;
            values.push(pow.clone());
        }
        PointChar::new(s, values)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Evaluates the character on an element in coordinates.
    pub fn apply(&self, elt: &[Scalar]) -> Scalar {
        assert_eq!(elt.len(), self.values.len(), "element length");
        let mut out = Scalar::zero();
        for (c, v) in elt.iter().zip(&self.values) {
            if !c.is_zero() && !v.is_zero() {
                out += &(c * v);
            }
        }
        out
    }

    /// The pullback `χ ∘ γ` along an algebra endomorphism matrix.
    pub fn compose(&self, gamma: &Matrix) -> PointChar {
        PointChar {
            values: (0..gamma.cols()).map(|a| self.apply(&gamma.col(a))).collect(),
        }
    }
}

/// `g ⊗ S` together with its two factors, so the `S`-multiplication action
/// on the tensor space stays available to the ideal machinery.
#[derive(Clone, Debug)]
pub struct CurrentAlgebra {
    g: LieAlgebra,
    s: CommAlgebra,
    lie: LieAlgebra,
}

impl CurrentAlgebra {
    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn s(&self) -> &CommAlgebra {
        &self.s
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    /// Multiplication by `u ∈ S` on `g ⊗ S` (identity on the `g` factor).
    pub fn mult_by(&self, u: &[Scalar]) -> Matrix {
        self.s.mult_matrix(u).kron(&Matrix::identity(self.g.dim()))
    }

    /// The automorphism `θ ⊗ σ` from an automorphism matrix on each factor.
    pub fn tensor_automorphism(&self, theta_g: &Matrix, sigma_s: &Matrix) -> Matrix {
        sigma_s.kron(theta_g)
    }
}

/// The current algebra `g ⊗ S` with bracket `[x⊗s, y⊗r] = [x,y] ⊗ sr`.
pub fn tensor_lie(g: &LieAlgebra, s: &CommAlgebra) -> Result<CurrentAlgebra> {
    let (dg, ds) = (g.dim(), s.dim());
    let n = dg * ds;
    let mut sc = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for a in 0..ds {
        for i in 0..dg {
            for b in 0..ds {
                for j in 0..dg {
                    let gb = g.bracket_basis(i, j);
                    let sb = &s.sc[a][b];
                    let entry = &mut sc[a * dg + i][b * dg + j];
                    for c in 0..ds {
                        if sb[c].is_zero() {
                            continue;
                        }
                        for (k, gk) in gb.iter().enumerate() {
                            if !gk.is_zero() {
                                entry[c * dg + k] += &(gk * &sb[c]);
                            }
                        }
                    }
                }
            }
        }
    }
    let labels = (0..n)
        .map(|idx| format!("{}*{}", g.labels()[idx % dg], s.labels()[idx / dg]))
        .collect();
    let lie = LieAlgebra::new(n, sc, Some(labels))?;
    lie.check_lie()
        .map_err(|e| Error::Inconsistent(format!("tensor algebra fails the Lie axioms: {e}")))?;
    Ok(CurrentAlgebra {
        g: g.clone(),
        s: s.clone(),
        lie,
    })
}

/// Stacked evaluation matrix: `x_i ⊗ s_a ↦ (χ_p(s_a)·x_i)_p`.
fn stacked_eval_matrix(cur: &CurrentAlgebra, points: &[PointChar]) -> Matrix {
    let dg = cur.g.dim();
    let mut e = Matrix::zero(points.len() * dg, cur.lie.dim());
    for (p, chi) in points.iter().enumerate() {
        for a in 0..cur.s.dim() {
            let v = &chi.values()[a];
            if v.is_zero() {
                continue;
            }
            for i in 0..dg {
                e[(p * dg + i, a * dg + i)] = v.clone();
            }
        }
    }
    e
}

fn gsum_algebra(g: &LieAlgebra, r: usize) -> LieAlgebra {
    let mut out = g.clone();
    for _ in 1..r {
        out = out.direct_sum(g);
    }
    out
}

fn check_points(points: &[PointChar]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::Shape("at least one point is required".into()));
    }
    for p in 0..points.len() {
        for q in (p + 1)..points.len() {
            if points[p] == points[q] {
                return Err(Error::Invariant(format!("points {p} and {q} coincide")));
            }
        }
    }
    Ok(())
}

/// Evaluation at a single point as a verified surjection `g⊗S → g`.
pub fn evaluation_hom(cur: &CurrentAlgebra, chi: &PointChar) -> Result<LieHom> {
    let matrix = stacked_eval_matrix(cur, std::slice::from_ref(chi));
    LieHom::new(cur.lie.clone(), cur.g.clone(), matrix)
}

/// The evaluation module `V_1(p_1) ⊗ ··· ⊗ V_r(p_r)`: the outer tensor
/// product of `g`-modules pulled back along the stacked evaluation map.
pub fn evaluation_module(
    cur: &CurrentAlgebra,
    points: &[PointChar],
    reps: &[Representation],
) -> Result<Representation> {
    check_points(points)?;
    if reps.len() != points.len() {
        return Err(Error::Shape("one representation per point is required".into()));
    }
    for r in reps {
        if r.algebra() != &cur.g {
            return Err(Error::Shape("factor is not a module over the base algebra".into()));
        }
    }
    let refs: Vec<&Representation> = reps.iter().collect();
    let (gsum, outer) = rep::external_tensor(&refs);
    debug_assert_eq!(gsum, gsum_algebra(&cur.g, points.len()));
    let ev = LieHom::new(cur.lie.clone(), gsum, stacked_eval_matrix(cur, points))?;
    let module = rep::pullback(&outer, &ev);
    module
        .check_rep()
        .map_err(|e| Error::Inconsistent(format!("evaluation module fails the module law: {e}")))?;
    Ok(module)
}

/// The ideal chain of an evaluation kernel and its subquotient modules.
#[derive(Clone, Debug)]
pub struct KernelIdeals {
    /// `K = ker(⊕_p ev_p)`.
    pub k: Subspace,
    /// `K' = [K, K]`.
    pub k_prime: Subspace,
    /// `N = {n ∈ K : I^Γ·n ⊆ K'}`.
    pub n: Subspace,
    /// The vanishing ideal `I ⊆ S` of the point set.
    pub vanishing_ideal: Subspace,
    /// The fixed part `I^Γ` (equal to `I` when no group action is declared).
    pub fixed_vanishing_ideal: Subspace,
    /// `L/K` on the canonical complement basis.
    pub quotient: LieAlgebra,
    /// Projection `L → L/K`.
    pub projection: LieHom,
    /// Complement representatives: `projection(complement[s])` is the `s`-th
    /// quotient basis vector.
    pub complement: Vec<Vec<Scalar>>,
    /// `K/K'` as an `L/K`-module.
    pub k_mod_kprime: Representation,
    /// `N/K'` as an `L/K`-module.
    pub n_mod_kprime: Representation,
    /// `K/N` as an `L/K`-module (verified to carry the zero action).
    pub k_mod_n: Representation,
}

/// Computes `K ⊇ N ⊇ K'` for a point set, optionally twisted by a group
/// acting on `S` through the given automorphism matrices (the point set must
/// be closed under the action). Verifies that the induced action on `K/N`
/// is identically zero.
pub fn kernel_ideals(
    cur: &CurrentAlgebra,
    points: &[PointChar],
    s_autos: &[Matrix],
) -> Result<KernelIdeals> {
    check_points(points)?;
    for (idx, gamma) in s_autos.iter().enumerate() {
        cur.s
            .check_automorphism(gamma)
            .map_err(|e| Error::Invariant(format!("automorphism {idx}: {e}")))?;
        for (p, chi) in points.iter().enumerate() {
            let moved = chi.compose(gamma);
            if !points.contains(&moved) {
                return Err(Error::Invariant(format!(
                    "points are not closed under the group action (automorphism {idx} moves point {p} outside the set)"
                )));
            }
        }
    }
    let l = &cur.lie;
    let k = Subspace::from_vectors(l.dim(), &stacked_eval_matrix(cur, points).nullspace());
    let k_prime = l.derived_of_subspace(&k);

    // Vanishing ideal of the points inside S, then its fixed part.
    let value_rows: Vec<Vec<Scalar>> = points.iter().map(|chi| chi.values().to_vec()).collect();
    let vanishing = Subspace::from_vectors(
        cur.s.dim(),
        &Matrix::from_rows(value_rows).nullspace(),
    );
    let mut fixed = vanishing.clone();
    for gamma in s_autos {
        let mut shifted = gamma.clone();
        for a in 0..cur.s.dim() {
            shifted[(a, a)] -= &Scalar::one();
        }
        let eigen = Subspace::from_vectors(cur.s.dim(), &shifted.nullspace());
        fixed = fixed.intersect(&eigen);
    }

    // n ∈ N  ⟺  n ∈ K and T·(u·n) = 0 for every basis u of I^Γ, where the
    // rows of T cut out K'.
    let mut rows: Vec<Vec<Scalar>> = k.annihilator().basis().to_vec();
    let t = Matrix::from_rows(k_prime.annihilator().basis().to_vec());
    for u in fixed.basis() {
        let cond = &t * &cur.mult_by(u);
        for r in 0..cond.rows() {
            rows.push((0..cond.cols()).map(|c| cond[(r, c)].clone()).collect());
        }
    }
    let system = if rows.is_empty() {
        Matrix::zero(0, l.dim())
    } else {
        Matrix::from_rows(rows)
    };
    let n = Subspace::from_vectors(l.dim(), &system.nullspace());
    debug_assert!(k.contains_subspace(&n), "N ⊆ K");
    debug_assert!(n.contains_subspace(&k_prime), "K' ⊆ N");

    let (quotient, projection, complement) = l.quotient_with_complement(&k)?;
    let (q1, _, k_mod_kprime) = subquotient_rep(l, &k, &k, &k_prime)?;
    let (q2, _, n_mod_kprime) = subquotient_rep(l, &k, &n, &k_prime)?;
    let (q3, _, k_mod_n) = subquotient_rep(l, &k, &k, &n)?;
    for q in [&q1, &q2, &q3] {
        if q != &quotient {
            return Err(Error::Inconsistent("subquotient base algebras disagree".into()));
        }
    }
    for j in 0..quotient.dim() {
        if !k_mod_n.action(j).is_zero() {
            return Err(Error::Inconsistent(
                "the induced action on K/N does not vanish".into(),
            ));
        }
    }
    Ok(KernelIdeals {
        k,
        k_prime,
        n,
        vanishing_ideal: vanishing,
        fixed_vanishing_ideal: fixed,
        quotient,
        projection,
        complement,
        k_mod_kprime,
        n_mod_kprime,
        k_mod_n,
    })
}

impl KernelIdeals {
    /// The induced isomorphism `L/K → g^{⊕r}` (evaluation composed with the
    /// complement section), verified to be a bijective homomorphism.
    pub fn fiber_iso(&self, cur: &CurrentAlgebra, points: &[PointChar]) -> Result<LieHom> {
        let e = stacked_eval_matrix(cur, points);
        let section = Matrix::from_cols(self.complement.clone());
        let matrix = &e * &section;
        if matrix.rows() != matrix.cols() || matrix.inverse().is_none() {
            return Err(Error::Inconsistent(
                "evaluation does not induce an isomorphism on L/K".into(),
            ));
        }
        LieHom::new(
            self.quotient.clone(),
            gsum_algebra(&cur.g, points.len()),
            matrix,
        )
    }
}

/// Both sides of the closed-form Ext computation at a single point.
#[derive(Clone, Debug, Serialize)]
pub struct ExtFormulaReport {
    /// `dim Ext¹` between the two evaluation modules, from the cocycle solver.
    pub generic_dim: usize,
    /// `dim Hom_{L/K}(N/K', V* ⊗ W)`.
    pub hom_formula_dim: usize,
    /// `dim K/N` (contributes only when the modules are isomorphic).
    pub k_mod_n_dim: usize,
    pub modules_isomorphic: bool,
    /// `hom_formula_dim`, plus `k_mod_n_dim` if the modules are isomorphic.
    pub predicted_dim: usize,
    pub agrees: bool,
}

/// Verifies the closed-form description of `Ext¹` between evaluation modules
/// at one point: the generic cocycle computation must match
/// `Hom(N/K', V*⊗W)`, with an extra `dim K/N` term when `V ≅ W`.
pub fn verify_ext_formula(
    cur: &CurrentAlgebra,
    point: &PointChar,
    v: &Representation,
    w: &Representation,
) -> Result<ExtFormulaReport> {
    let points = std::slice::from_ref(point);
    let vev = evaluation_module(cur, points, std::slice::from_ref(v))?;
    let wev = evaluation_module(cur, points, std::slice::from_ref(w))?;
    let generic_dim = ext1(&vev, &wev).dim();

    let ki = kernel_ideals(cur, points, &[])?;
    let iso = ki.fiber_iso(cur, points)?;
    let hom_target = rep::pullback(&Representation::hom_module(v, w), &iso);
    let hom_formula_dim = hom_space(&ki.n_mod_kprime, &hom_target).len();
    let k_mod_n_dim = ki.k_mod_n.dim();
    let modules_isomorphic = isomorphism(&vev, &wev).is_some();
    let predicted_dim = hom_formula_dim + if modules_isomorphic { k_mod_n_dim } else { 0 };
    Ok(ExtFormulaReport {
        generic_dim,
        hom_formula_dim,
        k_mod_n_dim,
        modules_isomorphic,
        predicted_dim,
        agrees: generic_dim == predicted_dim,
    })
}

/// Outcome of the disjoint-support vanishing check.
#[derive(Clone, Debug, Serialize)]
pub struct DisjointSupportReport {
    pub ext_vw: usize,
    pub ext_wv: usize,
    pub vanishes: bool,
}

/// For nontrivial simples evaluated at two distinct points, `Ext¹` vanishes
/// in both directions; this computes both dimensions and reports the fact.
pub fn verify_disjoint_support(
    cur: &CurrentAlgebra,
    point_p: &PointChar,
    v: &Representation,
    point_q: &PointChar,
    w: &Representation,
) -> Result<DisjointSupportReport> {
    if point_p == point_q {
        return Err(Error::Invariant(
            "supports are not disjoint: both modules sit at the same point".into(),
        ));
    }
    for (name, r) in [("first", v), ("second", w)] {
        if !is_absolutely_simple(r) {
            return Err(Error::Invariant(format!("{name} module is not absolutely simple")));
        }
        if (0..r.algebra().dim()).all(|j| r.action(j).is_zero()) {
            return Err(Error::Invariant(format!("{name} module is trivial")));
        }
    }
    let vev = evaluation_module(cur, std::slice::from_ref(point_p), std::slice::from_ref(v))?;
    let wev = evaluation_module(cur, std::slice::from_ref(point_q), std::slice::from_ref(w))?;
    let ext_vw = ext1(&vev, &wev).dim();
    let ext_wv = ext1(&wev, &vev).dim();
    Ok(DisjointSupportReport {
        ext_vw,
        ext_wv,
        vanishes: ext_vw == 0 && ext_wv == 0,
    })
}

/// An edge that merged two blocks: `Ext¹(from, to)` is nonzero.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BlockWitness {
    pub from: String,
    pub to: String,
    pub ext_dim: usize,
}

/// Partition of a list of simple modules under the closure of the
/// nonzero-Ext relation.
#[derive(Clone, Debug)]
pub struct BlockPartition {
    labels: Vec<String>,
    /// Root index (into `labels`) for each input module.
    parent: Vec<usize>,
    witnesses: Vec<BlockWitness>,
}

impl BlockPartition {
    /// Blocks as sorted label lists, ordered by their smallest label.
    pub fn blocks(&self) -> Vec<Vec<String>> {
        let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for (i, root) in self.parent.iter().enumerate() {
            groups.entry(*root).or_default().push(self.labels[i].clone());
        }
        let mut out: Vec<Vec<String>> = groups
            .into_values()
            .map(|mut g| {
                g.sort();
                g
            })
            .collect();
        out.sort();
        out
    }

    /// The lexicographically smallest label in the block of `label`.
    pub fn representative(&self, label: &str) -> Option<&str> {
        let idx = self.labels.iter().position(|l| l == label)?;
        let root = self.parent[idx];
        self.labels
            .iter()
            .enumerate()
            .filter(|(i, _)| self.parent[*i] == root)
            .map(|(_, l)| l.as_str())
            .min()
    }

    pub fn same_block(&self, a: &str, b: &str) -> Option<bool> {
        let ia = self.labels.iter().position(|l| l == a)?;
        let ib = self.labels.iter().position(|l| l == b)?;
        Some(self.parent[ia] == self.parent[ib])
    }

    pub fn witnesses(&self) -> &[BlockWitness] {
        &self.witnesses
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Merges the two classes, keeping the smaller root index; returns
    /// whether a merge happened.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Partitions pairwise non-isomorphic absolutely simple modules into blocks:
/// the union-find closure of "`Ext¹` is nonzero in either direction". Pair
/// computations run in parallel; merging is sequential in sorted pair order,
/// so the result is deterministic.
pub fn blocks(simples: &[(String, Representation)]) -> Result<BlockPartition> {
    if simples.is_empty() {
        return Err(Error::Shape("at least one module is required".into()));
    }
    let algebra = simples[0].1.algebra();
    for (label, r) in simples {
        if r.algebra() != algebra {
            return Err(Error::Shape(format!("module '{label}' is over a different algebra")));
        }
        if !is_absolutely_simple(r) {
            return Err(Error::Invariant(format!("module '{label}' is not absolutely simple")));
        }
    }
    for i in 0..simples.len() {
        for j in (i + 1)..simples.len() {
            if simples[i].0 == simples[j].0 {
                return Err(Error::Shape(format!("duplicate label '{}'", simples[i].0)));
            }
            if isomorphism(&simples[i].1, &simples[j].1).is_some() {
                return Err(Error::Invariant(format!(
                    "modules '{}' and '{}' are isomorphic",
                    simples[i].0, simples[j].0
                )));
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..simples.len())
        .flat_map(|i| ((i + 1)..simples.len()).map(move |j| (i, j)))
        .collect();
    let mut edges: Vec<(usize, usize, usize, usize)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let fwd = ext1(&simples[i].1, &simples[j].1).dim();
            let bwd = ext1(&simples[j].1, &simples[i].1).dim();
            (i, j, fwd, bwd)
        })
        .collect();
    edges.sort();
    let mut uf = UnionFind::new(simples.len());
    let mut witnesses = Vec::new();
    for (i, j, fwd, bwd) in edges {
        if fwd == 0 && bwd == 0 {
            continue;
        }
        if uf.union(i, j) {
            let (from, to, ext_dim) = if fwd > 0 {
                (simples[i].0.clone(), simples[j].0.clone(), fwd)
            } else {
                (simples[j].0.clone(), simples[i].0.clone(), bwd)
            };
            witnesses.push(BlockWitness { from, to, ext_dim });
        }
    }
    let parent = (0..simples.len()).map(|i| uf.find(i)).collect();
    Ok(BlockPartition {
        labels: simples.iter().map(|(l, _)| l.clone()).collect(),
        parent,
        witnesses,
    })
}

/// A finite-support assignment of per-point block labels: orbits not in the
/// map carry the default (trivial-block) label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralCharacter {
    assignments: BTreeMap<String, String>,
    default: String,
}

impl SpectralCharacter {
    pub fn get(&self, orbit: &str) -> &str {
        self.assignments.get(orbit).map_or(&self.default, |s| s)
    }

    pub fn support(&self) -> impl Iterator<Item = &String> {
        self.assignments.keys()
    }

    pub fn default_label(&self) -> &str {
        &self.default
    }
}

/// Builds the spectral character of an evaluation module from its declared
/// per-orbit factors: each orbit maps to the block of its factor in that
/// orbit's partition, and orbits whose factor lies in the trivial module's
/// block are dropped (they carry the default).
pub fn spectral_character(
    factors: &[(String, String)],
    partition_per_point: &BTreeMap<String, BlockPartition>,
    trivial_label: &str,
) -> Result<SpectralCharacter> {
    let mut assignments = BTreeMap::new();
    for (orbit, factor) in factors {
        let partition = partition_per_point.get(orbit).ok_or_else(|| {
            Error::Invariant(format!("no per-point partition declared for orbit '{orbit}'"))
        })?;
        let block = partition.representative(factor).ok_or_else(|| {
            Error::Invariant(format!(
                "factor '{factor}' not found in the partition for orbit '{orbit}'"
            ))
        })?;
        let trivial_block = partition.representative(trivial_label).ok_or_else(|| {
            Error::Invariant(format!(
                "trivial module '{trivial_label}' not found in the partition for orbit '{orbit}'"
            ))
        })?;
        if block != trivial_block {
            assignments.insert(orbit.clone(), block.to_string());
        }
    }
    Ok(SpectralCharacter {
        assignments,
        default: trivial_label.to_string(),
    })
}
