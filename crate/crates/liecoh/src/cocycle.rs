//! The sign-twist cocycle attached to the quaternion generators realized
//! inside sl₂ over the two-variable Laurent ring.
//!
//! The embedding `phi` sends `T₁ ↦ ζ₄t₁(e−f)`, `T₂ ↦ t₂(e+f)`,
//! `T₁T₂ ↦ ζ₄t₁t₂·h` (with `ζ₄ = i`).  For each sign twist `γ` the map
//! `α_γ = phi ∘ γ ∘ phi⁻¹ ∘ γ` is an sl₂-automorphism over the Laurent
//! ring; [`phi_cocycle`] computes its matrix in either the standard
//! `(h, e, f)` basis or the twisted basis `(ζ₄t₁t₂h, ζ₄t₁(e−f), t₂(e+f))`,
//! and [`verify_cocycle_condition`] checks the multiplicativity law
//! `α_{γ₁γ₂} = α_{γ₁} · γ₁(α_{γ₂})` on all sixteen pairs together with
//! bracket preservation and unit determinants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{GammaElem, Laurent};
use crate::quat::{CheckItem, QuatElem, SymbolicReport};
use crate::scalar::Scalar;

/// An sl₂ element with Laurent-polynomial coefficients on `(h, e, f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Laurent {
    pub h: Laurent,
    pub e: Laurent,
    pub f: Laurent,
}

impl Sl2Laurent {
    pub fn zero() -> Self {
        Sl2Laurent {
            h: Laurent::zero(),
            e: Laurent::zero(),
            f: Laurent::zero(),
        }
    }

    pub fn new(h: Laurent, e: Laurent, f: Laurent) -> Self {
        Sl2Laurent { h, e, f }
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_zero() && self.e.is_zero() && self.f.is_zero()
    }

    /// Bracket extended from `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
    pub fn bracket(&self, other: &Sl2Laurent) -> Sl2Laurent {
        let two = Laurent::constant(Scalar::from_int(2));
        let h = &(&self.e * &other.f) - &(&self.f * &other.e);
        let e = &two * &(&(&self.h * &other.e) - &(&self.e * &other.h));
        let f = &two * &(&(&self.f * &other.h) - &(&self.h * &other.f));
        Sl2Laurent { h, e, f }
    }

    pub fn scale(&self, s: &Laurent) -> Sl2Laurent {
        Sl2Laurent {
            h: &self.h * s,
            e: &self.e * s,
            f: &self.f * s,
        }
    }

    pub fn add(&self, other: &Sl2Laurent) -> Sl2Laurent {
        Sl2Laurent {
            h: &self.h + &other.h,
            e: &self.e + &other.e,
            f: &self.f + &other.f,
        }
    }

    pub fn gamma(&self, g: GammaElem) -> Sl2Laurent {
        Sl2Laurent {
            h: self.h.gamma(g),
            e: self.e.gamma(g),
            f: self.f.gamma(g),
        }
    }
}

/// Square matrix with Laurent-polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    n: usize,
    entries: Vec<Laurent>,
}

impl LaurentMatrix {
    pub fn from_rows(rows: Vec<Vec<Laurent>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("matrix rows must form a square".into()));
        }
        Ok(LaurentMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Laurent::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Laurent::one();
        }
        LaurentMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Laurent {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let n = self.n;
        let mut entries = vec![Laurent::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Laurent::zero();
                for k in 0..n {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                entries[i * n + j] = acc;
            }
        }
        LaurentMatrix { n, entries }
    }

    /// Entrywise coefficient-sign action.
    pub fn gamma(&self, g: GammaElem) -> LaurentMatrix {
        LaurentMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x.gamma(g)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == LaurentMatrix::identity(self.n)
    }

    /// Determinant by cofactor expansion (sizes used here are tiny).
    pub fn det(&self) -> Laurent {
        match self.n {
            0 => Laurent::one(),
            1 => self.get(0, 0).clone(),
            _ => {
                let mut acc = Laurent::zero();
                for j in 0..self.n {
                    let minor = self.minor(0, j);
                    let term = &(self.get(0, j) * &minor.det());
                    acc = if j % 2 == 0 { &acc + term } else { &acc - term };
                }
                acc
            }
        }
    }

    fn minor(&self, skip_i: usize, skip_j: usize) -> LaurentMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == skip_i {
                continue;
            }
            for j in 0..n {
                if j == skip_j {
                    continue;
                }
                entries.push(self.get(i, j).clone());
            }
        }
        LaurentMatrix {
            n: n - 1,
            entries,
        }
    }

    /// Column `j` of a 3×3 matrix read as an sl₂ element over Laurent.
    pub fn col_as_sl2(&self, j: usize) -> Sl2Laurent {
        assert_eq!(self.n, 3, "sl₂ columns need a 3×3 matrix");
        Sl2Laurent {
            h: self.get(0, j).clone(),
            e: self.get(1, j).clone(),
            f: self.get(2, j).clone(),
        }
    }

    /// Rows of printed entries, for report serialization.
    pub fn display_rows(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

fn zeta4() -> Laurent {
    Laurent::constant(Scalar::i())
}

/// Image of a pure quaternion (no `1`-component) in sl₂ over Laurent:
/// `T₁ ↦ ζ₄t₁(e−f)`, `T₂ ↦ t₂(e+f)`, `T₁T₂ ↦ ζ₄t₁t₂·h`.
pub fn phi(q: &QuatElem) -> Result<Sl2Laurent> {
    if !q.c0.is_zero() {
        return Err(Error::Shape(
            "phi is defined on pure quaternions (zero 1-component)".into(),
        ));
    }
    let z_t1 = &zeta4() * &Laurent::t1_pow(1);
    let t2 = Laurent::t2_pow(1);
    let z_t1t2 = &z_t1 * &Laurent::t2_pow(1);
    Ok(Sl2Laurent {
        h: &q.c12 * &z_t1t2,
        e: &(&q.c1 * &z_t1) + &(&q.c2 * &t2),
        f: &(&q.c2 * &t2) - &(&q.c1 * &z_t1),
    })
}

/// Matrix of `phi` with rows `(h, e, f)` and columns `(T₁, T₂, T₁T₂)`.
pub fn phi_matrix() -> LaurentMatrix {
    let z = zeta4();
    let z_t1 = &z * &Laurent::t1_pow(1);
    let t2 = Laurent::t2_pow(1);
    let z_t1t2 = &z_t1 * &Laurent::t2_pow(1);
    LaurentMatrix::from_rows(vec![
        vec![Laurent::zero(), Laurent::zero(), z_t1t2],
        vec![z_t1.clone(), t2.clone(), Laurent::zero()],
        vec![-&z_t1, t2, Laurent::zero()],
    ])
    .expect("static 3×3 shape")
}

/// Inverse of [`phi_matrix`]: rows `(T₁, T₂, T₁T₂)`, columns `(h, e, f)`.
pub fn phi_inverse_matrix() -> LaurentMatrix {
    let half_i = Scalar::rat_i(1, 2);
    let m_t1 = Laurent::monomial(half_i.clone(), -1, 0);
    let half_t2 = Laurent::monomial(Scalar::rat(1, 2), 0, -1);
    let corner = Laurent::monomial(-&Scalar::i(), -1, -1);
    LaurentMatrix::from_rows(vec![
        vec![Laurent::zero(), -&m_t1, m_t1.clone()],
        vec![Laurent::zero(), half_t2.clone(), half_t2],
        vec![corner, Laurent::zero(), Laurent::zero()],
    ])
    .expect("static 3×3 shape")
}

/// Change of basis from the twisted triple `(ζ₄t₁t₂h, ζ₄t₁(e−f), t₂(e+f))`
/// to `(h, e, f)`: columns are the twisted basis vectors in `(h, e, f)`
/// coordinates.
pub fn twisted_basis_matrix() -> LaurentMatrix {
    let z = zeta4();
    let z_t1 = &z * &Laurent::t1_pow(1);
    let t2 = Laurent::t2_pow(1);
    let z_t1t2 = &z_t1 * &Laurent::t2_pow(1);
    LaurentMatrix::from_rows(vec![
        vec![z_t1t2, Laurent::zero(), Laurent::zero()],
        vec![Laurent::zero(), z_t1.clone(), t2.clone()],
        vec![Laurent::zero(), -&z_t1, t2],
    ])
    .expect("static 3×3 shape")
}

/// Inverse of [`twisted_basis_matrix`], entered independently and checked
/// against it in the verification report.
pub fn twisted_basis_inverse() -> LaurentMatrix {
    let corner = Laurent::monomial(-&Scalar::i(), -1, -1);
    let m_t1 = Laurent::monomial(Scalar::rat_i(1, 2), -1, 0);
    let half_t2 = Laurent::monomial(Scalar::rat(1, 2), 0, -1);
    LaurentMatrix::from_rows(vec![
        vec![corner, Laurent::zero(), Laurent::zero()],
        vec![Laurent::zero(), -&m_t1, m_t1],
        vec![Laurent::zero(), half_t2.clone(), half_t2],
    ])
    .expect("static 3×3 shape")
}

/// Ordered basis in which a cocycle matrix is expressed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Twisted triple `(ζ₄t₁t₂h, ζ₄t₁(e−f), t₂(e+f))` — the `phi`-images
    /// of `(T₁T₂, T₁, T₂)`.
    TT,
    /// Standard Chevalley triple `(h, e, f)`.
    Hef,
}

/// Matrix of `α_γ = phi ∘ γ ∘ phi⁻¹ ∘ γ` in the requested ordered basis.
///
/// In `(h, e, f)` coordinates this is `Φ · γ(Φ⁻¹)` where `γ` acts on each
/// entry; the twisted-basis form conjugates by the basis-change matrix.
pub fn phi_cocycle(gamma: GammaElem, basis: Basis) -> LaurentMatrix {
    let hef = phi_matrix().mul(&phi_inverse_matrix().gamma(gamma));
    match basis {
        Basis::Hef => hef,
        Basis::TT => twisted_basis_inverse()
            .mul(&hef)
            .mul(&twisted_basis_matrix()),
    }
}

/// Closed-form prediction for the cocycle in the twisted basis:
/// `diag((−1)^{a+b}, (−1)^a, (−1)^b)`.
pub fn expected_tt_diagonal(gamma: GammaElem) -> LaurentMatrix {
    let sign = |flip: bool| {
        if flip {
            -&Laurent::one()
        } else {
            Laurent::one()
        }
    };
    let a_odd = gamma.a() % 2 == 1;
    let b_odd = gamma.b() % 2 == 1;
    LaurentMatrix::from_rows(vec![
        vec![sign(a_odd ^ b_odd), Laurent::zero(), Laurent::zero()],
        vec![Laurent::zero(), sign(a_odd), Laurent::zero()],
        vec![Laurent::zero(), Laurent::zero(), sign(b_odd)],
    ])
    .expect("static 3×3 shape")
}

/// Closed-form prediction in the `(h, e, f)` basis: with `σ_a = (−1)^a`
/// and `σ_b = (−1)^b`,
/// `[[σ_aσ_b, 0, 0], [0, (σ_a+σ_b)/2, (σ_b−σ_a)/2], [0, (σ_b−σ_a)/2, (σ_a+σ_b)/2]]`.
///
/// All four matrices are constant; they form a group isomorphic to
/// `ℤ₂ × ℤ₂` inside the sl₂ automorphisms (identity, `h↦−h, e↔f`,
/// `h↦−h, e↦−f, f↦−e`, and `diag(1,−1,−1)`).
pub fn expected_hef_matrix(gamma: GammaElem) -> LaurentMatrix {
    let sa: i64 = if gamma.a() % 2 == 1 { -1 } else { 1 };
    let sb: i64 = if gamma.b() % 2 == 1 { -1 } else { 1 };
    let c = |n: i64| {
        if n == 0 {
            Laurent::zero()
        } else {
            Laurent::constant(Scalar::from_int(n))
        }
    };
    let diag = (sa + sb) / 2;
    let swap = (sb - sa) / 2;
    LaurentMatrix::from_rows(vec![
        vec![c(sa * sb), Laurent::zero(), Laurent::zero()],
        vec![Laurent::zero(), c(diag), c(swap)],
        vec![Laurent::zero(), c(swap), c(diag)],
    ])
    .expect("static 3×3 shape")
}

/// Per-twist matrices in both bases, printed for reports.
#[derive(Clone, Debug, Serialize)]
pub struct CocycleMatrices {
    pub gamma: (u8, u8),
    pub hef: Vec<Vec<String>>,
    pub tt: Vec<Vec<String>>,
    pub det: String,
}

/// Result of the full cocycle verification sweep.
#[derive(Clone, Debug, Serialize)]
pub struct CocycleReport {
    pub checks: Vec<CheckItem>,
    pub matrices: Vec<CocycleMatrices>,
    pub all_pass: bool,
}

fn check(name: impl Into<String>, pass: bool) -> CheckItem {
    CheckItem {
        name: name.into(),
        pass,
    }
}

/// Verifies that the embedding respects commutators: `phi([x,y]) =
/// [phi(x), phi(y)]` for all nine ordered pairs of quaternion generators.
pub fn verify_phi_brackets() -> SymbolicReport {
    let gens = [
        ("T1", QuatElem::t1_gen()),
        ("T2", QuatElem::t2_gen()),
        ("T1T2", QuatElem::t1t2_gen()),
    ];
    let mut checks = Vec::new();
    let mut all = true;
    for (nx, x) in &gens {
        for (ny, y) in &gens {
            let lhs = phi(&x.commutator(y)).expect("commutators of pure elements are pure");
            let rhs = phi(x)
                .expect("generator is pure")
                .bracket(&phi(y).expect("generator is pure"));
            if lhs != rhs {
                all = false;
            }
            checks.push(check(format!("phi[{nx},{ny}] = [phi {nx}, phi {ny}]"), lhs == rhs));
        }
    }
    checks.push(check("all nine generator pairs agree", all));
    SymbolicReport::from_checks(checks)
}

fn preserves_sl2_brackets(m: &LaurentMatrix) -> bool {
    let h = m.col_as_sl2(0);
    let e = m.col_as_sl2(1);
    let f = m.col_as_sl2(2);
    let two = Laurent::constant(Scalar::from_int(2));
    h.bracket(&e) == e.scale(&two)
        && h.bracket(&f) == f.scale(&(-&two))
        && e.bracket(&f) == h
}

/// Full verification: basis-change inverses, the sixteen-pair cocycle
/// identity, bracket preservation and unit determinant for every twist,
/// and agreement with the closed-form matrices in both bases.
pub fn verify_cocycle_condition() -> CocycleReport {
    let mut checks = Vec::new();

    checks.push(check(
        "phi matrix times its inverse is the identity",
        phi_matrix().mul(&phi_inverse_matrix()).is_identity()
            && phi_inverse_matrix().mul(&phi_matrix()).is_identity(),
    ));
    checks.push(check(
        "twisted basis matrix times its inverse is the identity",
        twisted_basis_matrix()
            .mul(&twisted_basis_inverse())
            .is_identity()
            && twisted_basis_inverse()
                .mul(&twisted_basis_matrix())
                .is_identity(),
    ));

    let alphas: Vec<(GammaElem, LaurentMatrix)> = GammaElem::all()
        .into_iter()
        .map(|g| (g, phi_cocycle(g, Basis::Hef)))
        .collect();
    let alpha_of = |g: GammaElem| -> &LaurentMatrix {
        &alphas.iter().find(|(h, _)| *h == g).expect("all twists computed").1
    };

    let mut cocycle_ok = true;
    for (g1, a1) in &alphas {
        for (g2, a2) in &alphas {
            let lhs = alpha_of(g1.compose(*g2));
            let rhs = a1.mul(&a2.gamma(*g1));
            if *lhs != rhs {
                cocycle_ok = false;
            }
        }
    }
    checks.push(check(
        "cocycle identity on all sixteen twist pairs",
        cocycle_ok,
    ));

    let mut matrices = Vec::new();
    for (g, a) in &alphas {
        let tt = phi_cocycle(*g, Basis::TT);
        let det = a.det();
        checks.push(check(
            format!("alpha({},{}) preserves the sl2 brackets", g.a(), g.b()),
            preserves_sl2_brackets(a),
        ));
        checks.push(check(
            format!("alpha({},{}) has unit determinant", g.a(), g.b()),
            det.is_unit(),
        ));
        checks.push(check(
            format!("alpha({},{}) twisted-basis form is the sign diagonal", g.a(), g.b()),
            tt == expected_tt_diagonal(*g),
        ));
        checks.push(check(
            format!("alpha({},{}) standard form matches the closed form", g.a(), g.b()),
            *a == expected_hef_matrix(*g),
        ));
        matrices.push(CocycleMatrices {
            gamma: (g.a(), g.b()),
            hef: a.display_rows(),
            tt: tt.display_rows(),
            det: det.to_string(),
        });
    }

    let all_pass = checks.iter().all(|c| c.pass);
    CocycleReport {
        checks,
        matrices,
        all_pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lc(n: i64) -> Laurent {
        Laurent::constant(Scalar::from_int(n))
    }

    #[test]
    fn phi_images_of_generators() {
        let t1 = phi(&QuatElem::t1_gen()).unwrap();
        assert!(t1.h.is_zero());
        assert_eq!(t1.e, Laurent::monomial(Scalar::i(), 1, 0));
        assert_eq!(t1.f, Laurent::monomial(-&Scalar::i(), 1, 0));
        let tt = phi(&QuatElem::t1t2_gen()).unwrap();
        assert_eq!(tt.h, Laurent::monomial(Scalar::i(), 1, 1));
        assert!(tt.e.is_zero() && tt.f.is_zero());
    }

    #[test]
    fn phi_rejects_a_unit_component() {
        assert!(phi(&QuatElem::one()).is_err());
    }

    #[test]
    fn phi_matrix_inverse_pair() {
        assert!(phi_matrix().mul(&phi_inverse_matrix()).is_identity());
        assert!(phi_inverse_matrix().mul(&phi_matrix()).is_identity());
        assert!(twisted_basis_matrix()
            .mul(&twisted_basis_inverse())
            .is_identity());
    }

    #[test]
    fn twisted_basis_reorders_phi_columns() {
        // Twisted column order is (T₁T₂, T₁, T₂) against phi's (T₁, T₂, T₁T₂).
        let p = phi_matrix();
        let m = twisted_basis_matrix();
        for r in 0..3 {
            assert_eq!(m.get(r, 0), p.get(r, 2));
            assert_eq!(m.get(r, 1), p.get(r, 0));
            assert_eq!(m.get(r, 2), p.get(r, 1));
        }
    }

    #[test]
    fn phi_respects_all_generator_brackets() {
        let report = verify_phi_brackets();
        assert!(report.all_pass, "failed: {:?}", report.failed());
    }

    #[test]
    fn identity_twist_gives_identity_cocycle() {
        assert!(phi_cocycle(GammaElem::identity(), Basis::Hef).is_identity());
        assert!(phi_cocycle(GammaElem::identity(), Basis::TT).is_identity());
    }

    #[test]
    fn cocycle_matrices_are_the_constant_family() {
        // (1,0): h ↦ −h, e ↔ f.
        let a10 = phi_cocycle(GammaElem::new(1, 0), Basis::Hef);
        let expect10 = LaurentMatrix::from_rows(vec![
            vec![lc(-1), Laurent::zero(), Laurent::zero()],
            vec![Laurent::zero(), Laurent::zero(), lc(1)],
            vec![Laurent::zero(), lc(1), Laurent::zero()],
        ])
        .unwrap();
        assert_eq!(a10, expect10);

        // (0,1): h ↦ −h, e ↦ −f, f ↦ −e.
        let a01 = phi_cocycle(GammaElem::new(0, 1), Basis::Hef);
        let expect01 = LaurentMatrix::from_rows(vec![
            vec![lc(-1), Laurent::zero(), Laurent::zero()],
            vec![Laurent::zero(), Laurent::zero(), lc(-1)],
            vec![Laurent::zero(), lc(-1), Laurent::zero()],
        ])
        .unwrap();
        assert_eq!(a01, expect01);

        // (1,1): diag(1, −1, −1) — the product of the previous two.
        let a11 = phi_cocycle(GammaElem::new(1, 1), Basis::Hef);
        let expect11 = LaurentMatrix::from_rows(vec![
            vec![lc(1), Laurent::zero(), Laurent::zero()],
            vec![Laurent::zero(), lc(-1), Laurent::zero()],
            vec![Laurent::zero(), Laurent::zero(), lc(-1)],
        ])
        .unwrap();
        assert_eq!(a11, expect11);
        assert_eq!(a10.mul(&a01), a11);
    }

    #[test]
    fn twisted_basis_forms_are_sign_diagonals() {
        for g in GammaElem::all() {
            assert_eq!(phi_cocycle(g, Basis::TT), expected_tt_diagonal(g));
        }
    }

    #[test]
    fn full_verification_passes() {
        let report = verify_cocycle_condition();
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        assert!(report.all_pass, "failed: {failed:?}");
        assert_eq!(report.matrices.len(), 4);
    }

    #[test]
    fn determinant_of_small_matrices() {
        let m = LaurentMatrix::from_rows(vec![
            vec![Laurent::t1_pow(1), Laurent::zero()],
            vec![Laurent::one(), Laurent::t2_pow(-1)],
        ])
        .unwrap();
        assert_eq!(m.det(), Laurent::monomial(Scalar::one(), 1, -1));
        assert!(m.det().is_unit());
        let singular = LaurentMatrix::from_rows(vec![
            vec![Laurent::one(), Laurent::one()],
            vec![Laurent::one(), Laurent::one()],
        ])
        .unwrap();
        assert!(singular.det().is_zero());
    }
}
