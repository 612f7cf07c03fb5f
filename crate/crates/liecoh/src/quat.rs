//! The rank-4 quaternion algebra over the two-variable Laurent ring, with
//! `T₁² = t₁²`, `T₂² = t₂²`, `T₂T₁ = −T₁T₂`, and the 2×2 matrix algebra
//! over it that houses the idempotent `Ω`, its complement `π = Id − Ω`, the
//! row map `F = (1+T₁, −(1+T₂))` and the column section `sc` with
//! `F∘sc = 1` and `sc∘F = Ω`.
//!
//! All identities are verified by exact symbolic computation; report-valued
//! functions return what was checked so callers can assert or serialize.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::laurent::{GammaElem, Laurent};
use crate::scalar::Scalar;

/// Quaternion element `c0·1 + c1·T₁ + c2·T₂ + c12·T₁T₂` with Laurent
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatElem {
    pub c0: Laurent,
    pub c1: Laurent,
    pub c2: Laurent,
    pub c12: Laurent,
}

impl QuatElem {
    pub fn zero() -> Self {
        QuatElem {
            c0: Laurent::zero(),
            c1: Laurent::zero(),
            c2: Laurent::zero(),
            c12: Laurent::zero(),
        }
    }

    pub fn one() -> Self {
        QuatElem::scalar(Laurent::one())
    }

    /// A central element `s·1`.
    pub fn scalar(s: Laurent) -> Self {
        QuatElem {
            c0: s,
            c1: Laurent::zero(),
            c2: Laurent::zero(),
            c12: Laurent::zero(),
        }
    }

    pub fn t1_gen() -> Self {
        QuatElem {
            c1: Laurent::one(),
            ..QuatElem::zero()
        }
    }

    pub fn t2_gen() -> Self {
        QuatElem {
            c2: Laurent::one(),
            ..QuatElem::zero()
        }
    }

    pub fn t1t2_gen() -> Self {
        QuatElem {
            c12: Laurent::one(),
            ..QuatElem::zero()
        }
    }

    /// The four basis elements `1, T₁, T₂, T₁T₂`.
    pub fn basis() -> [QuatElem; 4] {
        [
            QuatElem::one(),
            QuatElem::t1_gen(),
            QuatElem::t2_gen(),
            QuatElem::t1t2_gen(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero() && self.c12.is_zero()
    }

    pub fn scale(&self, s: &Laurent) -> QuatElem {
        QuatElem {
            c0: &self.c0 * s,
            c1: &self.c1 * s,
            c2: &self.c2 * s,
            c12: &self.c12 * s,
        }
    }

    /// Coefficient action of `γ` (the basis elements are fixed).
    pub fn gamma(&self, g: GammaElem) -> QuatElem {
        QuatElem {
            c0: self.c0.gamma(g),
            c1: self.c1.gamma(g),
            c2: self.c2.gamma(g),
            c12: self.c12.gamma(g),
        }
    }

    /// Commutator `[x, y] = xy − yx`.
    pub fn commutator(&self, other: &QuatElem) -> QuatElem {
        &(self * other) - &(other * self)
    }
}

impl Add for &QuatElem {
    type Output = QuatElem;
    fn add(self, rhs: &QuatElem) -> QuatElem {
        QuatElem {
            c0: &self.c0 + &rhs.c0,
            c1: &self.c1 + &rhs.c1,
            c2: &self.c2 + &rhs.c2,
            c12: &self.c12 + &rhs.c12,
        }
    }
}

impl Sub for &QuatElem {
    type Output = QuatElem;
    fn sub(self, rhs: &QuatElem) -> QuatElem {
        QuatElem {
            c0: &self.c0 - &rhs.c0,
            c1: &self.c1 - &rhs.c1,
            c2: &self.c2 - &rhs.c2,
            c12: &self.c12 - &rhs.c12,
        }
    }
}

impl Neg for &QuatElem {
    type Output = QuatElem;
    fn neg(self) -> QuatElem {
        QuatElem {
            c0: -&self.c0,
            c1: -&self.c1,
            c2: -&self.c2,
            c12: -&self.c12,
        }
    }
}

/// Bilinear extension of the basis table
/// `T₁² = t₁²`, `T₂² = t₂²`, `T₂T₁ = −T₁T₂`,
/// `T₁·T₁T₂ = t₁²T₂`, `T₁T₂·T₁ = −t₁²T₂`,
/// `T₂·T₁T₂ = −t₂²T₁`, `T₁T₂·T₂ = t₂²T₁`,
/// `(T₁T₂)² = −t₁²t₂²`.
impl Mul for &QuatElem {
    type Output = QuatElem;
    fn mul(self, rhs: &QuatElem) -> QuatElem {
        let t1sq = Laurent::t1_pow(2);
        let t2sq = Laurent::t2_pow(2);
        let (a0, a1, a2, a12) = (&self.c0, &self.c1, &self.c2, &self.c12);
        let (b0, b1, b2, b12) = (&rhs.c0, &rhs.c1, &rhs.c2, &rhs.c12);
        let c0 = &(&(a0 * b0) + &(&t1sq * &(a1 * b1)))
            + &(&(&t2sq * &(a2 * b2)) - &(&(&t1sq * &t2sq) * &(a12 * b12)));
        let c1 = &(&(a0 * b1) + &(a1 * b0)) - &(&t2sq * &(&(a2 * b12) - &(a12 * b2)));
        let c2 = &(&(a0 * b2) + &(a2 * b0)) + &(&t1sq * &(&(a1 * b12) - &(a12 * b1)));
        let c12 = &(&(a0 * b12) + &(a12 * b0)) + &(&(a1 * b2) - &(a2 * b1));
        QuatElem { c0, c1, c2, c12 }
    }
}

impl fmt::Display for QuatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [
            (&self.c0, ""),
            (&self.c1, "*T1"),
            (&self.c2, "*T2"),
            (&self.c12, "*T1T2"),
        ]
        .iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, tag)| format!("[{c}]{tag}"))
        .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// 2×2 matrices over the quaternion algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2Quat {
    pub entries: [[QuatElem; 2]; 2],
}

impl Mat2Quat {
    pub fn new(entries: [[QuatElem; 2]; 2]) -> Self {
        Mat2Quat { entries }
    }

    pub fn zero() -> Self {
        Mat2Quat::new([
            [QuatElem::zero(), QuatElem::zero()],
            [QuatElem::zero(), QuatElem::zero()],
        ])
    }

    pub fn identity() -> Self {
        let mut m = Mat2Quat::zero();
        m.entries[0][0] = QuatElem::one();
        m.entries[1][1] = QuatElem::one();
        m
    }

    /// Matrix unit `E_{ij}(q)`.
    pub fn unit(i: usize, j: usize, q: QuatElem) -> Self {
        let mut m = Mat2Quat::zero();
        m.entries[i][j] = q;
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(QuatElem::is_zero)
    }

    /// Matrix-times-column action on pairs.
    pub fn apply(&self, v: &[QuatElem; 2]) -> [QuatElem; 2] {
        [
            &(&self.entries[0][0] * &v[0]) + &(&self.entries[0][1] * &v[1]),
            &(&self.entries[1][0] * &v[0]) + &(&self.entries[1][1] * &v[1]),
        ]
    }
}

impl Add for &Mat2Quat {
    type Output = Mat2Quat;
    fn add(self, rhs: &Mat2Quat) -> Mat2Quat {
        let e = |i: usize, j: usize| &self.entries[i][j] + &rhs.entries[i][j];
        Mat2Quat::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Sub for &Mat2Quat {
    type Output = Mat2Quat;
    fn sub(self, rhs: &Mat2Quat) -> Mat2Quat {
        let e = |i: usize, j: usize| &self.entries[i][j] - &rhs.entries[i][j];
        Mat2Quat::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Mul for &Mat2Quat {
    type Output = Mat2Quat;
    fn mul(self, rhs: &Mat2Quat) -> Mat2Quat {
        let e = |i: usize, j: usize| {
            &(&self.entries[i][0] * &rhs.entries[0][j])
                + &(&self.entries[i][1] * &rhs.entries[1][j])
        };
        Mat2Quat::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

fn half() -> Laurent {
    Laurent::constant(Scalar::rat(1, 2))
}

/// The idempotent
/// `Ω = ½ [[(1−T₂)(1+T₁), t₂²−1], [t₁²−1, (1−T₁)(1+T₂)]]`.
pub fn omega() -> Mat2Quat {
    let one = QuatElem::one();
    let t1 = QuatElem::t1_gen();
    let t2 = QuatElem::t2_gen();
    let a = &(&one - &t2) * &(&one + &t1);
    let d = &(&one - &t1) * &(&one + &t2);
    let b = QuatElem::scalar(&Laurent::t2_pow(2) - &Laurent::one());
    let c = QuatElem::scalar(&Laurent::t1_pow(2) - &Laurent::one());
    let h = half();
    Mat2Quat::new([
        [a.scale(&h), b.scale(&h)],
        [c.scale(&h), d.scale(&h)],
    ])
}

/// The complementary idempotent `π = Id − Ω`.
pub fn pi() -> Mat2Quat {
    &Mat2Quat::identity() - &omega()
}

/// The row map `F(x, y) = (1+T₁)·x − (1+T₂)·y`.
pub fn f_row() -> [QuatElem; 2] {
    let one = QuatElem::one();
    [
        &one + &QuatElem::t1_gen(),
        -&(&one + &QuatElem::t2_gen()),
    ]
}

pub fn apply_f(v: &[QuatElem; 2]) -> QuatElem {
    let [f0, f1] = f_row();
    &(&f0 * &v[0]) + &(&f1 * &v[1])
}

/// The column section `sc(q) = (½(1−T₂)·q, ½(T₁−1)·q)`.
pub fn apply_sc(q: &QuatElem) -> [QuatElem; 2] {
    let one = QuatElem::one();
    let top = (&one - &QuatElem::t2_gen()).scale(&half());
    let bot = (&QuatElem::t1_gen() - &one).scale(&half());
    [&top * q, &bot * q]
}

/// One named symbolic identity with its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
}

/// Outcome of a family of symbolic checks.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicReport {
    pub checks: Vec<CheckItem>,
    pub all_pass: bool,
}

impl SymbolicReport {
    pub(crate) fn from_checks(checks: Vec<CheckItem>) -> Self {
        let all_pass = checks.iter().all(|c| c.pass);
        SymbolicReport { checks, all_pass }
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect()
    }
}

fn check(name: impl Into<String>, pass: bool) -> CheckItem {
    CheckItem {
        name: name.into(),
        pass,
    }
}

/// Verifies the defining relations, associativity on all 64 basis triples,
/// and centrality of the Laurent scalars.
pub fn verify_quaternion_relations() -> SymbolicReport {
    let t1 = QuatElem::t1_gen();
    let t2 = QuatElem::t2_gen();
    let t1t2 = QuatElem::t1t2_gen();
    let mut checks = vec![
        check("T1*T1 = t1^2", &t1 * &t1 == QuatElem::scalar(Laurent::t1_pow(2))),
        check("T2*T2 = t2^2", &t2 * &t2 == QuatElem::scalar(Laurent::t2_pow(2))),
        check("T1*T2 = T1T2", &t1 * &t2 == t1t2),
        check("T2*T1 = -T1T2", &t2 * &t1 == -&t1t2),
        check(
            "T1*T1T2 = t1^2*T2",
            &t1 * &t1t2 == t2.scale(&Laurent::t1_pow(2)),
        ),
        check(
            "T1T2*T1 = -t1^2*T2",
            &t1t2 * &t1 == (-&t2).scale(&Laurent::t1_pow(2)),
        ),
        check(
            "T2*T1T2 = -t2^2*T1",
            &t2 * &t1t2 == (-&t1).scale(&Laurent::t2_pow(2)),
        ),
        check(
            "T1T2*T2 = t2^2*T1",
            &t1t2 * &t2 == t1.scale(&Laurent::t2_pow(2)),
        ),
        check(
            "T1T2*T1T2 = -t1^2*t2^2",
            &t1t2 * &t1t2
                == QuatElem::scalar(-&(&Laurent::t1_pow(2) * &Laurent::t2_pow(2))),
        ),
    ];
    let basis = QuatElem::basis();
    let mut assoc = true;
    for x in &basis {
        for y in &basis {
            for z in &basis {
                if &(&(x * y) * z) != &(x * &(y * z)) {
                    assoc = false;
                }
            }
        }
    }
    checks.push(check("associativity on all basis triples", assoc));
    let s = QuatElem::scalar(Laurent::monomial(Scalar::from_int(3), 1, -1));
    let central = basis.iter().all(|x| &(&s * x) == &(x * &s));
    checks.push(check("Laurent scalars are central", central));
    SymbolicReport::from_checks(checks)
}

/// Verifies the commutator identities `[T₁,T₂] = 2T₁T₂`,
/// `[T₁T₂,T₂] = 2t₂²T₁`, `[T₁T₂,T₁] = −2t₁²T₂`, and that the span of
/// `T₁, T₂, T₁T₂` over the even subring is commutator-closed.
pub fn verify_l1_brackets() -> SymbolicReport {
    let t1 = QuatElem::t1_gen();
    let t2 = QuatElem::t2_gen();
    let t1t2 = QuatElem::t1t2_gen();
    let two = Laurent::constant(Scalar::from_int(2));
    let mut checks = vec![
        check(
            "[T1,T2] = 2*T1T2",
            t1.commutator(&t2) == t1t2.scale(&two),
        ),
        check(
            "[T1T2,T2] = 2*t2^2*T1",
            t1t2.commutator(&t2) == t1.scale(&(&two * &Laurent::t2_pow(2))),
        ),
        check(
            "[T1T2,T1] = -2*t1^2*T2",
            t1t2.commutator(&t1) == (-&t2).scale(&(&two * &Laurent::t1_pow(2))),
        ),
        check("[T1,T1] = 0", t1.commutator(&t1).is_zero()),
    ];
    // Commutator closure with even coefficients: brackets of the spanning
    // elements land back in the span with coefficients in the even subring.
    let span = [t1, t2, t1t2];
    let mut closed = true;
    for x in &span {
        for y in &span {
            let c = x.commutator(y);
            if !c.c0.is_zero()
                || !c.c1.is_even()
                || !c.c2.is_even()
                || !c.c12.is_even()
            {
                closed = false;
            }
        }
    }
    checks.push(check("span{T1,T2,T1T2} is commutator-closed over the even subring", closed));
    SymbolicReport::from_checks(checks)
}

/// Verifies `Ω² = Ω`, `π² = π`, `Ω + π = Id`, `Ωπ = πΩ = 0`.
pub fn verify_idempotents() -> SymbolicReport {
    let om = omega();
    let p = pi();
    SymbolicReport::from_checks(vec![
        check("Omega^2 = Omega", &om * &om == om),
        check("pi^2 = pi", &p * &p == p),
        check("Omega + pi = Id", &om + &p == Mat2Quat::identity()),
        check("Omega*pi = 0", (&om * &p).is_zero()),
        check("pi*Omega = 0", (&p * &om).is_zero()),
    ])
}

/// Verifies `F(sc(q)) = q` on the basis, `sc∘F = Ω` as a matrix identity,
/// and `F∘π = 0`.
pub fn verify_f_section() -> SymbolicReport {
    let mut checks = Vec::new();
    for (idx, q) in QuatElem::basis().iter().enumerate() {
        checks.push(check(
            format!("F(sc(basis_{idx})) = basis_{idx}"),
            &apply_f(&apply_sc(q)) == q,
        ));
    }
    // sc∘F as a 2×2 matrix: column j is sc applied to the j-th F component
    // acting on the right through multiplication, i.e. entries sc_i · F_j.
    let [f0, f1] = f_row();
    let sc_cols = apply_sc(&QuatElem::one());
    let sc_f = Mat2Quat::new([
        [&sc_cols[0] * &f0, &sc_cols[0] * &f1],
        [&sc_cols[1] * &f0, &sc_cols[1] * &f1],
    ]);
    checks.push(check("sc∘F = Omega", sc_f == omega()));
    // F∘π vanishes on both columns of π.
    let p = pi();
    let col = |j: usize| [p.entries[0][j].clone(), p.entries[1][j].clone()];
    checks.push(check(
        "F∘pi = 0",
        apply_f(&col(0)).is_zero() && apply_f(&col(1)).is_zero(),
    ));
    SymbolicReport::from_checks(checks)
}

/// Verifies that the corner `π·M₂(𝒬)·π` is closed under multiplication:
/// products of the spanning elements `π·E_{ij}(q)·π` stay in the corner
/// (membership test `π·x·π = x`).
pub fn verify_corner_closure() -> SymbolicReport {
    let p = pi();
    let mut span = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for q in QuatElem::basis() {
                span.push(&(&p * &Mat2Quat::unit(i, j, q)) * &p);
            }
        }
    }
    let in_corner = |x: &Mat2Quat| &(&p * x) * &p == *x;
    let mut checks = vec![check(
        "spanning elements lie in the corner",
        span.iter().all(|x| in_corner(x)),
    )];
    let mut closed = true;
    for x in &span {
        for y in &span {
            if !in_corner(&(x * y)) {
                closed = false;
            }
        }
    }
    checks.push(check("corner is closed under multiplication", closed));
    checks.push(check(
        "pi is the unit of the corner",
        span.iter().all(|x| &(&p * x) == x && &(x * &p) == x),
    ));
    SymbolicReport::from_checks(checks)
}
