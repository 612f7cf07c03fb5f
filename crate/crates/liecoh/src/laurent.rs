//! Exact Laurent polynomials in two variables, with the sign action of
//! `ℤ₂ × ℤ₂`.
//!
//! Elements of `k[t₁^{±1}, t₂^{±1}]` are stored as sparse maps from exponent
//! pairs to nonzero coefficients. The group element `(a, b)` acts by
//! `t₁ ↦ (−1)^a t₁`, `t₂ ↦ (−1)^b t₂`, i.e. each monomial `t₁^p t₂^q` picks
//! up the sign `(−1)^{a·p + b·q}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// A Laurent polynomial `Σ c_{p,q} · t₁^p t₂^q` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<(i64, i64), Scalar>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Laurent::monomial(Scalar::one(), 0, 0)
    }

    pub fn constant(c: Scalar) -> Self {
        Laurent::monomial(c, 0, 0)
    }

    /// `c · t₁^p t₂^q`.
    pub fn monomial(c: Scalar, p: i64, q: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        Laurent { terms }
    }

    pub fn t1_pow(p: i64) -> Self {
        Laurent::monomial(Scalar::one(), p, 0)
    }

    pub fn t2_pow(q: i64) -> Self {
        Laurent::monomial(Scalar::one(), 0, q)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True iff every monomial has both exponents even (membership in the
    /// subring `k[t₁^{±2}, t₂^{±2}]`).
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|(p, q)| p % 2 == 0 && q % 2 == 0)
    }

    /// True iff the element is a single monomial with nonzero coefficient
    /// (the units of the Laurent ring).
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn scale(&self, c: &Scalar) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    fn insert(&mut self, key: (i64, i64), c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// The sign action of `γ = (a, b)`.
    pub fn gamma(&self, g: GammaElem) -> Laurent {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(&(p, q), c)| {
                    let flipped = if g.sign_exponent(p, q) { -c } else { c.clone() };
                    ((p, q), flipped)
                })
                .collect(),
        }
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, -c);
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &rhs.terms {
                out.insert((p1 + p2, q1 + q2), c1 * c2);
            }
        }
        out
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "*{name}"),
        _ => write!(f, "*{name}^{e}"),
    }
}

/// Sorted monomial form, e.g. `(-1)*t1^-1*t2`; the zero polynomial prints
/// as `0`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(p, q), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            write_var(f, "t1", p)?;
            write_var(f, "t2", q)?;
        }
        Ok(())
    }
}

/// An element of `ℤ₂ × ℤ₂`, acting on Laurent coefficients by sign flips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GammaElem {
    a: u8,
    b: u8,
}

impl GammaElem {
    pub fn new(a: u8, b: u8) -> Self {
        GammaElem { a: a % 2, b: b % 2 }
    }

    pub fn identity() -> Self {
        GammaElem::new(0, 0)
    }

    pub fn all() -> [GammaElem; 4] {
        [
            GammaElem::new(0, 0),
            GammaElem::new(1, 0),
            GammaElem::new(0, 1),
            GammaElem::new(1, 1),
        ]
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn b(&self) -> u8 {
        self.b
    }

    /// Group law (componentwise addition mod 2).
    pub fn compose(&self, other: GammaElem) -> GammaElem {
        GammaElem::new(self.a + other.a, self.b + other.b)
    }

    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Whether the monomial `t₁^p t₂^q` changes sign under this element.
    pub fn sign_exponent(&self, p: i64, q: i64) -> bool {
        (i64::from(self.a) * p + i64::from(self.b) * q).rem_euclid(2) == 1
    }
}

impl fmt::Display for GammaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn arithmetic_normalizes_away_zero_terms() {
        let x = Laurent::monomial(sc(2), 1, 0);
        let y = Laurent::monomial(sc(-2), 1, 0);
        assert!((&x + &y).is_zero());
        let z = &(&x + &Laurent::one()) - &x;
        assert_eq!(z, Laurent::one());
    }

    #[test]
    fn multiplication_adds_exponents() {
        let a = Laurent::monomial(sc(3), 1, -2);
        let b = Laurent::monomial(sc(2), -1, 5);
        assert_eq!(&a * &b, Laurent::monomial(sc(6), 0, 3));
        // (t1 + t2)² = t1² + 2 t1 t2 + t2².
        let s = &Laurent::t1_pow(1) + &Laurent::t2_pow(1);
        let sq = &s * &s;
        let expected = &(&Laurent::monomial(sc(1), 2, 0) + &Laurent::monomial(sc(2), 1, 1))
            + &Laurent::monomial(sc(1), 0, 2);
        assert_eq!(sq, expected);
    }

    #[test]
    fn commutative_ring_identities() {
        let a = &Laurent::monomial(sc(2), -1, 1) + &Laurent::one();
        let b = &Laurent::t1_pow(2) - &Laurent::monomial(sc(5), 0, -1);
        let c = Laurent::monomial(Scalar::i(), 1, 1);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn sign_action_follows_the_exponent_parity() {
        let g10 = GammaElem::new(1, 0);
        let g11 = GammaElem::new(1, 1);
        let t1t2 = Laurent::monomial(sc(1), 1, 1);
        assert_eq!(t1t2.gamma(g10), -&t1t2);
        assert_eq!(t1t2.gamma(g11), t1t2);
        assert_eq!(Laurent::t1_pow(2).gamma(g11), Laurent::t1_pow(2));
        assert_eq!(Laurent::t1_pow(-1).gamma(g10), -&Laurent::t1_pow(-1));
    }

    #[test]
    fn sign_action_is_a_ring_involution() {
        let a = &Laurent::monomial(sc(2), 1, 0) + &Laurent::monomial(sc(3), 0, 1);
        let b = &Laurent::t1_pow(-1) + &Laurent::t2_pow(2);
        for g in GammaElem::all() {
            assert_eq!((&a * &b).gamma(g), &a.gamma(g) * &b.gamma(g));
            assert_eq!((&a + &b).gamma(g), &a.gamma(g) + &b.gamma(g));
            assert_eq!(a.gamma(g).gamma(g), a);
        }
    }

    #[test]
    fn group_law_is_componentwise() {
        let g = GammaElem::new(1, 0).compose(GammaElem::new(1, 1));
        assert_eq!(g, GammaElem::new(0, 1));
        for g in GammaElem::all() {
            assert!(g.compose(g).is_identity());
        }
    }

    #[test]
    fn even_subring_membership() {
        assert!(Laurent::t1_pow(2).is_even());
        assert!(Laurent::monomial(sc(3), -2, 4).is_even());
        assert!(!Laurent::monomial(sc(3), 1, 2).is_even());
        for g in GammaElem::all() {
            // The even subring is fixed pointwise.
            let r = &Laurent::t1_pow(2) + &Laurent::monomial(sc(7), -2, -2);
            assert_eq!(r.gamma(g), r);
        }
    }

    #[test]
    fn display_is_sorted_monomials() {
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!(Laurent::monomial(sc(-1), -1, 1).to_string(), "(-1)*t1^-1*t2");
        let p = &Laurent::monomial(sc(2), 1, 0) + &Laurent::constant(sc(-3));
        assert_eq!(p.to_string(), "(-3) + (2)*t1");
        assert_eq!(
            Laurent::monomial(Scalar::i(), 2, -1).to_string(),
            "(1*i)*t1^2*t2^-1"
        );
    }
}
