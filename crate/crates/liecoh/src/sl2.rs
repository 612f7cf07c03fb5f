//! The rank-one simple algebra and its finite-dimensional simple modules.
//!
//! Basis `(h, e, f)` with `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`. The
//! `d`-dimensional simple module `V(d)` is realised with integer matrices:
//! `h` diagonal with entries `d−1, d−3, …, −(d−1)`, `f` the shift down,
//! `e·v_j = j(d−j)·v_{j−1}`.
//!
//! Tensor decompositions come from two independent routes: the closed-form
//! dimension list, and a staircase reconstruction from the exact weight
//! multiplicities of the actual tensor module. The two must always agree.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::rep::Representation;
use crate::scalar::Scalar;

/// Index of `h` in the basis `(h, e, f)`.
pub const H: usize = 0;
/// Index of `e`.
pub const E: usize = 1;
/// Index of `f`.
pub const F: usize = 2;

/// The algebra on basis `(h, e, f)`.
pub fn algebra() -> LieAlgebra {
    let sc = |n: i64| Scalar::from_int(n);
    LieAlgebra::from_brackets(
        3,
        &[
            (H, E, vec![sc(0), sc(2), sc(0)]),
            (H, F, vec![sc(0), sc(0), sc(-2)]),
            (E, F, vec![sc(1), sc(0), sc(0)]),
        ],
        Some(vec!["h".into(), "e".into(), "f".into()]),
    )
    .expect("standard structure constants")
}

/// The simple module `V(d)` of dimension `d ≥ 1`.
pub fn simple(d: usize) -> Representation {
    assert!(d >= 1, "V(d) needs d >= 1");
    let mut h = Matrix::zero(d, d);
    let mut e = Matrix::zero(d, d);
    let mut f = Matrix::zero(d, d);
    for j in 0..d {
        h[(j, j)] = Scalar::from_int(d as i64 - 1 - 2 * j as i64);
        if j + 1 < d {
            f[(j + 1, j)] = Scalar::one();
        }
        if j >= 1 {
            e[(j - 1, j)] = Scalar::from_int((j as i64) * (d as i64 - j as i64));
        }
    }
    Representation::new(algebra(), vec![h, e, f]).expect("shapes agree")
}

/// Dimension list of the simple summands of `V(d) ⊗ V(e)` for `d ≥ e ≥ 1`:
/// `[d−e+1, d−e+3, …, d+e−1]` (`e` summands, total dimension `d·e`).
/// Arguments in the wrong order are an error, not silently swapped.
pub fn clebsch_gordan(d: usize, e: usize) -> Result<Vec<usize>> {
    if e < 1 || d < e {
        return Err(Error::Shape(format!(
            "clebsch_gordan requires d >= e >= 1, got ({d},{e})"
        )));
    }
    let dims: Vec<usize> = (0..e).map(|i| d - e + 1 + 2 * i).collect();
    debug_assert_eq!(dims.iter().sum::<usize>(), d * e);
    Ok(dims)
}

/// Exact multiplicity of each integer `h`-eigenvalue, computed as
/// `dim ker(ρ(h) − m·I)` for every candidate `m`. Errors when the counts do
/// not exhaust the dimension (non-integer or non-semisimple `h`-action).
pub fn weight_multiplicities(v: &Representation) -> Result<BTreeMap<i64, usize>> {
    assert_eq!(v.algebra(), &algebra(), "module is not over the rank-one algebra");
    let n = v.dim();
    let h = v.action(H);
    let mut counts = BTreeMap::new();
    let mut total = 0usize;
    let bound = n as i64; // any summand V(k) has k ≤ n, so |weights| ≤ n − 1
    for m in -bound..=bound {
        let shifted = h - &Matrix::identity(n).scale(&Scalar::from_int(m));
        let k = shifted.nullspace().len();
        if k > 0 {
            counts.insert(m, k);
            total += k;
        }
    }
    if total != n {
        return Err(Error::Invariant(format!(
            "h acts non-semisimply or with non-integer eigenvalues \
             ({total} of {n} dimensions accounted for)"
        )));
    }
    Ok(counts)
}

/// Reconstructs the simple content (dimension → multiplicity) from a weight
/// multiplicity table by repeatedly stripping the highest staircase.
/// Errors if the table is not a non-negative sum of simple characters.
pub fn simple_content_from_weights(
    weights: &BTreeMap<i64, usize>,
) -> Result<BTreeMap<usize, usize>> {
    let mut counts = weights.clone();
    let mut content = BTreeMap::new();
    loop {
        let Some((&top, &mult)) = counts.iter().rev().find(|(_, &c)| c > 0) else {
            break;
        };
        if top < 0 {
            return Err(Error::Invariant(
                "negative weights remain after stripping all staircases".into(),
            ));
        }
        let d = (top + 1) as usize;
        let mut m = -top;
        while m <= top {
            let c = counts.entry(m).or_insert(0);
            if *c < mult {
                return Err(Error::Invariant(format!(
                    "weight table is not a sum of simple characters (deficit at weight {m})"
                )));
            }
            *c -= mult;
            m += 2;
        }
        content.insert(d, mult);
    }
    Ok(content)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{isomorphism, semisimple_decompose};

    #[test]
    fn simple_module_matrices_are_integral_and_lawful() {
        for d in 1..=6 {
            let v = simple(d);
            v.check_rep().unwrap();
            for x in [H, E, F] {
                for i in 0..d {
                    for j in 0..d {
                        assert!(
                            v.action(x)[(i, j)].is_rational(),
                            "V({d}) entries stay rational"
                        );
                    }
                }
            }
            assert_eq!(v.action(H)[(0, 0)], Scalar::from_int(d as i64 - 1));
        }
    }

    #[test]
    fn simples_are_self_dual() {
        for d in 1..=4 {
            let v = simple(d);
            assert!(
                isomorphism(&v, &v.dual()).is_some(),
                "V({d}) is isomorphic to its dual"
            );
        }
    }

    #[test]
    fn clebsch_gordan_closed_form() {
        assert_eq!(clebsch_gordan(3, 1).unwrap(), vec![3]);
        assert_eq!(clebsch_gordan(2, 2).unwrap(), vec![1, 3]);
        assert_eq!(clebsch_gordan(6, 4).unwrap(), vec![3, 5, 7, 9]);
        assert!(clebsch_gordan(2, 3).is_err(), "wrong argument order is an error");
        assert!(clebsch_gordan(1, 0).is_err());
        for d in 1..=6 {
            for e in 1..=d {
                let dims = clebsch_gordan(d, e).unwrap();
                assert_eq!(dims.len(), e);
                assert_eq!(dims.iter().sum::<usize>(), d * e, "({d},{e}) total");
            }
        }
    }

    #[test]
    fn weight_table_of_a_simple() {
        let w = weight_multiplicities(&simple(4)).unwrap();
        let expect: BTreeMap<i64, usize> = [(-3, 1), (-1, 1), (1, 1), (3, 1)].into();
        assert_eq!(w, expect);
    }

    #[test]
    fn staircase_recovers_tensor_content() {
        let t = simple(3).tensor(&simple(2));
        let content = simple_content_from_weights(&weight_multiplicities(&t).unwrap()).unwrap();
        let expect: BTreeMap<usize, usize> = [(2, 1), (4, 1)].into();
        assert_eq!(content, expect);
    }

    #[test]
    fn staircase_rejects_inconsistent_tables() {
        let lopsided: BTreeMap<i64, usize> = [(1, 1)].into();
        assert!(simple_content_from_weights(&lopsided).is_err());
    }

    #[test]
    fn weight_multiplicities_rejects_bad_h_action() {
        // A fake module where h is a nilpotent Jordan block.
        let action = vec![
            Matrix::from_int_rows(&[&[0, 1], &[0, 0]]),
            Matrix::zero(2, 2),
            Matrix::zero(2, 2),
        ];
        let fake = Representation::new(algebra(), action).unwrap();
        assert!(weight_multiplicities(&fake).is_err());
    }

    #[test]
    fn closed_form_matches_module_decomposition() {
        for (d, e) in [(2usize, 2usize), (3, 2), (4, 3), (4, 4)] {
            let t = simple(d).tensor(&simple(e));
            let dims = clebsch_gordan(d, e).unwrap();
            let candidates: Vec<(String, Representation)> = dims
                .iter()
                .map(|&k| (format!("V({k})"), simple(k)))
                .collect();
            let report = semisimple_decompose(&t, &candidates);
            assert!(report.exhausted, "({d},{e}) exhausts");
            for (label, m) in &report.summands {
                assert_eq!(*m, 1, "{label} appears once in ({d},{e})");
            }
        }
    }
}
