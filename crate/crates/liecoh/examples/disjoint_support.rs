//! Vanishing of extensions between evaluation modules supported at
//! different points.
//!
//! Over `sl2 ⊗ (k × k)` — coefficients split across two reduced points —
//! modules evaluated at distinct points admit no nontrivial extensions in
//! either direction.  For contrast, the thick point of the dual numbers
//! does produce extensions between modules sitting at the *same* point.
//!
//! ```bash
//! cargo run --example disjoint_support
//! ```

use liecoh::cohomology::ext1;
use liecoh::current::{evaluation_module, verify_disjoint_support, PointChar};
use liecoh::jobs::builtin_algebra;
use liecoh::scalar::Scalar;
use liecoh::sl2;

fn main() -> anyhow::Result<()> {
    let cur = builtin_algebra("sl2-kxk")?
        .current
        .expect("builtin current algebra");
    let p = PointChar::eval_point(cur.s(), &Scalar::zero())?;
    let q = PointChar::eval_point(cur.s(), &Scalar::one())?;

    println!("sl2 over k x k: V = V(d) at t = 0 versus W = V(e) at t = 1");
    println!("{:>3} {:>3} {:>10} {:>10} {:>9}", "d", "e", "ext(V,W)", "ext(W,V)", "vanishes");
    for d in 2..=4 {
        for e in 2..=4 {
            let r = verify_disjoint_support(&cur, &p, &sl2::simple(d), &q, &sl2::simple(e))?;
            println!(
                "{d:>3} {e:>3} {:>10} {:>10} {:>9}",
                r.ext_vw, r.ext_wv, r.vanishes
            );
        }
    }

    // Same-point contrast over a thick (non-reduced) point: the dual
    // numbers link V(2) and V(4) at t = 0.
    let takiff = builtin_algebra("takiff-sl2")?
        .current
        .expect("builtin current algebra");
    let chi = PointChar::eval_point(takiff.s(), &Scalar::zero())?;
    let v2 = evaluation_module(&takiff, std::slice::from_ref(&chi), &[sl2::simple(2)])?;
    let v4 = evaluation_module(&takiff, std::slice::from_ref(&chi), &[sl2::simple(4)])?;
    println!(
        "\nsame thick point, dual numbers: dim Ext^1(V(2), V(4)) = {}",
        ext1(&v2, &v4).dim()
    );
    Ok(())
}
