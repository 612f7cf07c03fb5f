//! Extensions over a direct sum of algebras follow a four-case table.
//!
//! For simple outer tensor products `V₁ ⊠ V₂` and `W₁ ⊠ W₂` over
//! `L₁ ⊕ L₂`, the Ext group vanishes unless one factor pair is isomorphic,
//! in which case the other factor's Ext carries everything (and the two add
//! when both pairs match).  The example checks the table against brute-force
//! computation over `sl₂ ⊕ k`.
//!
//! ```bash
//! cargo run --example kunneth
//! ```

use liecoh::cohomology::{ext1, kunneth_case};
use liecoh::jobs::abelian;
use liecoh::rep::{external_tensor, Representation};
use liecoh::scalar::Scalar;
use liecoh::sl2;

fn main() -> anyhow::Result<()> {
    let line = |n: i64| {
        Representation::one_dim(abelian(1), &vec![Scalar::from_int(n)])
            .expect("characters of the one-dimensional algebra")
    };
    println!(
        "{:<28} {:<18} {:>9} {:>6}",
        "modules over sl2 ⊕ k", "case", "predicted", "brute"
    );
    for (d, e, lam, mu) in [
        (1, 1, 0, 0),
        (2, 2, 0, 0),
        (2, 2, 0, 1),
        (1, 2, 0, 0),
        (2, 4, 1, 1),
        (1, 3, 0, 1),
        (3, 3, -1, -1),
    ] {
        let (v1, w1) = (sl2::simple(d), sl2::simple(e));
        let (v2, w2) = (line(lam), line(mu));
        let report = kunneth_case(&v1, &w1, &v2, &w2);
        let (_, v) = external_tensor(&[&v1, &v2]);
        let (_, w) = external_tensor(&[&w1, &w2]);
        let brute = ext1(&v, &w).dim();
        anyhow::ensure!(report.dim == brute, "table disagrees with brute force");
        println!(
            "{:<28} {:<18} {:>9} {:>6}",
            format!("V({d})⊠k_{lam} vs V({e})⊠k_{mu}"),
            format!("{:?}", report.case),
            report.dim,
            brute
        );
    }
    Ok(())
}
