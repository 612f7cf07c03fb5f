//! Self-extensions of one-dimensional modules, closed form vs generic.
//!
//! For a character `λ` of a solvable algebra `L`, the dimension of
//! `Ext¹(k_λ, k_μ)` has a closed-form description through the subalgebra
//! `K = ker(μ − λ)`; in particular self-extensions of any character of an
//! abelian algebra have dimension `dim L`.  The generic path computes the
//! same number as outer derivations of the hom module.
//!
//! ```bash
//! cargo run --example one_dim_ext
//! ```

use liecoh::cohomology::{ext1, ext1_onedim};
use liecoh::jobs::{abelian, solvable2};
use liecoh::rep::Representation;
use liecoh::scalar::Scalar;

fn main() -> anyhow::Result<()> {
    println!("abelian algebras: self-extensions of the trivial character");
    for n in 1..=3 {
        let l = abelian(n);
        let zero = vec![Scalar::zero(); n];
        let report = ext1_onedim(&l, &zero, &zero)?;
        println!("  dim {n}: ext = {} (equals dim L)", report.dim);
    }

    let l = solvable2();
    println!("\nsolvable algebra [x,y] = y (characters vanish on y):");
    let weights = [
        ("0", vec![Scalar::zero(), Scalar::zero()]),
        ("x*", vec![Scalar::one(), Scalar::zero()]),
        ("2x*", vec![Scalar::from_int(2), Scalar::zero()]),
    ];
    for (name_l, lam) in &weights {
        for (name_m, mu) in &weights {
            let closed = ext1_onedim(&l, lam, mu)?;
            let v = Representation::one_dim(l.clone(), lam)?;
            let w = Representation::one_dim(l.clone(), mu)?;
            let generic = ext1(&v, &w).dim();
            anyhow::ensure!(closed.dim == generic, "paths disagree");
            println!(
                "  ext(k_{name_l}, k_{name_m}) = {} (closed) = {} (generic), kernel dims: K = {}, K' = {}",
                closed.dim, generic, closed.k_dim, closed.k_derived_dim
            );
        }
    }
    Ok(())
}
