//! The ideal chain of an evaluation kernel inside a current algebra.
//!
//! For `L = g ⊗ S` and a finite point set, the kernel `K` of evaluation
//! sits in a chain `K ⊇ N ⊇ K' = [K, K]` whose subquotients control the
//! extension theory of evaluation modules: `N/K'` carries the obstruction
//! space and `K/N` acts by zero.  The example prints the chain over the
//! dual numbers and over `k[t]/(t³)`, identifies `N/K'` as the adjoint
//! module of the quotient, and shows how declaring the sign action
//! `t ↦ -t` shrinks the fixed part of the vanishing ideal.
//!
//! ```bash
//! cargo run --example current_ideals
//! ```

use liecoh::current::{kernel_ideals, PointChar};
use liecoh::jobs::builtin_algebra;
use liecoh::linalg::Matrix;
use liecoh::rep::{isomorphism, Representation};
use liecoh::scalar::Scalar;

fn main() -> anyhow::Result<()> {
    for name in ["takiff-sl2", "sl2-t3"] {
        let cur = builtin_algebra(name)?
            .current
            .expect("builtin current algebra");
        let points = [PointChar::eval_point(cur.s(), &Scalar::zero())?];
        let ki = kernel_ideals(&cur, &points, &[])?;

        println!("{name} (dim L = {}), evaluated at t = 0:", cur.lie().dim());
        println!("  K  = ker(ev)   dim {}", ki.k.dim());
        println!("  N              dim {}", ki.n.dim());
        println!("  K' = [K, K]    dim {}", ki.k_prime.dim());
        println!("  N/K'           dim {}", ki.n_mod_kprime.dim());
        println!("  K/N            dim {}  (zero action, verified)", ki.k_mod_n.dim());

        let adj = Representation::adjoint(&ki.quotient);
        println!(
            "  N/K' isomorphic to the adjoint module of L/K: {}",
            isomorphism(&ki.n_mod_kprime, &adj).is_some()
        );
        let fiber = ki.fiber_iso(&cur, &points)?;
        println!(
            "  evaluation induces an isomorphism L/K -> g  ({}x{} invertible matrix)",
            fiber.matrix().rows(),
            fiber.matrix().cols()
        );
        println!();
    }

    // Declaring t |-> -t on k[t]/(t^3) cuts the fixed part of the vanishing
    // ideal at the origin from span{t, t^2} down to span{t^2}; the origin is
    // a fixed point, so the point set stays closed under the action.
    let cur = builtin_algebra("sl2-t3")?
        .current
        .expect("builtin current algebra");
    let points = [PointChar::eval_point(cur.s(), &Scalar::zero())?];
    let sigma = Matrix::from_int_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
    let plain = kernel_ideals(&cur, &points, &[])?;
    let twisted = kernel_ideals(&cur, &points, &[sigma])?;
    println!("sl2-t3 with the sign action t |-> -t declared:");
    println!(
        "  vanishing ideal I has dim {}; fixed part dim {} (was {} without the action)",
        twisted.vanishing_ideal.dim(),
        twisted.fixed_vanishing_ideal.dim(),
        plain.fixed_vanishing_ideal.dim()
    );
    println!(
        "  chain dims (K, N, K'): ({}, {}, {}) without the action, ({}, {}, {}) with it",
        plain.k.dim(),
        plain.n.dim(),
        plain.k_prime.dim(),
        twisted.k.dim(),
        twisted.n.dim(),
        twisted.k_prime.dim()
    );
    Ok(())
}
