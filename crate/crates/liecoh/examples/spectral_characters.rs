//! Per-point block partitions assembled into spectral characters.
//!
//! The coefficient ring `k[t]/(t³ - t²)` has a thick point at `t = 0` and
//! a reduced point at `t = 1`.  At the thick point the simples `V(1..4)`
//! link into two blocks by parity of dimension; at the reduced point every
//! module is its own block.  A spectral character records, per point, the
//! block of the factor evaluated there and drops factors sharing a block
//! with the trivial module — so modules with linked factors receive the
//! same character.
//!
//! ```bash
//! cargo run --example spectral_characters
//! ```

use std::collections::BTreeMap;

use liecoh::current::{
    blocks, evaluation_module, poly_quotient, spectral_character, tensor_lie, BlockPartition,
    PointChar,
};
use liecoh::rep::Representation;
use liecoh::scalar::Scalar;
use liecoh::sl2;

fn main() -> anyhow::Result<()> {
    // k[t]/(t^3 - t^2): coefficients [0, 0, -1, 1], constant term first.
    let s = poly_quotient(&[
        Scalar::zero(),
        Scalar::zero(),
        Scalar::from_int(-1),
        Scalar::one(),
    ])?;
    let cur = tensor_lie(&sl2::algebra(), &s)?;

    let mut partitions: BTreeMap<String, BlockPartition> = BTreeMap::new();
    for (orbit, value) in [("t=0", Scalar::zero()), ("t=1", Scalar::one())] {
        let chi = PointChar::eval_point(cur.s(), &value)?;
        let family: Vec<(String, Representation)> = (1..=4)
            .map(|d| {
                let m = evaluation_module(&cur, std::slice::from_ref(&chi), &[sl2::simple(d)])
                    .expect("evaluation module");
                (format!("V({d})"), m)
            })
            .collect();
        let partition = blocks(&family)?;
        println!("blocks at {orbit}:");
        for block in partition.blocks() {
            println!("  {{{}}}", block.join(", "));
        }
        println!();
        partitions.insert(orbit.to_string(), partition);
    }

    let factors_a = vec![
        ("t=0".to_string(), "V(4)".to_string()),
        ("t=1".to_string(), "V(3)".to_string()),
    ];
    let factors_b = vec![("t=0".to_string(), "V(3)".to_string())];
    let factors_c = vec![("t=0".to_string(), "V(2)".to_string())];

    for (name, factors) in [
        ("V(4) at t=0 with V(3) at t=1", &factors_a),
        ("V(3) at t=0", &factors_b),
        ("V(2) at t=0", &factors_c),
    ] {
        let chr = spectral_character(factors, &partitions, "V(1)")?;
        let support: Vec<String> = chr
            .support()
            .map(|orbit| format!("{orbit} -> {}", chr.get(orbit)))
            .collect();
        if support.is_empty() {
            println!("character of [{name}]: trivial (all factors linked to V(1))");
        } else {
            println!("character of [{name}]: {}", support.join(", "));
        }
    }

    let a = spectral_character(&factors_a, &partitions, "V(1)")?;
    let c = spectral_character(&factors_c, &partitions, "V(1)")?;
    println!(
        "\nV(4) and V(2) at the thick point land in the same block: {}",
        a.get("t=0") == c.get("t=0")
    );
    Ok(())
}
