//! Block decomposition of evaluation modules over the dual-number current
//! algebra sl₂ ⊗ k[t]/(t²).
//!
//! Evaluation modules `V(d)` at `t = 0` admit nonzero Ext groups only
//! between dimensions of equal parity; chaining those links partitions the
//! six modules into an odd-dimensional block and an even-dimensional block.
//!
//! ```bash
//! cargo run --example takiff_blocks
//! ```

use liecoh::cohomology::ext1;
use liecoh::current::{blocks, evaluation_module, PointChar};
use liecoh::jobs::builtin_algebra;
use liecoh::scalar::Scalar;
use liecoh::sl2;

fn main() -> anyhow::Result<()> {
    let cur = builtin_algebra("takiff-sl2")?
        .current
        .expect("builtin current algebra");
    let chi = PointChar::eval_point(cur.s(), &Scalar::zero())?;
    let family: Vec<_> = (1..=6)
        .map(|d| {
            let module = evaluation_module(&cur, std::slice::from_ref(&chi), &[sl2::simple(d)])
                .expect("evaluation module");
            (format!("V({d})"), module)
        })
        .collect();

    println!("pairwise Ext dimensions:");
    print!("      ");
    for (label, _) in &family {
        print!("{label:>6}");
    }
    println!();
    for (la, va) in &family {
        print!("{la:>6}");
        for (_, vb) in &family {
            print!("{:>6}", ext1(va, vb).dim());
        }
        println!();
    }

    let partition = blocks(&family)?;
    println!("\nblocks:");
    for block in partition.blocks() {
        println!("  {{{}}}", block.join(", "));
    }
    println!("\nlinkage witnesses (edges that merged blocks):");
    for w in partition.witnesses() {
        println!("  ext({}, {}) has dimension {}", w.from, w.to, w.ext_dim);
    }
    Ok(())
}
