//! Materializes an extension class as an honest module and certifies that
//! it does not split.
//!
//! Over the dual-number current algebra the evaluation modules `V(2)` and
//! `V(4)` at `t = 0` admit a one-dimensional space of extensions.  The
//! example builds the middle term of a nonzero class, checks the module
//! axioms on it, and contrasts its decomposition report with the split
//! (zero-class) extension.
//!
//! ```bash
//! cargo run --example extension_builder
//! ```

use liecoh::cohomology::{build_extension, ext1, extensions_equivalent, ExtClass};
use liecoh::current::{evaluation_module, PointChar};
use liecoh::jobs::builtin_algebra;
use liecoh::rep::{semisimple_decompose, DecompositionReport};
use liecoh::scalar::Scalar;
use liecoh::sl2;

fn main() -> anyhow::Result<()> {
    let cur = builtin_algebra("takiff-sl2")?
        .current
        .expect("builtin current algebra");
    let chi = PointChar::eval_point(cur.s(), &Scalar::zero())?;
    let v = evaluation_module(&cur, std::slice::from_ref(&chi), &[sl2::simple(2)])?;
    let w = evaluation_module(&cur, std::slice::from_ref(&chi), &[sl2::simple(4)])?;

    let ext = ext1(&v, &w);
    println!("dim Ext^1(V(2), V(4)) at t = 0: {}", ext.dim());
    let class = ext.classes().first().expect("nonzero class").clone();

    let middle = build_extension(&class);
    middle.check_rep()?;
    println!("middle term has dimension {}; module axioms hold\n", middle.dim());

    let candidates = vec![
        ("V(2)".to_string(), v.clone()),
        ("V(4)".to_string(), w.clone()),
    ];

    // Hom from a simple candidate only sees the socle of a non-split
    // extension, so the summands cannot account for the full dimension.
    println!("decomposition of the non-split middle term:");
    print_report(&semisimple_decompose(&middle, &candidates));

    let split = build_extension(&ExtClass::zero(v.clone(), w.clone())?);
    split.check_rep()?;
    println!("decomposition of the split extension:");
    print_report(&semisimple_decompose(&split, &candidates));

    let same = extensions_equivalent(&class, &ExtClass::zero(v, w)?)?;
    println!("nonzero class equivalent to the zero class: {same}");
    Ok(())
}

fn print_report(r: &DecompositionReport) {
    for (label, mult) in &r.summands {
        println!("  {label} appears with multiplicity {mult}");
    }
    println!(
        "  accounted {} of {} dimensions; exhausted: {}\n",
        r.accounted, r.total, r.exhausted
    );
}
