//! Decompose tensor products of simple sl₂ modules two independent ways.
//!
//! The closed form says `V(d) ⊗ V(e)` splits into simples of dimensions
//! `d+e−1, d+e−3, …, d−e+1` (for `d ≥ e`).  The staircase method ignores
//! the closed form: it builds the actual tensor module, reads off its
//! weight-space dimensions, and peels simples from the top weight down.
//!
//! ```bash
//! cargo run --example clebsch_gordan
//! ```

use liecoh::sl2;

fn main() -> anyhow::Result<()> {
    for (d, e) in [(2, 2), (3, 2), (4, 3), (5, 5), (6, 4)] {
        let closed = sl2::clebsch_gordan(d, e)?;
        let tensor = sl2::simple(d).tensor(&sl2::simple(e));
        let weights = sl2::weight_multiplicities(&tensor)?;
        let content = sl2::simple_content_from_weights(&weights)?;
        let mut staircase: Vec<usize> = Vec::new();
        for (&dim, &mult) in &content {
            staircase.extend(std::iter::repeat(dim).take(mult));
        }
        staircase.sort_unstable();
        let mut sorted = closed.clone();
        sorted.sort_unstable();
        anyhow::ensure!(sorted == staircase, "methods disagree for ({d},{e})");
        let total: usize = sorted.iter().sum();
        println!(
            "V({d}) ⊗ V({e})  =  {}   (total dim {total} = {d}·{e})",
            sorted
                .iter()
                .rev()
                .map(|k| format!("V({k})"))
                .collect::<Vec<_>>()
                .join(" ⊕ ")
        );
    }
    println!("\nclosed form and weight staircase agree on every pair");
    Ok(())
}
