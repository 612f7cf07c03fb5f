//! Extensions between finite-dimensional simple sl₂ modules all vanish.
//!
//! Prints the full `dim Ext¹(V(d), V(e))` table for `1 ≤ d, e ≤ 5` — every
//! entry is zero, which is exactly why sl₂ module theory is semisimple.
//!
//! ```bash
//! cargo run --example weyl_vanishing
//! ```

use liecoh::cohomology::ext1;
use liecoh::sl2;

fn main() -> anyhow::Result<()> {
    const MAX: usize = 5;
    print!("d\\e ");
    for e in 1..=MAX {
        print!("{e:>3}");
    }
    println!();
    for d in 1..=MAX {
        print!("{d:>3} ");
        for e in 1..=MAX {
            let dim = ext1(&sl2::simple(d), &sl2::simple(e)).dim();
            print!("{dim:>3}");
        }
        println!();
    }
    println!("\nevery entry is 0: all short exact sequences of sl2 modules split");
    Ok(())
}
