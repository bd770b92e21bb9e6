//! {∞,p}-continued fractions: √−1 at 5, √−5 at 3, √−14 at 3.

use geocf::pcf::fundamental_p_unit;

fn main() -> geocf::Result<()> {
    for (d, p, root) in [(1, 5, 2), (5, 3, 1), (14, 3, 2)] {
        let r = fundamental_p_unit(d, p, root)?;
        println!("d={d} p={p}: {}", r.expansion);
        println!("  N = {}, epsilon = {}, ord[p] = {}", r.n, r.epsilon, r.ideal_order);
    }
    Ok(())
}
