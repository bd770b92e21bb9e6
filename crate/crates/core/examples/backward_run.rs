//! Forward and backward runs on Q(√2) give mutually inverse units up to sign.

use geocf::gcf::{extract_unit, run_backward, run_forward, GcfConfig};
use geocf::geodesic::heegner_rank_one;
use geocf::numberfield::NumberField;

fn main() -> geocf::Result<()> {
    let f = NumberField::parse("x^2 - 2")?;
    let g = heegner_rank_one(&f, &f.default_basis())?;
    let cfg = GcfConfig::default();
    let fw = run_forward(&g, &cfg)?;
    let bw = run_backward(&g, &cfg)?;
    for k in 0..bw.steps.len() {
        let (s, t) = bw.window_t(k, 30);
        let f64_of = |x: Option<geocf::realalg::interval::Interval>| x.map(|i| geocf::realalg::to_f64(&i.mid())).unwrap_or(f64::INFINITY);
        println!("backward step {k}: [{:.6}, {:.6}]", f64_of(s), f64_of(t));
    }
    let e1 = extract_unit(&fw, fw.require_period()?)?.epsilon;
    let e2 = extract_unit(&bw, bw.require_period()?)?.epsilon;
    println!("forward {e1}, backward {e2}, product {}", e1.mul(&e2));
    Ok(())
}
