//! The geodesic attached to Q(√2) with basis (√2, 1), and its first LLL window.

use geocf::geodesic::{heegner_rank_one, t_of, window};
use geocf::linalg::iidentity;
use geocf::numberfield::NumberField;
use geocf::realalg::interval::to_f64;
use num_rational::BigRational;

fn main() -> geocf::Result<()> {
    let f = NumberField::parse("x^2 - 2")?;
    let g = heegner_rank_one(&f, &f.default_basis())?;
    for (e, m) in &g.terms {
        println!("tau^{e}: {m:?}");
    }
    let omega = BigRational::new(3.into(), 4.into());
    let mut w = window(&g, &iidentity(2), &omega, &BigRational::from_integer(1.into()))?;
    let s = t_of(&mut w.lo, 40).unwrap();
    let t = t_of(&mut w.hi, 40).unwrap();
    println!("identity is reduced for t in [{:.6}, {:.6}]", to_f64(&s.mid()), to_f64(&t.mid()));
    Ok(())
}
