//! Certified real roots and semialgebraic windows.

use geocf::poly::{isolate_roots, parse_poly};
use geocf::realalg::interval::to_f64;
use geocf::realalg::solve_poly_inequalities;
use num_rational::BigRational;

fn main() -> geocf::Result<()> {
    let p = parse_poly("x^3 - 3*x + 1")?;
    let b = p.cauchy_bound();
    for (lo, hi) in isolate_roots(&p, &-b.clone(), &b) {
        println!("root in [{}, {}]", to_f64(&lo), to_f64(&hi));
    }

    // the component of {x : 2 - x^2 >= 0, x - 1/2 >= 0} containing 1
    let conds = vec![parse_poly("2 - x^2")?, parse_poly("x - 1")?.add(&parse_poly("1")?.scale_q(&BigRational::new(1.into(), 2.into())))];
    let mut w = solve_poly_inequalities(&conds, &BigRational::from_integer(1.into()))?;
    println!("window [{:.6}, {:.6}]", w.lo.approx(), w.hi.approx());
    println!("upper end enclosure {:?}", w.hi.enclose(60).map(|i| (to_f64(&i.lo), to_f64(&i.hi))));
    Ok(())
}
