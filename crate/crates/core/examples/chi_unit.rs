//! A relative norm one unit of Q(2^{1/4}) over Q(√2).

use geocf::gcf::{extract_unit, run_forward, GcfConfig};
use geocf::geodesic::{heegner_chi, subfield_generator};
use geocf::numberfield::NumberField;
use geocf::poly::parse_poly;

fn main() -> geocf::Result<()> {
    let f = NumberField::parse("x^4 - 2")?;
    let g = subfield_generator(&f, &parse_poly("x^2 - 2")?)?;
    println!("√2 = {g}");
    let run = run_forward(&heegner_chi(&f, &g, &f.default_basis())?, &GcfConfig::default())?;
    let c = extract_unit(&run, run.require_period()?)?;
    println!("period ({}, {}), epsilon = {}", c.k0, c.k1, c.epsilon);
    println!("relative norm {}", c.relative_norm.unwrap());
    Ok(())
}
