//! The totally imaginary quartic field Q((-2)^{1/4}).

use geocf::gcf::{extract_unit, run_forward, GcfConfig};
use geocf::geodesic::heegner_rank_one;
use geocf::numberfield::NumberField;

fn main() -> geocf::Result<()> {
    let f = NumberField::parse("x^4 + 2")?;
    let run = run_forward(&heegner_rank_one(&f, &f.default_basis())?, &GcfConfig::default())?;
    print!("{}", run.trace());
    let c = extract_unit(&run, run.require_period()?)?;
    println!("epsilon = {}, N(epsilon) = {}", c.epsilon, c.epsilon.norm());
    Ok(())
}
