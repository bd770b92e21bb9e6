//! Units of the complex cubic fields Q(2^{1/3}) and Q(3^{1/3}).

use geocf::gcf::{extract_unit, run_forward, GcfConfig};
use geocf::geodesic::heegner_rank_one;
use geocf::numberfield::NumberField;

fn main() -> geocf::Result<()> {
    for poly in ["x^3 - 2", "x^3 - 3"] {
        let f = NumberField::parse(poly)?;
        let run = run_forward(&heegner_rank_one(&f, &f.default_basis())?, &GcfConfig::default())?;
        let c = extract_unit(&run, run.require_period()?)?;
        println!("{poly}: period ({}, {}), epsilon = {}, |epsilon| = {:.6}", c.k0, c.k1, c.epsilon, c.log_rho().exp());
    }
    Ok(())
}
