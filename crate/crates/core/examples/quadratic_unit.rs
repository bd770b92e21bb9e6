//! Step trace and unit certificate for Q(√2) and Q(√3).

use geocf::gcf::{extract_unit, run_forward, GcfConfig};
use geocf::geodesic::heegner_rank_one;
use geocf::linalg::format_imat;
use geocf::numberfield::NumberField;

fn main() -> geocf::Result<()> {
    for poly in ["x^2 - 2", "x^2 - 3"] {
        let f = NumberField::parse(poly)?;
        let run = run_forward(&heegner_rank_one(&f, &f.default_basis())?, &GcfConfig::default())?;
        print!("{}", run.trace());
        let c = extract_unit(&run, run.require_period()?)?;
        println!("{poly}: P = {}, epsilon = {}\n", format_imat(&c.p), c.epsilon);
    }
    Ok(())
}
