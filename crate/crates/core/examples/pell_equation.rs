//! Coprime solutions of x^2 + y^2 = 5^{2ν} and x^2 + 14y^2 = 3^{2ν}.

use geocf::pcf::pell_solutions;

fn main() -> geocf::Result<()> {
    for (d, p, rmax) in [(1, 5, 2), (14, 3, 2), (7, 11, 1)] {
        println!("d={d} p={p}");
        for s in pell_solutions(d, p, rmax)? {
            println!("  ({}, {}, {})", s.x, s.y, s.nu);
        }
    }
    Ok(())
}
