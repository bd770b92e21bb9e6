//! The command-line pipeline driven in-process, in both output formats.

use geocf::cli::main_with;

fn main() {
    for args in [
        vec!["geocf", "unit", "--field", "x^2-3", "--trace"],
        vec!["geocf", "pcf", "--d", "5", "--p", "3", "--root", "1", "--format", "json"],
        vec!["geocf", "pcf", "--d", "3", "--p", "5", "--root", "1"],
    ] {
        let out = main_with(args.clone());
        println!("$ {}\n{}{}exit {}\n", args[1..].join(" "), out.stdout, out.stderr, out.code);
    }
}
