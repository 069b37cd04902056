// Derivation algebras: brute-force kernel, the three-part split, and the dimension report.

use leibniz::catalog::{example_2_11, sl2_semidirect};
use leibniz::deriv::{derivation_space, formula_report, split_derivations};
use leibniz::structure::levi_lift;

fn run() -> leibniz::Result<()> {
    for (name, l) in [
        ("sl2 x V(2)", sl2_semidirect(&[2])?),
        ("sl2 x 2V(1)", sl2_semidirect(&[1, 1])?),
        ("example 2.11", example_2_11()),
    ] {
        let d = derivation_space(&l);
        let levi = levi_lift(&l)?;
        let split = split_derivations(&l, &d, &levi)?.split.expect("split");
        let r = formula_report(&l)?;
        println!(
            "{name}: dim Der {} = {:?}; structural {}, grouped formula {} (n = {:?}, m = {:?})",
            d.dim(),
            split.dims(),
            r.structural_dim,
            r.formula_dim,
            r.n,
            r.m
        );
    }
    Ok(())
}

fn main() {
    run().expect("derivations");
}
