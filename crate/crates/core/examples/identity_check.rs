// Checking the right Leibniz identity and reading off defects.

use leibniz::algebra::LeibnizAlgebra;
use leibniz::catalog::{example_2_11, example_3_6_as_printed, sl2_module_as_printed};
use leibniz::exactla::int;

fn run() -> leibniz::Result<()> {
    let l = example_2_11();
    println!(
        "example 2.11: dim {}, Leibniz: {}, Lie: {}",
        l.dim(),
        l.is_leibniz(),
        l.is_lie()
    );

    // A one-dimensional algebra with [b0, b0] = b0 is not Leibniz.
    let bad = LeibnizAlgebra::from_brackets(vec!["b0".into()], &[(0, 0, 0, int(1))])?;
    for d in bad.leibniz_defects() {
        let v: Vec<String> = d.defect.iter().map(ToString::to_string).collect();
        println!("defect at ({}, {}, {}): {:?}", d.i, d.j, d.k, v);
    }

    // The uncorrected sl2 action constants break the module axiom.
    let v = sl2_module_as_printed(2);
    println!(
        "uncorrected V(2): {} violating pairs",
        v.module_check().len()
    );
    let printed = example_3_6_as_printed(2, 1)?;
    println!(
        "uncorrected (sl2+sl2) x V(2)xV(1): {} defects",
        printed.leibniz_defects().len()
    );
    Ok(())
}

fn main() {
    run().expect("identity_check");
}
