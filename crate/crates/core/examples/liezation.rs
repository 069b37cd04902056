// Squares ideal, liezation and the Killing form.

use leibniz::catalog::{example_2_11, sl2};

fn run() -> leibniz::Result<()> {
    let g = sl2();
    let k = g.killing_form()?;
    println!("sl2 Killing form (basis e, h, f):");
    for r in 0..3 {
        println!(
            "  {:?}",
            k.row(r).iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }

    let l = example_2_11();
    let lz = l.liezation()?;
    println!(
        "squares ideal of example 2.11 has dimension {}",
        lz.ideal.dim()
    );
    println!("liezation basis: {:?}", lz.algebra.labels());
    println!("liezation semisimple: {}", l.is_semisimple_liezation()?);
    Ok(())
}

fn main() {
    run().expect("liezation");
}
