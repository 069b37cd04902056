// Levi lifting in a skewed basis, the adjacency graph, and indecomposable summands.

use leibniz::catalog::{example_2_11, sl2_semidirect};
use leibniz::exactla::{int, RatMatrix};
use leibniz::structure::{indecomposable_summands, levi_lift, structure_graph};

fn run() -> leibniz::Result<()> {
    // Mix I into the sl2 part so that the obvious complement is no longer a subalgebra.
    let l = sl2_semidirect(&[2])?;
    let mut b = RatMatrix::identity(6);
    b[(3, 0)] = int(1);
    b[(5, 2)] = int(-2);
    let skewed = l.change_basis(&b)?;
    let levi = levi_lift(&skewed)?;
    println!("Levi factor basis in the skewed algebra:");
    for v in &levi.s_basis {
        println!(
            "  {:?}",
            v.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }

    let l = example_2_11();
    let g = structure_graph(&l)?;
    println!(
        "example 2.11: {} simple ideals, {} components, edges {:?}",
        g.nodes.len(),
        g.components.len(),
        g.edges
    );

    let sum = l.direct_sum(&sl2_semidirect(&[2])?);
    let d = indecomposable_summands(&sum)?;
    for s in &d.summands {
        println!(
            "summand: dim S {}, dim I {}, connected {}",
            s.s_part.dim(),
            s.i_part.dim(),
            s.connected
        );
    }
    Ok(())
}

fn main() {
    run().expect("levi_and_summands");
}
