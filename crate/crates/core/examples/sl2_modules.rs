// Irreducible sl2-modules, homomorphism spaces, tensor products and isotypic splitting.

use leibniz::catalog::{sl2, sl2_module};
use leibniz::repr::{end_dim, hom_space, isotypic_split, tensor_module, ModuleRep};

fn run() -> leibniz::Result<()> {
    for m in 0..=4 {
        println!(
            "V({m}): dim {}, End dim {}",
            m + 1,
            end_dim(&sl2_module(m))?
        );
    }

    let v1 = sl2_module(1);
    let two = v1.multiple(2)?;
    let three = v1.multiple(3)?;
    println!("dim hom(2V(1), 3V(1)) = {}", hom_space(&two, &three)?.dim());

    let t = tensor_module(&sl2_module(2), &sl2_module(1))?;
    println!(
        "V(2) x V(1) over sl2+sl2: dim {}, End dim {}",
        t.mdim(),
        end_dim(&t)?
    );

    let mut m = ModuleRep::zero(sl2(), 0);
    for w in [1, 2, 1] {
        m = m.direct_sum(&sl2_module(w))?;
    }
    for c in isotypic_split(&m)?.components {
        println!(
            "component: dim {}, {} copies of a {}-dim irreducible",
            c.subspace.dim(),
            c.multiplicity,
            c.irreducible_dim
        );
    }
    Ok(())
}

fn main() {
    run().expect("sl2_modules");
}
