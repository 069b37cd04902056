// Automorphisms in block form: assembly, factorization, extension and block swaps.

use leibniz::autos::{
    assemble, exp_ad, exp_right_mult, extendable, factor_semidirect, is_automorphism,
    swap_automorphism, BlockDecomposition,
};
use leibniz::catalog::{multi_copy, sl2_semidirect, sl3, sl3_standard, sl3_transpose};
use leibniz::exactla::{unit, RatMatrix};
use leibniz::repr::hom_space;
use leibniz::structure::levi_lift;

fn run() -> leibniz::Result<()> {
    let l = sl2_semidirect(&[2])?;
    let levi = levi_lift(&l)?;
    let (sm, im) = (levi.s_module()?, levi.i_module(&l)?);
    let hom = hom_space(&sm, &im)?;
    let blocks = BlockDecomposition {
        phi1: RatMatrix::identity(3),
        phi2: hom.basis[0].clone(),
        phi_i: RatMatrix::identity(3),
    };
    let aut0 = assemble(&l, &levi, &blocks)?;
    let phi = exp_right_mult(&l, &unit(6, 0))?.try_mul(&aut0.matrix)?;
    println!("phi is an automorphism: {}", is_automorphism(&l, &phi));
    let (psi, eta) = factor_semidirect(&l, &phi, &levi)?;
    println!(
        "psi o eta == phi: {}",
        psi.matrix.try_mul(&eta.matrix)? == phi
    );

    let std = sl3_standard();
    println!(
        "x -> -x^T extends to sl3 x Q^3: {}",
        extendable(&sl3_transpose(), &std)?
    );
    println!(
        "exp(ad E12) extends: {}",
        extendable(&exp_ad(&sl3(), &unit(8, 0))?, &std)?
    );

    let two = multi_copy(&sl2_semidirect(&[1])?, 2)?;
    let swap = swap_automorphism(&two, 2, &[1, 0])?;
    println!(
        "swapping the two copies is an automorphism: {}",
        is_automorphism(&two, &swap)
    );
    Ok(())
}

fn main() {
    run().expect("automorphisms");
}
