//! Automorphisms in block form relative to a Levi decomposition `L = S ∔ I`.
//!
//! In Levi coordinates (basis of `S` first, then `I`) every automorphism has the
//! lower-triangular shape `[[φ1, 0], [φ2, φI]]` because it maps `I` onto itself.

use num_traits::{One, Zero};

use crate::algebra::LeibnizAlgebra;
use crate::exactla::{int, RatMatrix, Rational};
use crate::repr::{is_lie_automorphism, modules_isomorphic, twist_module, ModuleRep};
use crate::structure::LeviDecomposition;
use crate::{Error, Result};

/// A linear map proposed as an automorphism.
#[derive(Debug, Clone)]
pub struct AutoCandidate<'a> {
    pub algebra: &'a LeibnizAlgebra,
    pub matrix: RatMatrix,
}

impl<'a> AutoCandidate<'a> {
    pub fn new(algebra: &'a LeibnizAlgebra, matrix: RatMatrix) -> Self {
        AutoCandidate { algebra, matrix }
    }

    pub fn verify(&self) -> bool {
        is_automorphism(self.algebra, &self.matrix)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AutoCandidate<'_>) -> Result<AutoCandidate<'a>> {
        if !std::ptr::eq(self.algebra, other.algebra) && self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AutoCandidate::new(
            self.algebra,
            self.matrix.try_mul(&other.matrix)?,
        ))
    }
}

/// Invertible and bracket-preserving on all basis pairs.
pub fn is_automorphism(l: &LeibnizAlgebra, m: &RatMatrix) -> bool {
    m.rows() == l.dim() && m.cols() == l.dim() && m.is_invertible() && l.preserves_bracket(m)
}

/// Blocks of an automorphism in Levi coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// `S → S`.
    pub phi1: RatMatrix,
    /// `S → I`.
    pub phi2: RatMatrix,
    /// `I → I`.
    pub phi_i: RatMatrix,
}

fn split_blocks(m: &RatMatrix, g: usize) -> (RatMatrix, RatMatrix, RatMatrix, RatMatrix) {
    let n = m.rows();
    let s: Vec<usize> = (0..g).collect();
    let i: Vec<usize> = (g..n).collect();
    (
        m.select(&s, &s),
        m.select(&s, &i),
        m.select(&i, &s),
        m.select(&i, &i),
    )
}

/// Checks the three compatibility conditions on component maps; the message names
/// the first one that fails.
fn component_check(
    levi: &LeviDecomposition,
    imod: &ModuleRep,
    b: &BlockDecomposition,
) -> std::result::Result<(), String> {
    let (g, d) = (levi.s_dim(), levi.i_dim());
    if b.phi1.rows() != g || b.phi1.cols() != g || b.phi2.rows() != d || b.phi2.cols() != g {
        return Err("block shapes do not match the Levi decomposition".into());
    }
    if b.phi_i.rows() != d || b.phi_i.cols() != d {
        return Err("phi_I has the wrong shape".into());
    }
    if !is_lie_automorphism(&levi.s_algebra, &b.phi1) {
        return Err("phi1 is not an automorphism of S".into());
    }
    if !b.phi_i.is_invertible() {
        return Err("phi_I is not invertible".into());
    }
    let images: Vec<RatMatrix> = (0..g).map(|y| imod.act(&b.phi1.column(y))).collect();
    for (y, rho_img) in images.iter().enumerate() {
        let lhs = b.phi_i.try_mul(&imod.action()[y]).expect("shape");
        let rhs = rho_img.try_mul(&b.phi_i).expect("shape");
        if lhs != rhs {
            return Err(format!(
                "phi_I is not an S-module map I -> I^phi1 (fails at S basis vector {y})"
            ));
        }
    }
    // φ2([x,y]) = ρ(φ1 y) φ2(x)
    let s = &levi.s_algebra;
    for x in 0..g {
        for (y, rho_img) in images.iter().enumerate() {
            let mut lhs = vec![Rational::zero(); d];
            for (k, c) in s.product(x, y) {
                for (p, v) in lhs.iter_mut().enumerate() {
                    *v += c * &b.phi2[(p, *k)];
                }
            }
            let rhs = rho_img.mul_vec(&b.phi2.column(x)).expect("shape");
            if lhs != rhs {
                return Err(format!(
                    "phi2 is not an S-module map S -> I^phi1 (fails at pair ({x}, {y}))"
                ));
            }
        }
    }
    Ok(())
}

/// Reads off `(φ1, φ2, φI)` and checks the block conditions they must satisfy.
pub fn block_decompose(
    l: &LeibnizAlgebra,
    phi: &RatMatrix,
    levi: &LeviDecomposition,
) -> Result<BlockDecomposition> {
    if !is_automorphism(l, phi) {
        return Err(Error::NotAutomorphism("map is not an automorphism".into()));
    }
    let m = levi.to_levi(phi)?;
    let (phi1, upper, phi2, phi_i) = split_blocks(&m, levi.s_dim());
    if !upper.is_zero() {
        return Err(Error::NotAutomorphism("map does not preserve I".into()));
    }
    let b = BlockDecomposition { phi1, phi2, phi_i };
    let imod = levi.i_module(l)?;
    component_check(levi, &imod, &b).map_err(Error::Inconsistent)?;
    Ok(b)
}

/// `B [[φ1, 0], [φ2, φI]] B⁻¹`, after checking the component conditions.
pub fn assemble<'a>(
    l: &'a LeibnizAlgebra,
    levi: &LeviDecomposition,
    blocks: &BlockDecomposition,
) -> Result<AutoCandidate<'a>> {
    let imod = levi.i_module(l)?;
    component_check(levi, &imod, blocks).map_err(Error::ComponentIncompatible)?;
    let zero = RatMatrix::zeros(levi.s_dim(), levi.i_dim());
    let m = RatMatrix::block2(&blocks.phi1, &zero, &blocks.phi2, &blocks.phi_i);
    let cand = AutoCandidate::new(l, levi.from_levi(&m)?);
    if !cand.verify() {
        return Err(Error::ComponentIncompatible(
            "assembled map is not an automorphism".into(),
        ));
    }
    Ok(cand)
}

/// `φ = ψ ∘ η` with `ψ = (φ1, 0, φI)` preserving `S` and
/// `η = (id, φI⁻¹ φ2, id)` acting trivially modulo `I`.
pub fn factor_semidirect<'a>(
    l: &'a LeibnizAlgebra,
    phi: &RatMatrix,
    levi: &LeviDecomposition,
) -> Result<(AutoCandidate<'a>, AutoCandidate<'a>)> {
    let b = block_decompose(l, phi, levi)?;
    let (g, d) = (levi.s_dim(), levi.i_dim());
    let psi = BlockDecomposition {
        phi1: b.phi1.clone(),
        phi2: RatMatrix::zeros(d, g),
        phi_i: b.phi_i.clone(),
    };
    let eta = BlockDecomposition {
        phi1: RatMatrix::identity(g),
        phi2: b.phi_i.inverse()?.try_mul(&b.phi2)?,
        phi_i: RatMatrix::identity(d),
    };
    let psi = assemble(l, levi, &psi)
        .map_err(|e| Error::NotAutomorphism(format!("S-preserving factor: {e}")))?;
    let eta = assemble(l, levi, &eta)
        .map_err(|e| Error::NotAutomorphism(format!("unipotent factor: {e}")))?;
    if psi.matrix.try_mul(&eta.matrix)? != *phi {
        return Err(Error::Inconsistent(
            "factors do not recompose the automorphism".into(),
        ));
    }
    Ok((psi, eta))
}

/// Whether the automorphism `sigma` of `S` extends to `L`: `I ≅ I^σ`.
pub fn extendable(sigma: &RatMatrix, imod: &ModuleRep) -> Result<bool> {
    let twisted = twist_module(imod, sigma)?;
    modules_isomorphic(imod, &twisted)
}

/// Block permutation of a direct sum of `copies` equal blocks: copy `i` goes to
/// copy `perm[i]`.
pub fn swap_automorphism(l: &LeibnizAlgebra, copies: usize, perm: &[usize]) -> Result<RatMatrix> {
    if copies == 0 || l.dim() % copies != 0 || perm.len() != copies {
        return Err(Error::DimensionMismatch {
            expected: copies,
            found: perm.len(),
        });
    }
    let mut seen = vec![false; copies];
    for &p in perm {
        if p >= copies || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Format(format!("{perm:?} is not a permutation")));
        }
    }
    let n = l.dim() / copies;
    let mut m = RatMatrix::zeros(l.dim(), l.dim());
    for (i, &p) in perm.iter().enumerate() {
        for k in 0..n {
            m[(p * n + k, i * n + k)] = Rational::one();
        }
    }
    Ok(m)
}

/// `exp(m)` for nilpotent `m`; fails with [`Error::Inconsistent`] otherwise.
pub fn exp_nilpotent(m: &RatMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let n = m.rows();
    let mut acc = RatMatrix::identity(n);
    let mut term = RatMatrix::identity(n);
    for k in 1..=n {
        term = term
            .try_mul(m)?
            .scale(&Rational::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            return Ok(acc);
        }
        acc = acc.try_add(&term)?;
    }
    if term.try_mul(m)?.is_zero() {
        Ok(acc)
    } else {
        Err(Error::Inconsistent("matrix is not nilpotent".into()))
    }
}

/// `exp(R_x)` for `x` with nilpotent right multiplication.
pub fn exp_right_mult(l: &LeibnizAlgebra, x: &[Rational]) -> Result<RatMatrix> {
    exp_nilpotent(&l.right_mult(x))
}

/// `exp(ad x)` with `ad x = [x, ·]`.
pub fn exp_ad(l: &LeibnizAlgebra, x: &[Rational]) -> Result<RatMatrix> {
    exp_nilpotent(&l.left_mult(x))
}

/// The element `(id, c·id, 0)` scaling `I`.
pub fn scalar_on_i<'a>(
    l: &'a LeibnizAlgebra,
    levi: &LeviDecomposition,
    c: i64,
) -> Result<AutoCandidate<'a>> {
    let blocks = BlockDecomposition {
        phi1: RatMatrix::identity(levi.s_dim()),
        phi2: RatMatrix::zeros(levi.i_dim(), levi.s_dim()),
        phi_i: RatMatrix::scalar(levi.i_dim(), int(c)),
    };
    assemble(l, levi, &blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        example_2_11, multi_copy, sl2, sl2_semidirect, sl3, sl3_standard, sl3_transpose,
    };
    use crate::exactla::unit;
    use crate::repr::hom_space;
    use crate::structure::levi_lift;

    #[test]
    fn basic_predicate() {
        let g = sl2();
        assert!(is_automorphism(&g, &RatMatrix::identity(3)));
        assert!(is_automorphism(&g, &exp_ad(&g, &unit(3, 0)).unwrap()));
        assert!(!is_automorphism(&g, &RatMatrix::zeros(3, 3)));
    }

    #[test]
    fn identity_blocks() {
        let l = example_2_11();
        let levi = levi_lift(&l).unwrap();
        let b = block_decompose(&l, &RatMatrix::identity(10), &levi).unwrap();
        assert_eq!(b.phi1, RatMatrix::identity(6));
        assert!(b.phi2.is_zero());
        assert_eq!(b.phi_i, RatMatrix::identity(4));
        assert_eq!(
            assemble(&l, &levi, &b).unwrap().matrix,
            RatMatrix::identity(10)
        );
    }

    #[test]
    fn aut_zero_from_hom() {
        let l = sl2_semidirect(&[2]).unwrap();
        let levi = levi_lift(&l).unwrap();
        let (sm, im) = (levi.s_module().unwrap(), levi.i_module(&l).unwrap());
        let hom = hom_space(&sm, &im).unwrap();
        assert_eq!(hom.dim(), 1);
        let b = BlockDecomposition {
            phi1: RatMatrix::identity(3),
            phi2: hom.basis[0].clone(),
            phi_i: RatMatrix::identity(3),
        };
        let phi = assemble(&l, &levi, &b).unwrap();
        let (psi, eta) = factor_semidirect(&l, &phi.matrix, &levi).unwrap();
        assert_eq!(psi.matrix, RatMatrix::identity(6));
        assert_eq!(eta.matrix, phi.matrix);
        let mut bad = b.clone();
        bad.phi_i = RatMatrix::zeros(3, 3);
        assert!(matches!(
            assemble(&l, &levi, &bad),
            Err(Error::ComponentIncompatible(_))
        ));
    }

    #[test]
    fn transpose_does_not_extend() {
        let std = sl3_standard();
        assert!(!extendable(&sl3_transpose(), &std).unwrap());
        assert!(extendable(&exp_ad(&sl3(), &unit(8, 0)).unwrap(), &std).unwrap());
        assert!(extendable(&RatMatrix::identity(8), &std).unwrap());
    }

    #[test]
    fn swaps() {
        let l = multi_copy(&sl2_semidirect(&[1]).unwrap(), 2).unwrap();
        let id = swap_automorphism(&l, 2, &[0, 1]).unwrap();
        assert_eq!(id, RatMatrix::identity(10));
        let s = swap_automorphism(&l, 2, &[1, 0]).unwrap();
        assert!(is_automorphism(&l, &s));
        assert_eq!(s.try_mul(&s).unwrap(), id);
        assert!(swap_automorphism(&l, 2, &[1, 1]).is_err());
    }

    #[test]
    fn exp_requires_nilpotent() {
        assert!(exp_nilpotent(&RatMatrix::identity(2)).is_err());
        let n = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(
            exp_nilpotent(&n).unwrap(),
            RatMatrix::from_i64(&[&[1, 1], &[0, 1]])
        );
    }
}
