//! Derivation algebras: the brute-force kernel, its split into inner, `S → I` and
//! `I → I` parts, and a dimension report comparing the kernel with the module data.

use num_traits::Zero;

use crate::algebra::LeibnizAlgebra;
use crate::exactla::{int, RatMatrix, Rational, SparseSystem, Subspace};
use crate::repr::{end_dim, hom_space, isotypic_split, ModuleRep};
use crate::structure::{levi_lift, simple_ideals, LeviDecomposition};
use crate::{Error, Result};

/// Bases of the three parts of `Der(L) = R_S ∔ Der_{S,I} ∔ Der_{I,I}`, in the
/// coordinates of `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSplit {
    pub r_s: Vec<RatMatrix>,
    pub der_si: Vec<RatMatrix>,
    pub der_ii: Vec<RatMatrix>,
}

impl DerivationSplit {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.r_s.len(), self.der_si.len(), self.der_ii.len())
    }
}

#[derive(Debug, Clone)]
pub struct DerivationSpace {
    /// Canonical basis: RREF of the flattened matrices (row-major).
    pub basis: Vec<RatMatrix>,
    pub split: Option<DerivationSplit>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn as_subspace(&self) -> Subspace {
        let n = self.basis.first().map_or(0, RatMatrix::rows);
        flat_span(n, &self.basis)
    }
}

fn flat_span(n: usize, ms: &[RatMatrix]) -> Subspace {
    let vs: Vec<Vec<Rational>> = ms.iter().map(|m| m.entries().to_vec()).collect();
    Subspace::from_spanning(n * n, &vs)
}

fn unflatten(n: usize, s: &Subspace) -> Vec<RatMatrix> {
    s.basis_vectors()
        .into_iter()
        .map(|v| RatMatrix::from_vec(n, n, v))
        .collect()
}

/// Kernel of the linear system `D[b_i,b_j] = [D b_i, b_j] + [b_i, D b_j]`.
///
/// The unknown `D[k, l]` sits at index `k * dim + l`; equations are assembled with
/// `(i, j)` in lexicographic order and the output coordinate `k` innermost.
pub fn derivation_space(l: &LeibnizAlgebra) -> DerivationSpace {
    let n = l.dim();
    // right[j][k]: pairs (p, c_pj^k); left[i][k]: pairs (p, c_ip^k).
    let mut right = vec![vec![Vec::new(); n]; n];
    let mut left = vec![vec![Vec::new(); n]; n];
    for (a, b, k, c) in l.nonzero_constants() {
        right[b][k].push((a, c.clone()));
        left[a][k].push((b, c.clone()));
    }
    let mut sys = SparseSystem::new(n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut terms: Vec<(usize, Rational)> = l
                    .product(i, j)
                    .iter()
                    .map(|(m, c)| (k * n + m, c.clone()))
                    .collect();
                for (p, c) in &right[j][k] {
                    terms.push((p * n + i, -c.clone()));
                }
                for (p, c) in &left[i][k] {
                    terms.push((p * n + j, -c.clone()));
                }
                sys.add_equation(&terms);
            }
        }
    }
    DerivationSpace {
        basis: unflatten(n, &sys.kernel()),
        split: None,
    }
}

/// Whether `m` satisfies the Leibniz product rule on all basis pairs.
pub fn is_derivation(l: &LeibnizAlgebra, m: &RatMatrix) -> bool {
    let n = l.dim();
    if m.rows() != n || m.cols() != n {
        return false;
    }
    let images: Vec<Vec<Rational>> = (0..n).map(|j| m.column(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut prod = vec![Rational::zero(); n];
            for (k, c) in l.product(i, j) {
                prod[*k] = c.clone();
            }
            let lhs = m.mul_vec(&prod).expect("square");
            let a = l.bracket(&images[i], &crate::exactla::unit(n, j));
            let b = l.bracket(&crate::exactla::unit(n, i), &images[j]);
            if lhs
                .iter()
                .zip(a.iter().zip(&b))
                .any(|(x, (y, z))| *x != y + z)
            {
                return false;
            }
        }
    }
    true
}

/// Flattened-index set of the entries of an `n × n` Levi-coordinate matrix lying
/// in rows `rows` and columns `cols`.
fn block_indices(
    n: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Vec<usize> {
    rows.flat_map(|r| cols.clone().map(move |c| r * n + c))
        .collect()
}

/// Splits `Der(L)` along a Levi decomposition. `Der_{S,I}` and `Der_{I,I}` are the
/// derivations whose Levi-coordinate matrix is supported in the `I×S` and `I×I`
/// blocks respectively; `R_S` is spanned by right multiplications by `S`.
pub fn split_derivations(
    l: &LeibnizAlgebra,
    space: &DerivationSpace,
    levi: &LeviDecomposition,
) -> Result<DerivationSpace> {
    let n = l.dim();
    let g = levi.s_dim();
    let levi_mats: Vec<RatMatrix> = space
        .basis
        .iter()
        .map(|d| levi.to_levi(d))
        .collect::<Result<_>>()?;
    let der = flat_span(n, &levi_mats);
    let si = der.intersect(&Subspace::coordinate(n * n, &block_indices(n, g..n, 0..g)))?;
    let ii = der.intersect(&Subspace::coordinate(n * n, &block_indices(n, g..n, g..n)))?;
    let r_levi: Vec<RatMatrix> = levi
        .s_basis
        .iter()
        .map(|x| levi.to_levi(&l.right_mult(x)))
        .collect::<Result<_>>()?;
    let rs = flat_span(n, &r_levi);
    let total = rs.sum(&si)?.sum(&ii)?;
    if rs.dim() + si.dim() + ii.dim() != der.dim() || total != der {
        return Err(Error::SplitMismatch(format!(
            "R_S {} + Der_SI {} + Der_II {} against Der {}",
            rs.dim(),
            si.dim(),
            ii.dim(),
            der.dim()
        )));
    }
    let back = |s: &Subspace| -> Result<Vec<RatMatrix>> {
        let ms = unflatten(n, s)
            .iter()
            .map(|m| levi.from_levi(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(unflatten(n, &flat_span(n, &ms)))
    };
    Ok(DerivationSpace {
        basis: space.basis.clone(),
        split: Some(DerivationSplit {
            r_s: back(&rs)?,
            der_si: back(&si)?,
            der_ii: back(&ii)?,
        }),
    })
}

/// Dimension bookkeeping for `Der(L)` of a semisimple Leibniz algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaReport {
    pub brute_dim: usize,
    pub dim_s: usize,
    /// `dim hom_S(S, I)`.
    pub hom_dim: usize,
    /// `dim End_S(I)`.
    pub end_dim: usize,
    /// `dim S + hom_dim + end_dim`.
    pub structural_dim: usize,
    /// Number of isomorphism types of simple ideals, grouped by (dimension, rank).
    pub r: usize,
    /// Number of isotypic components of `I` not isomorphic to any simple ideal.
    pub s: usize,
    /// Copies of each simple-ideal type.
    pub n: Vec<usize>,
    /// Multiplicities: one per simple-ideal type, then one per remaining component.
    pub m: Vec<usize>,
    /// `dim S + Σ n_i m_i + Σ m_i²` with the grouped `n_i, m_i`.
    pub formula_dim: usize,
    /// Each simple ideal taken as its own type, `m_j = dim hom_S(S_j, I)`.
    pub per_ideal_m: Vec<usize>,
    pub per_ideal_formula_dim: usize,
}

impl FormulaReport {
    pub fn all_n_one(&self) -> bool {
        self.n.iter().all(|&x| x == 1)
    }
}

/// Rank of a simple Lie algebra given as an ideal: the least nullity of
/// `ad x` on the ideal over its basis and a few fixed combinations of it.
fn ideal_rank(adj: &ModuleRep, ideal: &Subspace) -> Result<usize> {
    let sub = adj.restrict(ideal)?;
    let basis = ideal.basis_vectors();
    let k = basis.len();
    let mut candidates = basis.clone();
    for t in 0..5i64 {
        let weights: Vec<Rational> = (1..=k as i64).map(|j| int(j + t * j * j)).collect();
        candidates.push(ideal.combine(&weights));
    }
    Ok(candidates
        .iter()
        .map(|x| k - sub.act(x).rank())
        .min()
        .unwrap_or(0))
}

pub fn formula_report(l: &LeibnizAlgebra) -> Result<FormulaReport> {
    let levi = levi_lift(l)?;
    let der = derivation_space(l);
    formula_report_with(l, &levi, der.dim())
}

/// Report on a given Levi decomposition and a known `dim Der(L)`.
pub fn formula_report_with(
    l: &LeibnizAlgebra,
    levi: &LeviDecomposition,
    brute_dim: usize,
) -> Result<FormulaReport> {
    let adj = levi.s_module()?;
    let imod = levi.i_module(l)?;
    let hom_dim = hom_space(&adj, &imod)?.dim();
    let e_dim = end_dim(&imod)?;
    let dim_s = levi.s_dim();

    let ideals = simple_ideals(&levi.s_algebra)?;
    let ideal_mods: Vec<ModuleRep> = ideals
        .iter()
        .map(|s| adj.restrict(s))
        .collect::<Result<_>>()?;
    let per_ideal_m: Vec<usize> = ideal_mods
        .iter()
        .map(|m| Ok(hom_space(m, &imod)?.dim()))
        .collect::<Result<_>>()?;

    let split = isotypic_split(&imod)?;
    let comp_mods: Vec<ModuleRep> = split
        .components
        .iter()
        .map(|c| imod.restrict(&c.subspace))
        .collect::<Result<_>>()?;
    // Multiplicity of the component isomorphic to each simple ideal, if any.
    let mut matched = vec![false; comp_mods.len()];
    let mut ideal_mult = Vec::with_capacity(ideals.len());
    for im in &ideal_mods {
        let mut mult = 0;
        for (c, cm) in comp_mods.iter().enumerate() {
            let h = hom_space(im, cm)?.dim();
            if h > 0 {
                if h != split.components[c].multiplicity {
                    return Err(Error::Inconsistent(format!(
                        "hom from a simple ideal into a component of multiplicity {} has dimension {h}",
                        split.components[c].multiplicity
                    )));
                }
                mult = h;
                matched[c] = true;
            }
        }
        ideal_mult.push(mult);
    }

    let ranks: Vec<(usize, usize)> = ideals
        .iter()
        .map(|s| Ok((s.dim(), ideal_rank(&adj, s)?)))
        .collect::<Result<_>>()?;
    let mut types: Vec<(usize, usize)> = ranks.clone();
    types.sort_unstable();
    types.dedup();
    let mut n = Vec::with_capacity(types.len());
    let mut m = Vec::with_capacity(types.len());
    for t in &types {
        let members: Vec<usize> = (0..ideals.len()).filter(|&j| ranks[j] == *t).collect();
        n.push(members.len());
        m.push(members.iter().map(|&j| ideal_mult[j]).sum());
    }
    let r = types.len();
    let mut s = 0;
    for (c, comp) in split.components.iter().enumerate() {
        if !matched[c] {
            s += 1;
            m.push(comp.multiplicity);
        }
    }
    let sq_sum: usize = split
        .components
        .iter()
        .map(|c| c.multiplicity * c.multiplicity)
        .sum();
    let grouped_middle: usize = n.iter().zip(&m).map(|(a, b)| a * b).sum();
    let per_ideal_middle: usize = per_ideal_m.iter().sum();
    Ok(FormulaReport {
        brute_dim,
        dim_s,
        hom_dim,
        end_dim: e_dim,
        structural_dim: dim_s + hom_dim + e_dim,
        r,
        s,
        n,
        m,
        formula_dim: dim_s + grouped_middle + sq_sum,
        per_ideal_m,
        per_ideal_formula_dim: dim_s + per_ideal_middle + sq_sum,
    })
}
